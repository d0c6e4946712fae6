pub mod exactmath;
pub mod cohomology;
pub mod ktheory;
pub mod chernvec;
pub mod homotopy;
