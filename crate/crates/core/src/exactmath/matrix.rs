use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{elem_sym, lcm_all, MathError};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, MathError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(MathError::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, MathError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn checked_mul(&self, rhs: &RatMatrix) -> Result<RatMatrix, MathError> {
        if self.cols != rhs.rows {
            return Err(MathError::DimensionMismatch {
                expected: self.cols,
                actual: rhs.rows,
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| {
                acc + self.get(i, k) * rhs.get(k, j)
            })
        }))
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>, MathError> {
        if self.cols != v.len() {
            return Err(MathError::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn determinant(&self) -> Result<BigRational, MathError> {
        if !self.is_square() {
            return Err(MathError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        match Bareiss::eliminate(self, &RatMatrix::zeros(self.rows, 0)) {
            Ok(elim) => Ok(elim.determinant()),
            Err(MathError::SingularMatrix) => Ok(BigRational::zero()),
            Err(e) => Err(e),
        }
    }

    pub fn inverse(&self) -> Result<RatMatrix, MathError> {
        if !self.is_square() {
            return Err(MathError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(Bareiss::eliminate(self, &RatMatrix::identity(self.rows))?.back_substitute())
    }

    /// Solves `self * X = rhs` for a matrix of right-hand sides.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<RatMatrix, MathError> {
        if !self.is_square() {
            return Err(MathError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(MathError::DimensionMismatch {
                expected: self.rows,
                actual: rhs.rows,
            });
        }
        Ok(Bareiss::eliminate(self, rhs)?.back_substitute())
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free elimination state for an augmented system `[M | B]`.
///
/// Rows are first scaled to integers; the scale factors are tracked so the
/// determinant of the original matrix can be recovered.
struct Bareiss {
    n: usize,
    width: usize,
    rows: Vec<Vec<BigInt>>,
    row_scale: BigInt,
    swaps: usize,
}

impl Bareiss {
    fn eliminate(m: &RatMatrix, rhs: &RatMatrix) -> Result<Self, MathError> {
        let n = m.rows;
        let width = n + rhs.cols;
        let mut row_scale = BigInt::one();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let raw: Vec<&BigRational> = m.row(i).iter().chain(rhs.row(i)).collect();
            let scale = lcm_all(raw.iter().map(|x| x.denom()));
            row_scale *= &scale;
            rows.push(
                raw.into_iter()
                    .map(|x| (x * BigRational::from_integer(scale.clone())).to_integer())
                    .collect::<Vec<BigInt>>(),
            );
        }

        let mut swaps = 0;
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&i| !rows[i][k].is_zero())
                .ok_or(MathError::SingularMatrix)?;
            if pivot != k {
                rows.swap(pivot, k);
                swaps += 1;
            }
            let (upper, lower) = rows.split_at_mut(k + 1);
            let pivot_row = &upper[k];
            for row in lower.iter_mut() {
                let factor = row[k].clone();
                for j in (k + 1)..width {
                    row[j] = (&pivot_row[k] * &row[j] - &factor * &pivot_row[j]) / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = rows[k][k].clone();
        }

        Ok(Self {
            n,
            width,
            rows,
            row_scale,
            swaps,
        })
    }

    fn determinant(&self) -> BigRational {
        let last = if self.n == 0 {
            BigInt::one()
        } else {
            self.rows[self.n - 1][self.n - 1].clone()
        };
        let signed = if self.swaps % 2 == 1 { -last } else { last };
        BigRational::new(signed, self.row_scale.clone())
    }

    fn back_substitute(self) -> RatMatrix {
        let n = self.n;
        let k = self.width - n;
        let mut x = RatMatrix::zeros(n, k);
        for col in 0..k {
            for i in (0..n).rev() {
                let mut acc = BigRational::from_integer(self.rows[i][n + col].clone());
                for j in (i + 1)..n {
                    if !self.rows[i][j].is_zero() {
                        acc -= BigRational::from_integer(self.rows[i][j].clone()) * x.get(j, col);
                    }
                }
                x.set(i, col, acc / BigRational::from_integer(self.rows[i][i].clone()));
            }
        }
        x
    }
}

/// Exact solution of `m x = b`.
pub fn solve_exact(m: &RatMatrix, b: &[BigRational]) -> Result<Vec<BigRational>, MathError> {
    let rhs = RatMatrix::from_fn(b.len(), 1, |i, _| b[i].clone());
    Ok(m.solve(&rhs)?.column(0))
}

/// Vandermonde matrix with rows `(1, x_i, x_i^2, ..., x_i^{n-1})`.
pub fn vandermonde(nodes: &[BigInt]) -> RatMatrix {
    let n = nodes.len();
    RatMatrix::from_fn(n, n, |i, j| {
        BigRational::from_integer(num_traits::pow(nodes[i].clone(), j))
    })
}

/// Closed-form inverse of [`vandermonde`]:
/// `c_ij = (-1)^(n-i) e_(n-i)(x without x_j) / prod_(l != j) (x_j - x_l)`
/// with rows `i` and columns `j` counted from 1.
pub fn vandermonde_inverse(nodes: &[BigInt]) -> Result<RatMatrix, MathError> {
    let n = nodes.len();
    for (i, x) in nodes.iter().enumerate() {
        if nodes[i + 1..].contains(x) {
            return Err(MathError::DuplicateNodes);
        }
    }
    let mut inv = RatMatrix::zeros(n, n);
    for j in 0..n {
        let others: Vec<BigInt> = nodes
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != j)
            .map(|(_, x)| x.clone())
            .collect();
        let denom: BigInt = others.iter().map(|x| &nodes[j] - x).product();
        for i in 1..=n {
            let sigma = elem_sym(&others, n - i)?;
            let signed = if (n - i) % 2 == 1 { -sigma } else { sigma };
            inv.set(i - 1, j, BigRational::new(signed, denom.clone()));
        }
    }
    Ok(inv)
}
