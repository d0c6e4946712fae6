//! Reference tables shipped with the binary.

pub const MOD31: &str = include_str!("../golden/mod31.csv");
pub const PONTRJAGIN_OMEGA_D4: &str = include_str!("../golden/pontrjagin_omega_d4.csv");
pub const PONTRJAGIN_OMEGA_D6: &str = include_str!("../golden/pontrjagin_omega_d6.csv");
pub const DIVISOR_TARGETS_D4: &str = include_str!("../golden/divisor_targets_d4.csv");
pub const CHERN_SERIES_D5: &str = include_str!("../golden/chern_series_d5.csv");

/// Line-by-line difference between a computed and a golden CSV.
pub fn diff(computed: &str, golden: &str) -> Vec<String> {
    let a: Vec<&str> = computed.lines().collect();
    let b: Vec<&str> = golden.lines().collect();
    let mut out = Vec::new();
    for i in 0..a.len().max(b.len()) {
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) if x == y => {}
            (x, y) => out.push(format!(
                "line {}: computed {:?}, golden {:?}",
                i + 1,
                x.unwrap_or(&""),
                y.unwrap_or(&"")
            )),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_shapes() {
        assert_eq!(MOD31.lines().count(), 31);
        assert_eq!(PONTRJAGIN_OMEGA_D6.lines().count(), 10);
        assert!(DIVISOR_TARGETS_D4.lines().any(|l| l == "0,0,25"));
        for g in [MOD31, PONTRJAGIN_OMEGA_D4, PONTRJAGIN_OMEGA_D6, DIVISOR_TARGETS_D4, CHERN_SERIES_D5] {
            assert!(!g.contains('\r'));
            assert!(g.ends_with('\n'));
        }
    }

    #[test]
    fn diff_reports_lines() {
        assert!(diff("a\nb\n", "a\nb\n").is_empty());
        assert_eq!(diff("a\nc\n", "a\nb\n").len(), 1);
        assert_eq!(diff("a\n", "a\nb\n").len(), 1);
    }
}
