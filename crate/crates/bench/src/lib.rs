//! Fixtures shared by the benchmarks.

use qserre_core::{EvalFactor, ModuleSpec, Scalar};

fn s(x: &str) -> Scalar {
    x.parse().expect("literal rational")
}

/// `V(d_1, a_1) ⊗ ... ` at the given q.
pub fn spec(q: &str, factors: &[(u32, &str)]) -> ModuleSpec {
    ModuleSpec::new(s(q), factors.iter().map(|&(d, a)| EvalFactor::new(d, s(a))).collect())
}

/// Named modules of increasing dimension (2, 6, 12) plus a reducible boundary case.
pub fn fixtures() -> Vec<(&'static str, ModuleSpec)> {
    vec![
        ("V(1,1) q=2", spec("2", &[(1, "1")])),
        ("V(1,9/2) q=2", spec("2", &[(1, "9/2")])),
        ("V(2,3)xV(1,5/2) q=2", spec("2", &[(2, "3"), (1, "5/2")])),
        ("V(2,3)xV(3,5/2) q=3/2", spec("3/2", &[(2, "3"), (3, "5/2")])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_dimensions() {
        let dims: Vec<usize> = fixtures().iter().map(|(_, s)| s.dim()).collect();
        assert_eq!(dims, vec![2, 2, 6, 12]);
    }
}
