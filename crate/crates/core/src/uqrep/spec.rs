use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{qpow, validate_q, Polynomial, Scalar};

/// One evaluation factor `V(d, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvalFactor {
    pub d: u32,
    pub a: Scalar,
}

impl EvalFactor {
    pub fn new(d: u32, a: Scalar) -> Self {
        EvalFactor { d, a }
    }
}

/// A tensor product `V(d_1,a_1) ⊗ ... ⊗ V(d_N,a_N)`; no factors means the
/// trivial module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub q: Scalar,
    pub factors: Vec<EvalFactor>,
}

impl ModuleSpec {
    pub fn new(q: Scalar, factors: Vec<EvalFactor>) -> Self {
        ModuleSpec { q, factors }
    }

    pub fn validate(&self) -> Result<()> {
        validate_q(&self.q)?;
        for f in &self.factors {
            if f.d == 0 {
                return Err(Error::InvalidParameter("factor with d = 0".into()));
            }
            if f.a.is_zero() {
                return Err(Error::InvalidParameter("factor with a = 0".into()));
            }
        }
        Ok(())
    }

    /// Module dimension `∏ (d_j + 1)`.
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.d as usize + 1).product()
    }

    /// Diameter `Σ d_j`.
    pub fn diameter(&self) -> usize {
        self.factors.iter().map(|f| f.d as usize).sum()
    }

    /// Concatenation of factor lists (same q required).
    pub fn concat(&self, other: &ModuleSpec) -> Result<ModuleSpec> {
        if self.q != other.q {
            return Err(Error::QMismatch(self.q.to_string(), other.q.to_string()));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(ModuleSpec { q: self.q.clone(), factors })
    }

    /// First ordered pair `(i, j)` whose ratio `a_i / a_j` lands in the
    /// forbidden set `{q^(d_i+d_j), q^(d_i+d_j-2), ..., q^(|d_i-d_j|+2)}`.
    pub fn reducibility_obstruction(&self) -> Option<(usize, usize, i64)> {
        for (i, fi) in self.factors.iter().enumerate() {
            for (j, fj) in self.factors.iter().enumerate() {
                if i == j {
                    continue;
                }
                let ratio = &fi.a / &fj.a;
                let (di, dj) = (i64::from(fi.d), i64::from(fj.d));
                let mut e = di + dj;
                while e >= (di - dj).abs() + 2 {
                    if ratio == qpow(&self.q, e) {
                        return Some((i, j, e));
                    }
                    e -= 2;
                }
            }
        }
        None
    }
}

/// The tensor product is irreducible iff no ordered pair of evaluation
/// parameters has a ratio in the forbidden q-power set.
pub fn is_irreducible_spec(spec: &ModuleSpec) -> bool {
    spec.reducibility_obstruction().is_none()
}

/// `∏_j (1 + z + ... + z^(d_j))`, the generating function of weight-space dimensions.
pub fn weight_generating_poly(spec: &ModuleSpec) -> Polynomial {
    spec.factors.iter().fold(Polynomial::one(), |acc, f| acc.mul(&Polynomial::geometric(f.d as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    fn spec(q: &str, fs: &[(u32, &str)]) -> ModuleSpec {
        ModuleSpec::new(s(q), fs.iter().map(|&(d, a)| EvalFactor::new(d, s(a))).collect())
    }

    #[test]
    fn irreducibility_condition() {
        assert!(!is_irreducible_spec(&spec("2", &[(1, "1"), (1, "4")])));
        assert!(is_irreducible_spec(&spec("2", &[(1, "1"), (1, "3")])));
        assert!(is_irreducible_spec(&spec("2", &[(3, "7/5")])));
        // d_i = 2, d_j = 1: forbidden ratios {q^3}
        assert!(!is_irreducible_spec(&spec("2", &[(2, "8"), (1, "1")])));
        assert!(is_irreducible_spec(&spec("2", &[(2, "2"), (1, "1")])));
        // d_i = d_j = 2: forbidden {q^4, q^2}
        assert!(!is_irreducible_spec(&spec("2", &[(2, "1"), (2, "4")])));
        assert!(!is_irreducible_spec(&spec("2", &[(2, "16"), (2, "1")])));
        assert!(is_irreducible_spec(&spec("2", &[(2, "1"), (2, "1")])));
    }

    #[test]
    fn generating_polynomials() {
        assert_eq!(weight_generating_poly(&spec("2", &[])), Polynomial::one());
        assert_eq!(weight_generating_poly(&spec("2", &[(2, "3"), (1, "5/2")])), Polynomial::from_ints(&[1, 2, 2, 1]));
        assert_eq!(
            weight_generating_poly(&spec("2", &[(1, "1"), (1, "2"), (1, "3")])),
            Polynomial::from_ints(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn json_shape() {
        let js = r#"{"q": "2/1", "factors": [{"d": 2, "a": "3/1"}, {"d": 1, "a": "5/2"}]}"#;
        let sp: ModuleSpec = serde_json::from_str(js).unwrap();
        assert_eq!(sp, spec("2", &[(2, "3"), (1, "5/2")]));
        assert_eq!(sp.dim(), 6);
        assert_eq!(sp.diameter(), 3);
    }
}
