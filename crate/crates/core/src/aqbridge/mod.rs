//! From U_q(sl2-hat)-modules to modules for the q-Serre algebra: `x` acts as
//! `A = e0+ + K0` and `y` as `A* = e1+ + K1`.

mod eep;
mod equitable;
mod projectors;
mod verdict;

use serde::Serialize;

pub use eep::{verify_eep, EepCheck};
pub use equitable::{equitable_operators, EquitableSet};
pub use projectors::{projector, projector_sum_form, ProjectorKind};
pub use verdict::{aq_irreducibility, aq_irreducibility_with, reducibility_witness, IrreducibilityVerdict};

use crate::error::{Error, Result};
use crate::exactnum::{qpow, Scalar};
use crate::linalg::{eigenspace, Matrix, Subspace};
use crate::uqrep::{qserre_residual, weight_decomposition, RelationReport, UqRep, WeightData};

/// `A`, `A*` with their eigenspaces `V_i` (eigenvalue `q^(2i-d)`) and `V*_i`
/// (eigenvalue `q^(d-2i)`), plus the weight spaces `U_i` of the source module.
#[derive(Clone, Debug, Serialize)]
pub struct AqPair {
    pub q: Scalar,
    pub dim: usize,
    pub diameter: usize,
    pub a: Matrix,
    pub astar: Matrix,
    pub eig_a: Vec<Subspace>,
    pub eig_astar: Vec<Subspace>,
    #[serde(skip)]
    pub weights: WeightData,
}

impl AqPair {
    /// `q^(2i-d)`
    pub fn theta(&self, i: usize) -> Scalar {
        qpow(&self.q, 2 * i as i64 - self.diameter as i64)
    }

    /// `q^(d-2i)`
    pub fn theta_star(&self, i: usize) -> Scalar {
        qpow(&self.q, self.diameter as i64 - 2 * i as i64)
    }

    /// `V_lo + ... + V_hi`, zero for an empty range.
    pub fn eig_a_sum(&self, lo: usize, hi: usize) -> Subspace {
        range_sum(&self.eig_a, self.dim, lo, hi)
    }

    pub fn eig_astar_sum(&self, lo: usize, hi: usize) -> Subspace {
        range_sum(&self.eig_astar, self.dim, lo, hi)
    }
}

fn range_sum(parts: &[Subspace], n: usize, lo: usize, hi: usize) -> Subspace {
    if lo > hi || lo >= parts.len() {
        return Subspace::zero(n);
    }
    Subspace::sum_all(n, &parts[lo..=hi.min(parts.len() - 1)])
}

/// Refuses modules that are reducible over U_q(sl2-hat), naming the reason.
pub fn require_uq_irreducible(rep: &UqRep) -> Result<()> {
    if let Some(spec) = rep.origin() {
        if let Some((i, j, e)) = spec.reducibility_obstruction() {
            return Err(Error::Precondition(format!(
                "tensor-product irreducibility condition fails: a_{i}/a_{j} = q^{e} lies in the forbidden q-power set"
            )));
        }
        return Ok(());
    }
    if rep.is_irreducible() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "module is reducible over U_q(sl2-hat) (generated algebra is not the full matrix algebra)".into(),
        ))
    }
}

pub fn build_aq_pair(rep: &UqRep) -> Result<AqPair> {
    let w = weight_decomposition(rep)?;
    build_aq_pair_with(rep, w)
}

/// As [`build_aq_pair`], reusing an already computed weight decomposition.
pub fn build_aq_pair_with(rep: &UqRep, weights: WeightData) -> Result<AqPair> {
    if !weights.is_type_11() {
        return Err(Error::WrongType { eps0: weights.eps0, eps1: weights.eps1 });
    }
    require_uq_irreducible(rep)?;
    let a = rep.e0p() + rep.k0();
    let astar = rep.e1p() + rep.k1();
    let (n, d) = (rep.dim(), weights.diameter);
    let q = rep.q().clone();
    let eig_a: Vec<Subspace> = (0..=d).map(|i| eigenspace(&a, &qpow(&q, 2 * i as i64 - d as i64))).collect();
    let eig_astar: Vec<Subspace> = (0..=d).map(|i| eigenspace(&astar, &qpow(&q, d as i64 - 2 * i as i64))).collect();
    for (name, parts) in [("A", &eig_a), ("A*", &eig_astar)] {
        let total: usize = parts.iter().map(Subspace::dim).sum();
        if total != n {
            return Err(Error::SemisimplicityViolation(format!(
                "eigenspaces of {name} at q^(2i-d) span {total} of {n} dimensions"
            )));
        }
    }
    Ok(AqPair { q, dim: n, diameter: d, a, astar, eig_a, eig_astar, weights })
}

/// Both cubic q-Serre relations for the pair `(x, y)`.
pub fn check_qserre(x: &Matrix, y: &Matrix, q: &Scalar) -> RelationReport {
    let mut r = RelationReport::default();
    r.push("serre(A,A*)=0", &qserre_residual(x, y, q));
    r.push("serre(A*,A)=0", &qserre_residual(y, x, q));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqrep::{evaluation_module, from_spec, trivial_module, EvalFactor, ModuleSpec};

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn pair_for_two_dimensional_module() {
        let v = evaluation_module(1, &s("1"), &s("2")).unwrap();
        let p = build_aq_pair(&v).unwrap();
        assert_eq!(p.a, Matrix::from_rows(vec![vec![s("1/2"), s("0")], vec![s("1/2"), s("2")]]).unwrap());
        assert!(check_qserre(&p.a, &p.astar, &s("2")).all_hold());
        assert_eq!(p.eig_a[0].dim(), 1);
    }

    #[test]
    fn trivial_pair() {
        let p = build_aq_pair(&trivial_module(&s("2")).unwrap()).unwrap();
        assert_eq!((p.diameter, p.a.clone(), p.astar.clone()), (0, Matrix::identity(1), Matrix::identity(1)));
    }

    #[test]
    fn eigenvalue_multiplicities_follow_weights() {
        let q = s("3/2");
        let spec = ModuleSpec::new(q, vec![EvalFactor::new(2, s("3")), EvalFactor::new(1, s("5/2"))]);
        let p = build_aq_pair(&from_spec(&spec).unwrap()).unwrap();
        let dims: Vec<usize> = p.eig_a.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![1, 2, 2, 1]);
        let dims: Vec<usize> = p.eig_astar.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![1, 2, 2, 1]);
    }

    #[test]
    fn qserre_detects_non_solutions() {
        let x = Matrix::diag(&[s("1"), s("2")]);
        let y = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(!check_qserre(&x, &y, &s("2")).all_hold());
        assert!(check_qserre(&y, &y, &s("2")).all_hold());
    }

    #[test]
    fn reducible_spec_is_refused_with_reason() {
        let spec = ModuleSpec::new(s("2"), vec![EvalFactor::new(1, s("1")), EvalFactor::new(1, s("4"))]);
        let err = build_aq_pair(&from_spec(&spec).unwrap()).unwrap_err();
        match err {
            Error::Precondition(msg) => assert!(msg.contains("irreducibility condition"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
