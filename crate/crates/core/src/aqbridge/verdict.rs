use serde::{Serialize, Serializer};

use super::AqPair;
use crate::drinfeld::{poly_from_sigmas, sigmas};
use crate::error::{Error, Result};
use crate::exactnum::{critical_value, Scalar};
use crate::linalg::{generated_algebra_dim, Subspace};
use crate::uqrep::UqRep;

/// Irreducibility over the q-Serre algebra, decided twice: by the value
/// `P_V(c)` and by the dimension of the algebra generated by `A`, `A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub criterion_value: Scalar,
    pub criterion_verdict: bool,
    pub oracle_algebra_dim: usize,
    pub oracle_verdict: bool,
    pub witness: Option<Subspace>,
}

impl Serialize for IrreducibilityVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            criterion_value: &'a Scalar,
            criterion: bool,
            oracle_dim: usize,
            oracle: bool,
            witness_dim: Option<usize>,
        }
        Json {
            criterion_value: &self.criterion_value,
            criterion: self.criterion_verdict,
            oracle_dim: self.oracle_algebra_dim,
            oracle: self.oracle_verdict,
            witness_dim: self.witness.as_ref().map(Subspace::dim),
        }
        .serialize(serializer)
    }
}

/// `W = Σ_i (V_0 + ... + V_i) ∩ (V*_{i+1} + ... + V*_d)` for `0 <= i < d`.
pub fn reducibility_witness(pair: &AqPair) -> Result<Subspace> {
    let n = pair.dim;
    let d = pair.diameter;
    let mut w = Subspace::zero(n);
    for i in 0..d {
        let wi = pair.eig_a_sum(0, i).intersection(&pair.eig_astar_sum(i + 1, d))?;
        w = w.sum(&wi)?;
    }
    Ok(w)
}

fn checked_witness(pair: &AqPair) -> Result<Subspace> {
    let w = reducibility_witness(pair)?;
    if w.is_zero() || w.dim() == pair.dim {
        return Err(Error::TheoremViolation(format!(
            "witness has dimension {} in a module of dimension {}",
            w.dim(),
            pair.dim
        )));
    }
    if !w.is_invariant_under(&pair.a) || !w.is_invariant_under(&pair.astar) {
        return Err(Error::TheoremViolation("witness is not invariant under A and A*".into()));
    }
    Ok(w)
}

pub fn aq_irreducibility(pair: &AqPair, rep: &UqRep) -> Result<IrreducibilityVerdict> {
    let poly = poly_from_sigmas(&sigmas(rep, &pair.weights)?, &pair.q)?;
    aq_irreducibility_with(pair, &poly.eval(&critical_value(&pair.q)?))
}

/// As [`aq_irreducibility`] with the criterion value already computed.
pub fn aq_irreducibility_with(pair: &AqPair, criterion_value: &Scalar) -> Result<IrreducibilityVerdict> {
    let criterion_verdict = !criterion_value.is_zero();
    let n = pair.dim;
    let oracle_algebra_dim = generated_algebra_dim(n, &[pair.a.clone(), pair.astar.clone()]);
    let oracle_verdict = oracle_algebra_dim == n * n;
    if criterion_verdict != oracle_verdict {
        return Err(Error::ConsistencyFailure(format!(
            "P_V(c) = {criterion_value} but the generated algebra has dimension {oracle_algebra_dim} of {}",
            n * n
        )));
    }
    let witness = if criterion_verdict { None } else { Some(checked_witness(pair)?) };
    Ok(IrreducibilityVerdict {
        criterion_value: criterion_value.clone(),
        criterion_verdict,
        oracle_algebra_dim,
        oracle_verdict,
        witness,
    })
}
