use serde::Serialize;

use super::AqPair;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::Matrix;
use crate::uqrep::UqRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProjectorKind {
    /// onto `V_i` along the other eigenspaces of `A`
    E,
    /// onto `V*_i` along the other eigenspaces of `A*`
    Estar,
    /// onto the weight space `U_i`
    F,
}

impl ProjectorKind {
    pub const ALL: [ProjectorKind; 3] = [ProjectorKind::E, ProjectorKind::Estar, ProjectorKind::F];
}

fn check_index(pair: &AqPair, i: usize) -> Result<()> {
    if i > pair.diameter {
        return Err(Error::IndexOutOfRange { index: i, max: pair.diameter });
    }
    Ok(())
}

/// `E_i` and `E*_i` by the Lagrange product over the other eigenvalues;
/// `F_i` from the weight decomposition.
pub fn projector(pair: &AqPair, kind: ProjectorKind, i: usize) -> Result<Matrix> {
    check_index(pair, i)?;
    let (op, theta): (&Matrix, fn(&AqPair, usize) -> _) = match kind {
        ProjectorKind::E => (&pair.a, AqPair::theta),
        ProjectorKind::Estar => (&pair.astar, AqPair::theta_star),
        ProjectorKind::F => return pair.weights.projector(i),
    };
    let ti = theta(pair, i);
    let mut out = Matrix::identity(pair.dim);
    for j in (0..=pair.diameter).filter(|&j| j != i) {
        let tj = theta(pair, j);
        let factor = op.shift(&tj).scale(&(&ti - &tj).recip()?);
        out = &out * &factor;
    }
    Ok(out)
}

/// The action of `E_i` (or `E*_i`) on `U_j` written as weighted powers of
/// `e0+` (or `e1+`), returned as the operator that agrees with it on `U_j`
/// and vanishes on every other weight space.
type EigenvalueAt = fn(&AqPair, usize) -> Scalar;

pub fn projector_sum_form(pair: &AqPair, rep: &UqRep, kind: ProjectorKind, i: usize, j: usize) -> Result<Matrix> {
    check_index(pair, i)?;
    check_index(pair, j)?;
    let n = pair.dim;
    let d = pair.diameter;
    let restrict = pair.weights.projector(j)?;
    let (raise, theta, lead, tail): (&Matrix, EigenvalueAt, Vec<usize>, Vec<usize>) = match kind {
        // E_i on U_j is zero for i < j
        ProjectorKind::E if i < j => return Ok(Matrix::zeros(n, n)),
        ProjectorKind::E => (rep.e0p(), AqPair::theta, (j..i).collect(), (i + 1..=d).collect()),
        // E*_i on U_j is zero for i > j
        ProjectorKind::Estar if i > j => return Ok(Matrix::zeros(n, n)),
        ProjectorKind::Estar => (rep.e1p(), AqPair::theta_star, (i + 1..=j).collect(), (0..i).rev().collect()),
        ProjectorKind::F => return Err(Error::InvalidParameter("no sum form for the weight projector".into())),
    };
    let ti = theta(pair, i);
    let mut prefactor = crate::exactnum::Scalar::one();
    for k in lead {
        prefactor = prefactor * (&ti - &theta(pair, k));
    }
    let offset = i.abs_diff(j);
    let mut power = raise.pow(offset as u32);
    let mut weight = prefactor.recip()?;
    let mut acc = power.scale(&weight);
    for m in tail {
        power = raise * &power;
        weight = weight * (&ti - &theta(pair, m)).recip()?;
        acc = &acc + &power.scale(&weight);
    }
    Ok(&acc * &restrict)
}
