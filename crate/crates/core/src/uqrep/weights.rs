use serde::Serialize;

use super::UqRep;
use crate::error::{Error, Result};
use crate::exactnum::{qpow, Scalar};
use crate::linalg::{eigenspace, is_direct_sum, Matrix, Subspace};

/// Weight space decomposition `U_0, ..., U_d` with its type `(eps0, eps1)`.
///
/// `K0` acts on `U_i` as `eps0 q^(2i-d)` and `K1` as `eps1 q^(d-2i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightData {
    pub eps0: i8,
    pub eps1: i8,
    pub diameter: usize,
    pub spaces: Vec<Subspace>,
}

impl WeightData {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn is_type_11(&self) -> bool {
        self.eps0 == 1 && self.eps1 == 1
    }

    /// `U_lo + ... + U_hi` (zero when the range is empty).
    pub fn partial_sum(&self, lo: usize, hi: usize) -> Subspace {
        let n = self.spaces.first().map_or(0, Subspace::ambient_dim);
        if lo > hi || lo > self.diameter {
            return Subspace::zero(n);
        }
        Subspace::sum_all(n, &self.spaces[lo..=hi.min(self.diameter)])
    }

    /// Projection onto `U_i` along the other weight spaces.
    pub fn projector(&self, i: usize) -> Result<Matrix> {
        if i > self.diameter {
            return Err(Error::IndexOutOfRange { index: i, max: self.diameter });
        }
        block_projector(&self.spaces, i)
    }
}

/// Projection onto `parts[i]` along the remaining parts of a direct-sum decomposition.
pub(crate) fn block_projector(parts: &[Subspace], i: usize) -> Result<Matrix> {
    operator_from_decomposition(parts, |j| if j == i { Scalar::one() } else { Scalar::zero() })
}

/// The operator acting on `parts[j]` as the scalar `value(j)`.
pub(crate) fn operator_from_decomposition(parts: &[Subspace], value: impl Fn(usize) -> Scalar) -> Result<Matrix> {
    let n = parts.first().map_or(0, Subspace::ambient_dim);
    let blocks: Vec<&Matrix> = parts.iter().map(Subspace::basis).collect();
    let p = Matrix::hstack(&blocks);
    if p.cols() != n {
        return Err(Error::InternalInvariant("decomposition is not a basis".into()));
    }
    let p_inv = p.inverse().map_err(|_| Error::InternalInvariant("decomposition is not direct".into()))?;
    let diag: Vec<Scalar> =
        parts.iter().enumerate().flat_map(|(j, s)| std::iter::repeat_n(value(j), s.dim())).collect();
    Ok(&(&p * &Matrix::diag(&diag)) * &p_inv)
}

fn ladder_ok(m: &Matrix, spaces: &[Subspace], step: isize) -> bool {
    let d = spaces.len() as isize - 1;
    spaces.iter().enumerate().all(|(i, u)| {
        let target = i as isize + step;
        let img = u.image(m);
        if target < 0 || target > d {
            img.is_zero()
        } else {
            spaces[target as usize].contains(&img)
        }
    })
}

/// Detects the type and diameter from the spectrum of `K0` and returns the
/// weight spaces, after checking the `K1` eigenvalues and the ladder
/// containments `e0+ U_i ⊆ U_{i+1}`, `e1- U_i ⊆ U_{i+1}`,
/// `e0- U_i ⊆ U_{i-1}`, `e1+ U_i ⊆ U_{i-1}`.
pub fn weight_decomposition(rep: &UqRep) -> Result<WeightData> {
    let n = rep.dim();
    let q = rep.q();
    let k0 = rep.k0();
    let mut found = None;
    'search: for d in 0..n {
        for eps0 in [1i8, -1] {
            let sign = Scalar::from_int(i64::from(eps0));
            let mut spaces = Vec::with_capacity(d + 1);
            let mut total = 0;
            for i in 0..=d {
                let theta = &sign * &qpow(q, 2 * i as i64 - d as i64);
                let u = eigenspace(k0, &theta);
                if u.is_zero() {
                    break;
                }
                total += u.dim();
                spaces.push(u);
            }
            if spaces.len() == d + 1 && total == n {
                found = Some((d, eps0, spaces));
                break 'search;
            }
        }
    }
    let Some((d, eps0, spaces)) = found else {
        return Err(Error::NotAWeightModule("K0 spectrum is not a full signed q-string with semisimple action".into()));
    };
    debug_assert!(is_direct_sum(&spaces, n));

    let u0 = spaces[0].vectors().remove(0);
    let image = rep.k1().mul_vec(&u0);
    let p = u0.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
    let lambda = &image[p] / &u0[p];
    let qd = qpow(q, d as i64);
    let eps1: i8 = if lambda == qd {
        1
    } else if lambda == -&qd {
        -1
    } else {
        return Err(Error::NotAWeightModule(format!("K1 acts on U_0 by {lambda}, not ±q^{d}")));
    };
    let sign1 = Scalar::from_int(i64::from(eps1));
    for (i, u) in spaces.iter().enumerate() {
        let theta = &sign1 * &qpow(q, d as i64 - 2 * i as i64);
        let residual = rep.k1().shift(&theta);
        if !u.image(&residual).is_zero() {
            return Err(Error::NotAWeightModule(format!("K1 is not scalar {theta} on U_{i}")));
        }
    }
    let ladders = [(rep.e0p(), 1isize, "e0p"), (rep.e1m(), 1, "e1m"), (rep.e0m(), -1, "e0m"), (rep.e1p(), -1, "e1p")];
    for (m, step, name) in ladders {
        if !ladder_ok(m, &spaces, step) {
            return Err(Error::NotAWeightModule(format!("{name} does not shift weight spaces by {step}")));
        }
    }
    Ok(WeightData { eps0, eps1, diameter: d, spaces })
}
