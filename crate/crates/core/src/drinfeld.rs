//! Drinfel'd polynomials of type-(1,1) modules and the critical-value test.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{critical_value, qfactorial, qpow, Polynomial, Scalar};
use crate::uqrep::{is_irreducible_spec, weight_decomposition, ModuleSpec, UqRep, WeightData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrinfeldData {
    pub sigma: Vec<Scalar>,
    pub poly: Polynomial,
    pub critical_value: Scalar,
    pub critical_eval: Scalar,
    pub predicted_aq_irreducible: bool,
}

fn require_type_11(w: &WeightData) -> Result<()> {
    if w.is_type_11() {
        Ok(())
    } else {
        Err(Error::WrongType { eps0: w.eps0, eps1: w.eps1 })
    }
}

/// Spanning vector of `U_0`.
pub(crate) fn lowest_weight_vector(w: &WeightData) -> Result<Vec<Scalar>> {
    let u0 = &w.spaces[0];
    if u0.dim() != 1 {
        return Err(Error::InternalInvariant(format!("dim U_0 = {}, expected 1", u0.dim())));
    }
    Ok(u0.vectors().remove(0))
}

/// Coefficient `c` with `image = c * u`, or `None` when `image ∉ span(u)`.
pub(crate) fn ratio_on_line(u: &[Scalar], image: &[Scalar]) -> Option<Scalar> {
    let p = u.iter().position(|x| !x.is_zero())?;
    let c = &image[p] / &u[p];
    let fits = u.iter().zip(image).all(|(x, y)| &(&c * x) == y);
    fits.then_some(c)
}

/// `σ_0, ..., σ_d` read off from `(e1+)^i (e0+)^i` on `U_0`.
pub fn sigmas(rep: &UqRep, w: &WeightData) -> Result<Vec<Scalar>> {
    require_type_11(w)?;
    let u = lowest_weight_vector(w)?;
    let mut out = Vec::with_capacity(w.diameter + 1);
    // Both powers are advanced together: v_i = (e0+)^i u, then (e1+)^i v_i.
    let mut raised = u.clone();
    for i in 0..=w.diameter {
        let mut x = raised.clone();
        for _ in 0..i {
            x = rep.e1p().mul_vec(&x);
        }
        let s = ratio_on_line(&u, &x)
            .ok_or_else(|| Error::TheoremViolation(format!("(e1+)^{i}(e0+)^{i} does not preserve U_0")))?;
        out.push(s);
        raised = rep.e0p().mul_vec(&raised);
    }
    Ok(out)
}

/// The single eigenvalue `σ_i`; zero beyond the diameter.
pub fn sigma(rep: &UqRep, i: usize) -> Result<Scalar> {
    let w = weight_decomposition(rep)?;
    if i > w.diameter {
        require_type_11(&w)?;
        return Ok(Scalar::zero());
    }
    Ok(sigmas(rep, &w)?.swap_remove(i))
}

/// `Σ_i (-1)^i σ_i q^i z^i / ([i]_q!)^2`.
pub fn poly_from_sigmas(sigma: &[Scalar], q: &Scalar) -> Result<Polynomial> {
    let coeffs = sigma
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let f = qfactorial(i as u32, q)?;
            let sign = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            Ok(sign * s * qpow(q, i as i64) / (&f * &f))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

pub fn drinfeld_poly(rep: &UqRep) -> Result<Polynomial> {
    let w = weight_decomposition(rep)?;
    poly_from_sigmas(&sigmas(rep, &w)?, rep.q())
}

/// `(1 - q^(d-1) a z)(1 - q^(d-3) a z) ... (1 - q^(1-d) a z)`.
pub fn evaluation_poly(d: u32, a: &Scalar, q: &Scalar) -> Polynomial {
    let d = i64::from(d);
    (0..d).fold(Polynomial::one(), |acc, k| acc.mul(&Polynomial::linear_factor(&(qpow(q, d - 1 - 2 * k) * a))))
}

/// Product of the closed-form factor polynomials.
pub fn drinfeld_poly_spec(spec: &ModuleSpec) -> Polynomial {
    spec.factors.iter().fold(Polynomial::one(), |acc, f| acc.mul(&evaluation_poly(f.d, &f.a, &spec.q)))
}

/// `P_V(c)` and whether it is nonzero.
pub fn criterion_value(poly: &Polynomial, q: &Scalar) -> Result<(Scalar, bool)> {
    let v = poly.eval(&critical_value(q)?);
    let nonzero = !v.is_zero();
    Ok((v, nonzero))
}

/// Full Drinfel'd data of a U_q-irreducible type-(1,1) module, with `P_V`
/// computed from the `σ_i`.
pub fn drinfeld_data(rep: &UqRep, w: &WeightData) -> Result<DrinfeldData> {
    require_type_11(w)?;
    if !rep.is_irreducible() {
        return Err(Error::Precondition("module is reducible over U_q(sl2-hat)".into()));
    }
    let sigma = sigmas(rep, w)?;
    let poly = poly_from_sigmas(&sigma, rep.q())?;
    let c = critical_value(rep.q())?;
    let critical_eval = poly.eval(&c);
    let predicted_aq_irreducible = !critical_eval.is_zero();
    Ok(DrinfeldData { sigma, poly, critical_value: c, critical_eval, predicted_aq_irreducible })
}

pub fn criterion(rep: &UqRep) -> Result<(Scalar, bool)> {
    let w = weight_decomposition(rep)?;
    let d = drinfeld_data(rep, &w)?;
    Ok((d.critical_eval, d.predicted_aq_irreducible))
}

pub fn criterion_spec(spec: &ModuleSpec) -> Result<(Scalar, bool)> {
    spec.validate()?;
    if !is_irreducible_spec(spec) {
        return Err(Error::Precondition("module is reducible over U_q(sl2-hat)".into()));
    }
    criterion_value(&drinfeld_poly_spec(spec), &spec.q)
}
