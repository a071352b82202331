use serde::Serialize;

use super::projectors::{projector, ProjectorKind};
use super::AqPair;
use crate::drinfeld::{lowest_weight_vector, poly_from_sigmas, ratio_on_line, sigmas};
use crate::error::{Error, Result};
use crate::exactnum::{critical_value, Scalar};
use crate::uqrep::UqRep;

/// `E*_0 E_0 u = lhs u` on the lowest weight vector, against `rhs = P_V(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EepCheck {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub holds: bool,
}

pub fn verify_eep(pair: &AqPair, rep: &UqRep) -> Result<EepCheck> {
    let u = lowest_weight_vector(&pair.weights)?;
    let e0 = projector(pair, ProjectorKind::E, 0)?;
    let es0 = projector(pair, ProjectorKind::Estar, 0)?;
    let image = es0.mul_vec(&e0.mul_vec(&u));
    let lhs =
        ratio_on_line(&u, &image).ok_or_else(|| Error::TheoremViolation("E*_0 E_0 u is not a multiple of u".into()))?;
    let poly = poly_from_sigmas(&sigmas(rep, &pair.weights)?, &pair.q)?;
    let rhs = poly.eval(&critical_value(&pair.q)?);
    let holds = lhs == rhs;
    Ok(EepCheck { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::super::build_aq_pair;
    use super::*;
    use crate::uqrep::{evaluation_module, trivial_module};

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn two_dimensional_modules() {
        let q = s("2");
        for a in ["1", "3", "9/2", "-7/5"] {
            let v = evaluation_module(1, &s(a), &q).unwrap();
            let p = build_aq_pair(&v).unwrap();
            let c = verify_eep(&p, &v).unwrap();
            // 1 - 2a/9
            let expected = s("1") - s("2/9") * s(a);
            assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (expected.clone(), expected, true));
        }
    }

    #[test]
    fn trivial_module_both_sides_one() {
        let v = trivial_module(&s("2")).unwrap();
        let c = verify_eep(&build_aq_pair(&v).unwrap(), &v).unwrap();
        assert_eq!((c.lhs, c.rhs, c.holds), (s("1"), s("1"), true));
    }
}
