//! q-numbers: `[n]_q = (q^n - q^-n)/(q - q^-1)`, q-factorials and the
//! critical evaluation point `q^-1 (q - q^-1)^-2`.

use super::Scalar;
use crate::error::{Error, Result};

/// Rejects deformation parameters for which q-numbers degenerate.
pub fn validate_q(q: &Scalar) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::InvalidParameter(format!("deformation parameter q = {q} must satisfy |q| not in {{0, 1}}")));
    }
    Ok(())
}

/// `q^k` for a validated q.
pub fn qpow(q: &Scalar, k: i64) -> Scalar {
    q.pow(k).expect("q is nonzero")
}

/// `q - q^-1`, nonzero for every valid q.
pub fn qdiff(q: &Scalar) -> Scalar {
    q - &qpow(q, -1)
}

pub fn qbracket(n: u32, q: &Scalar) -> Result<Scalar> {
    validate_q(q)?;
    let n = i64::from(n);
    Ok((qpow(q, n) - qpow(q, -n)) / qdiff(q))
}

pub fn qfactorial(n: u32, q: &Scalar) -> Result<Scalar> {
    validate_q(q)?;
    (1..=n).map(|k| qbracket(k, q)).product()
}

/// `q^-1 (q - q^-1)^-2`.
pub fn critical_value(q: &Scalar) -> Result<Scalar> {
    validate_q(q)?;
    let diff = qdiff(q);
    Ok(qpow(q, -1) / (&diff * &diff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn bracket_values() {
        let q = s("2");
        assert_eq!(qbracket(0, &q).unwrap(), s("0"));
        assert_eq!(qbracket(1, &q).unwrap(), s("1"));
        assert_eq!(qbracket(3, &q).unwrap(), s("21/4"));
    }

    #[test]
    fn factorial_values() {
        let q = s("2");
        assert_eq!(qfactorial(0, &q).unwrap(), s("1"));
        assert_eq!(qfactorial(1, &q).unwrap(), s("1"));
        assert_eq!(qfactorial(3, &q).unwrap(), s("105/8"));
    }

    #[test]
    fn degenerate_q_rejected() {
        for bad in ["0", "1", "-1"] {
            assert!(matches!(qbracket(2, &s(bad)), Err(Error::InvalidParameter(_))));
            assert!(matches!(qfactorial(2, &s(bad)), Err(Error::InvalidParameter(_))));
            assert!(matches!(critical_value(&s(bad)), Err(Error::InvalidParameter(_))));
        }
    }

    #[test]
    fn critical_at_two() {
        assert_eq!(critical_value(&s("2")).unwrap(), s("2/9"));
    }
}
