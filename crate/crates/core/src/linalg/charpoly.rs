use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;
use crate::exactnum::{Polynomial, Scalar};

/// `det(zI - M)` by the Faddeev-LeVerrier recurrence (exact in characteristic 0).
pub fn characteristic_polynomial(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &acc;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let prod = m * &next;
        let trace: Scalar = (0..n).map(|i| prod[(i, i)].clone()).sum();
        coeffs[n - k] = -(trace / Scalar::from_int(k as i64));
        acc = next;
    }
    Polynomial::new(coeffs)
}

// Trial division bound; a cofactor left above it is treated as prime, which
// can only lose candidate roots, never invent one.
const TRIAL_BOUND: u64 = 1 << 20;

fn prime_power_factors(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut rest = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u32);
    while !rest.is_one() && p.to_u64().is_some_and(|x| x <= TRIAL_BOUND) {
        if &p * &p > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in prime_power_factors(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

fn primitive_integer_coeffs(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

/// `den^deg * f(num/den)` for integer coefficients.
fn homogeneous_eval(ints: &[BigInt], num: &BigInt, den: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    // Horner from the top: acc = acc * num + c_i * den^(deg - i)
    for c in ints.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    acc
}

/// Rational roots with multiplicities, ascending.
///
/// Uses the rational root theorem on the integer-scaled polynomial. The
/// returned multiplicities sum to the degree exactly when the polynomial
/// splits over the rationals.
pub fn rational_roots(p: &Polynomial) -> Vec<(Scalar, usize)> {
    let Some(_) = p.degree() else {
        return Vec::new();
    };
    let mut roots = Vec::new();
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut rest = Polynomial::new(p.coeffs()[zero_mult..].to_vec());
    if zero_mult > 0 {
        roots.push((Scalar::zero(), zero_mult));
    }
    if rest.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let ints = primitive_integer_coeffs(&rest);
    let lead_divs = divisors(ints.last().expect("nonzero polynomial"));
    let const_divs = divisors(&ints[0]);
    let mut ints = ints;
    for num in &const_divs {
        for den in &lead_divs {
            if !num.gcd(den).is_one() {
                continue;
            }
            for num in [-num.clone(), num.clone()] {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                // after deflation the candidate must still divide the end coefficients
                let (lead, constant) = (ints.last().expect("nonzero"), &ints[0]);
                if !(constant % &num).is_zero() || !(lead % den).is_zero() {
                    continue;
                }
                if !homogeneous_eval(&ints, &num, den).is_zero() {
                    continue;
                }
                let r = Scalar::from_big(num.clone(), den.clone()).expect("nonzero divisor");
                let factor = Polynomial::new(vec![-&r, Scalar::one()]);
                let mut mult = 0;
                while let Some(q) = rest.exact_div(&factor) {
                    rest = q;
                    mult += 1;
                }
                roots.push((r, mult));
                ints = primitive_integer_coeffs(&rest);
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}
