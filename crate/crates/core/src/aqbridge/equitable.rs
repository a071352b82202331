use serde::Serialize;

use super::AqPair;
use crate::drinfeld::{poly_from_sigmas, sigmas};
use crate::error::{Error, Result};
use crate::exactnum::{critical_value, qdiff, qpow, Scalar};
use crate::linalg::{is_direct_sum, Matrix, Subspace};
use crate::uqrep::{operator_from_decomposition, qserre_residual, RelationReport, UqRep};

/// Operators rebuilt from the eigenspaces of `A` and `A*` alone.
///
/// `K`, `B`, `B*` act on the `i`-th piece of `U`, `W`, `W*` as
/// `q^(2i-d)`, `q^(2i-d)`, `q^(d-2i)`.
#[derive(Clone, Debug, Serialize)]
pub struct EquitableSet {
    #[serde(rename = "K")]
    pub k: Matrix,
    #[serde(rename = "B")]
    pub b: Matrix,
    #[serde(rename = "Bstar")]
    pub bstar: Matrix,
    #[serde(rename = "R")]
    pub r_upper: Matrix,
    #[serde(rename = "L")]
    pub l_upper: Matrix,
    #[serde(rename = "r")]
    pub r_lower: Matrix,
    #[serde(rename = "l")]
    pub l_lower: Matrix,
    pub decomp_u: Vec<Subspace>,
    pub decomp_w: Vec<Subspace>,
    pub decomp_wstar: Vec<Subspace>,
    /// The equitable relations and the relations among `K, R, L, r, l`.
    pub relations: RelationReport,
    /// Whether `K, R, L, l, r` coincide with `K0, e0+, e1+, e0-, e1-`.
    pub recovery: RelationReport,
}

fn decomposition(pair: &AqPair, name: &str, piece: impl Fn(usize) -> Result<Subspace>) -> Result<Vec<Subspace>> {
    let parts = (0..=pair.diameter).map(piece).collect::<Result<Vec<_>>>()?;
    if !is_direct_sum(&parts, pair.dim) {
        return Err(Error::TheoremViolation(format!("the {name} pieces do not decompose the module")));
    }
    Ok(parts)
}

/// `(q X Y - q^-1 Y X)/(q - q^-1) - I`
fn equitable_residual(x: &Matrix, y: &Matrix, q: &Scalar, qi: &Scalar, inv_diff: &Scalar) -> Matrix {
    let lhs = (&(x * y).scale(q) - &(y * x).scale(qi)).scale(inv_diff);
    lhs.shift(&Scalar::one())
}

pub fn equitable_operators(pair: &AqPair, rep: &UqRep) -> Result<EquitableSet> {
    let q = &pair.q;
    let crit = poly_from_sigmas(&sigmas(rep, &pair.weights)?, q)?.eval(&critical_value(q)?);
    if crit.is_zero() {
        return Err(Error::Precondition(
            "module is reducible over the q-Serre algebra (P_V at the critical value is 0)".into(),
        ));
    }
    let d = pair.diameter;
    let n = pair.dim;
    let decomp_u = decomposition(pair, "U", |i| pair.eig_astar_sum(0, i).intersection(&pair.eig_a_sum(i, d)))?;
    let decomp_w = decomposition(pair, "W", |i| pair.eig_astar_sum(0, i).intersection(&pair.eig_a_sum(0, d - i)))?;
    let decomp_wstar = decomposition(pair, "W*", |i| pair.eig_astar_sum(d - i, d).intersection(&pair.eig_a_sum(i, d)))?;

    let k = operator_from_decomposition(&decomp_u, |i| pair.theta(i))?;
    let k_inv = operator_from_decomposition(&decomp_u, |i| pair.theta_star(i))?;
    let b = operator_from_decomposition(&decomp_w, |i| pair.theta(i))?;
    let bstar = operator_from_decomposition(&decomp_wstar, |i| pair.theta_star(i))?;

    let id = Matrix::identity(n);
    let qd = qdiff(q);
    let inv_diff = qd.recip()?;
    let scale = (q * &qd * &qd).recip()?;
    let r_upper = &pair.a - &k;
    let l_upper = &pair.astar - &k_inv;
    let r_lower = (&id - &(&k * &bstar)).scale(&scale);
    let l_lower = (&id - &(&k_inv * &b)).scale(&scale);

    let qi = qpow(q, -1);
    let q2 = qpow(q, 2);
    let qm2 = qpow(q, -2);
    let (a, astar) = (&pair.a, &pair.astar);
    let mut rel = RelationReport::default();
    let eq = |x: &Matrix, y: &Matrix| equitable_residual(x, y, q, &qi, &inv_diff);
    rel.push("(qAB-q^-1BA)/(q-q^-1)=I", &eq(a, &b));
    rel.push("(qBA*-q^-1A*B)/(q-q^-1)=I", &eq(&b, astar));
    rel.push("(qA*B*-q^-1B*A*)/(q-q^-1)=I", &eq(astar, &bstar));
    rel.push("(qB*A-q^-1AB*)/(q-q^-1)=I", &eq(&bstar, a));
    rel.push("(qK^-1A-q^-1AK^-1)/(q-q^-1)=I", &eq(&k_inv, a));
    rel.push("(qBK^-1-q^-1K^-1B)/(q-q^-1)=I", &eq(&b, &k_inv));
    rel.push("(qKA*-q^-1A*K)/(q-q^-1)=I", &eq(&k, astar));
    rel.push("(qB*K-q^-1KB*)/(q-q^-1)=I", &eq(&bstar, &k));
    rel.push("serre(A,A*)=0", &qserre_residual(a, astar, q));
    rel.push("serre(A*,A)=0", &qserre_residual(astar, a, q));
    rel.push("serre(B,B*)=0", &qserre_residual(&b, &bstar, q));
    rel.push("serre(B*,B)=0", &qserre_residual(&bstar, &b, q));

    let conj = |x: &Matrix| &(&k * x) * &k_inv;
    let (ru, lu, rl, ll) = (&r_upper, &l_upper, &r_lower, &l_lower);
    rel.push("KRK^-1=q^2R", &(&conj(ru) - &ru.scale(&q2)));
    rel.push("KLK^-1=q^-2L", &(&conj(lu) - &lu.scale(&qm2)));
    rel.push("KrK^-1=q^2r", &(&conj(rl) - &rl.scale(&q2)));
    rel.push("KlK^-1=q^-2l", &(&conj(ll) - &ll.scale(&qm2)));
    let kk = (&k - &k_inv).scale(&inv_diff);
    rel.push("rL-Lr=(K-K^-1)/(q-q^-1)", &(&(&(rl * lu) - &(lu * rl)) - &kk));
    rel.push("lR-Rl=(K^-1-K)/(q-q^-1)", &(&(&(ll * ru) - &(ru * ll)) + &kk));
    rel.push("lL=Ll", &(&(ll * lu) - &(lu * ll)));
    rel.push("rR=Rr", &(&(rl * ru) - &(ru * rl)));
    rel.push("serre(R,L)=0", &qserre_residual(ru, lu, q));
    rel.push("serre(L,R)=0", &qserre_residual(lu, ru, q));
    rel.push("serre(r,l)=0", &qserre_residual(rl, ll, q));
    rel.push("serre(l,r)=0", &qserre_residual(ll, rl, q));

    if let Some(bad) = rel.failures().next() {
        return Err(Error::TheoremViolation(format!("equitable relation {} fails", bad.name)));
    }

    let mut recovery = RelationReport::default();
    recovery.push("K=K0", &(&k - rep.k0()));
    recovery.push("R=e0p", &(ru - rep.e0p()));
    recovery.push("L=e1p", &(lu - rep.e1p()));
    recovery.push("l=e0m", &(ll - rep.e0m()));
    recovery.push("r=e1m", &(rl - rep.e1m()));

    Ok(EquitableSet {
        k,
        b,
        bstar,
        r_upper,
        l_upper,
        r_lower,
        l_lower,
        decomp_u,
        decomp_w,
        decomp_wstar,
        relations: rel,
        recovery,
    })
}
