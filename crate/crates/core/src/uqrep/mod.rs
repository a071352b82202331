//! Finite-dimensional modules for the quantum affine algebra `U_q(sl2-hat)`.
//!
//! A module is a set of generator matrices acting on column vectors. The
//! constructors cover evaluation modules `V(d, a)`, the trivial module,
//! tensor products (via the Hopf coproduct) and sign twists; the checkers
//! verify the Chevalley relations and extract the weight space decomposition.

mod relations;
mod spec;
mod weights;

use serde::Serialize;

pub use relations::{check_chevalley_relations, qserre_residual, RelationCheck, RelationReport};
pub use spec::{is_irreducible_spec, weight_generating_poly, EvalFactor, ModuleSpec};
pub(crate) use weights::operator_from_decomposition;
pub use weights::{weight_decomposition, WeightData};

use crate::error::{Error, Result};
use crate::exactnum::{qbracket, qpow, validate_q, Scalar};
use crate::linalg::{generated_algebra_dim, Matrix};

/// Chevalley generator names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Generator {
    E0p,
    E0m,
    E1p,
    E1m,
    K0,
    K1,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::E0p, Generator::E0m, Generator::E1p, Generator::E1m, Generator::K0, Generator::K1];

    pub fn name(self) -> &'static str {
        match self {
            Generator::E0p => "e0p",
            Generator::E0m => "e0m",
            Generator::E1p => "e1p",
            Generator::E1m => "e1m",
            Generator::K0 => "K0",
            Generator::K1 => "K1",
        }
    }
}

/// A finite-dimensional `U_q(sl2-hat)`-module given by its generator matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqRep {
    q: Scalar,
    dim: usize,
    e0p: Matrix,
    e0m: Matrix,
    e1p: Matrix,
    e1m: Matrix,
    k0: Matrix,
    k1: Matrix,
    k0_inv: Matrix,
    k1_inv: Matrix,
    origin: Option<ModuleSpec>,
}

impl UqRep {
    /// Hand-built module from the six generator matrices (in [`Generator::ALL`]
    /// order). `K0` and `K1` must be invertible; no relation is checked here.
    pub fn from_matrices(q: Scalar, mats: [Matrix; 6]) -> Result<Self> {
        validate_q(&q)?;
        let dim = mats[0].rows();
        if dim == 0 {
            return Err(Error::InvalidParameter("module dimension must be positive".into()));
        }
        for m in &mats {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
            }
        }
        let [e0p, e0m, e1p, e1m, k0, k1] = mats;
        let k0_inv = k0.inverse().map_err(|_| Error::InvalidParameter("K0 is not invertible".into()))?;
        let k1_inv = k1.inverse().map_err(|_| Error::InvalidParameter("K1 is not invertible".into()))?;
        Ok(UqRep { q, dim, e0p, e0m, e1p, e1m, k0, k1, k0_inv, k1_inv, origin: None })
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The spec this module was built from, when it came from [`from_spec`].
    pub fn origin(&self) -> Option<&ModuleSpec> {
        self.origin.as_ref()
    }

    pub fn generator(&self, g: Generator) -> &Matrix {
        match g {
            Generator::E0p => &self.e0p,
            Generator::E0m => &self.e0m,
            Generator::E1p => &self.e1p,
            Generator::E1m => &self.e1m,
            Generator::K0 => &self.k0,
            Generator::K1 => &self.k1,
        }
    }

    pub fn e0p(&self) -> &Matrix {
        &self.e0p
    }
    pub fn e0m(&self) -> &Matrix {
        &self.e0m
    }
    pub fn e1p(&self) -> &Matrix {
        &self.e1p
    }
    pub fn e1m(&self) -> &Matrix {
        &self.e1m
    }
    pub fn k0(&self) -> &Matrix {
        &self.k0
    }
    pub fn k1(&self) -> &Matrix {
        &self.k1
    }
    pub fn k0_inv(&self) -> &Matrix {
        &self.k0_inv
    }
    pub fn k1_inv(&self) -> &Matrix {
        &self.k1_inv
    }

    /// Copy with one generator replaced; used for mutation tests.
    pub fn with_generator(&self, g: Generator, m: Matrix) -> Result<Self> {
        let mut mats: [Matrix; 6] = Generator::ALL.map(|h| self.generator(h).clone());
        let idx = Generator::ALL.iter().position(|&h| h == g).expect("listed generator");
        mats[idx] = m;
        UqRep::from_matrices(self.q.clone(), mats)
    }

    /// Whether the module is irreducible. Spec-built modules use the
    /// evaluation-parameter condition; hand-built ones fall back to the
    /// Burnside oracle over all Chevalley generators.
    pub fn is_irreducible(&self) -> bool {
        match &self.origin {
            Some(spec) => is_irreducible_spec(spec),
            None => {
                let gens: Vec<Matrix> = Generator::ALL
                    .iter()
                    .map(|&g| self.generator(g).clone())
                    .chain([self.k0_inv.clone(), self.k1_inv.clone()])
                    .collect();
                generated_algebra_dim(self.dim, &gens) == self.dim * self.dim
            }
        }
    }
}

/// The evaluation module `V(d, a)` on the basis `v_0, ..., v_d`.
pub fn evaluation_module(d: u32, a: &Scalar, q: &Scalar) -> Result<UqRep> {
    validate_q(q)?;
    if d == 0 {
        return Err(Error::InvalidParameter("evaluation module needs d >= 1".into()));
    }
    if a.is_zero() {
        return Err(Error::InvalidParameter("evaluation parameter a must be nonzero".into()));
    }
    let n = d as usize + 1;
    let di = i64::from(d);
    let a_inv = a.recip()?;
    let q_inv = qpow(q, -1);
    let br = |k: i64| qbracket(k as u32, q).expect("validated q");

    let mut e0p = Matrix::zeros(n, n);
    let mut e0m = Matrix::zeros(n, n);
    let mut e1p = Matrix::zeros(n, n);
    let mut e1m = Matrix::zeros(n, n);
    let mut k0 = Matrix::zeros(n, n);
    let mut k1 = Matrix::zeros(n, n);
    for i in 0..n {
        let ii = i as i64;
        k0[(i, i)] = qpow(q, 2 * ii - di);
        k1[(i, i)] = qpow(q, di - 2 * ii);
        if i >= 1 {
            // lowering: v_i -> v_{i-1}
            e0m[(i - 1, i)] = q * &a_inv * br(di - ii + 1);
            e1p[(i - 1, i)] = br(di - ii + 1);
        }
        if i + 1 < n {
            // raising: v_i -> v_{i+1}
            e0p[(i + 1, i)] = &q_inv * a * br(ii + 1);
            e1m[(i + 1, i)] = br(ii + 1);
        }
    }
    let mut rep = UqRep::from_matrices(q.clone(), [e0p, e0m, e1p, e1m, k0, k1])?;
    rep.origin = Some(ModuleSpec { q: q.clone(), factors: vec![EvalFactor { d, a: a.clone() }] });
    Ok(rep)
}

/// The one-dimensional module on which every `e` acts as 0 and every `K` as 1.
pub fn trivial_module(q: &Scalar) -> Result<UqRep> {
    validate_q(q)?;
    let z = Matrix::zeros(1, 1);
    let one = Matrix::identity(1);
    let mut rep = UqRep::from_matrices(q.clone(), [z.clone(), z.clone(), z.clone(), z, one.clone(), one])?;
    rep.origin = Some(ModuleSpec { q: q.clone(), factors: Vec::new() });
    Ok(rep)
}

/// `V ⊗ W` with basis `v_r ⊗ w_s` ordered `r`-major, acting by
/// `e+ -> e+ ⊗ K + 1 ⊗ e+`, `e- -> e- ⊗ 1 + K^-1 ⊗ e-`, `K -> K ⊗ K`.
pub fn tensor(v: &UqRep, w: &UqRep) -> Result<UqRep> {
    if v.q != w.q {
        return Err(Error::QMismatch(v.q.to_string(), w.q.to_string()));
    }
    let iv = Matrix::identity(v.dim);
    let iw = Matrix::identity(w.dim);
    let raise = |ev: &Matrix, kw: &Matrix, ew: &Matrix| ev.kron(kw) + iv.kron(ew);
    let lower = |ev: &Matrix, kv_inv: &Matrix, ew: &Matrix| ev.kron(&iw) + kv_inv.kron(ew);
    let e0p = raise(&v.e0p, &w.k0, &w.e0p);
    let e1p = raise(&v.e1p, &w.k1, &w.e1p);
    let e0m = lower(&v.e0m, &v.k0_inv, &w.e0m);
    let e1m = lower(&v.e1m, &v.k1_inv, &w.e1m);
    let k0 = v.k0.kron(&w.k0);
    let k1 = v.k1.kron(&w.k1);
    let k0_inv = v.k0_inv.kron(&w.k0_inv);
    let k1_inv = v.k1_inv.kron(&w.k1_inv);
    Ok(UqRep { q: v.q.clone(), dim: v.dim * w.dim, e0p, e0m, e1p, e1m, k0, k1, k0_inv, k1_inv, origin: None })
}

/// Left-to-right tensor fold over the spec's evaluation factors.
pub fn from_spec(spec: &ModuleSpec) -> Result<UqRep> {
    spec.validate()?;
    let mut acc = trivial_module(&spec.q)?;
    for (idx, f) in spec.factors.iter().enumerate() {
        let ev = evaluation_module(f.d, &f.a, &spec.q)?;
        acc = if idx == 0 { ev } else { tensor(&acc, &ev)? };
    }
    acc.origin = Some(spec.clone());
    Ok(acc)
}

/// Pull back along the automorphism `K_i -> eps_i K_i`, `e_i+ -> eps_i e_i+`.
pub fn twist(rep: &UqRep, eps0: i8, eps1: i8) -> Result<UqRep> {
    let sign = |e: i8| -> Result<Scalar> {
        match e {
            1 => Ok(Scalar::one()),
            -1 => Ok(-Scalar::one()),
            _ => Err(Error::InvalidParameter(format!("twist sign must be ±1, got {e}"))),
        }
    };
    let (s0, s1) = (sign(eps0)?, sign(eps1)?);
    let mut out = UqRep {
        q: rep.q.clone(),
        dim: rep.dim,
        e0p: rep.e0p.scale(&s0),
        e0m: rep.e0m.clone(),
        e1p: rep.e1p.scale(&s1),
        e1m: rep.e1m.clone(),
        k0: rep.k0.scale(&s0),
        k1: rep.k1.scale(&s1),
        k0_inv: rep.k0_inv.scale(&s0),
        k1_inv: rep.k1_inv.scale(&s1),
        origin: None,
    };
    if eps0 == 1 && eps1 == 1 {
        out.origin = rep.origin.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn v11_at_q2() {
        let v = evaluation_module(1, &s("1"), &s("2")).unwrap();
        assert_eq!(v.k0(), &Matrix::diag(&[s("1/2"), s("2")]));
        // e1+ v1 = [1]_q v0 = v0
        assert_eq!(v.e1p()[(0, 1)], s("1"));
        // e0+ v1 = 0 and e1+ v0 = 0
        assert!(v.e0p().column(1).iter().all(Scalar::is_zero));
        assert!(v.e1p().column(0).iter().all(Scalar::is_zero));
    }

    #[test]
    fn raising_coefficient_v23() {
        let v = evaluation_module(2, &s("3"), &s("2")).unwrap();
        assert_eq!(v.e0p()[(1, 0)], s("3/2"));
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(evaluation_module(0, &s("1"), &s("2")), Err(Error::InvalidParameter(_))));
        assert!(matches!(evaluation_module(1, &s("0"), &s("2")), Err(Error::InvalidParameter(_))));
        assert!(matches!(evaluation_module(1, &s("1"), &s("1")), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn trivial_generators() {
        let t = trivial_module(&s("2")).unwrap();
        for g in [Generator::E0p, Generator::E0m, Generator::E1p, Generator::E1m] {
            assert_eq!(t.generator(g), &Matrix::zeros(1, 1));
        }
        assert_eq!(t.k0(), &Matrix::identity(1));
        assert_eq!(t.k1(), &Matrix::identity(1));
    }

    #[test]
    fn tensor_with_trivial_is_identity_map() {
        let v = evaluation_module(2, &s("5/3"), &s("2")).unwrap();
        let t = trivial_module(&s("2")).unwrap();
        for w in [tensor(&v, &t).unwrap(), tensor(&t, &v).unwrap()] {
            for g in Generator::ALL {
                assert_eq!(w.generator(g), v.generator(g), "{g:?}");
            }
        }
    }

    #[test]
    fn tensor_dims_and_k0() {
        let q = s("2");
        let v = evaluation_module(2, &s("3"), &q).unwrap();
        let w = evaluation_module(1, &s("7"), &q).unwrap();
        assert_eq!(tensor(&v, &w).unwrap().dim(), 6);
        let a = evaluation_module(1, &s("1"), &q).unwrap();
        let b = evaluation_module(1, &s("5"), &q).unwrap();
        let k0 = tensor(&a, &b).unwrap().k0().clone();
        assert_eq!(k0, Matrix::diag(&[s("1/4"), s("1"), s("1"), s("4")]));
        let other = evaluation_module(1, &s("1"), &s("3")).unwrap();
        assert!(matches!(tensor(&a, &other), Err(Error::QMismatch(..))));
    }

    #[test]
    fn from_spec_folds() {
        let q = s("2");
        let triv = from_spec(&ModuleSpec::new(q.clone(), vec![])).unwrap();
        assert_eq!(triv.dim(), 1);
        let single = from_spec(&ModuleSpec::new(q.clone(), vec![EvalFactor::new(1, s("4/3"))])).unwrap();
        assert_eq!(single, evaluation_module(1, &s("4/3"), &q).unwrap());
    }

    #[test]
    fn twist_involution() {
        let v = evaluation_module(2, &s("3"), &s("2")).unwrap();
        assert_eq!(twist(&v, 1, 1).unwrap(), v);
        let back = twist(&twist(&v, -1, -1).unwrap(), -1, -1).unwrap();
        for g in Generator::ALL {
            assert_eq!(back.generator(g), v.generator(g));
        }
        assert!(twist(&v, 2, 1).is_err());
    }
}
