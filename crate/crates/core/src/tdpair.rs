//! Tridiagonal-pair axioms, q-strings and shape factorisation for arbitrary
//! pairs of rational matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{qpow, Polynomial, Scalar};
use crate::linalg::{
    characteristic_polynomial, cyclic_span, eigenspace, generated_algebra_dim, rational_roots, Matrix, Subspace,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdReport {
    /// Semisimplicity of `A` and of `A*`.
    pub axiom_semisimple: (bool, bool),
    /// `A* V_i ⊆ V_{i-1} + V_i + V_{i+1}` for some ordering of the eigenspaces of `A`.
    pub axiom_tridiag_a: bool,
    /// `A V*_i ⊆ V*_{i-1} + V*_i + V*_{i+1}` for some ordering of the eigenspaces of `A*`.
    pub axiom_tridiag_astar: bool,
    /// No proper nonzero subspace is invariant under both.
    pub axiom_irreducible: bool,
    pub algebra_dim: usize,
    /// Standard ordering of the eigenvalues of `A` (one of the two orientations).
    pub ordering_a: Option<Vec<Scalar>>,
    pub ordering_astar: Option<Vec<Scalar>>,
    /// `(d, δ)`: number of distinct eigenvalues of `A` and `A*`, minus one.
    pub diameters: (usize, usize),
    /// `ρ_i = dim V_i` along the standard ordering, when every axiom holds.
    pub shape: Option<Vec<usize>>,
    /// A proper invariant subspace, when the pair is reducible and one was found.
    #[serde(skip)]
    pub invariant_subspace: Option<Subspace>,
}

impl TdReport {
    pub fn is_td_pair(&self) -> bool {
        self.axiom_semisimple.0
            && self.axiom_semisimple.1
            && self.axiom_tridiag_a
            && self.axiom_tridiag_astar
            && self.axiom_irreducible
    }
}

struct Spectrum {
    values: Vec<Scalar>,
    spaces: Vec<Subspace>,
    semisimple: bool,
}

fn spectrum(m: &Matrix) -> Result<Spectrum> {
    let roots = rational_roots(&characteristic_polynomial(m));
    let found: usize = roots.iter().map(|(_, k)| k).sum();
    if found != m.rows() {
        return Err(Error::UnsupportedInput("spectrum is not contained in the rationals".into()));
    }
    let values: Vec<Scalar> = roots.into_iter().map(|(r, _)| r).collect();
    let spaces: Vec<Subspace> = values.iter().map(|t| eigenspace(m, t)).collect();
    let semisimple = spaces.iter().map(Subspace::dim).sum::<usize>() == m.rows();
    Ok(Spectrum { values, spaces, semisimple })
}

/// An ordering of `spec`'s eigenspaces on which `other` acts tridiagonally.
///
/// Links `i - j` whenever `other` maps `V_i` into something with a nonzero
/// `V_j` component. A valid ordering exists iff this graph is a disjoint union
/// of paths; the paths are laid end to end.
fn standard_ordering(spec: &Spectrum, other: &Matrix) -> Option<Vec<usize>> {
    let m = spec.values.len();
    let n = other.rows();
    let total = Subspace::sum_all(n, &spec.spaces);
    let images: Vec<Subspace> = spec.spaces.iter().map(|s| s.image(other)).collect();
    if images.iter().any(|img| !total.contains(img)) {
        return None;
    }
    let complements: Vec<Subspace> = (0..m)
        .map(|j| Subspace::sum_all(n, spec.spaces.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, s)| s)))
        .collect();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in (0..m).filter(|&j| j != i) {
            if !complements[j].contains(&images[i]) && !adj[i].contains(&j) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    if adj.iter().any(|a| a.len() > 2) {
        return None;
    }
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    // Path endpoints (degree <= 1) in eigenvalue order; anything left unseen is on a cycle.
    for start in 0..m {
        if seen[start] || adj[start].len() > 1 {
            continue;
        }
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            seen[cur] = true;
            order.push(cur);
            match adj[cur].iter().find(|&&x| x != prev) {
                Some(&next) => (prev, cur) = (cur, next),
                None => break,
            }
        }
    }
    (order.len() == m).then_some(order)
}

/// Best-effort proper invariant subspace: cyclic spans of eigenvectors.
fn find_invariant_subspace(a: &Matrix, astar: &Matrix, candidates: &[Subspace]) -> Option<Subspace> {
    let n = a.rows();
    let gens = [a.clone(), astar.clone()];
    candidates.iter().flat_map(Subspace::vectors).map(|v| cyclic_span(&gens, &v)).find(|s| s.dim() < n)
}

pub fn verify_tdpair(a: &Matrix, astar: &Matrix) -> Result<TdReport> {
    if !a.is_square() || !astar.is_square() || a.rows() != astar.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: astar.rows() });
    }
    let n = a.rows();
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrices".into()));
    }
    let sa = spectrum(a)?;
    let ss = spectrum(astar)?;
    let ord_a = standard_ordering(&sa, astar);
    let ord_s = standard_ordering(&ss, a);
    let algebra_dim = generated_algebra_dim(n, &[a.clone(), astar.clone()]);
    let axiom_irreducible = algebra_dim == n * n;
    let invariant_subspace = if axiom_irreducible {
        None
    } else {
        let pool: Vec<Subspace> = sa.spaces.iter().chain(&ss.spaces).cloned().collect();
        find_invariant_subspace(a, astar, &pool)
    };
    let diameters = (sa.values.len() - 1, ss.values.len() - 1);
    let mut report = TdReport {
        axiom_semisimple: (sa.semisimple, ss.semisimple),
        axiom_tridiag_a: ord_a.is_some(),
        axiom_tridiag_astar: ord_s.is_some(),
        axiom_irreducible,
        algebra_dim,
        ordering_a: ord_a.as_ref().map(|o| o.iter().map(|&i| sa.values[i].clone()).collect()),
        ordering_astar: ord_s.as_ref().map(|o| o.iter().map(|&i| ss.values[i].clone()).collect()),
        diameters,
        shape: None,
        invariant_subspace,
    };
    if report.is_td_pair() {
        let order = ord_a.expect("axiom checked");
        report.shape = Some(order.iter().map(|&i| sa.spaces[i].dim()).collect());
    }
    Ok(report)
}

/// `α` with `θ_i = α q^(d-2i)` for all `i`, if the sequence is a q-string.
pub fn q_string_scale(theta: &[Scalar], q: &Scalar) -> Option<Scalar> {
    let d = theta.len().checked_sub(1)? as i64;
    let alpha = &theta[0] / &qpow(q, d);
    if alpha.is_zero() {
        return None;
    }
    let ok = theta.iter().enumerate().all(|(i, t)| t == &(&alpha * &qpow(q, d - 2 * i as i64)));
    ok.then_some(alpha)
}

/// Scale of whichever orientation of a standard ordering is a q-string.
fn oriented_scale(order: &[Scalar], q: &Scalar) -> Option<Scalar> {
    q_string_scale(order, q).or_else(|| {
        let rev: Vec<Scalar> = order.iter().rev().cloned().collect();
        q_string_scale(&rev, q)
    })
}

/// The type `(α, α*)` when both standard orderings can be read as q-strings
/// and the pair is a tridiagonal pair with `d = δ`.
pub fn is_q_geometric(report: &TdReport, q: &Scalar) -> Option<(Scalar, Scalar)> {
    if !report.is_td_pair() || report.diameters.0 != report.diameters.1 {
        return None;
    }
    let alpha = oriented_scale(report.ordering_a.as_ref()?, q)?;
    let alpha_star = oriented_scale(report.ordering_astar.as_ref()?, q)?;
    Some((alpha, alpha_star))
}

/// Multiset `{d_j}` (descending) with `Σ ρ_i z^i = ∏ (1 + z + ... + z^(d_j))`.
pub fn shape_factorization(shape: &[usize]) -> Option<Vec<usize>> {
    if shape.first() != Some(&1) {
        return None;
    }
    let p = Polynomial::new(shape.iter().map(|&r| Scalar::from_int(r as i64)).collect());
    let mut out = Vec::new();
    let deg = p.degree().unwrap_or(0);
    factor_geometric(&p, deg, &mut out).then_some(out)
}

fn factor_geometric(p: &Polynomial, max_k: usize, out: &mut Vec<usize>) -> bool {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return p == &Polynomial::one();
    }
    for k in (1..=max_k.min(deg)).rev() {
        if let Some(rest) = p.exact_div(&Polynomial::geometric(k)) {
            out.push(k);
            if factor_geometric(&rest, k, out) {
                return true;
            }
            out.pop();
        }
    }
    false
}
