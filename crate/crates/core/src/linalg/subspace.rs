use serde::{Serialize, Serializer};

use super::matrix::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// A subspace of `Q^n`, stored as a basis matrix in reduced column-echelon form.
///
/// The canonical basis is unique, so two subspaces are equal exactly when
/// their basis matrices are entrywise equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    // pivot row of each basis column (the coordinate where that column is 1
    // and all other columns are 0)
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(n, 0), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    /// Span of the given vectors (all of length `n`).
    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n);
        }
        let stacked = Matrix::from_fn(vectors.len(), n, |r, c| vectors[r][c].clone());
        let (red, pivots) = stacked.rref();
        let k = pivots.len();
        let basis = Matrix::from_fn(n, k, |r, c| red[(c, r)].clone());
        Subspace { ambient_dim: n, basis, pivots }
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace::span(m.rows(), &m.columns())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.basis.mul_vec(&coords);
        (recon.as_slice() == v).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains_vector(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Ok(Subspace::span(self.ambient_dim, &vs))
    }

    /// Intersection via the kernel of `[B1 | -B2]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let neg = -&other.basis;
        let system = Matrix::hstack(&[&self.basis, &neg]);
        let ker = kernel(&system);
        let k1 = self.dim();
        let vs: Vec<Vector> = ker.vectors().iter().map(|sol| self.basis.mul_vec(&sol[..k1])).collect();
        Ok(Subspace::span(self.ambient_dim, &vs))
    }

    /// `M S`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &vs)
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.vectors().iter().all(|v| self.contains_vector(&m.mul_vec(v)))
    }

    /// Sum of a sequence of subspaces of a common ambient space.
    pub fn sum_all<'a>(n: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let vs: Vec<Vector> = parts.into_iter().flat_map(Subspace::vectors).collect();
        Subspace::span(n, &vs)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            ambient_dim: usize,
            dim: usize,
            basis: &'a Matrix,
        }
        Repr { ambient_dim: self.ambient_dim, dim: self.dim(), basis: &self.basis }.serialize(serializer)
    }
}

/// Null space of `m`.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let (red, pivots) = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vs: Vec<Vector> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&red[(r, f)];
            }
            v
        })
        .collect();
    Subspace::span(n, &vs)
}

/// `{v : M v = theta v}`.
pub fn eigenspace(m: &Matrix, theta: &Scalar) -> Subspace {
    kernel(&m.shift(theta))
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersection(b)
}

/// True iff the parts are nonzero subspaces of `Q^n` whose sum is direct and
/// equal to the whole space.
pub fn is_direct_sum(parts: &[Subspace], ambient_dim: usize) -> bool {
    if parts.iter().any(|p| p.is_zero() || p.ambient_dim() != ambient_dim) {
        return false;
    }
    let total: usize = parts.iter().map(Subspace::dim).sum();
    total == ambient_dim && Subspace::sum_all(ambient_dim, parts).dim() == ambient_dim
}

/// Incrementally maintained row-echelon basis: each stored row has a distinct
/// pivot (its first nonzero coordinate, normalised to 1).
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduce `v` against the stored rows; returns the residual.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &(&factor * r);
                }
            }
        }
        v
    }

    /// Insert `v` if it is independent of the stored rows; reports whether it was.
    pub fn insert(&mut self, v: Vector) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        let v: Vector = v.iter().map(|x| x * &inv).collect();
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn into_vectors(self) -> Vec<Vector> {
        self.rows.into_iter().map(|(_, v)| v).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::zeros(3, 3)), Subspace::full(3));
        assert!(kernel(&Matrix::identity(3)).is_zero());
        let k = kernel(&Matrix::from_int_rows(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, Subspace::span(2, &[v(&[1, -1])]));
    }

    #[test]
    fn eigenspace_examples() {
        let m = Matrix::diag(&[Scalar::from_int(2), Scalar::ratio(1, 2).unwrap()]);
        assert_eq!(eigenspace(&m, &Scalar::from_int(2)), Subspace::span(2, &[v(&[1, 0])]));
        assert!(eigenspace(&Matrix::identity(3), &Scalar::zero()).is_zero());
    }

    #[test]
    fn lattice_operations() {
        let e1 = Subspace::span(2, &[v(&[1, 0])]);
        let e2 = Subspace::span(2, &[v(&[0, 1])]);
        assert!(e1.intersection(&e2).unwrap().is_zero());
        assert_eq!(e1.intersection(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert!(e1.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn direct_sums() {
        let axes: Vec<Subspace> = (0..3)
            .map(|i| {
                let mut x = vec![0; 3];
                x[i] = 1;
                Subspace::span(3, &[v(&x)])
            })
            .collect();
        assert!(is_direct_sum(&axes, 3));
        let e1 = Subspace::span(2, &[v(&[1, 0])]);
        assert!(!is_direct_sum(&[e1.clone(), e1], 2));
    }

    #[test]
    fn coordinates_reconstruct() {
        let s = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let w = v(&[2, 5, 7]);
        let c = s.coordinates(&w).unwrap();
        assert_eq!(s.basis().mul_vec(&c), w);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn echelon_basis_detects_dependence() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(v(&[0, 2, 4])));
        assert!(b.insert(v(&[1, 1, 1])));
        assert!(!b.insert(v(&[1, 3, 5])));
        assert!(!b.insert(v(&[0, 0, 0])));
        assert_eq!(b.len(), 2);
    }
}
