//! Closure computations: cyclic submodules and the Burnside oracle.

use std::collections::VecDeque;

use super::matrix::{Matrix, Vector};
use super::subspace::{EchelonBasis, Subspace};
use crate::exactnum::Scalar;

/// Smallest subspace containing `v` and invariant under every generator.
pub fn cyclic_span(generators: &[Matrix], v: &[Scalar]) -> Subspace {
    let n = v.len();
    let mut basis = EchelonBasis::new();
    let mut queue = VecDeque::new();
    if basis.insert(v.to_vec()) {
        queue.push_back(v.to_vec());
    }
    while let Some(w) = queue.pop_front() {
        for g in generators {
            let image = g.mul_vec(&w);
            if basis.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Subspace::span(n, &basis.into_vectors())
}

/// Dimension of the unital algebra generated by square matrices of size `n`.
///
/// Words are expanded breadth-first from the identity by left multiplication
/// with each generator in the given order; only products that enlarge the
/// span are expanded further. The value `n^2` certifies that the generators
/// act absolutely irreducibly.
///
/// The closure is first run modulo a large prime on integer rescalings of
/// the generators. Reduction mod p can only lose rank, so a full result there
/// is already exact; anything smaller is recomputed over the rationals.
pub fn generated_algebra_dim(n: usize, generators: &[Matrix]) -> usize {
    if modular::algebra_dim(n, generators) == Some(n * n) {
        return n * n;
    }
    generated_algebra_dim_exact(n, generators)
}

/// [`generated_algebra_dim`] computed entirely over the rationals.
pub fn generated_algebra_dim_exact(n: usize, generators: &[Matrix]) -> usize {
    let full = n * n;
    let flatten = |m: &Matrix| -> Vector { m.entries().to_vec() };
    let mut basis = EchelonBasis::new();
    let mut queue = VecDeque::new();
    let id = Matrix::identity(n);
    if basis.insert(flatten(&id)) {
        queue.push_back(id);
    }
    while let Some(m) = queue.pop_front() {
        if basis.len() == full {
            break;
        }
        for g in generators {
            let p = g * &m;
            if basis.insert(flatten(&p)) {
                queue.push_back(p);
            }
        }
    }
    basis.len()
}

mod modular {
    use std::collections::VecDeque;

    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, ToPrimitive};

    use crate::linalg::Matrix;

    const P: u64 = (1 << 61) - 1;

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    fn inv(a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a, P - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn residue(x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(P)).to_u64().expect("reduced below P")
    }

    /// Integer multiple of `m` reduced mod P; `None` if the scale vanishes mod P.
    fn reduce_matrix(m: &Matrix) -> Option<Vec<u64>> {
        let lcm = m.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        if residue(&lcm) == 0 {
            return None;
        }
        Some(m.entries().iter().map(|x| residue(&(x.numer() * (&lcm / x.denom())))).collect())
    }

    fn matmul(n: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + mul(aik, b[k * n + j])) % P;
                }
            }
        }
        out
    }

    /// Echelon rows with their pivot normalised to 1.
    #[derive(Default)]
    struct Basis {
        rows: Vec<(usize, Vec<u64>)>,
    }

    impl Basis {
        fn insert(&mut self, mut v: Vec<u64>) -> bool {
            for (p, row) in &self.rows {
                let f = v[*p];
                if f == 0 {
                    continue;
                }
                for (x, r) in v.iter_mut().zip(row).skip(*p) {
                    *x = sub(*x, mul(f, *r));
                }
            }
            let Some(p) = v.iter().position(|&x| x != 0) else {
                return false;
            };
            let s = inv(v[p]);
            v.iter_mut().for_each(|x| *x = mul(*x, s));
            let at = self.rows.partition_point(|(q, _)| *q < p);
            self.rows.insert(at, (p, v));
            true
        }
    }

    pub(super) fn algebra_dim(n: usize, generators: &[Matrix]) -> Option<usize> {
        let gens = generators.iter().map(reduce_matrix).collect::<Option<Vec<_>>>()?;
        let full = n * n;
        let mut basis = Basis::default();
        let mut id = vec![0u64; full];
        (0..n).for_each(|i| id[i * n + i] = 1);
        let mut queue = VecDeque::new();
        basis.insert(id.clone());
        queue.push_back(id);
        while let Some(m) = queue.pop_front() {
            if basis.rows.len() == full {
                break;
            }
            for g in &gens {
                let p = matmul(n, g, &m);
                if basis.insert(p.clone()) {
                    queue.push_back(p);
                }
            }
        }
        Some(basis.rows.len())
    }
}
