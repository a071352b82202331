use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::UqRep;
use crate::exactnum::{qbracket, qdiff, qpow, Scalar};
use crate::linalg::Matrix;

/// Outcome of one matrix identity `residual = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// Largest-magnitude nonzero residual entry `(row, col, value)`.
    pub witness_entry: Option<(usize, usize, Scalar)>,
}

impl RelationCheck {
    pub fn from_residual(name: impl Into<String>, residual: &Matrix) -> Self {
        let witness_entry = residual.max_abs_entry();
        RelationCheck { name: name.into(), holds: witness_entry.is_none(), witness_entry }
    }
}

/// Ordered collection of relation checks; serialises as a JSON object keyed by
/// relation name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn push(&mut self, name: impl Into<String>, residual: &Matrix) {
        self.checks.push(RelationCheck::from_residual(name, residual));
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

impl Serialize for RelationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            holds: bool,
            witness_entry: Option<(usize, usize, &'a Scalar)>,
        }
        let mut map = serializer.serialize_map(Some(self.checks.len()))?;
        for c in &self.checks {
            let witness_entry = c.witness_entry.as_ref().map(|(r, col, v)| (*r, *col, v));
            map.serialize_entry(&c.name, &Entry { holds: c.holds, witness_entry })?;
        }
        map.end()
    }
}

/// `x^3 y - [3]_q x^2 y x + [3]_q x y x^2 - y x^3`.
pub fn qserre_residual(x: &Matrix, y: &Matrix, q: &Scalar) -> Matrix {
    let b3 = qbracket(3, q).expect("validated q");
    let x2 = x * x;
    let x3 = &x2 * x;
    let t1 = &x3 * y;
    let t2 = &(&x2 * y) * x;
    let t3 = &(x * y) * &x2;
    let t4 = y * &x3;
    &(&(&t1 - &t2.scale(&b3)) + &t3.scale(&b3)) - &t4
}

fn conj(k: &Matrix, m: &Matrix, k_inv: &Matrix) -> Matrix {
    &(k * m) * k_inv
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    &(a * b) - &(b * a)
}

/// Evaluates every defining relation of `U_q(sl2-hat)` on the module.
///
/// Relation names are stable identifiers used as JSON keys.
pub fn check_chevalley_relations(rep: &UqRep) -> RelationReport {
    let q = rep.q();
    let id = Matrix::identity(rep.dim());
    let q2 = qpow(q, 2);
    let qm2 = qpow(q, -2);
    let (e0p, e0m, e1p, e1m) = (rep.e0p(), rep.e0m(), rep.e1p(), rep.e1m());
    let (k0, k1, k0i, k1i) = (rep.k0(), rep.k1(), rep.k0_inv(), rep.k1_inv());
    let mut r = RelationReport::default();

    r.push("K0*K0^-1=1", &(&(k0 * k0i) - &id));
    r.push("K0^-1*K0=1", &(&(k0i * k0) - &id));
    r.push("K1*K1^-1=1", &(&(k1 * k1i) - &id));
    r.push("K1^-1*K1=1", &(&(k1i * k1) - &id));
    r.push("K0*K1=K1*K0", &commutator(k0, k1));

    r.push("K0*e0p*K0^-1=q^2*e0p", &(&conj(k0, e0p, k0i) - &e0p.scale(&q2)));
    r.push("K0*e0m*K0^-1=q^-2*e0m", &(&conj(k0, e0m, k0i) - &e0m.scale(&qm2)));
    r.push("K1*e1p*K1^-1=q^2*e1p", &(&conj(k1, e1p, k1i) - &e1p.scale(&q2)));
    r.push("K1*e1m*K1^-1=q^-2*e1m", &(&conj(k1, e1m, k1i) - &e1m.scale(&qm2)));
    r.push("K0*e1p*K0^-1=q^-2*e1p", &(&conj(k0, e1p, k0i) - &e1p.scale(&qm2)));
    r.push("K0*e1m*K0^-1=q^2*e1m", &(&conj(k0, e1m, k0i) - &e1m.scale(&q2)));
    r.push("K1*e0p*K1^-1=q^-2*e0p", &(&conj(k1, e0p, k1i) - &e0p.scale(&qm2)));
    r.push("K1*e0m*K1^-1=q^2*e0m", &(&conj(k1, e0m, k1i) - &e0m.scale(&q2)));

    let inv_diff = qdiff(q).recip().expect("q - q^-1 is nonzero");
    r.push("[e0p,e0m]=(K0-K0^-1)/(q-q^-1)", &(&commutator(e0p, e0m) - &(k0 - k0i).scale(&inv_diff)));
    r.push("[e1p,e1m]=(K1-K1^-1)/(q-q^-1)", &(&commutator(e1p, e1m) - &(k1 - k1i).scale(&inv_diff)));
    r.push("[e0p,e1m]=0", &commutator(e0p, e1m));
    r.push("[e0m,e1p]=0", &commutator(e0m, e1p));

    r.push("serre(e0p,e1p)=0", &qserre_residual(e0p, e1p, q));
    r.push("serre(e1p,e0p)=0", &qserre_residual(e1p, e0p, q));
    r.push("serre(e0m,e1m)=0", &qserre_residual(e0m, e1m, q));
    r.push("serre(e1m,e0m)=0", &qserre_residual(e1m, e0m, q));
    r
}
