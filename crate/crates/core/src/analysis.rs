//! End-to-end analysis of one module spec, and parameter scans.

use serde::Serialize;

use crate::aqbridge::{
    aq_irreducibility_with, build_aq_pair_with, check_qserre, equitable_operators, projector, projector_sum_form,
    require_uq_irreducible, verify_eep, AqPair, EepCheck, IrreducibilityVerdict, ProjectorKind,
};
use crate::drinfeld::{drinfeld_data, drinfeld_poly_spec, DrinfeldData};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::tdpair::{is_q_geometric, shape_factorization, verify_tdpair, TdReport};
use crate::uqrep::{check_chevalley_relations, from_spec, weight_decomposition, EvalFactor, ModuleSpec, UqRep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdSummary {
    #[serde(flatten)]
    pub report: TdReport,
    /// `(α, α*)` when both standard orderings are q-strings.
    pub q_geometric: Option<(Scalar, Scalar)>,
    pub factorization: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub spec: ModuleSpec,
    pub dim: usize,
    #[serde(rename = "type")]
    pub module_type: (i8, i8),
    pub diameter: usize,
    pub weight_dims: Vec<usize>,
    pub chevalley_ok: bool,
    pub chevalley_failures: Vec<String>,
    pub uq_irreducible: bool,
    pub drinfeld: Option<DrinfeldData>,
    /// `P_V` from the `σ_i` equals the product of closed-form factors.
    pub drinfeld_closed_form_ok: Option<bool>,
    pub aq_skipped: Option<String>,
    pub qserre_ok: Option<bool>,
    pub aq_verdict: Option<IrreducibilityVerdict>,
    pub eep: Option<EepCheck>,
    pub eep_ok: Option<bool>,
    pub projectors_ok: Option<bool>,
    pub equitable_ok: Option<bool>,
    pub td: Option<TdSummary>,
    /// Shape equals the weight dimensions and factors back into the spec's `d_j`.
    pub shape_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Projector identities: product and sum forms agree on each
/// weight space, and `E_i`, `F_i` (and `E*_i`, `F_i`) are mutually inverse
/// between `U_i` and the eigenspaces.
pub fn projector_checks(pair: &AqPair, rep: &UqRep) -> Result<bool> {
    let d = pair.diameter;
    let f: Vec<_> = (0..=d).map(|i| projector(pair, ProjectorKind::F, i)).collect::<Result<_>>()?;
    for kind in [ProjectorKind::E, ProjectorKind::Estar] {
        for i in 0..=d {
            let e = projector(pair, kind, i)?;
            for (j, fj) in f.iter().enumerate() {
                if projector_sum_form(pair, rep, kind, i, j)? != &e * fj {
                    return Ok(false);
                }
            }
            let fi = &f[i];
            if &(&(fi * &e) * fi) != fi || &(&e * fi) * &e != e {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn analyze(spec: &ModuleSpec) -> Result<AnalysisReport> {
    let rep = from_spec(spec)?;
    let w = weight_decomposition(&rep)?;
    let chevalley = check_chevalley_relations(&rep);
    let mut report = AnalysisReport {
        spec: spec.clone(),
        dim: rep.dim(),
        module_type: (w.eps0, w.eps1),
        diameter: w.diameter,
        weight_dims: w.dims(),
        chevalley_ok: chevalley.all_hold(),
        chevalley_failures: chevalley.failures().map(|c| c.name.clone()).collect(),
        uq_irreducible: rep.is_irreducible(),
        drinfeld: None,
        drinfeld_closed_form_ok: None,
        aq_skipped: None,
        qserre_ok: None,
        aq_verdict: None,
        eep: None,
        eep_ok: None,
        projectors_ok: None,
        equitable_ok: None,
        td: None,
        shape_ok: None,
        timing_ms: None,
    };
    if let Err(e) = require_uq_irreducible(&rep) {
        report.aq_skipped = Some(match e {
            Error::Precondition(msg) => msg,
            other => return Err(other),
        });
        return Ok(report);
    }
    let dd = drinfeld_data(&rep, &w)?;
    report.drinfeld_closed_form_ok = Some(dd.poly == drinfeld_poly_spec(spec));
    let pair = build_aq_pair_with(&rep, w)?;
    report.qserre_ok = Some(check_qserre(&pair.a, &pair.astar, &pair.q).all_hold());
    let verdict = aq_irreducibility_with(&pair, &dd.critical_eval)?;
    let eep = verify_eep(&pair, &rep)?;
    report.eep_ok = Some(eep.holds);
    report.eep = Some(eep);
    report.projectors_ok = Some(projector_checks(&pair, &rep)?);
    if verdict.criterion_verdict {
        let eq = equitable_operators(&pair, &rep)?;
        report.equitable_ok = Some(eq.relations.all_hold());
    }
    let td = verify_tdpair(&pair.a, &pair.astar)?;
    if td.axiom_irreducible != verdict.oracle_verdict {
        return Err(Error::ConsistencyFailure("tridiagonal-pair irreducibility disagrees with the verdict".into()));
    }
    let q_geometric = is_q_geometric(&td, &pair.q);
    let factorization = td.shape.as_deref().and_then(shape_factorization);
    if let Some(shape) = &td.shape {
        let ds = sorted_desc(spec.factors.iter().map(|f| f.d as usize).collect());
        report.shape_ok = Some(shape == &report.weight_dims && factorization.as_ref() == Some(&ds));
    }
    report.td = Some(TdSummary { report: td, q_geometric, factorization });
    report.drinfeld = Some(dd);
    report.aq_verdict = Some(verdict);
    Ok(report)
}

/// One grid point of a single-factor scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub d: u32,
    pub a: Scalar,
    #[serde(flatten)]
    pub verdict: Option<IrreducibilityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// `a_from, a_from + step, ...` up to and including `a_to`.
pub fn scan_grid(a_from: &Scalar, a_to: &Scalar, a_step: &Scalar) -> Result<Vec<Scalar>> {
    if a_step <= &Scalar::zero() {
        return Err(Error::InvalidParameter("scan step must be positive".into()));
    }
    let mut out = Vec::new();
    let mut a = a_from.clone();
    while &a <= a_to {
        out.push(a.clone());
        a = &a + a_step;
    }
    Ok(out)
}

/// Verdict for `V(d, a)`; errors are reported in the row.
pub fn scan_point(d: u32, a: &Scalar, q: &Scalar) -> ScanRow {
    let run = || -> Result<IrreducibilityVerdict> {
        let spec = ModuleSpec::new(q.clone(), vec![EvalFactor::new(d, a.clone())]);
        let rep = from_spec(&spec)?;
        let w = weight_decomposition(&rep)?;
        let dd = drinfeld_data(&rep, &w)?;
        let pair = build_aq_pair_with(&rep, w)?;
        aq_irreducibility_with(&pair, &dd.critical_eval)
    };
    match run() {
        Ok(v) => ScanRow { d, a: a.clone(), verdict: Some(v), error: None },
        Err(e) => ScanRow { d, a: a.clone(), verdict: None, error: Some(e.to_string()) },
    }
}
