//! Plain-text summaries for `--pretty`.

use std::fmt::Write;

use qserre_core::words::WordCount;
use qserre_core::{AnalysisReport, ScanRow};

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "-",
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let factors: Vec<String> = r.spec.factors.iter().map(|f| format!("V({}, {})", f.d, f.a)).collect();
    let name = if factors.is_empty() { "trivial".to_string() } else { factors.join(" ⊗ ") };
    let _ = writeln!(out, "module      {name} at q = {}", r.spec.q);
    let _ = writeln!(out, "dim         {} (diameter {}, type {:?})", r.dim, r.diameter, r.module_type);
    let _ = writeln!(out, "weights     {:?}", r.weight_dims);
    let _ = writeln!(out, "relations   {}", yes_no(Some(r.chevalley_ok)));
    let _ = writeln!(out, "U_q irred.  {}", yes_no(Some(r.uq_irreducible)));
    if let Some(reason) = &r.aq_skipped {
        let _ = writeln!(out, "skipped     {reason}");
        return out;
    }
    if let Some(dd) = &r.drinfeld {
        let _ = writeln!(out, "P_V         {}", dd.poly);
        let _ = writeln!(out, "P_V(c)      {} at c = {}", dd.critical_eval, dd.critical_value);
    }
    if let Some(v) = &r.aq_verdict {
        let verdict = if v.oracle_verdict { "irreducible" } else { "reducible" };
        let _ = writeln!(out, "q-Serre     {} ({verdict}, algebra dim {})", yes_no(r.qserre_ok), v.oracle_algebra_dim);
        if let Some(w) = &v.witness {
            let _ = writeln!(out, "witness     dim {}", w.dim());
        }
    }
    let _ = writeln!(out, "eigen id.   {}", yes_no(r.eep_ok));
    let _ = writeln!(out, "projectors  {}", yes_no(r.projectors_ok));
    let _ = writeln!(out, "equitable   {}", yes_no(r.equitable_ok));
    if let Some(td) = &r.td {
        match (&td.report.shape, &td.factorization) {
            (Some(shape), Some(ds)) => {
                let _ = writeln!(out, "shape       {shape:?} = product over d in {ds:?} ({})", yes_no(r.shape_ok));
            }
            (Some(shape), None) => {
                let _ = writeln!(out, "shape       {shape:?} (no factorisation)");
            }
            _ => {
                let _ = writeln!(out, "shape       - (not a tridiagonal pair)");
            }
        }
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(out, "time        {ms} ms");
    }
    out
}

pub fn scan(rows: &[ScanRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let status = match (&row.verdict, &row.error) {
            (Some(v), _) if v.oracle_verdict => format!("irreducible  P_V(c) = {}", v.criterion_value),
            (Some(v), _) => format!(
                "REDUCIBLE    P_V(c) = {}  witness dim {}",
                v.criterion_value,
                v.witness.as_ref().map_or(0, |w| w.dim())
            ),
            (None, Some(e)) => format!("error        {e}"),
            (None, None) => "error".to_string(),
        };
        let _ = writeln!(out, "V({}, {:>8})  {status}", row.d, row.a.to_string());
    }
    out
}

pub fn words(table: &[WordCount]) -> String {
    let mut out = String::from(" n  irreducible       total  forms agree\n");
    for row in table {
        let _ = writeln!(out, "{:>2}  {:>11}  {:>10}  {}", row.n, row.irreducible, row.total, row.equivalence_ok);
    }
    out
}
