//! Rendering of reports in plain, JSON and CSV form.
//!
//! Verify output deliberately carries no timing, so two runs with the same
//! seed are byte-identical. Determinant records include `elapsed_ns` and,
//! for spectral values, `imag_residual`.

use circdet_core::{DetReport, SequenceWindow, VerifyReport};
use serde_json::{json, Value};

use crate::FormatArg;

pub fn det_record(report: &DetReport, n: usize, m: usize) -> Value {
    let flags: Vec<&str> = report.flags.iter().map(|f| f.name()).collect();
    let mut record = json!({
        "n": n,
        "m": m,
        "method": report.method.to_string(),
        "det": report.det_string(),
        "flags": flags,
        "elapsed_ns": report.elapsed.as_nanos() as u64,
    });
    if let Some(residual) = report.imag_residual() {
        record["imag_residual"] = json!(residual);
    }
    record
}

fn flags_field(report: &DetReport) -> String {
    report
        .flags
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_det(reports: &[DetReport], n: usize, m: usize, format: FormatArg) -> String {
    match format {
        FormatArg::Plain => {
            if reports.len() == 1 {
                let r = &reports[0];
                let flags = flags_field(r);
                if flags.is_empty() {
                    r.det_string()
                } else {
                    format!("{} [{}]", r.det_string(), flags)
                }
            } else {
                reports
                    .iter()
                    .map(|r| {
                        let flags = flags_field(r);
                        if flags.is_empty() {
                            format!("{}: {}", r.method, r.det_string())
                        } else {
                            format!("{}: {} [{}]", r.method, r.det_string(), flags)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        FormatArg::Json => {
            let records: Vec<Value> = reports.iter().map(|r| det_record(r, n, m)).collect();
            serde_json::to_string_pretty(&Value::Array(records)).expect("serializable")
        }
        FormatArg::Csv => {
            let mut out = String::from("n,m,method,det,flags,elapsed_ns,imag_residual\n");
            for r in reports {
                let residual = r
                    .imag_residual()
                    .map(|v| format!("{v:e}"))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{n},{m},{},{},{},{},{}\n",
                    r.method,
                    r.det_string(),
                    flags_field(r),
                    r.elapsed.as_nanos(),
                    residual
                ));
            }
            out.trim_end().to_string()
        }
    }
}

pub fn render_seq(window: &SequenceWindow, format: FormatArg) -> String {
    let terms: Vec<String> = window.terms().iter().map(|t| t.to_string()).collect();
    match format {
        FormatArg::Plain => terms.join(" "),
        FormatArg::Json => serde_json::to_string_pretty(&json!({
            "m": window.source().order(),
            "count": window.len(),
            "terms": terms,
        }))
        .expect("serializable"),
        FormatArg::Csv => {
            let mut out = String::from("index,term\n");
            for (i, t) in terms.iter().enumerate() {
                out.push_str(&format!("{},{}\n", i + 1, t));
            }
            out.trim_end().to_string()
        }
    }
}

pub struct VerifyHeader {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub families_only: bool,
    pub eq2_variant: String,
    pub precision: u32,
    pub rel_tol: f64,
}

pub fn render_verify(report: &VerifyReport, header: &VerifyHeader, format: FormatArg) -> String {
    match format {
        FormatArg::Plain => {
            let mut out = format!(
                "circdet verify seed={} trials={} n-max={} m-max={} families-only={} \
                 eq2-variant={} precision={} rel-tol={}\n",
                header.seed,
                header.trials,
                header.n_max,
                header.m_max,
                header.families_only,
                header.eq2_variant,
                header.precision,
                header.rel_tol
            );
            for suite in &report.suites {
                out.push_str(&format!(
                    "suite {}: checks={} mismatches={}\n",
                    suite.name,
                    suite.checks,
                    suite.mismatches.len()
                ));
            }
            if let Some(demo) = &report.eq2_demo {
                out.push_str(&format!(
                    "eq2 demo (jacobsthal n=4): oracle={} pa={} qa={}\n",
                    demo.oracle, demo.pa, demo.qa
                ));
            }
            out.push_str(&format!("fallbacks={}\n", report.fallbacks));
            for mm in report.mismatches() {
                out.push_str(&format!(
                    "MISMATCH [{}] {}: {}={} vs {}={}\n",
                    mm.suite, mm.context, mm.left_method, mm.left, mm.right_method, mm.right
                ));
            }
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "RESULT: {verdict} ({} mismatches in {} checks, {} trials)",
                report.mismatch_count(),
                report.total_checks(),
                report.trials
            ));
            out
        }
        FormatArg::Json => {
            let suites: Vec<Value> = report
                .suites
                .iter()
                .map(|s| {
                    let mismatches: Vec<Value> = s
                        .mismatches
                        .iter()
                        .map(|mm| {
                            json!({
                                "context": mm.context,
                                "left_method": mm.left_method,
                                "left": mm.left,
                                "right_method": mm.right_method,
                                "right": mm.right,
                            })
                        })
                        .collect();
                    json!({
                        "name": s.name,
                        "checks": s.checks,
                        "mismatches": mismatches,
                    })
                })
                .collect();
            let eq2 = report.eq2_demo.as_ref().map(|d| {
                json!({
                    "oracle": d.oracle.to_string(),
                    "pa": d.pa.to_string(),
                    "qa": d.qa.to_string(),
                })
            });
            serde_json::to_string_pretty(&json!({
                "seed": header.seed,
                "trials": report.trials,
                "n_max": header.n_max,
                "m_max": header.m_max,
                "families_only": header.families_only,
                "eq2_variant": header.eq2_variant,
                "precision": header.precision,
                "rel_tol": header.rel_tol,
                "fallbacks": report.fallbacks,
                "suites": suites,
                "eq2_demo": eq2,
                "checks": report.total_checks(),
                "mismatches": report.mismatch_count(),
                "result": if report.passed() { "pass" } else { "fail" },
            }))
            .expect("serializable")
        }
        FormatArg::Csv => {
            let mut out = String::from("suite,checks,mismatches\n");
            for s in &report.suites {
                out.push_str(&format!("{},{},{}\n", s.name, s.checks, s.mismatches.len()));
            }
            out.trim_end().to_string()
        }
    }
}

pub struct BenchRow {
    pub method: String,
    pub n: usize,
    pub median_ns: u128,
    pub det_digits: usize,
}

pub fn render_bench(rows: &[BenchRow], format: FormatArg) -> String {
    match format {
        FormatArg::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "method": r.method,
                        "n": r.n,
                        "median_ns": r.median_ns as u64,
                        "det_digits": r.det_digits,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&Value::Array(records)).expect("serializable")
        }
        // Plain and CSV share the tabular form.
        FormatArg::Plain | FormatArg::Csv => {
            let mut out = String::from("method,n,median_ns,det_digits\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.method, r.n, r.median_ns, r.det_digits
                ));
            }
            out.trim_end().to_string()
        }
    }
}
