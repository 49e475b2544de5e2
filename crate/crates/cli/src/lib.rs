//! Rendering and orchestration behind the `twistcert` binary.

use std::fmt::Write as _;

use rayon::prelude::*;
use twistknot::numroots::NumericSummary;
use twistknot::poly::RatPolynomial;
use twistknot::{certify, CertifyOptions, ConjectureReport, OutputRecord, Result};

/// Exit-code contract: verified, mathematical inconsistency, usage error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Certifies every nonzero `q` in `[q_min, q_max]`, in ascending order.
pub fn sweep(q_min: i64, q_max: i64, options: CertifyOptions) -> Vec<(i64, Result<ConjectureReport>)> {
    let qs: Vec<i64> = (q_min..=q_max).filter(|&q| q != 0).collect();
    qs.par_iter().map(|&q| (q, certify(q, options))).collect()
}

fn gcd_label(g: &RatPolynomial) -> String {
    if g.is_one() {
        "1".to_string()
    } else {
        g.pretty("u")
    }
}

fn opt_bool(b: Option<bool>) -> &'static str {
    match b {
        None => "-",
        Some(true) => "yes",
        Some(false) => "NO",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn min_gamma(s: &Option<NumericSummary>) -> String {
    s.as_ref().map_or("-".to_string(), |s| format!("{:.3e}", s.min_gamma_abs))
}

fn min_monic(s: &Option<NumericSummary>) -> String {
    s.as_ref().map_or("-".to_string(), |s| format!("{:.3e}", s.min_monic_distance))
}

/// Detailed multi-line report for a single knot.
pub fn render_report_table(r: &ConjectureReport) -> String {
    let mut out = String::new();
    let (a0, a1, a2) = r.classical_alexander;
    let _ = writeln!(out, "knot                 {}  (q = {})", r.knot_label, r.q);
    let _ = writeln!(out, "alexander            {a0} {:+}t {:+}t^2", a1, a2);
    let _ = writeln!(out, "riley                {}", r.riley.pretty("u"));
    let _ = writeln!(out, "riley degree         {} (leading {})", r.riley_degree, r.riley_leading);
    let _ = writeln!(out, "tau_q                {}", r.tau.pretty("u"));
    let _ = writeln!(out, "gamma                {}", r.alexander.gamma.pretty("u"));
    let _ = writeln!(out, "delta                {}", r.alexander.delta.pretty("u"));
    let _ = writeln!(out, "gamma degree         {}", r.gamma_degree);
    let _ = writeln!(out, "delta degree         {}", r.delta_degree.map_or("-inf".to_string(), |d| d.to_string()));
    let _ = writeln!(out, "gcd(phi, gamma)      {}", gcd_label(&r.gcd_gamma));
    let _ = writeln!(out, "gcd(phi, gamma - 1)  {}", gcd_label(&r.gcd_gamma_minus_1));
    let _ = writeln!(out, "gcd(phi, gamma + 1)  {}", gcd_label(&r.gcd_gamma_plus_1));
    let _ = writeln!(out, "degree audit         {}", yes_no(r.degree_audit));
    let _ = writeln!(out, "genus detected       {}", yes_no(r.genus_detected));
    let _ = writeln!(out, "monic at some rep    {}", yes_no(r.monic_at_some_rep));
    let _ = writeln!(out, "fibered expected     {}", yes_no(r.fibered_expected));
    let _ = writeln!(out, "fox oracle agrees    {}", opt_bool(r.fox_oracle_agrees));
    if let Some(s) = &r.numeric_summary {
        let _ = writeln!(out, "roots                {}", s.roots.len());
        let _ = writeln!(out, "max residual         {:.3e}", s.max_residual);
        let _ = writeln!(out, "vieta error          {:.3e}", s.vieta_error);
        let _ = writeln!(out, "min |gamma(root)|    {}", min_gamma(&r.numeric_summary));
        let _ = writeln!(out, "min monic distance   {}", min_monic(&r.numeric_summary));
    }
    let _ = writeln!(out, "consistent           {}", yes_no(r.verdict_consistent));
    out
}

pub const TABLE_HEADER: &str = "     q  knot        deg_phi  gcd(g)  gcd(g-1)  gcd(g+1)  genus  monic  fibered  fox  min|gamma|  consistent  gamma";

/// One row of the sweep table.
pub fn render_table_row(r: &ConjectureReport) -> String {
    format!(
        "{:>6}  {:<10}  {:>7}  {:>6}  {:>8}  {:>8}  {:>5}  {:>5}  {:>7}  {:>3}  {:>10}  {:>10}  {}",
        r.q,
        r.knot_label,
        r.riley_degree,
        gcd_label(&r.gcd_gamma),
        gcd_label(&r.gcd_gamma_minus_1),
        gcd_label(&r.gcd_gamma_plus_1),
        yes_no(r.genus_detected),
        yes_no(r.monic_at_some_rep),
        yes_no(r.fibered_expected),
        opt_bool(r.fox_oracle_agrees),
        min_gamma(&r.numeric_summary),
        yes_no(r.verdict_consistent),
        r.alexander.gamma.pretty("u"),
    )
}

pub const CSV_HEADER: [&str; 16] = [
    "q",
    "knot",
    "riley",
    "riley_degree",
    "riley_leading",
    "gamma",
    "delta",
    "gcd_gamma",
    "gcd_gamma_minus_1",
    "gcd_gamma_plus_1",
    "genus_detected",
    "monic_at_some_rep",
    "fibered_expected",
    "fox_agrees",
    "min_gamma_abs",
    "consistent",
];

fn json_array<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn csv_row(r: &ConjectureReport) -> Vec<String> {
    let rec = OutputRecord::from(r);
    vec![
        r.q.to_string(),
        r.knot_label.clone(),
        json_array(&rec.riley.coeffs),
        r.riley_degree.to_string(),
        r.riley_leading.to_string(),
        json_array(&rec.gamma.coeffs),
        json_array(&rec.delta.coeffs),
        json_array(&rec.certificates.gcd_gamma),
        json_array(&rec.certificates.gcd_gamma_minus_1),
        json_array(&rec.certificates.gcd_gamma_plus_1),
        r.genus_detected.to_string(),
        r.monic_at_some_rep.to_string(),
        r.fibered_expected.to_string(),
        r.fox_oracle_agrees.map_or(String::new(), |b| b.to_string()),
        r.numeric_summary.as_ref().map_or(String::new(), |s| format!("{:e}", s.min_gamma_abs)),
        r.verdict_consistent.to_string(),
    ]
}

pub fn render_csv(reports: &[&ConjectureReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        w.write_record(csv_row(r)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn summary_line(consistent: usize, total: usize) -> String {
    format!("summary: {consistent}/{total} consistent")
}
