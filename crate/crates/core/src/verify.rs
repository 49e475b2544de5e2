//! Per-`q` certificate that `Δ` detects the genus of `J(2,2q)` and is monic
//! exactly when the knot is fibered.
//!
//! Everything decisive is a gcd over `Q`: `gcd(φ_q, γ_q) = 1` means `γ_q` has
//! no zero at any root of `φ_q`, so `deg_t Δ = 2 = 4g − 2` at every parabolic
//! representation; `gcd(φ_q, γ_q ∓ 1) = 1` rules out a leading coefficient
//! `±1`. Irreducibility of `φ_q` is never used.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::Result;
use crate::foxwada::compare_with_closed_form;
use crate::numroots::{summarize, NumericSummary, DEFAULT_TOL};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::twist::{knot_facts, knot_label, riley, trace_tau, twisted_alexander, TwistedAlexander};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertifyOptions {
    pub run_fox: bool,
    pub run_numeric: bool,
    pub tol: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { run_fox: false, run_numeric: true, tol: DEFAULT_TOL }
    }
}

impl CertifyOptions {
    pub fn exact_only() -> Self {
        Self { run_fox: false, run_numeric: false, tol: DEFAULT_TOL }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub q: i64,
    pub knot_label: String,
    pub riley: IntPolynomial,
    pub tau: IntPolynomial,
    pub alexander: TwistedAlexander,
    pub classical_alexander: (i64, i64, i64),
    pub riley_degree: usize,
    pub gamma_degree: usize,
    pub delta_degree: Option<usize>,
    pub riley_leading: BigInt,
    pub gcd_gamma: RatPolynomial,
    pub gcd_gamma_minus_1: RatPolynomial,
    pub gcd_gamma_plus_1: RatPolynomial,
    pub genus_detected: bool,
    pub monic_at_some_rep: bool,
    pub fibered_expected: bool,
    pub verdict_consistent: bool,
    pub degree_audit: bool,
    pub fox_oracle_agrees: Option<bool>,
    pub numeric_summary: Option<NumericSummary>,
}

impl ConjectureReport {
    /// Verdict plus every cross-check that was run.
    pub fn all_checks_pass(&self) -> bool {
        self.verdict_consistent
            && self.degree_audit
            && self.fox_oracle_agrees.unwrap_or(true)
            && self.numeric_summary.as_ref().is_none_or(NumericSummary::gamma_nonvanishing)
    }
}

/// Expected `deg φ_q = 2|q| − max(sign q, 0)`.
pub fn expected_riley_degree(q: i64) -> usize {
    let a = 2 * q.unsigned_abs() as usize;
    if q > 0 {
        a - 1
    } else {
        a
    }
}

/// `deg φ_q = 2|q| − max(sign q, 0) > 2|q| − 2 = deg γ_q`.
pub fn degree_audit(q: i64) -> Result<bool> {
    let phi = riley(q)?;
    let gamma = twisted_alexander(q)?.gamma;
    let expected_gamma = 2 * q.unsigned_abs() as usize - 2;
    Ok(phi.degree() == Some(expected_riley_degree(q))
        && gamma.degree() == Some(expected_gamma)
        && phi.degree() > gamma.degree())
}

fn shifted(p: &IntPolynomial, c: i64) -> IntPolynomial {
    p + &IntPolynomial::from_i64s(&[c])
}

pub fn certify(q: i64, options: CertifyOptions) -> Result<ConjectureReport> {
    let facts = knot_facts(q)?;
    let phi = riley(q)?;
    let ta = twisted_alexander(q)?;
    let phi_r = phi.to_rat();

    let gcd_with = |p: &IntPolynomial| phi_r.gcd(&p.to_rat());
    let gcd_gamma = gcd_with(&ta.gamma).map_err(|e| e.in_check("gcd(φ, γ)"))?;
    let gcd_gamma_minus_1 = gcd_with(&shifted(&ta.gamma, -1)).map_err(|e| e.in_check("gcd(φ, γ − 1)"))?;
    let gcd_gamma_plus_1 = gcd_with(&shifted(&ta.gamma, 1)).map_err(|e| e.in_check("gcd(φ, γ + 1)"))?;

    let genus_detected = gcd_gamma.is_one();
    let monic_at_some_rep = !gcd_gamma_minus_1.is_one() || !gcd_gamma_plus_1.is_one();
    let fibered_expected = facts.fibered;
    let verdict_consistent = genus_detected && (monic_at_some_rep == fibered_expected);

    let fox_oracle_agrees = if options.run_fox {
        Some(compare_with_closed_form(q).map_err(|e| e.in_check("Fox/Wada oracle"))?.agrees)
    } else {
        None
    };
    let numeric_summary = if options.run_numeric {
        Some(summarize(q, options.tol).map_err(|e| e.in_check("numeric roots"))?)
    } else {
        None
    };

    Ok(ConjectureReport {
        q,
        knot_label: knot_label(q),
        riley_degree: phi.degree().expect("φ_q is nonzero"),
        gamma_degree: ta.gamma.degree().expect("γ_q is nonzero"),
        delta_degree: ta.delta.degree(),
        riley_leading: phi.leading().expect("φ_q is nonzero").clone(),
        tau: trace_tau(q),
        riley: phi,
        classical_alexander: facts.alexander,
        alexander: ta,
        gcd_gamma,
        gcd_gamma_minus_1,
        gcd_gamma_plus_1,
        genus_detected,
        monic_at_some_rep,
        fibered_expected,
        verdict_consistent,
        degree_audit: degree_audit(q)?,
        fox_oracle_agrees,
        numeric_summary,
    })
}

/// True when the leading coefficient of `φ_q` is `±1`.
pub fn riley_leading_is_unit(report: &ConjectureReport) -> bool {
    report.riley_leading.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn trefoil_is_fibered_and_consistent() {
        let r = certify(1, CertifyOptions::exact_only()).unwrap();
        assert!(r.genus_detected);
        assert!(r.monic_at_some_rep);
        assert!(r.fibered_expected);
        assert!(r.verdict_consistent);
        assert!(r.alexander.gamma.is_one());
    }

    #[test]
    fn q2_nonfibered_certificates() {
        let r = certify(2, CertifyOptions::exact_only()).unwrap();
        assert!(r.gcd_gamma.is_one());
        assert!(r.gcd_gamma_minus_1.is_one());
        assert!(r.gcd_gamma_plus_1.is_one());
        assert!(!r.monic_at_some_rep);
        assert!(!r.fibered_expected);
        assert!(r.verdict_consistent);
    }

    #[test]
    fn q_minus_7_full_run() {
        let r = certify(-7, CertifyOptions { run_fox: false, run_numeric: true, tol: DEFAULT_TOL }).unwrap();
        assert!(r.verdict_consistent);
        assert!(r.all_checks_pass());
        assert_eq!(r.knot_label, "J(2,-14)");
    }

    #[test]
    fn degree_audit_examples() {
        assert_eq!(expected_riley_degree(3), 5);
        assert!(degree_audit(3).unwrap());
        assert_eq!(expected_riley_degree(-2), 4);
        assert!(degree_audit(-2).unwrap());
        assert_eq!(expected_riley_degree(1), 1);
        assert!(degree_audit(1).unwrap());
        assert_eq!(degree_audit(0), Err(Error::InvalidQ(0)));
    }

    #[test]
    fn invalid_q_rejected() {
        assert_eq!(certify(0, CertifyOptions::default()), Err(Error::InvalidQ(0)));
    }

    #[test]
    fn fox_option_runs_oracle() {
        let r = certify(-1, CertifyOptions { run_fox: true, ..CertifyOptions::exact_only() }).unwrap();
        assert_eq!(r.fox_oracle_agrees, Some(true));
        assert!(riley_leading_is_unit(&r));
    }
}
