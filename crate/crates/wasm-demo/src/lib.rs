//! WebAssembly bindings for the static page in `www/`.
//!
//! Each export wraps a plain Rust function so the logic is testable natively.

use num_complex::Complex64;
use twistknot::numroots::{evaluate_at_roots, DEFAULT_TOL};
use twistknot::{certify, twisted_alexander, CertifyOptions, OutputRecord, Result};
use wasm_bindgen::prelude::*;

/// Largest `|q|` the page accepts; keeps each request well under a second.
pub const MAX_ABS_Q: i64 = 40;

fn check_q(q: i64) -> std::result::Result<(), String> {
    if q == 0 || q.abs() > MAX_ABS_Q {
        Err(format!("q must be a nonzero integer with |q| ≤ {MAX_ABS_Q}"))
    } else {
        Ok(())
    }
}

/// Full certificate for `J(2,2q)` as pretty JSON, with the Fox/Wada oracle when `fox` is set.
pub fn analyze_json(q: i64, fox: bool) -> Result<String> {
    let options = CertifyOptions { run_fox: fox, ..CertifyOptions::default() };
    Ok(OutputRecord::from(&certify(q, options)?).to_json_pretty())
}

/// Riley roots flattened as `[re, im, |γ(u)|, ...]`.
pub fn root_points(q: i64) -> Result<Vec<f64>> {
    Ok(evaluate_at_roots(q, DEFAULT_TOL)?.iter().flat_map(|r| [r.root.re, r.root.im, r.gamma_abs]).collect())
}

/// `[Re γ, Im γ, Re δ, Im δ]` at an arbitrary complex `u`.
pub fn delta_coefficients_at(q: i64, u: Complex64) -> Result<[f64; 4]> {
    let ta = twisted_alexander(q)?;
    let g = ta.gamma.eval_complex(u);
    let d = ta.delta.eval_complex(u);
    Ok([g.re, g.im, d.re, d.im])
}

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub fn analyze(q: i32, fox_check: bool) -> std::result::Result<String, JsError> {
    let q = i64::from(q);
    check_q(q).map_err(js_err)?;
    // the oracle grows quickly with |q|
    analyze_json(q, fox_check && q.abs() <= 8).map_err(js_err)
}

#[wasm_bindgen]
pub fn riley_roots(q: i32) -> std::result::Result<Vec<f64>, JsError> {
    let q = i64::from(q);
    check_q(q).map_err(js_err)?;
    root_points(q).map_err(js_err)
}

#[wasm_bindgen]
pub fn delta_at(q: i32, re: f64, im: f64) -> std::result::Result<Vec<f64>, JsError> {
    let q = i64::from(q);
    check_q(q).map_err(js_err)?;
    delta_coefficients_at(q, Complex64::new(re, im)).map(Vec::from).map_err(js_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_reports_gamma() {
        let json = analyze_json(2, true).unwrap();
        assert!(json.contains("\"agrees\": true"));
        assert!(json.contains("\"consistent\": true"));
    }

    #[test]
    fn roots_come_in_triples() {
        let pts = root_points(-2).unwrap();
        assert_eq!(pts.len(), 12);
        assert!(pts.chunks(3).all(|p| p[2] > 1e-6));
    }

    #[test]
    fn delta_at_figure_eight_is_constant() {
        // q = −1: Δ = 1 − 4t + t² for every u
        let c = delta_coefficients_at(-1, Complex64::new(0.3, -1.7)).unwrap();
        assert_eq!(c, [1.0, 0.0, -4.0, 0.0]);
    }

    #[test]
    fn q_range_is_enforced() {
        assert!(check_q(0).is_err());
        assert!(check_q(MAX_ABS_Q + 1).is_err());
        assert!(check_q(-MAX_ABS_Q).is_ok());
    }
}
