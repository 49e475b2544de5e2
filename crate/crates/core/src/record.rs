//! Machine-readable form of a [`ConjectureReport`].
//!
//! Integer coefficients are written as exact JSON numbers in ascending degree;
//! a non-integral rational coefficient is written as the string `"a/b"`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::poly::{IntPolynomial, RatPolynomial};
use crate::verify::ConjectureReport;

pub const SCHEMA_VERSION: &str = "1.0";

fn big_to_number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integer literal")
}

/// Exact coefficient: JSON integer, or `"a/b"` for a proper fraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(Number),
    Frac(String),
}

impl Coefficient {
    fn from_rational(c: &BigRational) -> Self {
        if c.is_integer() {
            Coefficient::Int(big_to_number(&c.to_integer()))
        } else {
            Coefficient::Frac(format!("{}/{}", c.numer(), c.denom()))
        }
    }
}

pub fn int_coeffs(p: &IntPolynomial) -> Vec<Number> {
    p.coeffs().iter().map(big_to_number).collect()
}

pub fn rat_coeffs(p: &RatPolynomial) -> Vec<Coefficient> {
    p.coeffs().iter().map(Coefficient::from_rational).collect()
}

/// Parses coefficients written by [`int_coeffs`].
pub fn parse_int_coeffs(coeffs: &[Number]) -> Option<IntPolynomial> {
    coeffs.iter().map(|n| BigInt::from_str(&n.to_string()).ok()).collect::<Option<Vec<_>>>().map(IntPolynomial::new)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RileyJson {
    pub coeffs: Vec<Number>,
    pub degree: usize,
    pub leading: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffsJson {
    pub coeffs: Vec<Number>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<Number>,
    /// `null` for the zero polynomial.
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificatesJson {
    pub gcd_gamma: Vec<Coefficient>,
    pub gcd_gamma_minus_1: Vec<Coefficient>,
    pub gcd_gamma_plus_1: Vec<Coefficient>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictsJson {
    pub genus_detected: bool,
    pub monic_at_some_rep: bool,
    pub fibered_expected: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoxCheckJson {
    pub ran: bool,
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootJson {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub gamma_abs: f64,
    pub monic_distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericJson {
    pub roots: Vec<RootJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub q: i64,
    pub knot: String,
    pub riley: RileyJson,
    pub tau_q: CoeffsJson,
    pub gamma: PolyJson,
    pub delta: PolyJson,
    pub alexander: [i64; 3],
    pub certificates: CertificatesJson,
    pub verdicts: VerdictsJson,
    pub fox_check: FoxCheckJson,
    /// `null` when the numeric layer was disabled.
    pub numeric: Option<NumericJson>,
}

impl From<&ConjectureReport> for OutputRecord {
    fn from(r: &ConjectureReport) -> Self {
        let (a0, a1, a2) = r.classical_alexander;
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            q: r.q,
            knot: r.knot_label.clone(),
            riley: RileyJson {
                coeffs: int_coeffs(&r.riley),
                degree: r.riley_degree,
                leading: big_to_number(&r.riley_leading),
            },
            tau_q: CoeffsJson { coeffs: int_coeffs(&r.tau) },
            gamma: PolyJson { coeffs: int_coeffs(&r.alexander.gamma), degree: r.alexander.gamma.degree() },
            delta: PolyJson { coeffs: int_coeffs(&r.alexander.delta), degree: r.alexander.delta.degree() },
            alexander: [a0, a1, a2],
            certificates: CertificatesJson {
                gcd_gamma: rat_coeffs(&r.gcd_gamma),
                gcd_gamma_minus_1: rat_coeffs(&r.gcd_gamma_minus_1),
                gcd_gamma_plus_1: rat_coeffs(&r.gcd_gamma_plus_1),
            },
            verdicts: VerdictsJson {
                genus_detected: r.genus_detected,
                monic_at_some_rep: r.monic_at_some_rep,
                fibered_expected: r.fibered_expected,
                consistent: r.verdict_consistent,
            },
            fox_check: FoxCheckJson { ran: r.fox_oracle_agrees.is_some(), agrees: r.fox_oracle_agrees },
            numeric: r.numeric_summary.as_ref().map(|s| NumericJson {
                roots: s
                    .roots
                    .iter()
                    .map(|rr| RootJson {
                        re: rr.root.re,
                        im: rr.root.im,
                        residual: rr.residual,
                        gamma_abs: rr.gamma_abs,
                        monic_distance: rr.monic_distance,
                    })
                    .collect(),
            }),
        }
    }
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn gamma_poly(&self) -> Option<IntPolynomial> {
        parse_int_coeffs(&self.gamma.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{certify, CertifyOptions};

    #[test]
    fn q2_gamma_coefficients() {
        let r = certify(2, CertifyOptions::default()).unwrap();
        let rec = OutputRecord::from(&r);
        let v: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(v["gamma"]["coeffs"].to_string(), "[4,0,1]");
        assert_eq!(v["riley"]["coeffs"].to_string(), "[1,-2,1,-1]");
        assert_eq!(v["alexander"].to_string(), "[2,-3,2]");
        assert_eq!(v["certificates"]["gcd_gamma"].to_string(), "[1]");
        assert_eq!(v["numeric"]["roots"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn field_order_is_fixed() {
        let rec = OutputRecord::from(&certify(-1, CertifyOptions::exact_only()).unwrap());
        let s = rec.to_json();
        let keys = [
            "schema_version",
            "q",
            "knot",
            "riley",
            "tau_q",
            "gamma",
            "delta",
            "alexander",
            "certificates",
            "verdicts",
            "fox_check",
            "numeric",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| s.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(s.ends_with("\"numeric\":null}"));
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let rec = OutputRecord::from(&certify(30, CertifyOptions::exact_only()).unwrap());
        let back = OutputRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back.gamma_poly().unwrap(), crate::twist::twisted_alexander(30).unwrap().gamma);
    }

    #[test]
    fn fraction_coefficients() {
        let p = RatPolynomial::new(vec![BigRational::new(1.into(), 3.into()), BigRational::from_integer(2.into())]);
        let json = serde_json::to_string(&rat_coeffs(&p)).unwrap();
        assert_eq!(json, "[\"1/3\",2]");
    }
}
