//! Exact twisted Alexander polynomials of the twist knots `J(2,2q)` at their
//! parabolic `SL(2,C)` representations, with certificates that the polynomial
//! detects the genus and is monic exactly for the fibered members.
//!
//! The closed form lives in [`twist`] and is computed over
//! `Z[u][λ]/(λ² − (u²+2)λ + 1)` ([`quadring`]). [`foxwada`] recomputes the
//! same invariant from the knot group presentation, [`numroots`] evaluates it
//! at the complex roots of the Riley polynomial, and [`verify`] assembles the
//! per-`q` gcd certificates.

pub mod error;
pub mod foxwada;
pub mod numfield;
pub mod numroots;
pub mod poly;
pub mod quadring;
pub mod record;
pub mod ring;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
pub use numfield::{AlgebraicNumber, NumberField};
pub use poly::{IntPolynomial, RatPolynomial};
pub use quadring::QuadElement;
pub use record::OutputRecord;
pub use twist::{riley, trace_tau, twisted_alexander, TwistedAlexander};
pub use verify::{certify, CertifyOptions, ConjectureReport};
