//! Complex roots of the Riley polynomial and numeric evaluation of `Δ` there.
//!
//! Roots come from Durand–Kerner iteration in doubles, then a few Newton
//! steps whose `p(z)/p'(z)` is evaluated exactly at the double-precision
//! point. Reported residuals are exact values of `|p(z)|`, rounded once.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::quadring::eigenvalues;
use crate::twist::{riley, twisted_alexander};

pub const MAX_ITERATIONS: usize = 500;
pub const DEFAULT_TOL: f64 = 1e-12;
/// Below this `|γ(root)|` counts as numerically zero.
pub const GAMMA_ZERO_THRESHOLD: f64 = 1e-6;

// rotation of the initial circle; avoids symmetric starts on real polynomials
const START_ANGLE: f64 = 0.4;
const POLISH_STEPS: usize = 3;

/// `x = m · 2^k` with integer `m`.
fn dyadic(x: f64) -> (BigInt, i32) {
    let (mantissa, exponent, sign) = x.integer_decode();
    (BigInt::from(sign) * BigInt::from(mantissa), i32::from(exponent))
}

/// Exact `p(z)` at a double-precision point, rounded once to doubles.
///
/// `z = (X + iY) / 2^e` with integers `X, Y`, so `2^{e·n} p(z)` is a Gaussian
/// integer computed by homogenized Horner with no rational arithmetic.
fn exact_eval(p: &IntPolynomial, z: Complex64) -> Complex64 {
    let Some(n) = p.degree() else {
        return Complex64::zero();
    };
    let (mut xr, kr) = dyadic(z.re);
    let (mut xi, ki) = dyadic(z.im);
    let e = (-kr.min(ki)).max(0);
    // align both parts to the common denominator 2^e
    let align = |m: &mut BigInt, k: i32| *m <<= usize::try_from(k + e).expect("aligned exponent");
    align(&mut xr, kr);
    align(&mut xi, ki);
    let e = e as usize;
    let mut re = p.coeff(n);
    let mut im = BigInt::zero();
    for i in (0..n).rev() {
        let next_re = &re * &xr - &im * &xi + (p.coeff(i) << (e * (n - i)));
        im = &re * &xi + &im * &xr;
        re = next_re;
    }
    let denom = BigInt::one() << (e * n);
    let to_f64 = |num: BigInt| BigRational::new_raw(num, denom.clone()).to_f64().unwrap_or(f64::NAN);
    Complex64::new(to_f64(re), to_f64(im))
}

fn derivative(p: &IntPolynomial) -> IntPolynomial {
    IntPolynomial::new(p.coeffs().iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

/// `|p(z)|` computed exactly at the given double-precision point.
pub fn exact_residual(p: &IntPolynomial, z: Complex64) -> f64 {
    exact_eval(p, z).norm()
}

fn initial_guesses(monic: &[Complex64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    // Fujiwara bound on root moduli, halved
    let bound = (1..=n)
        .map(|k| {
            let c = monic[n - k].norm();
            let e = if k == n { 2.0 * c } else { c };
            e.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max);
    let radius = bound.max(0.5);
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + START_ANGLE;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
}

/// Running-error bound for Horner evaluation in doubles.
fn rounding_bound(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let magnitude = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    4.0 * coeffs.len() as f64 * f64::EPSILON * magnitude
}

/// All complex roots of `p` (with multiplicity) by Weierstrass / Durand–Kerner
/// simultaneous iteration. Constant polynomials have no roots.
pub fn find_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>> {
    find_roots_bounded(p, tol, MAX_ITERATIONS)
}

/// [`find_roots`] with an explicit iteration budget.
pub fn find_roots_bounded(p: &IntPolynomial, tol: f64, max_iterations: usize) -> Result<Vec<Complex64>> {
    let Some(n) = p.degree().filter(|&n| n >= 1) else {
        return Ok(Vec::new());
    };
    let coeffs: Vec<Complex64> = p.to_f64_coeffs().into_iter().map(|c| Complex64::new(c, 0.0)).collect();
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return Ok(vec![polish(p, -monic[0])]);
    }
    let mut z = initial_guesses(&monic);
    let mut converged = false;
    let mut iterations = 0;
    while iterations < max_iterations {
        iterations += 1;
        let mut max_step: f64 = 0.0;
        let mut at_noise_floor = true;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let value = horner(&monic, z[i]);
            at_noise_floor &= value.norm() <= rounding_bound(&monic, z[i]);
            let step = value / denom;
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        // further steps only chase rounding noise once every value is at the floor
        if max_step < tol || at_noise_floor {
            converged = true;
            break;
        }
    }
    let roots: Vec<Complex64> = z.into_iter().map(|r| polish(p, r)).collect();
    if !converged {
        let max_residual = roots.iter().map(|&r| exact_residual(p, r)).fold(0.0, f64::max);
        return Err(Error::NoConvergence { iterations, max_residual });
    }
    Ok(roots)
}

/// Newton steps with exactly evaluated `p/p'`.
fn polish(p: &IntPolynomial, mut z: Complex64) -> Complex64 {
    let dp = derivative(p);
    for _ in 0..POLISH_STEPS {
        let val = exact_eval(p, z);
        if val.is_zero() {
            break;
        }
        let step = val / exact_eval(&dp, z);
        if !step.is_finite() {
            break;
        }
        let next = z - step;
        if next == z {
            break;
        }
        z = next;
    }
    z
}

/// Numeric data of `Δ` at one parabolic representation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub root: Complex64,
    /// Exact `|φ_q(root)|` at the double-precision root.
    pub residual: f64,
    /// `(γ, δ, γ)` evaluated at the root.
    pub delta_eval: [Complex64; 3],
    pub gamma_abs: f64,
    /// `min(|γ − 1|, |γ + 1|)`.
    pub monic_distance: f64,
}

/// Aggregate over all roots of one `φ_q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericSummary {
    pub roots: Vec<RootReport>,
    pub max_residual: f64,
    /// `|Σ roots + a_{n−1}/a_n|`.
    pub vieta_error: f64,
    pub min_gamma_abs: f64,
    pub min_monic_distance: f64,
}

impl NumericSummary {
    pub fn gamma_nonvanishing(&self) -> bool {
        self.min_gamma_abs >= GAMMA_ZERO_THRESHOLD
    }
}

pub fn evaluate_at_roots(q: i64, tol: f64) -> Result<Vec<RootReport>> {
    let phi = riley(q)?;
    let ta = twisted_alexander(q)?;
    let roots = find_roots(&phi, tol)?;
    Ok(roots
        .into_iter()
        .map(|root| {
            let gamma = ta.gamma.eval_complex(root);
            let delta = ta.delta.eval_complex(root);
            RootReport {
                root,
                residual: exact_residual(&phi, root),
                delta_eval: [gamma, delta, gamma],
                gamma_abs: gamma.norm(),
                monic_distance: (gamma - 1.0).norm().min((gamma + 1.0).norm()),
            }
        })
        .collect())
}

/// Sum of roots minus `−a_{n−1}/a_n`, in absolute value.
pub fn vieta_error(p: &IntPolynomial, roots: &[Complex64]) -> f64 {
    let Some(n) = p.degree().filter(|&n| n >= 1) else {
        return 0.0;
    };
    let expected = -(p.coeff(n - 1).to_f64().unwrap_or(f64::NAN)) / p.coeff(n).to_f64().unwrap_or(f64::NAN);
    (roots.iter().sum::<Complex64>() - expected).norm()
}

pub fn summarize(q: i64, tol: f64) -> Result<NumericSummary> {
    let roots = evaluate_at_roots(q, tol)?;
    let phi = riley(q)?;
    let points: Vec<Complex64> = roots.iter().map(|r| r.root).collect();
    Ok(NumericSummary {
        max_residual: roots.iter().map(|r| r.residual).fold(0.0, f64::max),
        vieta_error: vieta_error(&phi, &points),
        min_gamma_abs: roots.iter().map(|r| r.gamma_abs).fold(f64::INFINITY, f64::min),
        min_monic_distance: roots.iter().map(|r| r.monic_distance).fold(f64::INFINITY, f64::min),
        roots,
    })
}

/// The three coefficients of `Δ` from the eigenvalue formula, evaluated with
/// explicit square roots: `αβ`, `α+β−2αβ + (λ₊−λ₋)/(2+λ₊+λ₋)·(α−β)`, `αβ`.
///
/// For `q < 0`, `α = (λ₊^q − 1)/(λ₊ − 1)`.
pub fn radical_coefficients(q: i64, u: Complex64) -> Result<[Complex64; 3]> {
    if q == 0 {
        return Err(Error::InvalidQ(q));
    }
    let (lp, lm) = eigenvalues(u);
    let geo = |lam: Complex64| -> Complex64 {
        if q > 0 {
            (0..q).fold((Complex64::zero(), Complex64::new(1.0, 0.0)), |(s, p), _| (s + p, p * lam)).0
        } else {
            (lam.powi(q as i32) - 1.0) / (lam - 1.0)
        }
    };
    let alpha = geo(lp);
    let beta = geo(lm);
    let ab = alpha * beta;
    let middle = alpha + beta - 2.0 * ab + (lp - lm) / (2.0 + lp + lm) * (alpha - beta);
    Ok([ab, middle, ab])
}

/// `|x − y| / max(|x|, |y|, 1)`.
pub fn relative_error(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / x.norm().max(y.norm()).max(1.0)
}
