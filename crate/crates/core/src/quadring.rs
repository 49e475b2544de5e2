//! Arithmetic in `Z[u][λ] / (λ² − (u²+2)λ + 1)`.
//!
//! `λ` stands for either eigenvalue `λ±` of `ρ(w)`; the two complex embeddings
//! send it to `λ₊` and `λ₋`. Since `λ₊λ₋ = 1`, `λ` is a unit with inverse
//! `(u²+2) − λ`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `τ₁ = u² + 2`, the trace of `ρ(w)` and the linear coefficient of the modulus.
pub fn trace_w() -> IntPolynomial {
    IntPolynomial::from_i64s(&[2, 0, 1])
}

/// An element `a(u) + b(u)·λ` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElement {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
}

impl QuadElement {
    pub fn new(a: IntPolynomial, b: IntPolynomial) -> Self {
        Self { a, b }
    }

    pub fn zero() -> Self {
        Self::new(IntPolynomial::zero(), IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn from_poly(a: IntPolynomial) -> Self {
        Self::new(a, IntPolynomial::zero())
    }

    pub fn lambda() -> Self {
        Self::new(IntPolynomial::zero(), IntPolynomial::one())
    }

    pub fn lambda_inv() -> Self {
        Self::new(trace_w(), IntPolynomial::from_i64s(&[-1]))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Galois conjugate `a + b((u²+2) − λ)`, swapping the two embeddings.
    pub fn conjugate(&self) -> QuadElement {
        QuadElement::new(&self.a + &(&self.b * &trace_w()), -&self.b)
    }

    /// Inverse of a unit; units are exactly the elements of norm `±1`.
    pub fn unit_inverse(&self) -> Option<QuadElement> {
        let n = norm(self);
        if n.is_one() {
            Some(self.conjugate())
        } else if (-&n).is_one() {
            Some(-&self.conjugate())
        } else {
            None
        }
    }

    /// Numerical value under the embedding `λ ↦ lam`.
    pub fn embed(&self, u: Complex64, lam: Complex64) -> Complex64 {
        self.a.eval_complex(u) + self.b.eval_complex(u) * lam
    }
}

/// Eigenvalues `(λ₊, λ₋) = ((u²+2) ± √(u⁴+4u²)) / 2` at a complex `u`.
pub fn eigenvalues(u: Complex64) -> (Complex64, Complex64) {
    let u2 = u * u;
    let root = (u2 * u2 + 4.0 * u2).sqrt();
    ((u2 + 2.0 + root) / 2.0, (u2 + 2.0 - root) / 2.0)
}

impl Add for &QuadElement {
    type Output = QuadElement;
    fn add(self, rhs: Self) -> QuadElement {
        QuadElement::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: Self) -> QuadElement {
        QuadElement::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement::new(-&self.a, -&self.b)
    }
}

impl Mul for &QuadElement {
    type Output = QuadElement;
    fn mul(self, rhs: Self) -> QuadElement {
        qmul(self, rhs)
    }
}

/// Product reduced by `λ² = (u²+2)λ − 1`.
pub fn qmul(s: &QuadElement, t: &QuadElement) -> QuadElement {
    let bb = &s.b * &t.b;
    let a = &(&s.a * &t.a) - &bb;
    let b = &(&(&s.a * &t.b) + &(&t.a * &s.b)) + &(&trace_w() * &bb);
    QuadElement::new(a, b)
}

fn qpow_nonneg(s: &QuadElement, mut k: u64) -> QuadElement {
    let mut base = s.clone();
    let mut acc = QuadElement::one();
    while k > 0 {
        if k & 1 == 1 {
            acc = qmul(&acc, &base);
        }
        base = qmul(&base, &base);
        k >>= 1;
    }
    acc
}

/// `s^k` by binary exponentiation. Negative `k` requires `s` to be a unit.
pub fn qpow(s: &QuadElement, k: i64) -> Result<QuadElement> {
    if k >= 0 {
        return Ok(qpow_nonneg(s, k as u64));
    }
    let inv =
        if *s == QuadElement::lambda() { QuadElement::lambda_inv() } else { s.unit_inverse().ok_or(Error::NonUnit)? };
    Ok(qpow_nonneg(&inv, k.unsigned_abs()))
}

/// `(λ^q − 1)/(λ − 1)`: `Σ_{i<q} λ^i` for `q > 0`, `−Σ_{i=1}^{|q|} λ^{−i}` for `q < 0`.
pub fn geometric_sum(q: i64) -> Result<QuadElement> {
    if q == 0 {
        return Err(Error::InvalidQ(q));
    }
    let (step, start, n) = if q > 0 {
        (QuadElement::lambda(), QuadElement::one(), q as u64)
    } else {
        (QuadElement::lambda_inv(), QuadElement::lambda_inv(), q.unsigned_abs())
    };
    let mut term = start;
    let mut acc = QuadElement::zero();
    for _ in 0..n {
        acc = &acc + &term;
        term = qmul(&term, &step);
    }
    Ok(if q > 0 { acc } else { -&acc })
}

/// `(a + bλ₊)(a + bλ₋) = a² + ab(u²+2) + b²`.
pub fn norm(s: &QuadElement) -> IntPolynomial {
    &(&(&s.a * &s.a) + &(&(&s.a * &s.b) * &trace_w())) + &(&s.b * &s.b)
}

/// `(a + bλ₊) + (a + bλ₋) = 2a + b(u²+2)`.
pub fn embed_trace(s: &QuadElement) -> IntPolynomial {
    &s.a.scale(&BigInt::from(2)) + &(&s.b * &trace_w())
}
