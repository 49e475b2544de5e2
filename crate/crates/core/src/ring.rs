//! Commutative coefficient rings for the Fox-calculus oracle.
//!
//! A ring is a context object; elements are plain values. Exact rings
//! ([`crate::numfield::NumberField`]) compare exactly, [`ComplexRing`]
//! compares with a relative tolerance and is only used for numeric checks.

use num_complex::Complex64;

pub trait CommRing {
    type Elem: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn integer(&self, c: i64) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn eq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
}

/// Complex doubles with tolerance-based equality.
#[derive(Clone, Copy, Debug)]
pub struct ComplexRing {
    pub tol: f64,
}

impl Default for ComplexRing {
    fn default() -> Self {
        Self { tol: 1e-8 }
    }
}

impl CommRing for ComplexRing {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn integer(&self, c: i64) -> Complex64 {
        Complex64::new(c as f64, 0.0)
    }
    fn add(&self, x: &Complex64, y: &Complex64) -> Complex64 {
        x + y
    }
    fn sub(&self, x: &Complex64, y: &Complex64) -> Complex64 {
        x - y
    }
    fn mul(&self, x: &Complex64, y: &Complex64) -> Complex64 {
        x * y
    }
    fn neg(&self, x: &Complex64) -> Complex64 {
        -x
    }
    fn is_zero(&self, x: &Complex64) -> bool {
        x.norm() <= self.tol
    }
    fn eq(&self, x: &Complex64, y: &Complex64) -> bool {
        (x - y).norm() <= self.tol * x.norm().max(y.norm()).max(1.0)
    }
    fn inv(&self, x: &Complex64) -> Option<Complex64> {
        (x.norm() > self.tol).then(|| x.inv())
    }
}
