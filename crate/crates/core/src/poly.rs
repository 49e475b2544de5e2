//! Dense univariate polynomials in `u` with exact coefficients.
//!
//! Coefficients are stored in ascending order: `coeffs[i]` is the coefficient
//! of `u^i`. The zero polynomial is the empty vector and has no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient rings usable in a [`DensePoly`].
pub trait Coeff: Clone + Num + Signed + fmt::Display {}
impl<T: Clone + Num + Signed + fmt::Display> Coeff for T {}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

/// Polynomial over the integers.
pub type IntPolynomial = DensePoly<BigInt>;
/// Polynomial over the rationals.
pub type RatPolynomial = DensePoly<BigRational>;

impl<C: Coeff> DensePoly<C> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·u^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(C::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Coefficient of `u^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// True if only even powers of `u` occur.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Exact evaluation at a ring element.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64
    where
        C: ToPrimitive,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
    }

    /// Coefficients as doubles, ascending.
    pub fn to_f64_coeffs(&self) -> Vec<f64>
    where
        C: ToPrimitive,
    {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Human-readable form in ascending degree, e.g. `1 - 2u + u^2 - u^3`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mag.is_one() && i > 0 {
                out.push_str(&mono);
            } else {
                out.push_str(&mag.to_string());
                out.push_str(&mono);
            }
        }
        out
    }
}

impl IntPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Exact division by `d` inside `Z[u]`; fails unless the quotient is integral.
    pub fn divexact(&self, d: &IntPolynomial) -> Result<IntPolynomial> {
        self.to_rat().divexact(&d.to_rat())?.to_int().ok_or(Error::NonExactDivision)
    }
}

impl RatPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::from_i64s(coeffs).to_rat()
    }

    /// Converts back to `Z[u]` when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Scales to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Long division: returns `(quot, rem)` with `self = quot·d + rem`, `deg rem < deg d`.
    pub fn divmod(&self, d: &RatPolynomial) -> Result<(RatPolynomial, RatPolynomial)> {
        let dd = d.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, d: &RatPolynomial) -> Result<RatPolynomial> {
        Ok(self.divmod(d)?.1)
    }

    /// Quotient `self / d`, failing with `NonExactDivision` on a nonzero remainder.
    pub fn divexact(&self, d: &RatPolynomial) -> Result<RatPolynomial> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPolynomial) -> Result<RatPolynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            // keep intermediate remainders monic to curb coefficient growth
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &RatPolynomial) -> Result<(RatPolynomial, RatPolynomial, RatPolynomial)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.leading().expect("nonzero by loop exit").recip();
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }
}

impl<C: Coeff> fmt::Debug for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly({})", self.pretty("u"))
    }
}

impl<C: Coeff> fmt::Display for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("u"))
    }
}

impl<C: Coeff> Add for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn add(self, rhs: Self) -> DensePoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn sub(self, rhs: Self) -> DensePoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn mul(self, rhs: Self) -> DensePoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::new(out)
    }
}

impl<C: Coeff> Neg for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn neg(self) -> DensePoly<C> {
        DensePoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<C: Coeff> $tr for DensePoly<C> {
            type Output = DensePoly<C>;
            fn $m(self, rhs: Self) -> DensePoly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&DensePoly<C>> for DensePoly<C> {
            type Output = DensePoly<C>;
            fn $m(self, rhs: &DensePoly<C>) -> DensePoly<C> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<C: Coeff> Neg for DensePoly<C> {
    type Output = DensePoly<C>;
    fn neg(self) -> DensePoly<C> {
        -&self
    }
}

impl<C: Coeff> Zero for DensePoly<C> {
    fn zero() -> Self {
        DensePoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for DensePoly<C> {
    fn one() -> Self {
        DensePoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rp(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&ip(&[1, -1]) + &ip(&[0, 1]), ip(&[1]));
        assert_eq!(&IntPolynomial::zero() + &ip(&[3, 0, 5]), ip(&[3, 0, 5]));
        assert_eq!(&ip(&[1, 0, 1]) + &ip(&[1, 0, 1]), ip(&[2, 0, 2]));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(ip(&[0, 0, 0]), IntPolynomial::zero());
        assert_eq!(ip(&[5]).degree(), Some(0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&ip(&[1, -1]) * &ip(&[1, 1]), ip(&[1, 0, -1]));
        assert!((&ip(&[1, 2, 3]) * &IntPolynomial::zero()).is_zero());
        let tau1 = ip(&[2, 0, 1]);
        assert_eq!(&(&tau1 * &tau1) - &ip(&[2]), ip(&[2, 0, 4, 0, 1]));
    }

    #[test]
    fn eval_complex_examples() {
        assert_eq!(ip(&[1, -1]).eval_complex(Complex64::new(1.0, 0.0)), Complex64::zero());
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!(ip(&[1, 1, 1]).eval_complex(w).norm() < 1e-12);
        assert_eq!(IntPolynomial::zero().eval_complex(Complex64::new(0.3, 2.0)), Complex64::zero());
    }

    #[test]
    fn divexact_examples() {
        assert_eq!(rp(&[0, 0, 4, 0, 1]).divexact(&rp(&[0, 0, 1])).unwrap(), rp(&[4, 0, 1]));
        assert_eq!(rp(&[3, 1, 4]).divexact(&rp(&[1])).unwrap(), rp(&[3, 1, 4]));
        assert_eq!(rp(&[1, 0, -1]).divexact(&rp(&[1, -1])).unwrap(), rp(&[1, 1]));
        assert_eq!(rp(&[1, 0, 1]).divexact(&rp(&[0, 1])), Err(Error::NonExactDivision));
    }

    #[test]
    fn int_divexact_rejects_fractional_quotient() {
        assert_eq!(ip(&[1]).divexact(&ip(&[2])), Err(Error::NonExactDivision));
        assert_eq!(ip(&[4, 2]).divexact(&ip(&[2])).unwrap(), ip(&[2, 1]));
    }

    #[test]
    fn gcd_examples() {
        // gcd(φ₂, γ₂)
        let g = rp(&[1, -2, 1, -1]).gcd(&rp(&[4, 0, 1])).unwrap();
        assert!(g.is_one());
        assert_eq!(rp(&[2, 4]).gcd(&RatPolynomial::zero()).unwrap(), rp(&[2, 4]).monic());
        assert_eq!(rp(&[1, 0, -1]).gcd(&rp(&[1, -1])).unwrap(), rp(&[-1, 1]));
        assert_eq!(RatPolynomial::zero().gcd(&RatPolynomial::zero()), Err(Error::BothZero));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(rp(&[0, 0, 1]).divmod(&rp(&[0, 1])).unwrap(), (rp(&[0, 1]), rp(&[])));
        assert_eq!(rp(&[4, 0, 1]).divmod(&rp(&[1, 1, 1])).unwrap(), (rp(&[1]), rp(&[3, -1])));
        let p = rp(&[7, -3, 2]);
        assert_eq!(p.divmod(&rp(&[1])).unwrap(), (p.clone(), rp(&[])));
        assert_eq!(p.divmod(&RatPolynomial::zero()), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = rp(&[1, -2, 1, -1]);
        let b = rp(&[3, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn pretty_ascending() {
        assert_eq!(ip(&[1, -2, 1, -1]).pretty("u"), "1 - 2u + u^2 - u^3");
        assert_eq!(ip(&[0, 0, -1]).pretty("u"), "-u^2");
        assert_eq!(IntPolynomial::zero().pretty("u"), "0");
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-1000i64..=1000, 0..max_len).prop_map(|c| ip(&c))
    }

    fn nonzero_poly(max_len: usize) -> impl Strategy<Value = IntPolynomial> {
        small_poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn degree_and_leading_multiply(p in nonzero_poly(8), q in nonzero_poly(8)) {
            let pq = &p * &q;
            prop_assert_eq!(pq.degree().unwrap(), p.degree().unwrap() + q.degree().unwrap());
            prop_assert_eq!(pq.leading().unwrap(), &(p.leading().unwrap() * q.leading().unwrap()));
        }

        #[test]
        fn divmod_recombines(p in small_poly(10), d in nonzero_poly(5)) {
            let (p, d) = (p.to_rat(), d.to_rat());
            let (q, r) = p.divmod(&d).unwrap();
            prop_assert!(r.degree() < d.degree());
            prop_assert_eq!(&(&q * &d) + &r, p);
        }

        #[test]
        fn gcd_is_monic_common_and_greatest(
            a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)
        ) {
            let (a, b, c) = (a.to_rat(), b.to_rat(), c.to_rat());
            let x = &a * &c;
            let y = &b * &c;
            let g = x.gcd(&y).unwrap();
            prop_assert!(g.leading().unwrap().is_one());
            prop_assert!(x.divexact(&g).is_ok());
            prop_assert!(y.divexact(&g).is_ok());
            prop_assert!(g.divexact(&c).is_ok());
        }

        #[test]
        fn eval_complex_is_multiplicative(
            p in small_poly(7), q in small_poly(7),
            r in 0.0f64..2.0, theta in 0.0f64..std::f64::consts::TAU
        ) {
            let z = Complex64::from_polar(r, theta);
            let lhs = (&p * &q).eval_complex(z);
            let rhs = p.eval_complex(z) * q.eval_complex(z);
            // relative to the magnitude bound sum |c_i| |z|^i, which absorbs cancellation
            let bound = |p: &IntPolynomial| p
                .to_f64_coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * r + c.abs());
            let scale = (bound(&p) * bound(&q)).max(1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-10 * scale);
        }
    }
}
