//! Laurent polynomials in `t` and 2×2 matrices over a [`CommRing`].

use crate::error::{Error, Result};
use crate::ring::CommRing;

/// `Σ coeffs[i]·t^{offset+i}`. Normalized: no zero at either end, zero has offset 0.
#[derive(Clone, Debug)]
pub struct TPoly<E> {
    offset: i64,
    coeffs: Vec<E>,
}

impl<E: Clone> TPoly<E> {
    pub fn zero() -> Self {
        Self { offset: 0, coeffs: Vec::new() }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power of `t`; `None` for zero.
    pub fn top_power(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn shift(&self, k: i64) -> Self {
        Self { offset: if self.coeffs.is_empty() { 0 } else { self.offset + k }, coeffs: self.coeffs.clone() }
    }
}

impl<E: Clone + std::fmt::Debug> TPoly<E> {
    pub fn new<R: CommRing<Elem = E>>(ring: &R, offset: i64, coeffs: Vec<E>) -> Self {
        let mut p = Self { offset, coeffs };
        p.normalize(ring);
        p
    }

    pub fn monomial<R: CommRing<Elem = E>>(ring: &R, c: E, k: i64) -> Self {
        Self::new(ring, k, vec![c])
    }

    pub fn constant<R: CommRing<Elem = E>>(ring: &R, c: E) -> Self {
        Self::monomial(ring, c, 0)
    }

    fn normalize<R: CommRing<Elem = E>>(&mut self, ring: &R) {
        while self.coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| ring.is_zero(c)).count();
        self.coeffs.drain(..lead);
        self.offset = if self.coeffs.is_empty() { 0 } else { self.offset + lead as i64 };
    }

    fn coeff_at<R: CommRing<Elem = E>>(&self, ring: &R, k: i64) -> E {
        let i = k - self.offset;
        if i < 0 {
            return ring.zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(|| ring.zero())
    }

    fn span(a: &Self, b: &Self) -> Option<(i64, i64)> {
        match (a.top_power(), b.top_power()) {
            (None, None) => None,
            (Some(ta), None) => Some((a.offset, ta)),
            (None, Some(tb)) => Some((b.offset, tb)),
            (Some(ta), Some(tb)) => Some((a.offset.min(b.offset), ta.max(tb))),
        }
    }

    pub fn add<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        let Some((lo, hi)) = Self::span(a, b) else {
            return Self::zero();
        };
        let coeffs = (lo..=hi).map(|k| ring.add(&a.coeff_at(ring, k), &b.coeff_at(ring, k))).collect();
        Self::new(ring, lo, coeffs)
    }

    pub fn neg<R: CommRing<Elem = E>>(ring: &R, a: &Self) -> Self {
        Self { offset: a.offset, coeffs: a.coeffs.iter().map(|c| ring.neg(c)).collect() }
    }

    pub fn sub<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        Self::add(ring, a, &Self::neg(ring, b))
    }

    pub fn mul<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![ring.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
            }
        }
        Self::new(ring, a.offset + b.offset, out)
    }

    pub fn scale<R: CommRing<Elem = E>>(ring: &R, a: &Self, c: &E) -> Self {
        Self::new(ring, a.offset, a.coeffs.iter().map(|x| ring.mul(x, c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact quotient `a / d`; the leading coefficient of `d` must be a unit.
    pub fn divexact<R: CommRing<Elem = E>>(ring: &R, a: &Self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if a.is_zero() {
            return Ok(Self::zero());
        }
        let m = d.coeffs.len();
        let n = a.coeffs.len();
        if n < m {
            return Err(Error::NonExactDivision);
        }
        let lc_inv = ring.inv(&d.coeffs[m - 1]).ok_or(Error::NonUnit)?;
        let mut rem = a.coeffs.clone();
        let mut quot = vec![ring.zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let c = ring.mul(&rem[k + m - 1], &lc_inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = ring.sub(&rem[k + j], &ring.mul(&c, dc));
            }
            quot[k] = c;
        }
        if !rem.iter().all(|r| ring.is_zero(r)) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::new(ring, a.offset - d.offset, quot))
    }

    /// Equality coefficient by coefficient (same offset).
    pub fn eq<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> bool {
        match Self::span(a, b) {
            None => true,
            Some((lo, hi)) => (lo..=hi).all(|k| ring.eq(&a.coeff_at(ring, k), &b.coeff_at(ring, k))),
        }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn eq_up_to_unit<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> bool {
        let a0 = a.shift(-a.offset);
        let b0 = b.shift(-b.offset);
        Self::eq(ring, &a0, &b0) || Self::eq(ring, &a0, &Self::neg(ring, &b0))
    }
}

/// 2×2 matrix `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Debug)]
pub struct Matrix2<E> {
    pub m: [[E; 2]; 2],
}

impl<E: Clone + std::fmt::Debug> Matrix2<E> {
    pub fn new(m00: E, m01: E, m10: E, m11: E) -> Self {
        Self { m: [[m00, m01], [m10, m11]] }
    }

    pub fn identity<R: CommRing<Elem = E>>(ring: &R) -> Self {
        Self::new(ring.one(), ring.zero(), ring.zero(), ring.one())
    }

    pub fn mul<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        let e = |i: usize, j: usize| ring.add(&ring.mul(&a.m[i][0], &b.m[0][j]), &ring.mul(&a.m[i][1], &b.m[1][j]));
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det<R: CommRing<Elem = E>>(ring: &R, a: &Self) -> E {
        ring.sub(&ring.mul(&a.m[0][0], &a.m[1][1]), &ring.mul(&a.m[0][1], &a.m[1][0]))
    }

    pub fn trace<R: CommRing<Elem = E>>(ring: &R, a: &Self) -> E {
        ring.add(&a.m[0][0], &a.m[1][1])
    }

    /// Inverse via the adjugate; `None` when the determinant is not a unit.
    pub fn inverse<R: CommRing<Elem = E>>(ring: &R, a: &Self) -> Option<Self> {
        let d = ring.inv(&Self::det(ring, a))?;
        Some(Self::new(
            ring.mul(&a.m[1][1], &d),
            ring.neg(&ring.mul(&a.m[0][1], &d)),
            ring.neg(&ring.mul(&a.m[1][0], &d)),
            ring.mul(&a.m[0][0], &d),
        ))
    }

    pub fn eq<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> bool {
        (0..2).all(|i| (0..2).all(|j| ring.eq(&a.m[i][j], &b.m[i][j])))
    }
}

/// 2×2 matrix with Laurent-polynomial entries.
pub type TMatrix<E> = Matrix2<TPoly<E>>;

impl<E: Clone + std::fmt::Debug> TMatrix<E> {
    pub fn tzero() -> Self {
        Matrix2::new(TPoly::zero(), TPoly::zero(), TPoly::zero(), TPoly::zero())
    }

    pub fn tidentity<R: CommRing<Elem = E>>(ring: &R) -> Self {
        Self::monomial_matrix(ring, &Matrix2::identity(ring), 0)
    }

    /// `t^k · m`.
    pub fn monomial_matrix<R: CommRing<Elem = E>>(ring: &R, m: &Matrix2<E>, k: i64) -> Self {
        let e = |i: usize, j: usize| TPoly::monomial(ring, m.m[i][j].clone(), k);
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn tadd<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        let e = |i: usize, j: usize| TPoly::add(ring, &a.m[i][j], &b.m[i][j]);
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn tsub<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        let e = |i: usize, j: usize| TPoly::sub(ring, &a.m[i][j], &b.m[i][j]);
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn tmul<R: CommRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        let e = |i: usize, j: usize| {
            TPoly::add(ring, &TPoly::mul(ring, &a.m[i][0], &b.m[0][j]), &TPoly::mul(ring, &a.m[i][1], &b.m[1][j]))
        };
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn tdet<R: CommRing<Elem = E>>(ring: &R, a: &Self) -> TPoly<E> {
        TPoly::sub(ring, &TPoly::mul(ring, &a.m[0][0], &a.m[1][1]), &TPoly::mul(ring, &a.m[0][1], &a.m[1][0]))
    }

    pub fn is_tzero(&self) -> bool {
        self.m.iter().flatten().all(TPoly::is_zero)
    }
}
