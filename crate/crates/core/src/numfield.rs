//! Exact arithmetic in `K = Q[u]/(m(u))`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::ring::CommRing;

/// The quotient field, identified by its monic modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: Arc<RatPolynomial>,
}

/// A residue class, always fully reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    residue: RatPolynomial,
    modulus: Arc<RatPolynomial>,
}

impl NumberField {
    /// `Q[u]/(m)`; the modulus is rescaled to be monic. Panics on a constant modulus.
    pub fn new(modulus: &IntPolynomial) -> Self {
        assert!(modulus.degree().is_some_and(|d| d >= 1), "modulus must have positive degree");
        Self { modulus: Arc::new(modulus.to_rat().monic()) }
    }

    /// Field sharing the modulus of an existing element's field.
    pub fn from_monic_modulus(modulus: RatPolynomial) -> Self {
        Self { modulus: Arc::new(modulus.monic()) }
    }

    pub fn modulus(&self) -> &RatPolynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("positive degree")
    }

    pub fn element(&self, p: &RatPolynomial) -> AlgebraicNumber {
        let residue = p.rem(&self.modulus).expect("modulus is nonzero");
        AlgebraicNumber { residue, modulus: Arc::clone(&self.modulus) }
    }

    pub fn from_int_poly(&self, p: &IntPolynomial) -> AlgebraicNumber {
        self.element(&p.to_rat())
    }

    pub fn from_rational(&self, c: BigRational) -> AlgebraicNumber {
        self.element(&RatPolynomial::constant(c))
    }

    /// The class of `u`.
    pub fn generator(&self) -> AlgebraicNumber {
        self.element(&RatPolynomial::u())
    }

    pub fn zero(&self) -> AlgebraicNumber {
        self.element(&RatPolynomial::zero())
    }

    pub fn one(&self) -> AlgebraicNumber {
        self.element(&RatPolynomial::one())
    }
}

impl AlgebraicNumber {
    pub fn residue(&self) -> &RatPolynomial {
        &self.residue
    }

    pub fn modulus(&self) -> &RatPolynomial {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    fn with_residue(&self, p: RatPolynomial) -> Self {
        Self { residue: p, modulus: Arc::clone(&self.modulus) }
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        self.with_residue(&self.residue + &other.residue)
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        self.with_residue(&self.residue - &other.residue)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let prod = &self.residue * &other.residue;
        self.with_residue(prod.rem(&self.modulus).expect("modulus is nonzero"))
    }

    pub fn neg(&self) -> Self {
        self.with_residue(-&self.residue)
    }

    /// Evaluates an integer polynomial at this element.
    pub fn eval_poly(&self, p: &IntPolynomial) -> Self {
        p.coeffs().iter().rev().fold(self.with_residue(RatPolynomial::zero()), |acc, c| {
            let c = self.with_residue(RatPolynomial::constant(BigRational::from_integer(c.clone())));
            acc.mul_unchecked(self).add_unchecked(&c)
        })
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod ({})", self.residue, self.modulus)
    }
}

pub fn nf_add(x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    x.same_field(y)?;
    Ok(x.add_unchecked(y))
}

pub fn nf_sub(x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    x.same_field(y)?;
    Ok(x.sub_unchecked(y))
}

pub fn nf_mul(x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    x.same_field(y)?;
    Ok(x.mul_unchecked(y))
}

/// Inverse by extended Euclid. A residue sharing a factor with the modulus is
/// reported as `ZeroDivisor` rather than assumed away.
pub fn nf_inv(x: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    if x.is_zero() {
        return Err(Error::ZeroInverse);
    }
    let (g, s, _) = x.residue.ext_gcd(&x.modulus)?;
    if !g.is_one() {
        return Err(Error::ZeroDivisor);
    }
    Ok(x.with_residue(s.rem(&x.modulus)?))
}

impl CommRing for NumberField {
    type Elem = AlgebraicNumber;

    fn zero(&self) -> AlgebraicNumber {
        NumberField::zero(self)
    }
    fn one(&self) -> AlgebraicNumber {
        NumberField::one(self)
    }
    fn integer(&self, c: i64) -> AlgebraicNumber {
        self.from_rational(BigRational::from_integer(c.into()))
    }
    fn add(&self, x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
        x.add_unchecked(y)
    }
    fn sub(&self, x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
        x.sub_unchecked(y)
    }
    fn mul(&self, x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
        x.mul_unchecked(y)
    }
    fn neg(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        x.neg()
    }
    fn is_zero(&self, x: &AlgebraicNumber) -> bool {
        x.is_zero()
    }
    fn eq(&self, x: &AlgebraicNumber, y: &AlgebraicNumber) -> bool {
        x.residue == y.residue
    }
    fn inv(&self, x: &AlgebraicNumber) -> Option<AlgebraicNumber> {
        nf_inv(x).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::riley;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn mul_and_add_examples() {
        let k = NumberField::new(&ip(&[1, 1, 1]));
        let u = k.generator();
        assert_eq!(nf_mul(&u, &u).unwrap(), k.from_int_poly(&ip(&[-1, -1])));
        let x = k.from_int_poly(&ip(&[3, -2]));
        assert_eq!(nf_mul(&x, &k.one()).unwrap(), x);
        assert!(nf_add(&u, &u.neg()).unwrap().is_zero());
    }

    #[test]
    fn modulus_mismatch() {
        let a = NumberField::new(&ip(&[1, 1, 1])).generator();
        let b = NumberField::new(&ip(&[1, -1])).generator();
        assert_eq!(nf_add(&a, &b), Err(Error::ModulusMismatch));
        assert_eq!(nf_mul(&a, &b), Err(Error::ModulusMismatch));
    }

    #[test]
    fn same_modulus_from_separate_constructions_is_compatible() {
        let a = NumberField::new(&ip(&[1, 1, 1])).generator();
        let b = NumberField::new(&ip(&[2, 2, 2])).generator();
        assert!(nf_add(&a, &b).is_ok());
    }

    #[test]
    fn inverse_examples() {
        let k = NumberField::new(&ip(&[1, 1, 1]));
        assert!(nf_inv(&k.one()).unwrap().is_one());
        assert_eq!(nf_inv(&k.generator()).unwrap(), k.from_int_poly(&ip(&[-1, -1])));
        let k1 = NumberField::new(&ip(&[1, -1]));
        assert!(nf_inv(&k1.generator()).unwrap().is_one());
        assert_eq!(nf_inv(&k.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn zero_divisor_is_surfaced() {
        // (u−1)(u+1) is reducible: u−1 has no inverse
        let k = NumberField::new(&ip(&[-1, 0, 1]));
        assert_eq!(nf_inv(&k.from_int_poly(&ip(&[-1, 1]))), Err(Error::ZeroDivisor));
    }

    #[test]
    fn generator_satisfies_riley() {
        for q in [-3, -2, -1, 1, 2, 3] {
            let phi = riley(q).unwrap();
            let k = NumberField::new(&phi);
            assert!(k.generator().eval_poly(&phi).is_zero(), "q = {q}");
        }
    }

    fn element_of(k: NumberField) -> impl Strategy<Value = AlgebraicNumber> {
        prop::collection::vec(-9i64..=9, 0..6).prop_map(move |c| k.from_int_poly(&IntPolynomial::from_i64s(&c)))
    }

    fn field_and_elems() -> impl Strategy<Value = (AlgebraicNumber, AlgebraicNumber, AlgebraicNumber)> {
        prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]).prop_flat_map(|q| {
            let k = NumberField::new(&riley(q).unwrap());
            (element_of(k.clone()), element_of(k.clone()), element_of(k))
        })
    }

    proptest! {
        #[test]
        fn field_axioms((x, y, z) in field_and_elems()) {
            let xy = nf_mul(&x, &y).unwrap();
            prop_assert_eq!(nf_mul(&xy, &z).unwrap(), nf_mul(&x, &nf_mul(&y, &z).unwrap()).unwrap());
            prop_assert_eq!(&xy, &nf_mul(&y, &x).unwrap());
            let lhs = nf_mul(&x, &nf_add(&y, &z).unwrap()).unwrap();
            let rhs = nf_add(&xy, &nf_mul(&x, &z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            if !x.is_zero() {
                let inv = nf_inv(&x).unwrap();
                prop_assert!(nf_mul(&x, &inv).unwrap().is_one());
            }
        }
    }
}
