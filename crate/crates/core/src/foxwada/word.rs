use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X,
    Y,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::X => "x",
            Generator::Y => "y",
        })
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Generator,
    /// `+1` or `−1`.
    pub exp: i8,
}

impl Letter {
    pub const fn new(gen: Generator, exp: i8) -> Self {
        Self { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Self::new(self.gen, -self.exp)
    }
}

pub const X: Letter = Letter::new(Generator::X, 1);
pub const X_INV: Letter = Letter::new(Generator::X, -1);
pub const Y: Letter = Letter::new(Generator::Y, 1);
pub const Y_INV: Letter = Letter::new(Generator::Y, -1);

/// A freely reduced word in `x^{±1}, y^{±1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Freely reduces the given letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let letters: Vec<Letter> = (0..k.unsigned_abs()).flat_map(|_| base.letters.iter().copied()).collect();
        FreeWord::from_letters(letters)
    }

    /// Total exponent of `g`, i.e. the image in the abelianization.
    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.letters.iter().filter(|l| l.gen == g).map(|l| i64::from(l.exp)).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|l| if l.exp < 0 { format!("{}^-1", l.gen) } else { l.gen.to_string() }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `w = [y, x⁻¹] = y x⁻¹ y⁻¹ x` with `[a,b] = a b a⁻¹ b⁻¹`.
pub fn commutator_w() -> FreeWord {
    FreeWord::from_letters([Y, X_INV, Y_INV, X])
}

/// The relator `w^q x w^{−q} y^{−1}` as written, before free reduction.
pub fn relator_letters(q: i64) -> Result<Vec<Letter>> {
    if q == 0 {
        return Err(Error::InvalidQ(q));
    }
    let w = commutator_w();
    let (fwd, back) = if q > 0 { (w.clone(), w.inverse()) } else { (w.inverse(), w) };
    let n = q.unsigned_abs();
    let mut letters = Vec::new();
    for _ in 0..n {
        letters.extend_from_slice(fwd.letters());
    }
    letters.push(X);
    for _ in 0..n {
        letters.extend_from_slice(back.letters());
    }
    letters.push(Y_INV);
    Ok(letters)
}

/// Freely reduced relator of `G(J(2,2q)) = ⟨x, y | w^q x = y w^q⟩`.
pub fn relator(q: i64) -> Result<FreeWord> {
    Ok(FreeWord::from_letters(relator_letters(q)?))
}

/// A finite `Z`-linear combination of words; zero coefficients are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut e = Self::zero();
        e.add_term(1, w);
        e
    }

    pub fn add_term(&mut self, coeff: i64, w: FreeWord) {
        let c = self.terms.entry(w).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(c, w.clone());
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, w: &FreeWord) -> Self {
        let mut out = Self::zero();
        for (v, c) in self.terms() {
            out.add_term(c, w.concat(v));
        }
        out
    }
}

/// Fox derivative `∂r/∂g` from `∂(uv) = ∂u + u·∂v`, `∂g/∂g = 1`, `∂g⁻¹/∂g = −g⁻¹`.
pub fn fox_derivative(r: &FreeWord, g: Generator) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix: Vec<Letter> = Vec::with_capacity(r.len());
    for &l in r.letters() {
        if l.gen == g {
            if l.exp > 0 {
                out.add_term(1, FreeWord::from_letters(prefix.iter().copied()));
            } else {
                let with_inv = prefix.iter().copied().chain(std::iter::once(l));
                out.add_term(-1, FreeWord::from_letters(with_inv));
            }
        }
        prefix.push(l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_q1_reduction() {
        let r = relator(1).unwrap();
        assert_eq!(r, FreeWord::from_letters([Y, X_INV, Y_INV, X, Y, X, Y_INV, Y_INV]));
        assert_eq!(r.to_string(), "y x^-1 y^-1 x y x y^-1 y^-1");
        assert!(r.is_reduced());
    }

    #[test]
    fn relator_exponent_sums_and_length() {
        for q in (-8i64..=8).filter(|&q| q != 0) {
            let r = relator(q).unwrap();
            assert_eq!(r.exponent_sum(Generator::X), 1, "q = {q}");
            assert_eq!(r.exponent_sum(Generator::Y), -1, "q = {q}");
            assert_eq!(relator_letters(q).unwrap().len() as i64, 8 * q.abs() + 2);
            assert!(r.is_reduced());
        }
        assert_eq!(relator(0), Err(Error::InvalidQ(0)));
    }

    #[test]
    fn fox_derivative_examples() {
        let one = GroupRingElement::from_word(FreeWord::empty());
        assert_eq!(fox_derivative(&FreeWord::from_letters([X]), Generator::X), one);

        let mut minus_xinv = GroupRingElement::zero();
        minus_xinv.add_term(-1, FreeWord::from_letters([X_INV]));
        assert_eq!(fox_derivative(&FreeWord::from_letters([X_INV]), Generator::X), minus_xinv);

        let mut expected = GroupRingElement::zero();
        expected.add_term(-1, FreeWord::from_letters([Y, X_INV]));
        expected.add_term(1, FreeWord::from_letters([Y, X_INV, Y_INV]));
        assert_eq!(fox_derivative(&commutator_w(), Generator::X), expected);
    }

    #[test]
    fn group_ring_cancels_opposite_terms() {
        let mut e = GroupRingElement::zero();
        e.add_term(1, commutator_w());
        e.add_term(-1, commutator_w());
        assert!(e.is_zero());
    }

    #[test]
    fn free_reduction_and_inverse() {
        let w = commutator_w();
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(w.pow(-2), w.inverse().pow(2));
        assert_eq!(w.pow(0), FreeWord::empty());
    }
}
