use crate::error::{Error, Result};
use crate::numfield::{AlgebraicNumber, NumberField};
use crate::ring::CommRing;
use crate::twist::{riley, twisted_alexander};

use super::tpoly::{Matrix2, TMatrix, TPoly};
use super::word::{commutator_w, fox_derivative, relator, FreeWord, Generator, GroupRingElement, X, Y};

/// `ρ ⊗ α` on the free group: each generator maps to `t·ρ(g)`.
pub struct Representation<'r, R: CommRing> {
    ring: &'r R,
    x: Matrix2<R::Elem>,
    y: Matrix2<R::Elem>,
    x_inv: Matrix2<R::Elem>,
    y_inv: Matrix2<R::Elem>,
}

impl<'r, R: CommRing> Representation<'r, R> {
    pub fn new(ring: &'r R, rho_x: Matrix2<R::Elem>, rho_y: Matrix2<R::Elem>) -> Result<Self> {
        let x_inv = Matrix2::inverse(ring, &rho_x).ok_or(Error::SingularGenerator)?;
        let y_inv = Matrix2::inverse(ring, &rho_y).ok_or(Error::SingularGenerator)?;
        Ok(Self { ring, x: rho_x, y: rho_y, x_inv, y_inv })
    }

    /// `ρ(x) = [[1,1],[0,1]]`, `ρ(y) = [[1,0],[−u,1]]`.
    pub fn parabolic(ring: &'r R, u: &R::Elem) -> Result<Self> {
        let rho_x = Matrix2::new(ring.one(), ring.one(), ring.zero(), ring.one());
        let rho_y = Matrix2::new(ring.one(), ring.zero(), ring.neg(u), ring.one());
        Self::new(ring, rho_x, rho_y)
    }

    pub fn ring(&self) -> &R {
        self.ring
    }

    pub fn rho(&self, g: Generator) -> &Matrix2<R::Elem> {
        match g {
            Generator::X => &self.x,
            Generator::Y => &self.y,
        }
    }

    /// `ρ(word)` without the `t` factor.
    pub fn image(&self, w: &FreeWord) -> Matrix2<R::Elem> {
        w.letters().iter().fold(Matrix2::identity(self.ring), |acc, l| {
            let m = match (l.gen, l.exp > 0) {
                (Generator::X, true) => &self.x,
                (Generator::X, false) => &self.x_inv,
                (Generator::Y, true) => &self.y,
                (Generator::Y, false) => &self.y_inv,
            };
            Matrix2::mul(self.ring, &acc, m)
        })
    }

    /// `Φ(word) = t^{exponent sum}·ρ(word)`.
    pub fn eval_word(&self, w: &FreeWord) -> TMatrix<R::Elem> {
        let k = w.exponent_sum(Generator::X) + w.exponent_sum(Generator::Y);
        TMatrix::monomial_matrix(self.ring, &self.image(w), k)
    }

    /// `Φ` extended linearly to the group ring.
    pub fn eval_element(&self, e: &GroupRingElement) -> TMatrix<R::Elem> {
        e.terms().fold(TMatrix::tzero(), |acc, (w, c)| {
            let m = self.eval_word(w);
            let c = self.ring.integer(c);
            let scaled = Matrix2::new(
                TPoly::scale(self.ring, &m.m[0][0], &c),
                TPoly::scale(self.ring, &m.m[0][1], &c),
                TPoly::scale(self.ring, &m.m[1][0], &c),
                TPoly::scale(self.ring, &m.m[1][1], &c),
            );
            TMatrix::tadd(self.ring, &acc, &scaled)
        })
    }

    /// `Φ(g) − I`.
    pub fn generator_minus_identity(&self, g: Generator) -> TMatrix<R::Elem> {
        let letter = match g {
            Generator::X => X,
            Generator::Y => Y,
        };
        let phi = self.eval_word(&FreeWord::from_letters([letter]));
        TMatrix::tsub(self.ring, &phi, &TMatrix::tidentity(self.ring))
    }
}

/// Whether `ρ(w^q x) = ρ(y w^q)` at the given `u`.
pub fn relation_check<R: CommRing>(ring: &R, q: i64, u: &R::Elem) -> Result<bool> {
    if q == 0 {
        return Err(Error::InvalidQ(q));
    }
    let rep = Representation::parabolic(ring, u)?;
    let wq = commutator_w().pow(q);
    let lhs = rep.image(&wq.concat(&FreeWord::from_letters([X])));
    let rhs = rep.image(&FreeWord::from_letters([Y]).concat(&wq));
    Ok(Matrix2::eq(ring, &lhs, &rhs))
}

/// [`relation_check`] in the field of `u`.
pub fn relation_check_nf(q: i64, u: &AlgebraicNumber) -> Result<bool> {
    let field = NumberField::from_monic_modulus(u.modulus().clone());
    relation_check(&field, q, u)
}

/// `Φ(∂r/∂x)(Φ(x)−I) + Φ(∂r/∂y)(Φ(y)−I)`; vanishes whenever `ρ(r) = I`.
pub fn fundamental_identity<R: CommRing>(ring: &R, q: i64, u: &R::Elem) -> Result<TMatrix<R::Elem>> {
    let r = relator(q)?;
    let rep = Representation::parabolic(ring, u)?;
    let dx = rep.eval_element(&fox_derivative(&r, Generator::X));
    let dy = rep.eval_element(&fox_derivative(&r, Generator::Y));
    let lhs = TMatrix::tadd(
        ring,
        &TMatrix::tmul(ring, &dx, &rep.generator_minus_identity(Generator::X)),
        &TMatrix::tmul(ring, &dy, &rep.generator_minus_identity(Generator::Y)),
    );
    // Φ(r) − I
    let phi_r = TMatrix::tsub(ring, &rep.eval_word(&r), &TMatrix::tidentity(ring));
    Ok(TMatrix::tsub(ring, &lhs, &phi_r))
}

/// Wada's invariant `det Φ(∂r/∂x) / det Φ(y − 1)`, shifted to start at `t⁰`.
pub fn wada_polynomial<R: CommRing>(ring: &R, q: i64, u: &R::Elem) -> Result<TPoly<R::Elem>> {
    let r = relator(q)?;
    let rep = Representation::parabolic(ring, u)?;
    let numer = TMatrix::tdet(ring, &rep.eval_element(&fox_derivative(&r, Generator::X)));
    let denom = wada_denominator(&rep);
    let quot = TPoly::divexact(ring, &numer, &denom)?;
    Ok(quot.shift(-quot.offset()))
}

/// `det Φ(y − 1) = det(t·ρ(y) − I)`.
pub fn wada_denominator<R: CommRing>(rep: &Representation<'_, R>) -> TPoly<R::Elem> {
    TMatrix::tdet(rep.ring(), &rep.generator_minus_identity(Generator::Y))
}

/// The closed form `γ + δt + γt²` mapped into `K_q`.
pub fn closed_form_in_field(field: &NumberField, q: i64) -> Result<TPoly<AlgebraicNumber>> {
    let ta = twisted_alexander(q)?;
    let coeffs = ta.coefficients().iter().map(|p| field.from_int_poly(p)).collect();
    Ok(TPoly::new(field, 0, coeffs))
}

/// Outcome of comparing Wada's quotient against the closed form in `K_q`.
#[derive(Clone, Debug)]
pub struct OracleComparison {
    pub wada: TPoly<AlgebraicNumber>,
    pub closed_form: TPoly<AlgebraicNumber>,
    pub agrees: bool,
}

/// Computes Wada's invariant over `Q[u]/(φ_q)` and compares it with the
/// closed form up to `±t^k`.
pub fn compare_with_closed_form(q: i64) -> Result<OracleComparison> {
    let field = NumberField::new(&riley(q)?);
    let u = field.generator();
    let wada = wada_polynomial(&field, q, &u)?;
    let closed_form = closed_form_in_field(&field, q)?;
    let agrees = TPoly::eq_up_to_unit(&field, &wada, &closed_form);
    Ok(OracleComparison { wada, closed_form, agrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foxwada::word::Y_INV;
    use crate::poly::IntPolynomial;
    use crate::ring::ComplexRing;
    use num_complex::Complex64;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(&IntPolynomial::from_i64s(c))
    }

    #[test]
    fn evaluate_examples() {
        let k = NumberField::new(&riley(2).unwrap());
        let u = k.generator();
        let rep = Representation::parabolic(&k, &u).unwrap();

        let x = rep.eval_word(&FreeWord::from_letters([X]));
        assert_eq!(x.m[0][1].offset(), 1);
        assert!(x.m[0][0].coeffs()[0].is_one() && x.m[0][1].coeffs()[0].is_one());
        assert!(x.m[1][0].is_zero());

        let e = rep.eval_word(&FreeWord::empty());
        assert!(TMatrix::is_tzero(&TMatrix::tsub(&k, &e, &TMatrix::tidentity(&k))));

        let yi = rep.eval_word(&FreeWord::from_letters([Y_INV]));
        assert_eq!(yi.m[1][0].offset(), -1);
        assert_eq!(yi.m[1][0].coeffs()[0], u);
    }

    #[test]
    fn singular_generator_rejected() {
        let ring = ComplexRing::default();
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let sing = Matrix2::new(one, one, one, one);
        let id = Matrix2::new(one, z, z, one);
        assert!(matches!(Representation::new(&ring, sing, id), Err(Error::SingularGenerator)));
    }

    #[test]
    fn relation_check_examples() {
        let k1 = field(&[1, -1]);
        assert!(relation_check(&k1, 1, &k1.generator()).unwrap());
        let km1 = field(&[1, 1, 1]);
        assert!(relation_check(&km1, -1, &km1.generator()).unwrap());
        let wrong = field(&[1, -2]);
        assert!(!relation_check(&wrong, 1, &wrong.generator()).unwrap());
        assert!(relation_check_nf(-1, &km1.generator()).unwrap());
        assert_eq!(relation_check(&k1, 0, &k1.generator()), Err(Error::InvalidQ(0)));
    }

    #[test]
    fn wada_trefoil_and_figure_eight() {
        for (q, expected) in [(1, [1, 0, 1]), (-1, [1, -4, 1])] {
            let k = NumberField::new(&riley(q).unwrap());
            let w = wada_polynomial(&k, q, &k.generator()).unwrap();
            let target = TPoly::new(&k, 0, expected.iter().map(|&c| k.integer(c)).collect());
            assert!(TPoly::eq_up_to_unit(&k, &w, &target), "q = {q}: {w:?}");
        }
    }

    #[test]
    fn wada_q2_matches_remark_data() {
        let cmp = compare_with_closed_form(2).unwrap();
        assert!(cmp.agrees);
        let k = NumberField::new(&riley(2).unwrap());
        let gamma = k.from_int_poly(&IntPolynomial::from_i64s(&[4, 0, 1]));
        assert_eq!(cmp.wada.coeffs()[0], gamma);
        assert_eq!(cmp.wada.coeffs()[1], k.integer(-4));
    }

    #[test]
    fn denominator_is_t_minus_one_squared() {
        for q in [-3, -1, 1, 2, 4] {
            let k = NumberField::new(&riley(q).unwrap());
            let rep = Representation::parabolic(&k, &k.generator()).unwrap();
            let d = wada_denominator(&rep);
            let target = TPoly::new(&k, 0, vec![k.integer(1), k.integer(-2), k.integer(1)]);
            assert!(TPoly::eq(&k, &d, &target));
        }
    }

    #[test]
    fn non_root_breaks_exact_division() {
        // u = 1/2 is not a root of φ₁ = 1 − u
        let k = field(&[1, -2]);
        assert_eq!(wada_polynomial(&k, 1, &k.generator()).unwrap_err(), Error::NonExactDivision);
    }

    #[test]
    fn fox_product_rule_under_representation() {
        let k = NumberField::new(&riley(-2).unwrap());
        let rep = Representation::parabolic(&k, &k.generator()).unwrap();
        let words = [commutator_w(), relator(2).unwrap(), FreeWord::from_letters([Y_INV, X, X])];
        for a in &words {
            for b in &words {
                for g in [Generator::X, Generator::Y] {
                    let lhs = rep.eval_element(&fox_derivative(&a.concat(b), g));
                    let rhs_elem = fox_derivative(a, g).add(&fox_derivative(b, g).left_mul(a));
                    let rhs = rep.eval_element(&rhs_elem);
                    assert!(TMatrix::is_tzero(&TMatrix::tsub(&k, &lhs, &rhs)));
                }
            }
        }
    }

    #[test]
    fn complex_ring_wada_agrees_numerically() {
        let ring = ComplexRing { tol: 1e-7 };
        let roots = crate::numroots::find_roots(&riley(3).unwrap(), 1e-14).unwrap();
        for u in roots {
            let w = wada_polynomial(&ring, 3, &u).unwrap();
            let ta = twisted_alexander(3).unwrap();
            let target = TPoly::new(&ring, 0, ta.coefficients().iter().map(|p| p.eval_complex(u)).collect());
            assert!(TPoly::eq_up_to_unit(&ring, &w, &target), "u = {u}");
        }
    }
}
