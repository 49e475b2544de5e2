//! Independent route to the twisted Alexander polynomial: Fox calculus on the
//! presentation `⟨x, y | w^q x w^{−q} y^{−1}⟩` followed by Wada's determinant
//! quotient, over any [`crate::ring::CommRing`].

mod tpoly;
mod wada;
mod word;

pub use tpoly::{Matrix2, TMatrix, TPoly};
pub use wada::{
    closed_form_in_field, compare_with_closed_form, fundamental_identity, relation_check, relation_check_nf,
    wada_denominator, wada_polynomial, OracleComparison, Representation,
};
pub use word::{
    commutator_w, fox_derivative, relator, relator_letters, FreeWord, Generator, GroupRingElement, Letter, X, X_INV, Y,
    Y_INV,
};
