//! Schubert polynomials through prism tableaux, reduced pipe dreams and
//! divided differences, with exhaustive checkers tying the three together.
//!
//! The polynomial layer is generic over its coefficient ring through
//! [`poly::Coefficient`]; everything combinatorial uses the machine-integer
//! alias [`IntPolynomial`]. [`BigPolynomial`] is available when coefficients
//! might outgrow `i64`.

pub mod multiplus;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod prism;
pub mod srcomplex;
pub mod verify;

pub use multiplus::{MultiPlus, MultiPlusDiagram};
pub use perm::{
    bigrassmannian_for, bruhat_leq, Cell, EssentialDatum, PermError, Permutation, Rect, Shape,
};
pub use pipedream::PlusDiagram;
pub use poly::{schubert, schur_via_ssyt, stanley_truncation, Monomial, Polynomial};
pub use prism::{PrismModel, PrismTableau};

/// Polynomials over `i64`; arithmetic panics rather than wrapping on overflow.
pub type IntPolynomial = Polynomial<i64>;

/// Polynomials over arbitrary-precision integers.
pub type BigPolynomial = Polynomial<num_bigint::BigInt>;
