//! Exact-arithmetic toolkit for the determinantal ideal generated by the
//! (n-2)-minors of a generic symmetric n x n matrix.
//!
//! The crate verifies, entirely over the rationals, that under a band-priority
//! reverse-lexicographic term order the (n-2)-minors form a Gröbner basis,
//! that the resulting initial ideal is the square-free Stanley-Reisner ideal
//! of an iterated cone over the boundary complex of a cyclic polytope, and
//! that dimension, multiplicity, regularity, h-vector and graded Betti
//! numbers all agree with their closed forms.
//!
//! Module map:
//! * [`variable`], [`monomial`], [`order`], [`polynomial`] — sparse exact
//!   multivariate algebra with the custom term order baked into the monomial
//!   rank layout,
//! * [`minors`] — the generic symmetric matrix, exact minors, band-monomial
//!   leading-term constructions and witness scans,
//! * [`groebner`] — S-pair verification and initial-ideal extraction,
//! * [`complexes`] — matching complexes, Gale evenness, Stanley-Reisner
//!   translation, f/h-vectors and sphere checks,
//! * [`homology`] — exact reduced simplicial homology over the rationals,
//! * [`betti`] — closed-form invariants and Betti tables via restriction
//!   homology,
//! * [`verify`] — the end-to-end verification pipeline and the leading-term
//!   lemma suite.

pub mod betti;
pub mod complexes;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod minors;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod variable;
pub mod verify;

pub use error::{Error, Result};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use polynomial::Polynomial;
pub use variable::{VarClass, Variable};
