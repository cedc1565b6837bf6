//! Algebraic core: finite fields, polynomials, Gröbner bases, vanishing
//! ideals of point sets, evaluation codes and their generalized Hamming
//! weights, and the footprint, minimum distance and Vasconcelos functions.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod codes;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod gf;
pub mod gmdfun;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod poly;

pub use codes::{EvaluationCode, SubcodeBasis};
pub use error::{Error, Result};
pub use geometry::{Family, Point, PointSet};
pub use gf::{FieldElement, FieldSpec};
pub use groebner::GroebnerBasis;
pub use ideal::MonomialIdeal;
pub use poly::{Monomial, MonomialOrder, OrderKind, Polynomial};
