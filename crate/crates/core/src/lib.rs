#![no_std]
//! Exact multigraded apolarity over products of projective spaces.
//!
//! Polynomials live in the Cox ring `S` (variables `y0..yn` for a single
//! block, `a1.., b1.., c1..` otherwise); forms to be decomposed live in the
//! dual ring `T` (variables `x0..xn`, or `A1.., B1.., C1..`), on which `S`
//! acts by differentiation.

extern crate alloc;

pub mod apolarity;
pub mod border;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod homological;
pub mod linalg;
pub mod notation;
pub mod order;
pub mod rational;
pub mod ring;

pub use apolarity::DualForm;
pub use error::{Error, Result};
pub use order::{MonomialOrder, OrderKind};
pub use rational::Q;
pub use ring::{GradedRing, Ideal, Monomial, Multidegree, Polynomial};
