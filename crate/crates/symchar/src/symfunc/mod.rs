//! The classical ring Sym over exact rationals: sparse expressions in the
//! `m`, `p`, `h`, `e`, `s` bases with conversions, Hall inner product, outer
//! and Kronecker products, and Kostka data.

pub mod classical;
pub mod expr;
pub mod product;
pub mod transition;

pub use classical::{character_value, inverse_kostka, kostka, stable_kostka};
pub use expr::{BasisTag, Rational, SymExpr};
pub use product::{hall_inner, kronecker, outer};
pub use transition::convert;
