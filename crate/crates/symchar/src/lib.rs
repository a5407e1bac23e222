//! Exact-arithmetic symmetric functions over the rationals, together with two
//! inhomogeneous character bases: the induced trivial character basis `ht` and
//! the irreducible character basis `st`.
//!
//! Evaluating `ht[λ]` at the eigenvalues of a permutation matrix of cycle type
//! `μ` gives the character of the trivial module induced from a Young subgroup;
//! evaluating `st[λ]` gives the irreducible symmetric group character indexed
//! by `(|μ|−|λ|, λ)`.  Outer products in the `st` basis have the stable
//! (reduced) Kronecker coefficients as structure constants.
//!
//! The crate is organized around five areas:
//!
//! * [`combinatorics`] — partitions, multisets, multiset partitions, border
//!   strips, multiset/set-valued tableaux and row fillings.  Every algebraic
//!   coefficient in the crate has an independent enumeration oracle here.
//! * [`symfunc`] — the classical ring Sym over exact rationals: sparse
//!   expressions in the `m`, `p`, `h`, `e`, `s` bases, conversions, Hall inner
//!   product, outer and Kronecker products, Kostka data.
//! * [`charbases`] — the `ht`/`st` bases: transitions with the classical
//!   bases, evaluation at permutation-matrix eigenvalues, Frobenius images,
//!   and products with stable Kronecker structure constants.
//! * [`charpoly`] — character polynomials and the falling-factorial power-sum
//!   families, with the alternative power-sum expansions of `st` and `ht`.
//! * [`partition_algebra`] — the Murnaghan–Nakayama rule for `p_k * st[λ]`
//!   and partition-algebra character values.
//!
//! The [`cli`] module backs the `symchar` binary; all coefficients are exact
//! `BigRational`s and no floating point is used anywhere.

pub mod charbases;
pub mod charpoly;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod partition_algebra;
pub mod symfunc;

pub use combinatorics::multiset::{Multiset, MultisetPartition, SetPartitionOfMultiset};
pub use combinatorics::partition::Partition;
pub use error::Error;
pub use symfunc::expr::{BasisTag, Rational, SymExpr};

/// Crate version reported in CLI/JSON metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
