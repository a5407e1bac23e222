//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A sequence that is not weakly decreasing or contains a zero part.
    #[error("not a partition: {0}")]
    InvalidPartition(String),

    /// Kostka-style operations require indices of equal size.
    #[error("size mismatch: |lambda| = {lhs} but |mu| = {rhs}")]
    SizeMismatch { lhs: u32, rhs: u32 },

    /// Stable Kostka coefficients are defined for |lambda| <= |mu|.
    #[error("stable Kostka requires |lambda| <= |mu|: {lhs} > {rhs}")]
    StableSizeOrder { lhs: u32, rhs: u32 },

    /// Border strips and Murnaghan-Nakayama multiplication need a positive size.
    #[error("strip size must be positive")]
    ZeroStripSize,

    /// `symfunc::convert` handles the classical bases only.
    #[error("basis {0} is not a classical basis; use charbases::to_basis")]
    NonClassicalBasis(&'static str),

    /// Expression text failed to parse; `position` is a byte offset.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// An index size exceeded the configured expansion guard.
    #[error("degree {degree} exceeds the maximum allowed degree {max}")]
    DegreeLimit { degree: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
