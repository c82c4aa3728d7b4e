//! Exact-arithmetic toolkit for trades in real and Butson-type complex
//! Hadamard matrices.
//!
//! A *trade* in a complex Hadamard matrix is a set of entries that can all be
//! changed to produce a different complex Hadamard matrix of the same order.
//! This crate builds Hadamard and weighing matrices with root-of-unity
//! entries, verifies them exactly (no floating point in any verdict),
//! represents trades and the switches that realise them, and runs exhaustive
//! searches that certify minimal trade sizes, minimum support of column
//! combinations, and maximal rank-one submatrix areas at small orders.
//!
//! Module map:
//!
//! - [`cyclotomic`] — roots of unity, the fields Q(ζ_m), vanishing-sum
//!   decisions and exact matrix rank;
//! - [`matrix`] — the [`matrix::UnitMatrix`] container, Hadamard/weighing
//!   verification, dephasing, equivalence operations, Kronecker products, and
//!   the matrix text formats;
//! - [`constructions`] — named generators (Sylvester, Fourier, Paley I, the
//!   printed order-8 Paley matrix, Petrescu's 7×7, a woven W(6,4));
//! - [`trades`] — trades, rectangular blocks, switching, the row-restriction
//!   orthogonality tests, rank-one block enumeration, trade profiles, and the
//!   GF(2) span of rectangular trades;
//! - [`search`] — exhaustive oracles with machine-parsable certificates.

pub mod constructions;
pub mod cyclotomic;
mod gf2;
pub mod matrix;
pub mod search;
pub mod trades;
mod util;

use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero in Q(zeta_{m})")]
    DivisionByZero { m: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("{what} = {got} exceeds the supported limit {limit}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("invalid kind: {0}")]
    InvalidKind(String),
    #[error("matrix is not skew (H + H^T != 2I)")]
    NotSkew,
    #[error("not a trade: {0}")]
    TradeViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Built-in size limits. Front ends may lower them (never raise them).
pub mod limits {
    /// Largest root-of-unity modulus accepted anywhere.
    pub const MAX_MODULUS: usize = 360;
    /// Largest matrix order accepted by the container and constructors.
    pub const MAX_MATRIX_ORDER: usize = 64;
    /// Largest order for the exhaustive searches.
    pub const MAX_SEARCH_ORDER: usize = 12;
    /// Largest order for the GF(2) trade-space computation.
    pub const MAX_TRADE_SPACE_ORDER: usize = 16;
    /// Largest column-set size for the minimum-support search.
    pub const MAX_SUPPORT_COLS: usize = 4;
    /// Largest Fourier matrix order.
    pub const MAX_FOURIER_ORDER: usize = 24;
    /// Largest Sylvester exponent (order 2^k).
    pub const MAX_SYLVESTER_K: usize = 6;
    /// Largest scalar order in the Petrescu sweep.
    pub const MAX_SWEEP_ORDER: usize = 24;
}
