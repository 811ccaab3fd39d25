//! Entanglement-assisted quantum error-correcting codes (EAQECCs) built from
//! classical linear codes.
//!
//! An EAQECC `[[n,k;c]]` encodes `k` logical qubits into `n` physical qubits
//! with the help of `s` ancillas and `c` ebits pre-shared between sender and
//! receiver. Unlike a standard stabilizer code, the generating set may be
//! *noncommuting*: the symplectic Gram-Schmidt procedure splits it into `c`
//! anticommuting generator pairs (each resolved by one ebit) and `s` commuting
//! isotropic generators.
//!
//! The crate covers the full pipeline:
//!
//! - [`pauli`] — bit-packed symplectic representation of Pauli operators and
//!   GF(2) linear algebra,
//! - [`gf4`] — GF(4) arithmetic, the GF(4)-to-Pauli map, and entanglement
//!   rank formulas,
//! - [`sgs`] — the symplectic Gram-Schmidt decomposition into pairs and
//!   isotropic generators,
//! - [`code`] — assembling [`EaqeccCode`] objects from classical inputs,
//!   augmenting with receiver qubits, and brute-force distance,
//! - [`decoder`] — syndrome tables, coset-leader decoding, and Monte Carlo
//!   simulation over Pauli channels,
//! - [`catalytic`] — parameter arithmetic for code composition and
//!   bootstrapping,
//! - [`cli`] — the `eaqecc` command-line front-end and its file formats.
//!
//! # Quick start
//!
//! ```
//! use eaqecc::gf4::Gf4Matrix;
//! use eaqecc::code::EaqeccCode;
//! use eaqecc::DistanceResult;
//!
//! // A [4,2,3] quaternary classical code that is not dual-containing.
//! let h4 = Gf4Matrix::parse("1 w 1 0\n1 1 0 1").unwrap();
//! let code = EaqeccCode::from_gf4(&h4).unwrap();
//! assert_eq!((code.n(), code.k(), code.c(), code.s()), (4, 1, 1, 2));
//! assert_eq!(code.distance(3), DistanceResult::Found(3));
//! ```

pub mod catalytic;
pub mod cli;
pub mod code;
pub mod decoder;
pub mod gf4;
pub mod pauli;
pub mod report;
pub mod sgs;

mod bits;

pub use code::{augment, CodeParams, EaqeccCode};
pub use decoder::{
    build_syndrome_table, correctable_set_check, is_correction_successful, monte_carlo,
    syndrome_of, PauliChannel, SimReport, Syndrome, SyndromeTable,
};
pub use gf4::{ebit_count_css, ebit_count_gf4, Gf4, Gf4Matrix};
pub use pauli::{BinMatrix, CheckMatrix, RowSpace, SympVector};
pub use sgs::{decompose, group_equal, Decomposition, StandardForm, SympPair};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two operands act on different numbers of qubits.
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    /// A matrix or vector has an unexpected shape.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A character that is not one of `I`, `X`, `Y`, `Z`.
    #[error("invalid Pauli character {found:?} at position {position}")]
    PauliChar { found: char, position: usize },

    /// A malformed line in one of the text formats.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A set of generators violates the standard-form commutation relations.
    #[error("invalid standard form: {0}")]
    InvalidForm(String),

    /// A code-composition precondition failed.
    #[error("composition constraint violated: {0}")]
    Composition(String),

    /// Channel probabilities outside `[0,1]` or summing past 1.
    #[error("invalid channel probabilities: {0}")]
    Probability(String),

    /// An argument outside the operation's domain.
    #[error("{0}")]
    Domain(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a bounded minimum-weight search.
///
/// A miss is an explicit value, not an error: the search was exhaustive up to
/// the stated weight and found nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceResult {
    /// Minimum weight found.
    Found(usize),
    /// No hit at any weight up to and including the stated bound.
    ExceedsMaxWeight(usize),
}

impl std::fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceResult::Found(d) => write!(f, "{d}"),
            DistanceResult::ExceedsMaxWeight(_) => write!(f, "exceeds_max_weight"),
        }
    }
}
