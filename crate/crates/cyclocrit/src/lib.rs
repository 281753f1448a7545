//! Desk-scale arithmetic of the p-th cyclotomic field, centered on the
//! quantities that are computable by explicit congruences and determinants:
//!
//! - [`fp`] — prime contexts: primitive roots, power/index tables, inverses,
//!   multiplicative orders, Fermat quotients.
//! - [`bernoulli`] — even Bernoulli numbers mod p, irregular indices, and the
//!   Vandiver power-sum identity used as an independent cross-check.
//! - [`fppoly`] — dense polynomials over F_p; Mirimanoff polynomials
//!   `phi_m(T) = sum i^(m-1) T^i`, the low-degree Kummer polynomials, and the
//!   symmetric/twisted sum identities they satisfy.
//! - [`kummer`] — Jacobi-resolvent index sets I(d), the interval summation
//!   criteria they generate, the Bernoulli linkage, and the two ±1 matrices
//!   M_p and Delta_p with their rank and determinant invariants.
//! - [`classnum`] — the relative class number h⁻ by three independent integer
//!   determinants (sign matrix, Maillet, Masley), an exact CRT determinant
//!   engine, integer factorization, and subfield prime-divisor predicates.
//! - [`battery`] — criterion batteries for the first case of Fermat's Last
//!   Theorem: per-prime summation criteria, per-residue congruence batteries
//!   on a hypothetical t ≡ −x/y mod p, exponential determinants, and the
//!   common-root conjecture sweep.
//! - [`cli`] — the `cyclocrit` command-line frontend and fixture verifier.
//!
//! Residues are plain `u64` values kept in canonical form `0..p`. All
//! structures are immutable once built and safe to share across threads;
//! range sweeps parallelize with rayon and sort results after collection so
//! output never depends on thread count.
//!
//! ```
//! use cyclocrit::PrimeContext;
//!
//! let ctx = PrimeContext::new(37).unwrap();
//! let table = cyclocrit::bernoulli::bernoulli_even_mod_p(&ctx).unwrap();
//! assert_eq!(table.irregular_indices(), &[32]); // 37 | B_32: the first irregular prime
//! let h = cyclocrit::classnum::hminus_all(&ctx).unwrap();
//! assert_eq!(h.to_string(), "37");
//! ```

#![allow(clippy::manual_is_multiple_of)]

pub mod battery;
pub mod bernoulli;
pub mod classnum;
pub mod cli;
pub mod fp;
pub mod fppoly;
pub mod kummer;
mod linalg;
pub mod report;

pub use fp::PrimeContext;
pub use report::{CriterionReport, Verdict};

/// Error type shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The operation is defined only for a range this build does not cover.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Two routes that must agree did not; indicates a construction bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
