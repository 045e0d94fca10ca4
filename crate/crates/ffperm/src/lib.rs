//! Permutation polynomials over finite fields at desk scale.
//!
//! The crate builds one ambient field `F_{p^D}` per problem instance and carves
//! every subfield out of it by Frobenius fixed points. On top of that it
//! provides:
//!
//! - [`field`]: field construction with a deterministic modulus rule, element
//!   arithmetic, Frobenius, relative trace/norm, subfield enumeration and a
//!   canonical element indexing.
//! - [`linearized`]: `p^t`-polynomials, Dickson matrices, permutation tests,
//!   trace kernels, and a subspace-inverse solver used as an independent
//!   oracle for the closed forms.
//! - [`binomial`]: the full classification of `x^{p^r} - cx` acting on trace
//!   kernels, with explicit compositional inverses for the full-field and
//!   kernel-only cases.
//! - [`complete`]: complete permutation polynomials built from a base map on
//!   the subfield, including a recursive multi-trace family.
//! - [`cpp_inverse`]: preimages and the closed-form compositional inverse of
//!   the complete mappings, as a three-branch step function.
//! - [`latin`]: Latin squares by the diagonal method and mutually orthogonal
//!   families.
//! - [`cyclotomic`] / [`bent`]: exact arithmetic in `Z[xi_p]` and bentness
//!   verification of Maiorana-McFarland vectorial functions by exact Walsh
//!   sums.
//! - [`report`]: machine-readable run reports for the CLI.
//!
//! All verification sweeps are exact; there are no floating-point tolerances
//! anywhere in the crate.

pub mod bent;
pub mod binomial;
pub mod complete;
pub mod cpp_inverse;
pub mod cyclotomic;
pub mod field;
pub mod latin;
pub mod linearized;
pub mod report;
pub(crate) mod zp;

pub use field::{FieldContext, FieldElement, SubfieldDescriptor};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("element does not belong to this field context")]
    ContextMismatch,
    #[error("index {0} out of range for a field with {1} elements")]
    IndexOutOfRange(u64, u128),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("not a complete mapping: {0}")]
    NotACompleteMapping(String),
    #[error("latin square orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("cyclotomic integers live over different primes")]
    PMismatch,
    #[error("domain of size {0} exceeds the exhaustive budget of {1}")]
    BudgetExceeded(u128, u64),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Element budget for exhaustive sweeps. Defaults to 2^20 and can be
/// overridden through the `FFPERM_BUDGET` environment variable.
pub fn exhaustive_budget() -> u64 {
    std::env::var("FFPERM_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1 << 20)
}
