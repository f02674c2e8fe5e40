//! The four permutation-function families: evaluators, permutation
//! predicates and explicit inverses.

use thiserror::Error;

use crate::gf::GfError;
use crate::numtheory::NumTheoryError;
use crate::perm::PermError;

pub mod dickson;
pub mod mobius;
pub mod monomial;
pub mod redei;

pub use dickson::{DicksonA, DicksonParams};
pub use mobius::MobiusParams;
pub use monomial::MonomialParams;
pub use redei::RedeiParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// The family's permutation condition fails; the payload names it.
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("invalid Möbius parameters: {0}")]
    InvalidMobius(String),
    #[error("pole: H_n vanishes at code {code}")]
    PoleEncountered { code: u32 },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
}
