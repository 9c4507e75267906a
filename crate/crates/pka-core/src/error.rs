//! Error type shared by all modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::hom::StructKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Tables are not total/symmetric/consistent as the structure requires.
    Malformed(String),
    /// A sum was requested for elements (or a family) that is not summable.
    UndefinedSum(Vec<usize>),
    /// The derived star `Σ(bⁿ)` is undefined for the listed elements.
    UndefinedStar(Vec<usize>),
    /// A carrier or enumeration exceeded the configured bound.
    CarrierOverflow { size: usize, bound: usize },
    /// A star fixpoint left the finite string universe.
    StarDivergence(String),
    /// A completion precondition failed: the host is not star-continuous.
    NotStarContinuous,
    /// A completion precondition failed: the host is not total.
    NotTotal,
    /// The host partially additive semiring failed verification.
    NotPs,
    /// A string set is not functional.
    NotFunctional,
    /// A map required to be a homomorphism is not one.
    NotAHomomorphism(String),
    /// Structure kinds do not match the requested operation.
    KindMismatch { expected: StructKind, found: StructKind },
    /// A search exceeded its budget.
    SearchBudgetExceeded { budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(msg) => write!(f, "malformed algebra: {msg}"),
            Error::UndefinedSum(items) => write!(f, "undefined sum of elements {items:?}"),
            Error::UndefinedStar(items) => {
                write!(f, "derived star undefined for elements {items:?}")
            }
            Error::CarrierOverflow { size, bound } => {
                write!(f, "carrier of size {size} exceeds bound {bound}")
            }
            Error::StarDivergence(msg) => write!(f, "star iteration diverges: {msg}"),
            Error::NotStarContinuous => write!(f, "host algebra is not star-continuous"),
            Error::NotTotal => write!(f, "host algebra does not have a total sum"),
            Error::NotPs => write!(f, "host is not a partially additive idempotent semiring"),
            Error::NotFunctional => write!(f, "string set is not functional"),
            Error::NotAHomomorphism(msg) => write!(f, "not a homomorphism: {msg}"),
            Error::KindMismatch { expected, found } => {
                write!(f, "kind mismatch: expected {expected}, found {found}")
            }
            Error::SearchBudgetExceeded { budget } => {
                write!(f, "search budget of {budget} candidates exceeded")
            }
        }
    }
}
