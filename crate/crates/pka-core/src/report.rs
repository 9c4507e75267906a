//! Verification reports: lists of law violations with witnesses.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The law a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    /// One of the sixteen defining axioms, by number.
    Axiom(u8),
    /// Upper-bound half of star-continuity: `a·bⁿ·c ≤ a·b*·c`.
    StarUpper,
    /// Leastness half of star-continuity: bounds of all `a·bⁿ·c` bound `a·b*·c`.
    StarLeast,
    /// Every pair must be summable (total Kleene algebras).
    Totality,
    /// `Σ{x} = x`.
    UnarySum,
    /// Summability and value must respect partitions into blocks.
    PartitionAssociativity,
    /// `y·ΣA = Σ(y·A)` and `(ΣA)·z = Σ(A·z)` with summability preserved.
    Distributivity,
    /// `a·0 = 0·a = 0`.
    Annihilation,
    /// `·` is associative.
    MulAssociativity,
    /// `1·x = x·1 = x`.
    MulIdentity,
    /// Every subset must be summable (closed semirings).
    SumTotality,
    /// A homomorphism preservation clause.
    HomPreservation,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Axiom(n) => write!(f, "axiom ({n})"),
            Law::StarUpper => write!(f, "star-continuity (upper bound)"),
            Law::StarLeast => write!(f, "star-continuity (leastness)"),
            Law::Totality => write!(f, "totality of +"),
            Law::UnarySum => write!(f, "unary sum"),
            Law::PartitionAssociativity => write!(f, "partition-associativity"),
            Law::Distributivity => write!(f, "distributivity over Σ"),
            Law::Annihilation => write!(f, "annihilation"),
            Law::MulAssociativity => write!(f, "associativity of ·"),
            Law::MulIdentity => write!(f, "identity of ·"),
            Law::SumTotality => write!(f, "totality of Σ"),
            Law::HomPreservation => write!(f, "homomorphism preservation"),
        }
    }
}

/// A single violation: the law, the witnessing elements, and a rendered message.
#[derive(Clone, Debug)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
    pub message: String,
}

/// Outcome of a verification pass. `pass()` holds iff no violations were found.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl AxiomReport {
    pub fn new() -> AxiomReport {
        AxiomReport::default()
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violate(&mut self, law: Law, witness: Vec<usize>, message: String) {
        self.violations.push(Violation { law, witness, message });
    }

    pub fn warn(&mut self, message: String) {
        self.warnings.push(message);
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
        self.warnings.extend(other.warnings);
    }

    /// First violation of the given law, if any.
    pub fn find(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(f, "pass")?;
        } else {
            write!(f, "fail ({} violations)", self.violations.len())?;
            for v in &self.violations {
                write!(f, "\n  {}: {}", v.law, v.message)?;
            }
        }
        for w in &self.warnings {
            write!(f, "\n  warning: {w}")?;
        }
        Ok(())
    }
}
