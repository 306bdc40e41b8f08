use thiserror::Error;

/// Errors reported by the duality engine.
///
/// The variants split into three classes: table validation failures
/// (`NotAssociative` through `BadTableShape`), structural preconditions that
/// an operation requires of its input (`NotAbelian` through `NotAGroup`),
/// and internal consistency failures that indicate a bug rather than bad
/// input (`HomNotFound` through `NoPreimage`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not associative: (x{i}·x{j})·x{k} ≠ x{i}·(x{j}·x{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit law violated at element {i}")]
    UnitLawViolated { i: usize },
    #[error("duplicate element label {label:?}")]
    DuplicateLabel { label: String },
    #[error("table entry {value} at ({row},{col}) out of range for {size} elements")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("table is not {size}×{size}")]
    BadTableShape { size: usize },
    #[error("unit index {unit} out of range for {size} elements")]
    UnitOutOfRange { unit: usize, size: usize },

    #[error("monoid is not abelian: elements {x} and {y} do not commute")]
    NotAbelian { x: usize, y: usize },
    #[error("monoid is not inverse: element {x} has {count} inverses")]
    NotInverse { x: usize, count: usize },
    #[error("monoid is not Clifford: element {x} has xx⁻¹ ≠ x⁻¹x")]
    NotClifford { x: usize },
    #[error("monoid is not a group: element {x} has no two-sided inverse")]
    NotAGroup { x: usize },
    #[error("monoid is not a semilattice: element {x} is not idempotent or does not commute")]
    NotASemilattice { x: usize },

    #[error("invalid corpus parameter: {0}")]
    InvalidParameter(String),
    #[error("incompatible linking homomorphisms: {0}")]
    LinkIncompatible(String),
    #[error("strong semilattice component over idempotent {e} is not an abelian group")]
    NotAbelianComponent { e: usize },

    #[error("dual size limit exceeded: {size} homs over configured bound {bound}")]
    SizeLimitExceeded { size: usize, bound: usize },

    #[error("internal: composed homomorphism missing from the computed dual")]
    HomNotFound,
    #[error("internal: evaluation map is not a homomorphism of the dual")]
    EvaluationNotAHom,
    #[error("internal: no preimage found for a bidual element of an abelian inverse monoid")]
    NoPreimage,
    #[error("internal: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
