use thiserror::Error;

use crate::reconnection::CascadeTrace;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    MalformedCode(String),
    #[error("invalid edge set: {0}")]
    InvalidEdgeSet(String),
    #[error("no consistent orientation: {0}")]
    OrientationConflict(String),
    #[error("crossing index {index} out of range for a diagram with {len} crossings")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("malformed braid word: {0}")]
    MalformedWord(String),
    #[error("generator {letter} needs at least {} strands, braid has {strands}", letter.unsigned_abs() + 1)]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("diagram is not connected")]
    DisconnectedDiagram,
    #[error("braid closure is not connected: column {column} has no crossings")]
    DisconnectedClosure { column: usize },
    #[error("genus routes disagree: {0}")]
    InconsistentGenus(String),

    #[error("diagram is not positive: crossing {index} is negative")]
    NotPositive { index: usize },
    #[error("braid closure does not match the diagram")]
    MismatchedBraid,
    #[error("lower bound {lower} exceeds upper bound {upper}")]
    InconsistentBounds { lower: usize, upper: usize },

    #[error("circles {i} and {j} are not both free loops (diagram has {free} free loops)")]
    NotFreeLoops { i: usize, j: usize, free: usize },
    #[error("cannot merge circle {0} with itself")]
    SameCircle(usize),
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("cascade did not finish within {max_steps} steps")]
    StepBudgetExceeded {
        max_steps: usize,
        trace: Box<CascadeTrace>,
    },
    #[error("search exhausted its budget of {budget} states")]
    BudgetExceeded { budget: usize },
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedCode(_) => "MalformedCode",
            Error::InvalidEdgeSet(_) => "InvalidEdgeSet",
            Error::OrientationConflict(_) => "OrientationConflict",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::MalformedWord(_) => "MalformedWord",
            Error::GeneratorOutOfRange { .. } => "GeneratorOutOfRange",
            Error::DegenerateParameters(_) => "DegenerateParameters",
            Error::DisconnectedDiagram => "DisconnectedDiagram",
            Error::DisconnectedClosure { .. } => "DisconnectedClosure",
            Error::InconsistentGenus(_) => "InconsistentGenus",
            Error::NotPositive { .. } => "NotPositive",
            Error::MismatchedBraid => "MismatchedBraid",
            Error::InconsistentBounds { .. } => "InconsistentBounds",
            Error::NotFreeLoops { .. } => "NotFreeLoops",
            Error::SameCircle(_) => "SameCircle",
            Error::InvalidPlan(_) => "InvalidPlan",
            Error::StepBudgetExceeded { .. } => "StepBudgetExceeded",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }

    /// The crossing, generator or circle the error refers to, if any.
    pub fn site(&self) -> Option<i64> {
        match self {
            Error::IndexOutOfRange { index, .. } | Error::NotPositive { index } => Some(*index as i64),
            Error::GeneratorOutOfRange { letter, .. } => Some(*letter as i64),
            Error::DisconnectedClosure { column } => Some(*column as i64),
            Error::NotFreeLoops { i, .. } => Some(*i as i64),
            Error::SameCircle(i) => Some(*i as i64),
            _ => None,
        }
    }
}
