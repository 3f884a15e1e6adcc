use thiserror::Error;

use crate::criterion::HypothesisReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad classes of failure, used to pick a process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input does not describe a valid object.
    Invalid,
    /// The input is valid but the criterion's hypotheses do not hold.
    Hypotheses,
    /// An exhaustive search would exceed the configured budget.
    Budget,
    /// A construction that must succeed on conforming input did not.
    Falsification,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is outside the supported range 2..=251")]
    ModulusOutOfRange(u32),
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry {value} is not a residue mod {p}")]
    NotReduced { value: u32, p: u32 },
    #[error("malformed input: {0}")]
    Shape(String),

    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociativeTable(usize, usize, usize),
    #[error("element {0} is not a zero element")]
    NotAZero(usize),
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("element {0} is the zero element")]
    ZeroIdempotent(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subset {0:?} is not a subgroup")]
    NotASubgroup(Vec<usize>),
    #[error("subgroup {0:?} is not normal")]
    NotNormal(Vec<usize>),
    #[error("subset {0:?} is not closed under multiplication")]
    NotClosed(Vec<usize>),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("algebra is not associative on basis triple ({0}, {1}, {2})")]
    NonAssociativeAlgebra(usize, usize, usize),
    #[error("vector is not a nonzero idempotent")]
    NotAnIdempotent,
    #[error("subspace is not closed under multiplication")]
    NotASubalgebra,
    #[error("the algebra has dimension 0")]
    ZeroAlgebra,
    #[error("the algebra has no identity element")]
    NotUnital,

    #[error("grading violated on basis pair ({0}, {1})")]
    GradingViolation(usize, usize),
    #[error("basis vector {0} has the zero element as its degree")]
    ThetaComponent(usize),
    #[error("operation requires a grading by a group")]
    GroupGradingRequired,

    #[error("partial action axiom {axiom} fails: {detail}")]
    PartialActionAxiom { axiom: &'static str, detail: String },
    #[error("domain D_{0} has no identity element")]
    NoLocalIdentity(usize),
    #[error("invalid set of local units: {0}")]
    InvalidLocalUnits(String),
    #[error("skew ring is not associative on labels ({0}, {1}, {2})")]
    SkewAssociativity(usize, usize, usize),

    #[error("enumeration of {required} elements exceeds the budget of {limit}")]
    BudgetExceeded { required: u128, limit: u64 },
    #[error("hypotheses not met")]
    HypothesesUnmet(Box<HypothesisReport>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsatisfiable corpus constraints: {0}")]
    Unsatisfiable(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::BudgetExceeded { .. } => ErrorClass::Budget,
            Error::HypothesesUnmet(_) | Error::Precondition(_) | Error::GroupGradingRequired => {
                ErrorClass::Hypotheses
            }
            Error::SkewAssociativity(..) => ErrorClass::Falsification,
            _ => ErrorClass::Invalid,
        }
    }

    pub(crate) fn budget(required: u128, limit: u64) -> Self {
        Error::BudgetExceeded { required, limit }
    }
}
