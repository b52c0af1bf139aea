use thiserror::Error;

use crate::exactnum::Field;
use crate::report::{CheckReport, Witness};

/// Errors raised by constructions and checks.
///
/// Axiom failures found by a `check_*` function are report entries, not
/// errors. Errors signal violated preconditions of a construction.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operands live in different fields ({left} and {right})")]
    MixedFields { left: Field, right: Field },
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("{0} is not a prime modulus")]
    InvalidModulus(u64),
    #[error("cannot parse scalar {text:?}: {reason}")]
    BadScalar { text: String, reason: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("{map} is not multiplicative: {witness}")]
    NotMultiplicative { map: String, witness: Witness },
    #[error("{map} is not comultiplicative: {witness}")]
    NotComultiplicative { map: String, witness: Witness },
    #[error("{first} and {second} do not commute: {witness}")]
    MapsDoNotCommute {
        first: String,
        second: String,
        witness: Witness,
    },
    #[error("{0} is not a bialgebra endomorphism")]
    NotBialgebraMap(String, Witness),
    #[error("{0} is not a unital counital bialgebra automorphism")]
    NotAutomorphism(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("subspace is not closed under the product: {0}")]
    NotClosed(Witness),
    #[error("structure has no unit or counit")]
    MissingUnit,
    #[error("vector is not primitive: {0}")]
    NotPrimitive(Witness),
    #[error("condition failed: {0}")]
    ConditionFailure(Box<CheckReport>),
    #[error("hypothesis failed: {0}")]
    HypothesisFailure(Box<CheckReport>),
    #[error("module axioms fail: {0}")]
    ModuleAxiomFailure(Box<CheckReport>),
    #[error("pseudotwistor equations fail: {0}")]
    PseudotwistorInvalid(Box<CheckReport>),
    #[error("twisting map equations fail: {0}")]
    TwistingMapInvalid(Box<CheckReport>),
    #[error("bialgebra is not monoidal (needs unit, counit, omega = alpha^-1, psi = beta^-1)")]
    NotMonoidal,
    #[error("antipode equations have {0} independent solutions")]
    NonUnique(usize),
    #[error("space of dimension {0} exceeds the supported size")]
    TooLarge(usize),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn mixed(left: Field, right: Field) -> Self {
        Error::MixedFields { left, right }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
