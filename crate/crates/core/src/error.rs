//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong when building or verifying family data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division of scalars by zero.
    DivisionByZero,
    /// Arithmetic combined two polynomials in different formal variables.
    VariableMismatch {
        left: &'static str,
        right: &'static str,
    },
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// Evaluation of a reduced rational function at a root of its denominator.
    PoleAtPoint(String),
    /// An operation asked for an index beyond the working depth of the data.
    DepthExceeded { requested: usize, depth: usize },
    /// Two eigenvalues collide, so the Newton-basis coefficients are undefined.
    EigenvalueCollision { i: usize, j: usize },
    /// A needed lowering coefficient g_m is zero (finite-family truncation).
    ZeroGInRange { index: usize },
    /// The dual triple needs distinct nodes, but x_i = x_j.
    DualNotDefined { i: usize, j: usize },
    /// A degree triple violates the scheme rules.
    RuleViolation(String),
    /// A bidegree triple violates the Laurent-boundary conditions.
    BidegreeInvalid(String),
    /// The spec cannot be carried into the four-parameter normal form.
    NotNormalizable(String),
    /// A denominator factor in the uniform hypergeometric sum vanishes.
    ZeroDenominatorInProduct { factor_index: usize },
    /// No scheme node matches the spec's vanishing pattern / degrees.
    NoMatch(String),
    /// A coefficient spec fails its structural invariants.
    InvalidSpec(String),
    /// The constraint parameter xi must be nonzero.
    ZeroXi,
    /// Family parameters violate an admissibility predicate.
    InadmissibleParameters { family: String, predicate: String },
    /// The family name is not in the catalog.
    UnknownFamily(String),
    /// No independent hypergeometric oracle is available for the family.
    OracleUnavailable(String),
    /// The limit-case name is not registered.
    UnknownLimitCase(String),
    /// The case is registered but carries no worked rescaling.
    RescalingUnavailable(String),
    /// A parameter that enters exponents must be an integer.
    NonIntegerExponent { name: String, value: String },
    /// The reduced rational function has a pole at q = 1.
    PoleAtQ1 {
        sequence: &'static str,
        index: usize,
    },
    /// A certified limit disagrees with the target data.
    LimitMismatch {
        sequence: &'static str,
        index: usize,
        got: String,
        want: String,
    },
    /// A scalar literal could not be parsed.
    InvalidScalarLiteral(String),
    /// A required parameter is missing.
    MissingParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::VariableMismatch { left, right } => {
                write!(f, "polynomial variable mismatch: {left} vs {right}")
            }
            Error::ZeroDenominator => write!(f, "zero denominator in rational function"),
            Error::PoleAtPoint(at) => write!(f, "pole at evaluation point {at}"),
            Error::DepthExceeded { requested, depth } => {
                write!(f, "index {requested} exceeds working depth {depth}")
            }
            Error::EigenvalueCollision { i, j } => {
                write!(f, "eigenvalues collide: h_{i} = h_{j}")
            }
            Error::ZeroGInRange { index } => {
                write!(
                    f,
                    "g_{index} = 0: system truncates below the requested degree"
                )
            }
            Error::DualNotDefined { i, j } => {
                write!(f, "dual not defined: x_{i} = x_{j}")
            }
            Error::RuleViolation(msg) => write!(f, "degree rule violation: {msg}"),
            Error::BidegreeInvalid(msg) => write!(f, "invalid bidegree triple: {msg}"),
            Error::NotNormalizable(msg) => write!(f, "not normalizable: {msg}"),
            Error::ZeroDenominatorInProduct { factor_index } => {
                write!(
                    f,
                    "zero denominator factor at j+1 = {factor_index} in uniform sum"
                )
            }
            Error::NoMatch(msg) => write!(f, "no scheme node matches: {msg}"),
            Error::InvalidSpec(msg) => write!(f, "invalid coefficient spec: {msg}"),
            Error::ZeroXi => write!(f, "xi must be nonzero"),
            Error::InadmissibleParameters { family, predicate } => {
                write!(f, "inadmissible parameters for {family}: {predicate}")
            }
            Error::UnknownFamily(name) => write!(f, "unknown family: {name}"),
            Error::OracleUnavailable(name) => write!(f, "no hypergeometric oracle for {name}"),
            Error::UnknownLimitCase(name) => write!(f, "unknown limit case: {name}"),
            Error::RescalingUnavailable(name) => {
                write!(f, "limit case {name} has no worked rescaling")
            }
            Error::NonIntegerExponent { name, value } => {
                write!(
                    f,
                    "parameter {name} = {value} must be an integer (it enters exponents)"
                )
            }
            Error::PoleAtQ1 { sequence, index } => {
                write!(f, "pole at q = 1 in {sequence}_{index}: rescaling is wrong")
            }
            Error::LimitMismatch {
                sequence,
                index,
                got,
                want,
            } => {
                write!(
                    f,
                    "limit mismatch at {sequence}_{index}: got {got}, want {want}"
                )
            }
            Error::InvalidScalarLiteral(lit) => write!(f, "invalid scalar literal: {lit:?}"),
            Error::MissingParameter(name) => write!(f, "missing parameter: {name}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
