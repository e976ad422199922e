use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-arithmetic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The base `q` is 0, 1 or -1.
    InvalidBase,
    /// A bottom Pochhammer factor vanished at term `k` while the running term did not.
    SingularSeries { k: usize },
    /// A rational literal could not be parsed.
    ParseScalar(String),
    /// A division by an exact zero.
    DivisionByZero(String),
    /// A parameter the family needs was not supplied.
    MissingParameter(String),
    /// Family name not recognised.
    UnknownFamily(String),
    /// Relation identifier not present in the catalog.
    UnknownRelation(String),
    /// A degree or grid index outside the supported range.
    IndexOutOfRange { i: i64, x: i64, n: u32 },
    /// The parameter set makes some denominator vanish.
    SingularParameters(String),
    /// The operation is not defined for this family or relation.
    Unsupported(String),
    /// Two relations cannot be composed.
    IncompatibleShifts(String),
    /// A shift violates the bar-parameter constraint of its family.
    ShiftConstraint(String),
    /// Malformed formula text or expression tree.
    Expr(String),
    /// A generic-coefficient denominator vanishes; for B2 this signals that an A2 relation exists.
    DenominatorVanishes(String),
    /// No published correspondence for the pair.
    UnknownCorrespondence(String),
    /// Admissible parameters could not be drawn.
    InsufficientSamples(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidBase => write!(f, "base q must not be 0, 1 or -1"),
            Error::SingularSeries { k } => write!(f, "bottom parameter vanishes at term {k}"),
            Error::ParseScalar(s) => write!(f, "cannot parse rational `{s}`"),
            Error::DivisionByZero(s) => write!(f, "division by zero in {s}"),
            Error::MissingParameter(p) => write!(f, "missing parameter `{p}`"),
            Error::UnknownFamily(s) => write!(f, "unknown family `{s}`"),
            Error::UnknownRelation(s) => write!(f, "unknown relation `{s}`"),
            Error::IndexOutOfRange { i, x, n } => {
                write!(f, "index (i={i}, x={x}) outside 0..={n}")
            }
            Error::SingularParameters(s) => write!(f, "inadmissible parameters: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::IncompatibleShifts(s) => write!(f, "incompatible shifts: {s}"),
            Error::ShiftConstraint(s) => write!(f, "shift constraint violated: {s}"),
            Error::Expr(s) => write!(f, "expression error: {s}"),
            Error::DenominatorVanishes(s) => write!(f, "denominator vanishes: {s}"),
            Error::UnknownCorrespondence(s) => write!(f, "no published correspondence for {s}"),
            Error::InsufficientSamples(s) => write!(f, "insufficient admissible samples: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
