use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point `{0}` is not covered by any set")]
    UncoveredPoint(String),

    #[error("point `{0}` is listed more than once")]
    DuplicatePoint(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("empty point set")]
    EmptySpace,

    #[error("too many points: {0} (at most {max} supported)", max = crate::pointset::MAX_POINTS)]
    TooManyPoints(usize),

    #[error("points `{0}` and `{1}` have identical basis membership (space is not T0)")]
    NotT0(String, String),

    #[error("relation is not a partial order: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),

    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),

    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),

    #[error("no member of the family contains the atom {0}")]
    NoEnvelope(String),

    #[error("diagram depth must be at least 1")]
    ZeroDepth,

    #[error("multiplicity {multiplicity} between level {level} node {from} and node {to} is not 0 or 1")]
    Multiplicity {
        level: usize,
        from: usize,
        to: usize,
        multiplicity: i64,
    },

    #[error("dimension recursion broken at level {level}, node {node}")]
    DimensionRecursion { level: usize, node: usize },

    #[error("diagram with {levels} levels is not yet stable (needs at least {required})")]
    NotStable { levels: usize, required: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("incidence matrix has a negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: i64 },

    #[error("incidence matrix has an all-zero {kind} {index}")]
    ZeroLine { kind: &'static str, index: usize },

    #[error("det(T) = {0}: matrix is not unimodular, K0 is not plainly Z^k")]
    NotUnimodular(i64),

    #[error("T is not unipotent ((T - I)^k != 0); use the Perron or iterative cone")]
    NotUnipotent,

    #[error("T is not primitive (no strictly positive power)")]
    NotPrimitive,

    #[error("power iteration did not converge within {0} steps")]
    NoConvergence(usize),

    #[error("tolerance must be a positive finite number")]
    BadTolerance,

    #[error("exponent must be at least 1, got {0}")]
    BadExponent(i64),

    #[error("integer overflow during exact arithmetic")]
    Overflow,
}
