use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate. Messages are terse and
/// stable; callers match on variants, not strings.
#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable names differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),

    #[error("not divisible")]
    NotDivisible,

    #[error("variable index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix size {size} over cofactor limit {limit}")]
    SizeOverLimit { size: usize, limit: usize },

    #[error("negative multiplicity in twist word")]
    NegativeMultiplicity,

    #[error("intersection matrix has a negative coefficient")]
    NegativeIntersection,

    #[error("degenerate curve system: r - m - n = {0} is negative")]
    DegenerateCurveSystem(i64),

    #[error("word does not alternate twist kinds")]
    WordNotAlternating,

    #[error("curve {0} is never twisted")]
    UntwistedCurve(String),

    #[error("tie at reference: support points {0:?} and {1:?} pair equally")]
    TieAtReference(Vec<i64>, Vec<i64>),

    #[error("reference class must be exact rationals")]
    InexactReference,

    #[error("missing drilling class c")]
    MissingDrillClass,

    #[error("branch degree {0} is below 2")]
    BranchDegreeTooSmall(u32),

    #[error("non-positive negChi ({0}): class lies outside the cone")]
    NonPositiveChi(String),

    #[error("zero vector")]
    ZeroVector,

    #[error("no root above 1")]
    NoRootAboveOne,

    #[error("degenerate root")]
    DegenerateRoot,

    #[error("minimum at boundary")]
    MinimumAtBoundary,

    #[error("segment requires 2-dimensional classes, got {0}")]
    SegmentDimension(usize),

    #[error("covector is non-positive on the cone")]
    CovectorNotPositive,

    #[error("norm check far from 1: pairing = {0}")]
    NormCheckFar(String),

    #[error("zero derivative polynomial")]
    ZeroDerivative,

    #[error("degenerate degrees in resultant input")]
    DegenerateDegrees,

    #[error("non-palindromic input")]
    NonPalindromic,

    #[error("leading coefficient divisible by {0}")]
    LeadingDivisibleByP(u64),

    #[error("unit root: no denominator bound")]
    UnitRoot,

    #[error("enclosure too wide for denominator bound {0}")]
    EnclosureTooWide(u64),

    #[error("could not isolate the critical value of {0} by sign bisection")]
    RootIsolation(&'static str),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("no {kind} named {name} in workspace")]
    NameMissing { kind: &'static str, name: String },

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Tag an error with the pipeline stage it came from, for reports that
    /// must name the failing stage.
    pub fn at_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
