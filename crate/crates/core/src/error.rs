use crate::exactpoly::BiPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// The remainder is the pseudo-remainder of the failed division; see
    /// [`crate::exactpoly::pseudo_divmod`] for the convention.
    #[error("{context}: not exactly divisible (remainder has {} terms)", remainder.num_terms())]
    NotDivisible {
        context: String,
        remainder: Box<BiPoly>,
    },

    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("{op} needs z-degree at least {required}, got {found:?}")]
    DegreeTooLow {
        op: &'static str,
        required: u32,
        found: Option<u32>,
    },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("logarithmic derivative of a zero argument")]
    ZeroArgument,

    #[error("the zero function is not a valid argument here")]
    ZeroFunction,

    #[error("index {0} is not present in the sequence")]
    IndexMissing(i64),

    #[error("cofactor of z^{sigma} has zero constant term")]
    ZeroConstantTerm { sigma: u32 },

    #[error("polynomial depends on mu where a univariate polynomial in z was expected")]
    NotUnivariate,

    #[error("root iteration did not converge after {sweeps} sweeps (max update {max_update:e})")]
    NoConvergence { sweeps: usize, max_update: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache entry {path} is corrupt: {reason}")]
    CorruptCache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn not_divisible(context: impl Into<String>, remainder: BiPoly) -> Self {
        Error::NotDivisible {
            context: context.into(),
            remainder: Box::new(remainder),
        }
    }
}
