use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the supported cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("{name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },

    #[error("invalid hypergeometric parameters: {0}")]
    InvalidParameters(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("only half-integer orders are supported, got 2*nu = {0}")]
    UnsupportedOrder(u32),

    #[error("cannot parse {input:?} as {expected}")]
    Parse {
        input: String,
        expected: &'static str,
    },

    #[error("cannot add values carrying pi^{0} and pi^{1}")]
    PiPowerMismatch(i32, i32),

    #[error(
        "quadrature did not converge within {evaluations} evaluations \
         (best estimate {value:e}, error estimate {abs_error:e})"
    )]
    QuadratureNonConvergence {
        value: f64,
        abs_error: f64,
        evaluations: usize,
    },
}

impl Error {
    pub(crate) fn out_of_range(
        name: &'static str,
        value: i64,
        expected: impl Into<String>,
    ) -> Self {
        Error::OutOfRange {
            name,
            value,
            expected: expected.into(),
        }
    }
}
