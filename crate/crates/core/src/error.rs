use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),

    #[error("singularity is undefined for the zero vector")]
    ZeroVector,

    #[error("E[{i},{j}] is not diagonal; root functionals are defined on the Cartan part only")]
    NotDiagonal { i: u64, j: u64 },

    #[error("Z[{n},{m}] is not in l+ (needs m = 0)")]
    NotInPlus { n: u64, m: u64 },

    #[error("Z[{n},{m}] is not in l- (needs n = 0)")]
    NotInMinus { n: u64, m: u64 },

    #[error("Z[{n},{m}] is neither in l+ nor in l-")]
    NotShiftGenerator { n: u64, m: u64 },

    #[error("labels from both Heisenberg sides cannot be combined")]
    MixedSides,

    #[error("[coroot({i}), e({j})] is not proportional to e({j}): got {got}")]
    NotProportional { i: u64, j: u64, got: String },

    #[error("character convolution paths disagree on {input}: coproduct {coproduct}, elimination {elimination}")]
    ConvolutionMismatch {
        input: String,
        coproduct: String,
        elimination: String,
    },

    #[error("S*Y paths disagree at m = {m}: generator formula {formula}, convolution {direct}")]
    SStarYMismatch { m: u64, formula: String, direct: String },

    #[error("malformed JSON element: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
