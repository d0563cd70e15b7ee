use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("point lies on a line spanned by two reference points")]
    DegeneratePlacement,
    #[error("input is not in general position: {0}")]
    DegenerateInput(String),
    #[error("point set has {found} convex layers, need at least {needed}")]
    LayerCountMismatch { needed: usize, found: usize },
    #[error("no feasible point: {0}")]
    NoFeasiblePoint(String),
    #[error("no winning move from this position: {0}")]
    NoWinningMove(String),
    #[error("search exceeded depth or budget: {0}")]
    DepthExceeded(String),
    #[error("move violates general position: collinear with points {0} and {1}")]
    GeneralPositionViolation(usize, usize),
    #[error("game already finished")]
    GameAlreadyFinished,
    #[error("malformed trace: {0}")]
    MalformedTrace(String),
    #[error("trace violates a game invariant: {0}")]
    InvariantViolation(String),
    #[error("malformed number {0:?}")]
    MalformedNumber(String),
    #[error("sampler could not realize layer signature {0:?}")]
    SamplerFailure(Vec<usize>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable code used by the JSON service.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicatePoint(_) => "duplicate_point",
            Error::DegeneratePlacement => "degenerate_placement",
            Error::DegenerateInput(_) => "degenerate_input",
            Error::LayerCountMismatch { .. } => "layer_count_mismatch",
            Error::NoFeasiblePoint(_) => "no_feasible_point",
            Error::NoWinningMove(_) => "no_winning_move",
            Error::DepthExceeded(_) => "depth_exceeded",
            Error::GeneralPositionViolation(..) => "general_position",
            Error::GameAlreadyFinished => "game_finished",
            Error::MalformedTrace(_) => "malformed_trace",
            Error::InvariantViolation(_) => "invariant_violation",
            Error::MalformedNumber(_) => "malformed_number",
            Error::SamplerFailure(_) => "sampler_failure",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
