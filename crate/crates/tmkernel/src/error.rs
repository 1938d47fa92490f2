use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("trajectory diverged at step {step} (dt too large?)")]
    Diverged { step: usize },

    #[error("burst ({point}, {sample}) diverged at step {step} (dt too large?)")]
    BurstDiverged {
        point: usize,
        sample: usize,
        step: usize,
    },

    #[error("singular system: {0}")]
    Singular(String),

    #[error("eigensolver did not converge (achieved residual {residual:.3e})")]
    Convergence { residual: f64 },

    #[error("distance graph is disconnected at this bandwidth; increase the diffusion-map bandwidth")]
    Disconnected,

    #[error("file format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for errors caused by bad inputs rather than numerical failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_, _)
                | Error::InvalidArgument(_)
                | Error::Format(_)
                | Error::Io(_)
        )
    }
}
