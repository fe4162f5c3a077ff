use std::path::Path;

use thiserror::Error;

/// Why a command stopped. Each variant owns one exit code.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("{stage}: verification failed: {detail}")]
    Verification { stage: String, detail: String },

    #[error("{stage}: {source}")]
    Convergence {
        stage: String,
        #[source]
        source: eaqcc::Error,
    },

    #[error("{stage}: {message}")]
    Input { stage: String, message: String },
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Verification { .. } => 1,
            Failure::Convergence { .. } => 2,
            Failure::Input { .. } => 3,
        }
    }

    pub fn verification(stage: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure::Verification {
            stage: stage.into(),
            detail: detail.into(),
        }
    }

    pub fn input(stage: impl Into<String>, message: impl Into<String>) -> Self {
        Failure::Input {
            stage: stage.into(),
            message: message.into(),
        }
    }

    /// Classifies a library error raised while running `stage`.
    pub fn at(stage: impl Into<String>) -> impl FnOnce(eaqcc::Error) -> Self {
        let stage = stage.into();
        move |e| match e {
            eaqcc::Error::NoConvergence { .. } => Failure::Convergence { stage, source: e },
            eaqcc::Error::ReductionFailure(_) => Failure::verification(stage, e.to_string()),
            other => Failure::input(stage, other.to_string()),
        }
    }

    /// Library error raised while parsing the file at `path`.
    pub fn in_file(path: &Path) -> impl FnOnce(eaqcc::Error) -> Self + '_ {
        move |e| Failure::at(path.display().to_string())(e)
    }
}

pub type Outcome<T = ()> = Result<T, Failure>;
