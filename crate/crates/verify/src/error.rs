use std::path::PathBuf;

/// Failures of the harness itself, as opposed to failing rows.
#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] zeta_core::Error),

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot parse {path}: {source}")]
    Toml { path: PathBuf, source: toml::de::Error },

    #[error("cannot write report: {0}")]
    Write(#[from] std::io::Error),

    #[error("cannot encode report: {0}")]
    Csv(#[from] csv::Error),

    #[error("cannot encode report: {0}")]
    Json(#[from] serde_json::Error),
}

impl VerifyError {
    pub fn config(msg: impl Into<String>) -> Self {
        VerifyError::Config(msg.into())
    }

    /// Whether the failure is a configuration problem (exit status 2).
    pub fn is_config(&self) -> bool {
        matches!(self, VerifyError::Config(_) | VerifyError::Toml { .. } | VerifyError::Read { .. })
    }
}

pub type Result<T> = std::result::Result<T, VerifyError>;
