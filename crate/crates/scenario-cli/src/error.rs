use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A configuration field failed validation; `field` is the dotted path.
    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to parse `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("solver `{solver}` failed: {message}")]
    Solver { solver: String, message: String },

    #[error("time grids differ: {0}")]
    GridMismatch(String),

    #[error("series frames differ: `{0}` vs `{1}`")]
    FrameMismatch(String, String),
}

impl CliError {
    pub fn config(field: &str, message: impl Into<String>) -> Self {
        CliError::Config { field: field.to_string(), message: message.into() }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }
}
