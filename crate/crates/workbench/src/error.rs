use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unresolved {kind} reference {name:?}")]
    Unresolved { kind: &'static str, name: String },
    #[error("in definition {name:?}: {source}")]
    Definition {
        name: String,
        #[source]
        source: Box<Error>,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("unknown task {0:?}; `workbench list` shows the catalog")]
    UnknownTask(String),
    #[error("task {task} does not take {option}")]
    BadOption { task: String, option: String },
    #[error(transparent)]
    Core(#[from] ordact_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
