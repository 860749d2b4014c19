use std::path::PathBuf;

use chaindd::DdError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Dd(#[from] DdError),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("undefined net `{net}` (line {line})")]
    UndefinedNet { net: String, line: usize },

    #[error("combinational cycle through net `{0}`")]
    Cycle(String),

    #[error("word {word:?}: symbol {symbol:?} is outside the alphabet")]
    Alphabet { word: String, symbol: char },

    #[error("word {word:?} has {len} symbols, limit is {max}")]
    WordTooLong { word: String, len: usize, max: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl BenchError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        BenchError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            BenchError::Parse { .. }
                | BenchError::UndefinedNet { .. }
                | BenchError::Cycle(_)
                | BenchError::Alphabet { .. }
                | BenchError::WordTooLong { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, BenchError>;
