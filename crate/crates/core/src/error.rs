use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("index out of range: {what} = {index} (allowed {lo}..={hi})")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        lo: i64,
        hi: i64,
    },

    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error("non-generic parameters: {0}")]
    NonGeneric(String),

    #[error("no Ore witness with exponent <= {bound}: {detail}")]
    OreBoundExhausted { bound: u32, detail: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown reflection convention `{0}`")]
    UnknownConvention(String),

    #[error("module action is not scalar: {0}")]
    NotScalar(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(what: &'static str, index: usize, lo: usize, hi: usize) -> Result<()> {
    if index < lo || index > hi {
        Err(Error::IndexOutOfRange {
            what,
            index: index as i64,
            lo: lo as i64,
            hi: hi as i64,
        })
    } else {
        Ok(())
    }
}
