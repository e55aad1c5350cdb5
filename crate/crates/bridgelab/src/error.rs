use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..=16")]
    BadVertexCount { n: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    InvalidVertex { v: usize, n: usize },

    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },

    #[error("n = {n} exceeds the cap {cap} for {what}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("graph is not a member of class {class}")]
    NotAMember { class: String },

    #[error("invalid codeword: {0}")]
    InvalidCodeword(String),

    #[error("verification failure: {claim}\ncounterexample:\n{witness}")]
    Verification { claim: String, witness: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
