use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring: {0}")]
    Ring(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("certificate failed: {0}")]
    Certificate(String),
    #[error("Hilbert function does not stabilize: {0}")]
    NotZeroDimensional(String),
    #[error("branch limit {0} exceeded")]
    BranchLimit(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
