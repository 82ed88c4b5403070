use thiserror::Error;

use crate::terms::{SeqObject, ValidationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("boundary mismatch: {left} does not match {right}")]
    BoundaryMismatch { left: SeqObject, right: SeqObject },

    #[error("invalid term: {0}")]
    Validation(ValidationReport),

    #[error("term is not in strict form: {0}")]
    NotStrict(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("gauss code pairing error: {0}")]
    Pairing(String),

    #[error("bad polynomial: {0}")]
    PolySyntax(String),

    #[error("move does not match at slice {slice_index}, cell {cell_offset}")]
    InvalidLocation { slice_index: usize, cell_offset: usize },

    #[error("term is not closed: boundary {dom} -> {cod}")]
    NotClosed { dom: SeqObject, cod: SeqObject },

    #[error("state sum over {0} crossings exceeds the limit of {max}", max = crate::oracle::MAX_CROSSINGS)]
    TooManyCrossings(usize),

    #[error("invariant is not divisible by the loop value")]
    NotDivisible,

    #[error("bad ribbon datum: {0}")]
    Datum(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
