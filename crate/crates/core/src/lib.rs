//! Framed oriented virtual tangles.

pub mod algebra;
pub mod error;
pub mod evaluator;
pub mod oracle;
pub mod parser;
pub mod random;
pub mod rewrite;
pub mod selftest;
pub mod terms;

pub use algebra::{LaurentPoly, RibbonDatum, RingMatrix};
pub use error::{Error, Result};
pub use evaluator::{EvalContext, Normalized};
pub use parser::{compile_gauss, parse_gauss, parse_term, render, GaussCode};
pub use terms::{Generator, Letter, MorphismTerm, PWord, SeqObject, Slice};
