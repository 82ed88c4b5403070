//! Text formats: the term DSL, Gauss codes and JSON.

mod compile;
mod dsl;
mod gauss;

pub use compile::{compile_gauss, compile_gauss_long};
pub use dsl::{parse_object, parse_pword, parse_term, render, render_cell};
pub use gauss::{parse_gauss, GaussCode, Layer, Pass};

use crate::error::Result;
use crate::terms::MorphismTerm;

/// Serializes a term; the inverse of [`term_from_json`].
pub fn term_to_json(t: &MorphismTerm) -> String {
    serde_json::to_string_pretty(t).expect("terms serialize")
}

/// Parses and validates a JSON term.
pub fn term_from_json(text: &str) -> Result<MorphismTerm> {
    let t: MorphismTerm = serde_json::from_str(text)?;
    t.validate().into_result()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let t = compile_gauss(&parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap());
        let back = term_from_json(&term_to_json(&t)).unwrap();
        assert_eq!(back, t);
    }
}
