//! Objects and morphism terms of the bracketed category and its strict
//! counterpart.

mod generator;
mod object;
mod strict;
mod term;

pub use generator::{crossing_sign, over_strand, AssocDir, CrossSign, Generator, Layout, OverStrand};
pub use object::{Letter, PWord, SeqObject, Word};
pub use strict::{strictify, StrictCell, StrictTerm};
pub use term::{build_symmetry, identity_letters, Issue, IssueKind, MorphismTerm, Slice, ValidationReport};
