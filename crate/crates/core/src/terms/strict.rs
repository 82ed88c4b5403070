//! Terms over flat words, and the passage to and from one-letter intervals.

use serde::Serialize;

use super::{CrossSign, Generator, Layout, Letter, MorphismTerm, PWord, SeqObject, Slice, Word};
use crate::error::{Error, Result};

/// Generators of the strict category: crossings, virtual crossings, cups,
/// caps and identities, all on single letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StrictCell {
    Id(Letter),
    Crossing(CrossSign, [Letter; 2]),
    Virtual([Letter; 2]),
    Cup([Letter; 2]),
    Cap([Letter; 2]),
}

impl StrictCell {
    fn embed(&self) -> Generator {
        match *self {
            StrictCell::Id(l) => Generator::id_letter(l),
            StrictCell::Crossing(s, [a, b]) => Generator::crossing(s, a, b),
            StrictCell::Virtual([a, b]) => Generator::virtual_letters(a, b),
            StrictCell::Cup([a, b]) => Generator::cup(a, b),
            StrictCell::Cap([a, b]) => Generator::cap(a, b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StrictTerm {
    pub dom: Word,
    pub cod: Word,
    pub slices: Vec<Vec<StrictCell>>,
}

impl StrictTerm {
    /// `ε₁…εₙ ↦ [ε₁]…[εₙ]` on objects, cell by cell on morphisms.
    pub fn embed(&self) -> MorphismTerm {
        let slices =
            self.slices.iter().map(|cells| Slice::new(cells.iter().map(StrictCell::embed).collect())).collect();
        MorphismTerm::from_parts(self.dom.to_object(), self.cod.to_object(), slices)
    }
}

fn word_of(obj: &SeqObject, what: &str) -> Result<Word> {
    obj.intervals()
        .iter()
        .map(|w| {
            w.single_letter().ok_or_else(|| {
                Error::NotStrict(format!("{what} has interval [{}] with other than one letter", w.to_text()))
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

fn letter_of(w: &PWord) -> Result<Letter> {
    w.single_letter().ok_or_else(|| Error::NotStrict(format!("interval [{}] is not a single letter", w.to_text())))
}

/// Reads a term over one-letter intervals as a term over flat words.
pub fn strictify(t: &MorphismTerm) -> Result<StrictTerm> {
    let dom = word_of(t.dom(), "domain")?;
    let cod = word_of(t.cod(), "codomain")?;
    let mut slices = Vec::with_capacity(t.slices().len());
    for (i, s) in t.slices().iter().enumerate() {
        let mut cells = Vec::with_capacity(s.cells.len());
        for g in &s.cells {
            let cell = match g {
                Generator::Id { word } => StrictCell::Id(letter_of(word)?),
                Generator::Crossing { sign, top, layout: Layout::Split } => StrictCell::Crossing(*sign, *top),
                Generator::Virtual { left, right } => StrictCell::Virtual([letter_of(left)?, letter_of(right)?]),
                Generator::Cup { ends, layout: Layout::Split } => StrictCell::Cup(*ends),
                Generator::Cap { ends, layout: Layout::Split } => StrictCell::Cap(*ends),
                Generator::Crossing { .. } | Generator::Cup { .. } | Generator::Cap { .. } => {
                    return Err(Error::NotStrict(format!("slice {i}: cell spans a two-letter interval")))
                }
                other => return Err(Error::NotStrict(format!("slice {i}: bracket generator {other:?}"))),
            };
            cells.push(cell);
        }
        slices.push(cells);
    }
    Ok(StrictTerm { dom, cod, slices })
}
