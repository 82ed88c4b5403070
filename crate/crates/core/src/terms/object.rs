//! Boundary objects: oriented letters, flat words, parenthesized words and
//! sequences of intervals.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Orientation of a strand crossing a boundary word.
///
/// `Plus` at a top boundary enters the diagram (points down); at a bottom
/// boundary it exits. `Minus` is the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::Plus, Letter::Minus];

    pub fn flip(self) -> Letter {
        match self {
            Letter::Plus => Letter::Minus,
            Letter::Minus => Letter::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Plus => '+',
            Letter::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '+' => Some(Letter::Plus),
            '-' | '\u{2212}' => Some(Letter::Minus),
            _ => None,
        }
    }
}

impl std::ops::Not for Letter {
    type Output = Letter;
    fn not(self) -> Letter {
        self.flip()
    }
}

/// Associative word over `{+, −}`; the objects of the strict category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `ε₁…εₙ ↦ [ε₁]…[εₙ]`.
    pub fn to_object(&self) -> SeqObject {
        SeqObject(self.0.iter().map(|&l| PWord::Leaf(l)).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("\u{2205}");
        }
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

/// Element of the free non-associative monoid on `{+, −}`.
///
/// `Pair` children are never `Empty`; use [`PWord::product`] to build
/// products, which absorbs the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PWord {
    Empty,
    Leaf(Letter),
    Pair(Box<PWord>, Box<PWord>),
}

impl PWord {
    pub fn leaf(l: Letter) -> Self {
        PWord::Leaf(l)
    }

    pub fn product(a: PWord, b: PWord) -> PWord {
        match (a, b) {
            (PWord::Empty, b) => b,
            (a, PWord::Empty) => a,
            (a, b) => PWord::Pair(Box::new(a), Box::new(b)),
        }
    }

    /// Left-nested product of letters, `((l₁l₂)l₃)…`.
    pub fn left_nested<I: IntoIterator<Item = Letter>>(letters: I) -> PWord {
        letters.into_iter().fold(PWord::Empty, |acc, l| PWord::product(acc, PWord::Leaf(l)))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PWord::Empty)
    }

    /// Forgets the parenthesization.
    pub fn flatten(&self) -> Word {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        Word(out)
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        match self {
            PWord::Empty => {}
            PWord::Leaf(l) => out.push(*l),
            PWord::Pair(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    pub fn num_letters(&self) -> usize {
        match self {
            PWord::Empty => 0,
            PWord::Leaf(_) => 1,
            PWord::Pair(a, b) => a.num_letters() + b.num_letters(),
        }
    }

    pub fn single_letter(&self) -> Option<Letter> {
        match self {
            PWord::Leaf(l) => Some(*l),
            _ => None,
        }
    }

    /// Canonical interval text: the left spine is written flat, right
    /// children that are products get parentheses. `((+−)+)` is `+-+`,
    /// `(+(−+))` is `+(-+)`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.write_items(&mut s);
        s
    }

    fn write_items(&self, s: &mut String) {
        match self {
            PWord::Empty => {}
            PWord::Leaf(l) => s.push(l.as_char()),
            PWord::Pair(a, b) => {
                a.write_items(s);
                b.write_atom(s);
            }
        }
    }

    fn write_atom(&self, s: &mut String) {
        match self {
            PWord::Pair(..) => {
                s.push('(');
                self.write_items(s);
                s.push(')');
            }
            other => other.write_items(s),
        }
    }
}

impl fmt::Display for PWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("\u{2205}");
        }
        f.write_str(&self.to_text())
    }
}

impl Serialize for PWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for PWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::parser::parse_pword(&text).map_err(serde::de::Error::custom)
    }
}

/// A sequence of intervals `[w₁]…[w_k]`. The empty sequence `∅` is distinct
/// from `[∅]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeqObject(pub Vec<PWord>);

impl SeqObject {
    pub fn empty() -> Self {
        SeqObject(Vec::new())
    }

    pub fn single(w: PWord) -> Self {
        SeqObject(vec![w])
    }

    /// One interval per letter.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        SeqObject(letters.into_iter().map(PWord::Leaf).collect())
    }

    pub fn intervals(&self) -> &[PWord] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &SeqObject) -> SeqObject {
        SeqObject(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn num_letters(&self) -> usize {
        self.0.iter().map(PWord::num_letters).sum()
    }

    pub fn letters(&self) -> Word {
        Word(self.0.iter().flat_map(|w| w.flatten().0).collect())
    }

    pub fn is_one_letter_intervals(&self) -> bool {
        self.0.iter().all(|w| w.single_letter().is_some())
    }

    pub fn slice(&self, start: usize, len: usize) -> SeqObject {
        SeqObject(self.0[start..start + len].to_vec())
    }

    /// Canonical text, `[+-][+]`; the empty sequence is the empty string.
    pub fn to_text(&self) -> String {
        self.0.iter().map(|w| format!("[{}]", w.to_text())).collect()
    }
}

impl fmt::Display for SeqObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("\u{2205}");
        }
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Letter::{Minus as M, Plus as P};

    fn pair(a: PWord, b: PWord) -> PWord {
        PWord::product(a, b)
    }

    #[test]
    fn flatten_examples() {
        let w = pair(pair(PWord::Leaf(P), PWord::Leaf(M)), PWord::Leaf(P));
        assert_eq!(w.flatten(), Word(vec![P, M, P]));
        assert_eq!(PWord::Empty.flatten(), Word::empty());
        let w = pair(PWord::Leaf(P), pair(PWord::Leaf(P), PWord::Leaf(M)));
        assert_eq!(w.flatten(), Word(vec![P, P, M]));
    }

    #[test]
    fn canonical_text() {
        let w = pair(pair(PWord::Leaf(P), PWord::Leaf(M)), PWord::Leaf(P));
        assert_eq!(w.to_text(), "+-+");
        let w = pair(PWord::Leaf(P), pair(PWord::Leaf(M), PWord::Leaf(P)));
        assert_eq!(w.to_text(), "+(-+)");
        assert_eq!(SeqObject::single(PWord::Empty).to_text(), "[]");
        assert_ne!(SeqObject::single(PWord::Empty), SeqObject::empty());
    }

    #[test]
    fn letter_negation_is_involution() {
        for l in Letter::ALL {
            assert_eq!(!!l, l);
            assert_ne!(!l, l);
        }
    }

    pub(crate) fn arb_pword() -> impl Strategy<Value = PWord> {
        let leaf = prop_oneof![Just(PWord::Leaf(P)), Just(PWord::Leaf(M)), Just(PWord::Empty)];
        leaf.prop_recursive(4, 16, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| PWord::product(a, b)))
    }

    proptest! {
        #[test]
        fn flatten_is_monoid_map(a in arb_pword(), b in arb_pword()) {
            let prod = PWord::product(a.clone(), b.clone());
            prop_assert_eq!(prod.flatten(), a.flatten().concat(&b.flatten()));
        }

        #[test]
        fn pword_text_round_trip(a in arb_pword()) {
            prop_assert_eq!(crate::parser::parse_pword(&a.to_text()).unwrap(), a);
        }
    }
}
