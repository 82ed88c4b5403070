//! Elementary morphisms and their boundary typing.

use serde::{Deserialize, Serialize};

use super::{Letter, PWord, SeqObject};

/// Knot-theoretic sign of a real crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossSign {
    Pos,
    Neg,
}

impl CrossSign {
    pub const ALL: [CrossSign; 2] = [CrossSign::Pos, CrossSign::Neg];

    pub fn flip(self) -> CrossSign {
        match self {
            CrossSign::Pos => CrossSign::Neg,
            CrossSign::Neg => CrossSign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            CrossSign::Pos => 1,
            CrossSign::Neg => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            CrossSign::Pos => '+',
            CrossSign::Neg => '-',
        }
    }
}

/// Which of the two strands through a crossing cell passes over.
///
/// The cell has corners TL, TR (top) and BL, BR (bottom); one strand joins
/// TL to BR, the other TR to BL.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverStrand {
    /// The TR–BL strand is over.
    Slash,
    /// The TL–BR strand is over.
    Backslash,
}

impl OverStrand {
    pub fn flip(self) -> OverStrand {
        match self {
            OverStrand::Slash => OverStrand::Backslash,
            OverStrand::Backslash => OverStrand::Slash,
        }
    }
}

// Planar direction of each strand through the cell (x right, y up).
fn strand_directions(top: [Letter; 2]) -> ([i64; 2], [i64; 2]) {
    let tl_br = match top[0] {
        Letter::Plus => [1, -1],
        Letter::Minus => [-1, 1],
    };
    let tr_bl = match top[1] {
        Letter::Plus => [-1, -1],
        Letter::Minus => [1, 1],
    };
    (tl_br, tr_bl)
}

fn cross2(u: [i64; 2], v: [i64; 2]) -> i64 {
    u[0] * v[1] - u[1] * v[0]
}

/// Sign of a crossing with the given top letters and over strand, by the
/// right-hand rule: positive iff `over × under` points out of the page.
pub fn crossing_sign(over: OverStrand, top: [Letter; 2]) -> CrossSign {
    let (tl_br, tr_bl) = strand_directions(top);
    let z = match over {
        OverStrand::Slash => cross2(tr_bl, tl_br),
        OverStrand::Backslash => cross2(tl_br, tr_bl),
    };
    if z > 0 {
        CrossSign::Pos
    } else {
        CrossSign::Neg
    }
}

pub fn over_strand(sign: CrossSign, top: [Letter; 2]) -> OverStrand {
    if crossing_sign(OverStrand::Slash, top) == sign {
        OverStrand::Slash
    } else {
        OverStrand::Backslash
    }
}

/// How a two-letter generator sits on intervals: one letter per interval
/// (`[a][b]`, the strict form) or both letters inside one interval (`[ab]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    Split,
    Fused,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AssocDir {
    /// `[(w₁w₂)w₃] → [w₁(w₂w₃)]`
    Forward,
    /// `[w₁(w₂w₃)] → [(w₁w₂)w₃]`
    Backward,
}

/// A single cell of a slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    /// Identity on one interval.
    Id {
        word: PWord,
    },
    /// Real crossing; top letters `[a][b]` become `[b][a]` at the bottom.
    Crossing {
        sign: CrossSign,
        top: [Letter; 2],
        layout: Layout,
    },
    /// Virtual crossing (the symmetry) of two intervals, `[w₁][w₂] → [w₂][w₁]`.
    Virtual {
        left: PWord,
        right: PWord,
    },
    /// Birth `∅ → [a][b]` (or `[ab]`), `a ≠ b`.
    Cup {
        ends: [Letter; 2],
        layout: Layout,
    },
    /// Death `[a][b] → ∅` (or `[ab]`), `a ≠ b`.
    Cap {
        ends: [Letter; 2],
        layout: Layout,
    },
    /// `[w w′] → [w][w′]`
    Split {
        left: PWord,
        right: PWord,
    },
    /// `[w][w′] → [w w′]`
    Merge {
        left: PWord,
        right: PWord,
    },
    /// `∅ → [∅]`
    Unit,
    /// `[∅] → ∅`
    Counit,
    Assoc {
        dir: AssocDir,
        words: [PWord; 3],
    },
}

fn two_letters(ls: [Letter; 2], layout: Layout) -> SeqObject {
    match layout {
        Layout::Split => SeqObject::from_letters(ls),
        Layout::Fused => SeqObject::single(PWord::left_nested(ls)),
    }
}

impl Generator {
    pub fn id(word: PWord) -> Self {
        Generator::Id { word }
    }

    pub fn id_letter(l: Letter) -> Self {
        Generator::Id { word: PWord::Leaf(l) }
    }

    pub fn crossing(sign: CrossSign, a: Letter, b: Letter) -> Self {
        Generator::Crossing { sign, top: [a, b], layout: Layout::Split }
    }

    pub fn virtual_letters(a: Letter, b: Letter) -> Self {
        Generator::Virtual { left: PWord::Leaf(a), right: PWord::Leaf(b) }
    }

    pub fn cup(a: Letter, b: Letter) -> Self {
        Generator::Cup { ends: [a, b], layout: Layout::Split }
    }

    pub fn cap(a: Letter, b: Letter) -> Self {
        Generator::Cap { ends: [a, b], layout: Layout::Split }
    }

    pub fn dom(&self) -> SeqObject {
        match self {
            Generator::Id { word } => SeqObject::single(word.clone()),
            Generator::Crossing { top, layout, .. } => two_letters(*top, *layout),
            Generator::Virtual { left, right } => SeqObject(vec![left.clone(), right.clone()]),
            Generator::Cup { .. } | Generator::Unit => SeqObject::empty(),
            Generator::Cap { ends, layout } => two_letters(*ends, *layout),
            Generator::Split { left, right } => SeqObject::single(PWord::product(left.clone(), right.clone())),
            Generator::Merge { left, right } => SeqObject(vec![left.clone(), right.clone()]),
            Generator::Counit => SeqObject::single(PWord::Empty),
            Generator::Assoc { dir, words } => SeqObject::single(assoc_word(*dir, words, true)),
        }
    }

    pub fn cod(&self) -> SeqObject {
        match self {
            Generator::Id { word } => SeqObject::single(word.clone()),
            Generator::Crossing { top, layout, .. } => two_letters([top[1], top[0]], *layout),
            Generator::Virtual { left, right } => SeqObject(vec![right.clone(), left.clone()]),
            Generator::Cup { ends, layout } => two_letters(*ends, *layout),
            Generator::Cap { .. } | Generator::Counit => SeqObject::empty(),
            Generator::Split { left, right } => SeqObject(vec![left.clone(), right.clone()]),
            Generator::Merge { left, right } => SeqObject::single(PWord::product(left.clone(), right.clone())),
            Generator::Unit => SeqObject::single(PWord::Empty),
            Generator::Assoc { dir, words } => SeqObject::single(assoc_word(*dir, words, false)),
        }
    }

    /// Number of intervals in the domain.
    pub fn dom_len(&self) -> usize {
        match self {
            Generator::Id { .. } | Generator::Split { .. } | Generator::Counit | Generator::Assoc { .. } => 1,
            Generator::Crossing { layout, .. } | Generator::Cap { layout, .. } => match layout {
                Layout::Split => 2,
                Layout::Fused => 1,
            },
            Generator::Virtual { .. } | Generator::Merge { .. } => 2,
            Generator::Cup { .. } | Generator::Unit => 0,
        }
    }

    pub fn cod_len(&self) -> usize {
        match self {
            Generator::Id { .. } | Generator::Merge { .. } | Generator::Unit | Generator::Assoc { .. } => 1,
            Generator::Crossing { layout, .. } | Generator::Cup { layout, .. } => match layout {
                Layout::Split => 2,
                Layout::Fused => 1,
            },
            Generator::Virtual { .. } | Generator::Split { .. } => 2,
            Generator::Cap { .. } | Generator::Counit => 0,
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Generator::Id { .. })
    }

    pub fn is_real_crossing(&self) -> bool {
        matches!(self, Generator::Crossing { .. })
    }

    /// Bracket-bookkeeping generators, absent from the strict category.
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            Generator::Split { .. }
                | Generator::Merge { .. }
                | Generator::Unit
                | Generator::Counit
                | Generator::Assoc { .. }
        )
    }

    /// Orientation problems of this cell on its own.
    pub fn orientation_error(&self) -> Option<String> {
        match self {
            Generator::Cup { ends, .. } if ends[0] == ends[1] => {
                Some(format!("cup must bound opposite orientations, got {}{}", ends[0].as_char(), ends[1].as_char()))
            }
            Generator::Cap { ends, .. } if ends[0] == ends[1] => {
                Some(format!("cap must bound opposite orientations, got {}{}", ends[0].as_char(), ends[1].as_char()))
            }
            _ => None,
        }
    }
}

fn assoc_word(dir: AssocDir, w: &[PWord; 3], source: bool) -> PWord {
    let left = || PWord::product(PWord::product(w[0].clone(), w[1].clone()), w[2].clone());
    let right = || PWord::product(w[0].clone(), PWord::product(w[1].clone(), w[2].clone()));
    match (dir, source) {
        (AssocDir::Forward, true) | (AssocDir::Backward, false) => left(),
        (AssocDir::Forward, false) | (AssocDir::Backward, true) => right(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{Minus as M, Plus as P};

    #[test]
    fn braid_crossing_orientation() {
        // two downward strands, TR–BL over: positive
        assert_eq!(crossing_sign(OverStrand::Slash, [P, P]), CrossSign::Pos);
        assert_eq!(crossing_sign(OverStrand::Backslash, [P, P]), CrossSign::Neg);
        // reversing both strands keeps the sign
        assert_eq!(crossing_sign(OverStrand::Slash, [M, M]), CrossSign::Pos);
        // reversing one strand flips it
        assert_eq!(crossing_sign(OverStrand::Slash, [P, M]), CrossSign::Neg);
    }

    #[test]
    fn over_strand_inverts_sign() {
        for a in Letter::ALL {
            for b in Letter::ALL {
                for s in CrossSign::ALL {
                    assert_eq!(crossing_sign(over_strand(s, [a, b]), [a, b]), s);
                }
            }
        }
    }

    #[test]
    fn typing() {
        let x = Generator::crossing(CrossSign::Pos, P, M);
        assert_eq!(x.dom(), SeqObject::from_letters([P, M]));
        assert_eq!(x.cod(), SeqObject::from_letters([M, P]));
        let fused = Generator::Cup { ends: [P, M], layout: Layout::Fused };
        assert_eq!(fused.cod().len(), 1);
        assert_eq!(fused.cod().num_letters(), 2);
        let split = Generator::Split { left: PWord::Leaf(P), right: PWord::Leaf(M) };
        assert_eq!(split.dom().intervals()[0].to_text(), "+-");
        assert_eq!(split.cod().len(), 2);
        assert_eq!(Generator::Unit.cod(), SeqObject::single(PWord::Empty));
        let w = [PWord::Leaf(P), PWord::Leaf(M), PWord::Leaf(P)];
        let a = Generator::Assoc { dir: AssocDir::Forward, words: w };
        assert_eq!(a.dom().intervals()[0].to_text(), "+-+");
        assert_eq!(a.cod().intervals()[0].to_text(), "+(-+)");
    }

    #[test]
    fn lengths_agree_with_objects() {
        let gens = [
            Generator::id_letter(P),
            Generator::crossing(CrossSign::Neg, M, M),
            Generator::Crossing { sign: CrossSign::Pos, top: [P, P], layout: Layout::Fused },
            Generator::virtual_letters(P, M),
            Generator::cup(M, P),
            Generator::cap(P, M),
            Generator::Split { left: PWord::Empty, right: PWord::Leaf(P) },
            Generator::Merge { left: PWord::Leaf(P), right: PWord::Leaf(P) },
            Generator::Unit,
            Generator::Counit,
        ];
        for g in gens {
            assert_eq!(g.dom_len(), g.dom().len(), "{g:?}");
            assert_eq!(g.cod_len(), g.cod().len(), "{g:?}");
        }
    }
}
