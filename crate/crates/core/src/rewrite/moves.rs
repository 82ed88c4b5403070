//! The relation library: every relation as an explicit list of
//! orientation variants, each usable in both directions.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::terms::{
    build_symmetry, crossing_sign, AssocDir, CrossSign, Generator, Letter, MorphismTerm, OverStrand, PWord, SeqObject,
    Slice,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveId {
    R1Framed,
    R2,
    R3,
    Vr2,
    Vr3,
    Mixed,
    Zigzag,
    Puncture,
    Tear,
    UnitCounit,
    AssocCancel,
    Exchange,
}

impl MoveId {
    pub const ALL: [MoveId; 12] = [
        MoveId::R1Framed,
        MoveId::R2,
        MoveId::R3,
        MoveId::Vr2,
        MoveId::Vr3,
        MoveId::Mixed,
        MoveId::Zigzag,
        MoveId::Puncture,
        MoveId::Tear,
        MoveId::UnitCounit,
        MoveId::AssocCancel,
        MoveId::Exchange,
    ];

    /// Stable name, as accepted on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            MoveId::R1Framed => "r1-framed",
            MoveId::R2 => "r2",
            MoveId::R3 => "r3",
            MoveId::Vr2 => "vr2",
            MoveId::Vr3 => "vr3",
            MoveId::Mixed => "mixed",
            MoveId::Zigzag => "zigzag",
            MoveId::Puncture => "puncture",
            MoveId::Tear => "tear",
            MoveId::UnitCounit => "unit-counit",
            MoveId::AssocCancel => "assoc-cancel",
            MoveId::Exchange => "exchange",
        }
    }

    /// Whether the forward direction is one of the simplifier's
    /// size-decreasing rules.
    pub fn simplifies(self) -> bool {
        matches!(
            self,
            MoveId::Vr2 | MoveId::R2 | MoveId::UnitCounit | MoveId::Puncture | MoveId::Tear | MoveId::AssocCancel
        )
    }
}

impl fmt::Display for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for MoveId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for MoveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MoveId::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| Error::Syntax {
            line: 1,
            column: 1,
            message: format!("unknown move '{s}'"),
        })
    }
}

/// One oriented variant of a relation, read in one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub id: MoveId,
    pub variant: usize,
    /// `true` when `lhs → rhs` is the relation as listed (the reducing side
    /// first, where there is one).
    pub forward: bool,
    pub lhs: MorphismTerm,
    pub rhs: MorphismTerm,
}

impl Move {
    pub fn reversed(&self) -> Move {
        Move { forward: !self.forward, lhs: self.rhs.clone(), rhs: self.lhs.clone(), ..*self }
    }

    pub fn is_simplifying(&self) -> bool {
        self.forward && self.id.simplifies()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.forward { "" } else { "^-1" };
        write!(f, "{}#{}{}", self.id, self.variant, dir)
    }
}

fn letters2() -> impl Iterator<Item = (Letter, Letter)> {
    Letter::ALL.into_iter().flat_map(|a| Letter::ALL.into_iter().map(move |b| (a, b)))
}

fn letters3() -> impl Iterator<Item = [Letter; 3]> {
    letters2().flat_map(|(a, b)| Letter::ALL.into_iter().map(move |c| [a, b, c]))
}

fn leaf(l: Letter) -> PWord {
    PWord::Leaf(l)
}

fn ids(letters: &[Letter]) -> impl Iterator<Item = Generator> + '_ {
    letters.iter().map(|&l| Generator::id_letter(l))
}

fn term(dom: SeqObject, slices: Vec<Vec<Generator>>) -> MorphismTerm {
    MorphismTerm::new(dom, slices.into_iter().map(Slice::new).collect()).expect("move pattern typechecks")
}

/// A single identity slice: the explicit "nothing happens" side of a move.
fn identity_side(dom: &SeqObject) -> MorphismTerm {
    MorphismTerm::new(dom.clone(), vec![Slice::identity(dom)]).expect("identity typechecks")
}

#[derive(Clone, Copy)]
struct Strand {
    letter: Letter,
    height: u8,
}

#[derive(Clone, Copy)]
enum Op {
    Real(usize),
    Virtual(usize),
}

/// Stacks crossings of adjacent one-letter strands; real crossings take
/// their over strand from the heights and their sign from the geometry.
fn braid(strands: &[Strand], ops: &[Op]) -> MorphismTerm {
    let dom = SeqObject::from_letters(strands.iter().map(|s| s.letter));
    let mut cur = strands.to_vec();
    let mut slices = Vec::new();
    for &op in ops {
        let p = match op {
            Op::Real(p) | Op::Virtual(p) => p,
        };
        let (x, y) = (cur[p], cur[p + 1]);
        let g = match op {
            Op::Real(_) => {
                let over = if x.height > y.height { OverStrand::Backslash } else { OverStrand::Slash };
                let top = [x.letter, y.letter];
                Generator::crossing(crossing_sign(over, top), x.letter, y.letter)
            }
            Op::Virtual(_) => Generator::virtual_letters(x.letter, y.letter),
        };
        let letters: Vec<Letter> = cur.iter().map(|s| s.letter).collect();
        let mut cells: Vec<Generator> = ids(&letters[..p]).collect();
        cells.push(g);
        cells.extend(ids(&letters[p + 2..]));
        slices.push(cells);
        cur.swap(p, p + 1);
    }
    term(dom, slices)
}

fn strands(letters: &[Letter], heights: &[u8]) -> Vec<Strand> {
    letters.iter().zip(heights).map(|(&letter, &height)| Strand { letter, height }).collect()
}

const HEIGHT_ORDERS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn r2() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut out = Vec::new();
    for (a, b) in letters2() {
        for heights in [[1, 0], [0, 1]] {
            let s = strands(&[a, b], &heights);
            out.push((braid(&s, &[Op::Real(0), Op::Real(0)]), identity_side(&SeqObject::from_letters([a, b]))));
        }
    }
    out
}

fn r3() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut out = Vec::new();
    for ls in letters3() {
        for h in HEIGHT_ORDERS {
            let s = strands(&ls, &h);
            out.push((
                braid(&s, &[Op::Real(0), Op::Real(1), Op::Real(0)]),
                braid(&s, &[Op::Real(1), Op::Real(0), Op::Real(1)]),
            ));
        }
    }
    out
}

fn vr2() -> Vec<(MorphismTerm, MorphismTerm)> {
    letters2()
        .map(|(a, b)| {
            let s = strands(&[a, b], &[0, 0]);
            (braid(&s, &[Op::Virtual(0), Op::Virtual(0)]), identity_side(&SeqObject::from_letters([a, b])))
        })
        .collect()
}

fn vr3() -> Vec<(MorphismTerm, MorphismTerm)> {
    letters3()
        .map(|ls| {
            let s = strands(&ls, &[0, 0, 0]);
            (
                braid(&s, &[Op::Virtual(0), Op::Virtual(1), Op::Virtual(0)]),
                braid(&s, &[Op::Virtual(1), Op::Virtual(0), Op::Virtual(1)]),
            )
        })
        .collect()
}

/// The first strand passes virtually across a real crossing of the others.
fn mixed() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut out = Vec::new();
    for ls in letters3() {
        for h in [[0, 1, 0], [0, 0, 1]] {
            let s = strands(&ls, &h);
            out.push((
                braid(&s, &[Op::Virtual(0), Op::Virtual(1), Op::Real(0)]),
                braid(&s, &[Op::Real(1), Op::Virtual(0), Op::Virtual(1)]),
            ));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// A kink on a `[a]` strand, on the given side, with a crossing of sign `s`.
fn curl(a: Letter, side: Side, s: CrossSign) -> MorphismTerm {
    let x = Generator::crossing(s, a, a);
    let dom = SeqObject::from_letters([a]);
    match side {
        Side::Right => term(
            dom,
            vec![
                vec![Generator::id_letter(a), Generator::cup(a, !a)],
                vec![x, Generator::id_letter(!a)],
                vec![Generator::id_letter(a), Generator::cap(a, !a)],
            ],
        ),
        Side::Left => term(
            dom,
            vec![
                vec![Generator::cup(!a, a), Generator::id_letter(a)],
                vec![Generator::id_letter(!a), x],
                vec![Generator::cap(!a, a), Generator::id_letter(a)],
            ],
        ),
    }
}

fn r1_framed() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut out = Vec::new();
    for a in Letter::ALL {
        for first in CrossSign::ALL {
            for s1 in [Side::Left, Side::Right] {
                for s2 in [Side::Left, Side::Right] {
                    let lhs = curl(a, s1, first).compose(&curl(a, s2, first.flip())).expect("curls compose");
                    out.push((lhs, identity_side(&SeqObject::from_letters([a]))));
                }
            }
        }
    }
    out
}

fn zigzag() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut out = Vec::new();
    for a in Letter::ALL {
        let dom = SeqObject::from_letters([a]);
        let s = term(
            dom.clone(),
            vec![
                vec![Generator::cup(a, !a), Generator::id_letter(a)],
                vec![Generator::id_letter(a), Generator::cap(!a, a)],
            ],
        );
        let z = term(
            dom.clone(),
            vec![
                vec![Generator::id_letter(a), Generator::cup(!a, a)],
                vec![Generator::cap(a, !a), Generator::id_letter(a)],
            ],
        );
        out.push((s, identity_side(&dom)));
        out.push((z, identity_side(&dom)));
    }
    out
}

/// Split then merge: a puncture healed.
fn puncture() -> Vec<(MorphismTerm, MorphismTerm)> {
    letters2()
        .map(|(a, b)| {
            let (l, r) = (leaf(a), leaf(b));
            let dom = SeqObject::single(PWord::product(l.clone(), r.clone()));
            let lhs = term(
                dom.clone(),
                vec![
                    vec![Generator::Split { left: l.clone(), right: r.clone() }],
                    vec![Generator::Merge { left: l, right: r }],
                ],
            );
            (lhs, identity_side(&dom))
        })
        .collect()
}

/// Merge then split: a tear glued back.
fn tear() -> Vec<(MorphismTerm, MorphismTerm)> {
    letters2()
        .map(|(a, b)| {
            let (l, r) = (leaf(a), leaf(b));
            let dom = SeqObject::from_letters([a, b]);
            let lhs = term(
                dom.clone(),
                vec![
                    vec![Generator::Merge { left: l.clone(), right: r.clone() }],
                    vec![Generator::Split { left: l, right: r }],
                ],
            );
            (lhs, identity_side(&dom))
        })
        .collect()
}

fn unit_counit() -> Vec<(MorphismTerm, MorphismTerm)> {
    let empty = SeqObject::empty();
    let unit_obj = SeqObject::single(PWord::Empty);
    vec![
        (term(empty.clone(), vec![vec![Generator::Unit], vec![Generator::Counit]]), identity_side(&empty)),
        (term(unit_obj.clone(), vec![vec![Generator::Counit], vec![Generator::Unit]]), identity_side(&unit_obj)),
    ]
}

fn assoc_cancel() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut out = Vec::new();
    for first in [AssocDir::Forward, AssocDir::Backward] {
        let second = match first {
            AssocDir::Forward => AssocDir::Backward,
            AssocDir::Backward => AssocDir::Forward,
        };
        for ls in letters3() {
            let words = ls.map(leaf);
            let a = Generator::Assoc { dir: first, words: words.clone() };
            let b = Generator::Assoc { dir: second, words };
            let dom = a.dom();
            out.push((term(dom.clone(), vec![vec![a], vec![b]]), identity_side(&dom)));
        }
    }
    out
}

/// Generators slid through a virtual crossing with a one-letter strand.
fn exchange() -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut gens = Vec::new();
    for s in CrossSign::ALL {
        for (a, b) in letters2() {
            gens.push(Generator::crossing(s, a, b));
        }
    }
    for a in Letter::ALL {
        gens.push(Generator::cup(a, !a));
        gens.push(Generator::cap(a, !a));
    }
    for (a, b) in letters2() {
        gens.push(Generator::Split { left: leaf(a), right: leaf(b) });
        gens.push(Generator::Merge { left: leaf(a), right: leaf(b) });
    }
    gens.extend([Generator::Unit, Generator::Counit]);
    for [a, b, c] in letters3() {
        for dir in [AssocDir::Forward, AssocDir::Backward] {
            gens.push(Generator::Assoc { dir, words: [leaf(a), leaf(b), leaf(c)] });
        }
    }
    let mut out = Vec::new();
    for g in &gens {
        let (x, y) = (g.dom(), g.cod());
        let cell = MorphismTerm::generator(g.clone());
        for c in Letter::ALL {
            let strand = MorphismTerm::identity(SeqObject::from_letters([c]));
            let cobj = SeqObject::from_letters([c]);
            // c on the right, moving to the left
            let lhs = cell.tensor(&strand).compose(&build_symmetry(&y, &cobj)).expect("exchange typechecks");
            let rhs = build_symmetry(&x, &cobj).compose(&strand.tensor(&cell)).expect("exchange typechecks");
            out.push((lhs, rhs));
            // c on the left, moving to the right
            let lhs = strand.tensor(&cell).compose(&build_symmetry(&cobj, &y)).expect("exchange typechecks");
            let rhs = build_symmetry(&cobj, &x).compose(&cell.tensor(&strand)).expect("exchange typechecks");
            out.push((lhs, rhs));
        }
    }
    out
}

/// The variants of one relation as `(lhs, rhs)` pairs.
pub fn relation(id: MoveId) -> Vec<(MorphismTerm, MorphismTerm)> {
    match id {
        MoveId::R1Framed => r1_framed(),
        MoveId::R2 => r2(),
        MoveId::R3 => r3(),
        MoveId::Vr2 => vr2(),
        MoveId::Vr3 => vr3(),
        MoveId::Mixed => mixed(),
        MoveId::Zigzag => zigzag(),
        MoveId::Puncture => puncture(),
        MoveId::Tear => tear(),
        MoveId::UnitCounit => unit_counit(),
        MoveId::AssocCancel => assoc_cancel(),
        MoveId::Exchange => exchange(),
    }
}

/// Both directions of every variant of one relation.
pub fn moves_of(id: MoveId) -> Vec<Move> {
    relation(id)
        .into_iter()
        .enumerate()
        .flat_map(|(variant, (lhs, rhs))| {
            let m = Move { id, variant, forward: true, lhs, rhs };
            let r = m.reversed();
            [m, r]
        })
        .collect()
}

/// The whole library, both directions.
pub fn all_moves() -> Vec<Move> {
    MoveId::ALL.into_iter().flat_map(moves_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_counts() {
        let counts: Vec<(MoveId, usize)> = MoveId::ALL.into_iter().map(|m| (m, relation(m).len())).collect();
        assert_eq!(
            counts,
            vec![
                (MoveId::R1Framed, 16),
                (MoveId::R2, 8),
                (MoveId::R3, 48),
                (MoveId::Vr2, 4),
                (MoveId::Vr3, 8),
                (MoveId::Mixed, 16),
                (MoveId::Zigzag, 4),
                (MoveId::Puncture, 4),
                (MoveId::Tear, 4),
                (MoveId::UnitCounit, 2),
                (MoveId::AssocCancel, 16),
                (MoveId::Exchange, 152),
            ]
        );
    }

    #[test]
    fn sides_share_boundaries() {
        for m in all_moves() {
            assert!(m.lhs.validate().is_ok() && m.rhs.validate().is_ok(), "{m}");
            assert_eq!(m.lhs.dom(), m.rhs.dom(), "{m}");
            assert_eq!(m.lhs.cod(), m.rhs.cod(), "{m}");
            assert!(!m.lhs.slices().is_empty(), "{m}");
        }
    }

    #[test]
    fn r2_second_crossing_is_the_inverse() {
        for (lhs, _) in r2() {
            let w = lhs.writhe();
            assert_eq!(w, 0);
        }
    }

    #[test]
    fn names_round_trip() {
        for m in MoveId::ALL {
            assert_eq!(m.as_str().parse::<MoveId>().unwrap(), m);
        }
        assert!("vr1".parse::<MoveId>().is_err());
    }
}
