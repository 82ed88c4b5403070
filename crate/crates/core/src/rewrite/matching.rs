//! Locating move patterns inside terms and replacing them.
//!
//! A pattern occupies consecutive slices. In its first slice it is a run of
//! cells starting at `cell_offset`; in each later slice it is the run of
//! cells whose domain starts at the interval where the previous run's
//! codomain started. Zero-width cells (cups, units) can make that start
//! ambiguous, so a location records the chosen run start for every slice.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::terms::{Generator, MorphismTerm, Slice};

use super::moves::Move;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MatchLocation {
    pub slice_index: usize,
    pub cell_offset: usize,
    pub variant: usize,
    /// Run start in every matched slice; `starts[0] == cell_offset`.
    pub starts: Vec<usize>,
}

fn dom_offset(cells: &[Generator]) -> usize {
    cells.iter().map(Generator::dom_len).sum()
}

fn cod_offset(cells: &[Generator]) -> usize {
    cells.iter().map(Generator::cod_len).sum()
}

fn run_matches(slice: &Slice, start: usize, pattern: &Slice) -> bool {
    slice.cells.len() >= start + pattern.cells.len()
        && slice.cells[start..start + pattern.cells.len()] == pattern.cells[..]
}

/// Cell indices `j` of `slice` whose domain offset is `offset`.
fn starts_at(slice: &Slice, offset: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut acc = 0;
    for j in 0..=slice.cells.len() {
        if acc == offset {
            out.push(j);
        }
        if acc > offset || j == slice.cells.len() {
            break;
        }
        acc += slice.cells[j].dom_len();
    }
    out
}

fn extend(t: &MorphismTerm, pat: &[Slice], s: usize, starts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let k = starts.len();
    if k == pat.len() {
        out.push(starts.clone());
        return;
    }
    let prev = &t.slices()[s + k - 1];
    let offset = cod_offset(&prev.cells[..starts[k - 1]]);
    let slice = &t.slices()[s + k];
    for j in starts_at(slice, offset) {
        if run_matches(slice, j, &pat[k]) {
            starts.push(j);
            extend(t, pat, s, starts, out);
            starts.pop();
        }
    }
}

/// Every match of `m.lhs` in `t`, top to bottom then left to right.
pub fn find_matches(t: &MorphismTerm, m: &Move) -> Vec<MatchLocation> {
    let pat = m.lhs.slices();
    let mut out = Vec::new();
    if pat.is_empty() || t.slices().len() < pat.len() {
        return out;
    }
    for s in 0..=t.slices().len() - pat.len() {
        let slice = &t.slices()[s];
        for c in 0..=slice.cells.len() {
            if !run_matches(slice, c, &pat[0]) {
                continue;
            }
            let mut runs = Vec::new();
            extend(t, pat, s, &mut vec![c], &mut runs);
            out.extend(runs.into_iter().map(|starts| MatchLocation {
                slice_index: s,
                cell_offset: c,
                variant: m.variant,
                starts,
            }));
        }
    }
    out
}

/// Replaces the match at `loc` by `m.rhs`, then drops identity slices.
pub fn apply_move(t: &MorphismTerm, m: &Move, loc: &MatchLocation) -> Result<MorphismTerm> {
    let invalid = || Error::InvalidLocation { slice_index: loc.slice_index, cell_offset: loc.cell_offset };
    let pat = m.lhs.slices();
    let s = loc.slice_index;
    if loc.variant != m.variant
        || loc.starts.len() != pat.len()
        || loc.starts.first() != Some(&loc.cell_offset)
        || s + pat.len() > t.slices().len()
    {
        return Err(invalid());
    }
    for (k, (&j, p)) in loc.starts.iter().zip(pat).enumerate() {
        let slice = &t.slices()[s + k];
        if !run_matches(slice, j, p) {
            return Err(invalid());
        }
        if k > 0 {
            let prev = &t.slices()[s + k - 1];
            if cod_offset(&prev.cells[..loc.starts[k - 1]]) != dom_offset(&slice.cells[..j]) {
                return Err(invalid());
            }
        }
    }

    let mut left = Vec::new();
    let mut right = Vec::new();
    for (k, (&j, p)) in loc.starts.iter().zip(pat).enumerate() {
        let cells = &t.slices()[s + k].cells;
        left.push(Slice::new(cells[..j].to_vec()));
        right.push(Slice::new(cells[j + p.cells.len()..].to_vec()));
    }
    let column = |slices: Vec<Slice>| {
        let dom = slices[0].dom();
        let cod = slices.last().expect("pattern has a slice").cod();
        MorphismTerm::from_parts(dom, cod, slices)
    };
    let section = column(left).tensor(&m.rhs).tensor(&column(right));

    let mut slices: Vec<Slice> = t.slices()[..s].to_vec();
    slices.extend(section.into_slices());
    slices.extend_from_slice(&t.slices()[s + pat.len()..]);
    let out = MorphismTerm::from_parts(t.dom().clone(), t.cod().clone(), slices).elide_identities();
    debug_assert!(out.validate().is_ok(), "rewrite produced an invalid term");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_term;
    use crate::rewrite::moves::{moves_of, MoveId};

    fn first(id: MoveId) -> Move {
        moves_of(id).into_iter().find(|m| m.forward).unwrap()
    }

    fn forward(id: MoveId) -> Vec<Move> {
        moves_of(id).into_iter().filter(|m| m.forward).collect()
    }

    #[test]
    fn vr2_pair_matches_once() {
        let t = parse_term("V(+|+)\nV(+|+)\n").unwrap();
        let found: Vec<_> = forward(MoveId::Vr2).iter().flat_map(|m| find_matches(&t, m)).collect();
        assert_eq!(found.len(), 1);
        let m = &forward(MoveId::Vr2)[found[0].variant];
        let out = apply_move(&t, m, &found[0]).unwrap();
        assert_eq!(out, MorphismTerm::identity(t.dom().clone()));
    }

    #[test]
    fn identity_term_has_no_matches() {
        let t = MorphismTerm::identity(crate::parser::parse_object("[+][-]").unwrap());
        for m in crate::rewrite::all_moves() {
            assert!(find_matches(&t, &m).is_empty(), "{m}");
        }
    }

    #[test]
    fn tear_and_unit_counit() {
        let t = parse_term("M(+|-)\nS(+|-)\n").unwrap();
        let m = forward(MoveId::Tear).into_iter().find(|m| !find_matches(&t, m).is_empty()).unwrap();
        let loc = &find_matches(&t, &m)[0];
        assert_eq!(apply_move(&t, &m, loc).unwrap(), MorphismTerm::identity(t.dom().clone()));

        let t = parse_term("unit\ncounit\n").unwrap();
        let m = first(MoveId::UnitCounit);
        let loc = &find_matches(&t, &m)[0];
        assert_eq!(apply_move(&t, &m, loc).unwrap(), MorphismTerm::empty());
    }

    #[test]
    fn matches_inside_context() {
        // a VR2 pair with a cup squeezed in to its left
        let t = parse_term("[+] V(+|-) [+]\nU(+|-) [+] V(-|+) [+]\n").unwrap();
        let ms = forward(MoveId::Vr2);
        let m = ms.iter().find(|m| !find_matches(&t, m).is_empty()).unwrap();
        let locs = find_matches(&t, m);
        assert_eq!(locs.len(), 1);
        assert_eq!(locs[0].starts, vec![1, 2]);
        let out = apply_move(&t, m, &locs[0]).unwrap();
        assert_eq!(out, parse_term("U(+|-) [+] [+] [-] [+]\n").unwrap());
    }

    #[test]
    fn bad_locations_are_rejected() {
        let t = parse_term("V(+|+)\nV(+|+)\n").unwrap();
        let m = &forward(MoveId::Vr2)[0];
        let loc = MatchLocation { slice_index: 1, cell_offset: 0, variant: m.variant, starts: vec![0] };
        assert!(matches!(apply_move(&t, m, &loc), Err(Error::InvalidLocation { .. })));
    }
}
