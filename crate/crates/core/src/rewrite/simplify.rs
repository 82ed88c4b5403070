//! Terminating simplification by the size-decreasing moves.

use crate::terms::MorphismTerm;

use super::matching::{apply_move, find_matches, MatchLocation};
use super::moves::{all_moves, Move};

/// The moves [`simplify`] uses, in the order it tries them.
pub fn simplifying_moves() -> Vec<Move> {
    all_moves().into_iter().filter(Move::is_simplifying).collect()
}

/// Applies simplifying moves until none matches. Each application removes
/// at least one non-identity cell, so this terminates.
pub fn simplify(t: &MorphismTerm) -> MorphismTerm {
    simplify_with(t, &simplifying_moves())
}

pub(crate) fn simplify_with(t: &MorphismTerm, moves: &[Move]) -> MorphismTerm {
    simplify_traced(t, moves).0
}

/// Like [`simplify_with`], also returning the moves applied (to the term
/// with identity slices removed).
pub(crate) fn simplify_traced(t: &MorphismTerm, moves: &[Move]) -> (MorphismTerm, Vec<(Move, MatchLocation)>) {
    let mut cur = t.elide_identities();
    let mut trace = Vec::new();
    'outer: loop {
        for m in moves {
            if let Some(loc) = find_matches(&cur, m).into_iter().next() {
                let next = apply_move(&cur, m, &loc).expect("fresh match applies");
                debug_assert!(next.non_identity_count() < cur.non_identity_count());
                cur = next;
                trace.push((m.clone(), loc));
                continue 'outer;
            }
        }
        return (cur, trace);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{compile_gauss, parse_gauss, parse_term};

    #[test]
    fn examples() {
        let vv = parse_term("V(+|-)\nV(-|+)\n").unwrap();
        assert_eq!(simplify(&vv), MorphismTerm::identity(vv.dom().clone()));
        let r2 = parse_term("X+(+|+)\nX-(+|+)\n").unwrap();
        assert_eq!(simplify(&r2), MorphismTerm::identity(r2.dom().clone()));
        let trefoil = compile_gauss(&parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap());
        assert_eq!(simplify(&trefoil), trefoil);
    }

    #[test]
    fn nested_cancellations() {
        let t = parse_term("V(+|-)\nX+(-|+)\nX-(+|-)\nV(-|+)\n").unwrap();
        assert_eq!(simplify(&t), MorphismTerm::identity(t.dom().clone()));
    }

    #[test]
    fn only_simplifying_moves() {
        assert!(simplifying_moves()
            .iter()
            .all(|m| m.forward && m.lhs.non_identity_count() > m.rhs.non_identity_count()));
    }
}
