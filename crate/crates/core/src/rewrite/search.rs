//! Bounded breadth-first search for a chain of moves between two terms.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::terms::MorphismTerm;

use super::matching::{apply_move, find_matches, MatchLocation};
use super::moves::{all_moves, Move, MoveId};
use super::simplify::{simplify_traced, simplifying_moves};

/// One move application along a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub id: MoveId,
    pub variant: usize,
    pub forward: bool,
    pub location: MatchLocation,
}

/// Evidence that two terms are equal: replaying `left` on the first term
/// and `right` on the second reaches the same term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub left: Vec<Step>,
    pub right: Vec<Step>,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Replays both sides and compares.
    pub fn check(&self, t1: &MorphismTerm, t2: &MorphismTerm) -> Result<bool> {
        Ok(replay(t1, &self.left)? == replay(t2, &self.right)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equal(Certificate),
    /// Not found within the budget; says nothing about inequality.
    Unknown,
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal(_))
    }
}

/// Simplifies both terms, then searches from the first for the second over
/// all moves in both directions, expanding at most `budget` terms.
pub fn equivalent_bounded(t1: &MorphismTerm, t2: &MorphismTerm, budget: usize) -> Result<Equivalence> {
    if t1.dom() != t2.dom() {
        return Err(Error::BoundaryMismatch { left: t1.dom().clone(), right: t2.dom().clone() });
    }
    if t1.cod() != t2.cod() {
        return Err(Error::BoundaryMismatch { left: t1.cod().clone(), right: t2.cod().clone() });
    }
    let simplifying = simplifying_moves();
    let (start, left) = simplify_traced(t1, &simplifying);
    let (goal, right) = simplify_traced(t2, &simplifying);
    let mut cert = Certificate {
        left: left.into_iter().map(|(m, loc)| step_of(&m, loc)).collect(),
        right: right.into_iter().map(|(m, loc)| step_of(&m, loc)).collect(),
    };
    if start == goal {
        return Ok(Equivalence::Equal(cert));
    }
    let moves = all_moves();
    // each reached term remembers its parent and the step taken
    let mut parent: HashMap<MorphismTerm, Option<(MorphismTerm, Step)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    let mut expanded = 0;
    while let Some(cur) = queue.pop_front() {
        if expanded >= budget {
            break;
        }
        expanded += 1;
        for m in &moves {
            for loc in find_matches(&cur, m) {
                let next = apply_move(&cur, m, &loc)?;
                if parent.contains_key(&next) {
                    continue;
                }
                let step = step_of(m, loc);
                let found = next == goal;
                parent.insert(next.clone(), Some((cur.clone(), step)));
                if found {
                    cert.left.extend(path_to(&parent, &next));
                    return Ok(Equivalence::Equal(cert));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(Equivalence::Unknown)
}

fn step_of(m: &Move, location: MatchLocation) -> Step {
    Step { id: m.id, variant: m.variant, forward: m.forward, location }
}

fn path_to(parent: &HashMap<MorphismTerm, Option<(MorphismTerm, Step)>>, end: &MorphismTerm) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut cur = end;
    while let Some(Some((prev, step))) = parent.get(cur) {
        steps.push(step.clone());
        cur = prev;
    }
    steps.reverse();
    steps
}

/// Looks up the move a step refers to.
pub fn move_for(step: &Step) -> Option<Move> {
    super::moves::moves_of(step.id).into_iter().find(|m| m.variant == step.variant && m.forward == step.forward)
}

/// Applies a path to a term. Locations refer to terms without identity
/// slices, so those are removed first.
pub fn replay(t: &MorphismTerm, path: &[Step]) -> Result<MorphismTerm> {
    let mut cur = t.elide_identities();
    for step in path {
        let m = move_for(step).ok_or(Error::InvalidLocation {
            slice_index: step.location.slice_index,
            cell_offset: step.location.cell_offset,
        })?;
        cur = apply_move(&cur, &m, &step.location)?;
    }
    Ok(cur)
}
