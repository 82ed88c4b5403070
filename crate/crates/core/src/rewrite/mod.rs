//! Relations as rewrite moves, a simplifier and a bounded equivalence search.

mod matching;
mod moves;
mod search;
mod simplify;

pub use matching::{apply_move, find_matches, MatchLocation};
pub use moves::{all_moves, moves_of, relation, Move, MoveId};
pub use search::{equivalent_bounded, move_for, replay, Certificate, Equivalence, Step};
pub use simplify::{simplify, simplifying_moves};
