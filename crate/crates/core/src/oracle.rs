//! Kauffman bracket by direct state summation, without matrices.
//!
//! Each real crossing is smoothed one of two ways and the resulting curves
//! are traced through the slices. Virtual crossings are passed straight
//! through. A curve with rotation number `r` is weighted
//! `(-A^2)^r + (-A^-2)^r`; planar curves have `r = ±1`, so for classical
//! diagrams this is the usual `δ` per loop. Curves with other rotation
//! numbers only appear in virtual diagrams, where the invariant is the
//! rotational one (no virtual curl move).

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::terms::{over_strand, Generator, MorphismTerm, OverStrand};

/// Largest number of real crossings [`bracket_oracle`] will enumerate.
pub const MAX_CROSSINGS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

/// One smoothing per real crossing, in cell order (slice by slice, left to
/// right).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateAssignment(pub Vec<Smoothing>);

impl StateAssignment {
    /// State number `mask` of `n`: bit `k` set means crossing `k` takes B.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        StateAssignment((0..n).map(|k| if mask >> k & 1 == 1 { Smoothing::B } else { Smoothing::A }).collect())
    }

    /// `#A - #B`.
    pub fn exponent(&self) -> i32 {
        self.0.iter().map(|s| if *s == Smoothing::A { 1 } else { -1 }).sum()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct Link {
    to: usize,
    /// Signed half turns taken along the link.
    turn: i8,
    /// The link is an arc: vertical direction reverses.
    reverses: bool,
}

struct CrossingSlot {
    level: usize,
    dom: usize,
    cod: usize,
    vertical_is_a: bool,
}

/// Strand skeleton of a term with the crossings left open.
struct Skeleton {
    offsets: Vec<usize>,
    up: Vec<Link>,
    down: Vec<Link>,
    crossings: Vec<CrossingSlot>,
}

impl Skeleton {
    fn new(t: &MorphismTerm) -> Self {
        let mut widths = vec![t.dom().num_letters()];
        widths.extend(t.slices().iter().map(|s| s.cod().num_letters()));
        let mut offsets = Vec::with_capacity(widths.len() + 1);
        let mut total = 0;
        for w in &widths {
            offsets.push(total);
            total += w;
        }
        offsets.push(total);
        let mut sk = Skeleton {
            offsets,
            up: vec![Link::default(); total],
            down: vec![Link::default(); total],
            crossings: Vec::new(),
        };
        for (k, slice) in t.slices().iter().enumerate() {
            let (mut d, mut c) = (0, 0);
            for g in &slice.cells {
                let (dn, cn) = (g.dom().num_letters(), g.cod().num_letters());
                match g {
                    Generator::Virtual { left, right } => {
                        let (p, q) = (left.num_letters(), right.num_letters());
                        for i in 0..p {
                            sk.vertical(k, d + i, c + q + i);
                        }
                        for j in 0..q {
                            sk.vertical(k, d + p + j, c + j);
                        }
                    }
                    Generator::Cup { .. } => sk.upper_arc(k + 1, c),
                    Generator::Cap { .. } => sk.lower_arc(k, d),
                    Generator::Crossing { sign, top, .. } => sk.crossings.push(CrossingSlot {
                        level: k,
                        dom: d,
                        cod: c,
                        vertical_is_a: over_strand(*sign, *top) == OverStrand::Slash,
                    }),
                    _ => {
                        for i in 0..dn {
                            sk.vertical(k, d + i, c + i);
                        }
                    }
                }
                d += dn;
                c += cn;
            }
        }
        sk
    }

    fn node(&self, level: usize, pos: usize) -> usize {
        self.offsets[level] + pos
    }

    fn vertical(&mut self, level: usize, p: usize, q: usize) {
        let (a, b) = (self.node(level, p), self.node(level + 1, q));
        self.down[a] = Link { to: b, turn: 0, reverses: false };
        self.up[b] = Link { to: a, turn: 0, reverses: false };
    }

    /// Arc joining positions `p`, `p + 1` from above (the strands end here).
    fn lower_arc(&mut self, level: usize, p: usize) {
        let (a, b) = (self.node(level, p), self.node(level, p + 1));
        self.down[a] = Link { to: b, turn: 1, reverses: true };
        self.down[b] = Link { to: a, turn: -1, reverses: true };
    }

    /// Arc joining positions `p`, `p + 1` from below (the strands start here).
    fn upper_arc(&mut self, level: usize, p: usize) {
        let (a, b) = (self.node(level, p), self.node(level, p + 1));
        self.up[a] = Link { to: b, turn: -1, reverses: true };
        self.up[b] = Link { to: a, turn: 1, reverses: true };
    }

    fn apply(&mut self, s: &StateAssignment) {
        for k in 0..self.crossings.len() {
            let CrossingSlot { level, dom, cod, vertical_is_a } = self.crossings[k];
            if (s.0[k] == Smoothing::A) == vertical_is_a {
                self.vertical(level, dom, cod);
                self.vertical(level, dom + 1, cod + 1);
            } else {
                self.lower_arc(level, dom);
                self.upper_arc(level + 1, cod);
            }
        }
    }

    /// Rotation numbers of all curves.
    fn rotations(&self) -> Vec<i64> {
        let n = self.up.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut cur, mut down, mut half_turns) = (start, true, 0i64);
            loop {
                seen[cur] = true;
                let link = if down { self.down[cur] } else { self.up[cur] };
                half_turns += i64::from(link.turn);
                down ^= link.reverses;
                cur = link.to;
                if cur == start {
                    break;
                }
            }
            debug_assert!(half_turns % 2 == 0);
            out.push(half_turns / 2);
        }
        out
    }

    fn count_loops(&self) -> usize {
        let n = self.up.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for v in 0..n {
            for l in [self.up[v], self.down[v]] {
                let (a, b) = (root(&mut parent, v), root(&mut parent, l.to));
                parent[a] = b;
            }
        }
        (0..n).filter(|&v| root(&mut parent, v) == v).count()
    }
}

fn check_closed(t: &MorphismTerm) -> Result<()> {
    if t.is_closed() {
        Ok(())
    } else {
        Err(Error::NotClosed { dom: t.dom().clone(), cod: t.cod().clone() })
    }
}

/// Number of curves left after smoothing every real crossing as `s` says.
pub fn loop_count(t: &MorphismTerm, s: &StateAssignment) -> Result<usize> {
    check_closed(t)?;
    let mut sk = Skeleton::new(t);
    assert_eq!(s.0.len(), sk.crossings.len(), "state must cover every real crossing");
    sk.apply(s);
    Ok(sk.count_loops())
}

/// Rotation numbers of the curves of state `s`.
pub fn loop_rotations(t: &MorphismTerm, s: &StateAssignment) -> Result<Vec<i64>> {
    check_closed(t)?;
    let mut sk = Skeleton::new(t);
    assert_eq!(s.0.len(), sk.crossings.len(), "state must cover every real crossing");
    sk.apply(s);
    Ok(sk.rotations())
}

/// Weight of a curve with rotation number `r`: `(-A^2)^r + (-A^-2)^r`.
pub fn loop_weight(r: i64) -> LaurentPoly {
    let r = r.unsigned_abs() as i32;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    if r == 0 {
        LaurentPoly::constant(2)
    } else {
        LaurentPoly::from_int_terms([(2 * r, sign), (-2 * r, sign)])
    }
}

/// Unnormalized bracket of a closed term as a sum over all smoothings.
pub fn bracket_oracle(t: &MorphismTerm) -> Result<LaurentPoly> {
    check_closed(t)?;
    let mut sk = Skeleton::new(t);
    let c = sk.crossings.len();
    if c > MAX_CROSSINGS {
        return Err(Error::TooManyCrossings(c));
    }
    // group states by A-exponent and the multiset of |rotation|
    let mut classes: HashMap<(i32, Vec<u64>), i64> = HashMap::new();
    for mask in 0..1u64 << c {
        let s = StateAssignment::from_mask(c, mask);
        sk.apply(&s);
        let mut rs: Vec<u64> = sk.rotations().into_iter().map(i64::unsigned_abs).collect();
        rs.sort_unstable();
        *classes.entry((s.exponent(), rs)).or_default() += 1;
    }
    let mut total = LaurentPoly::zero();
    for ((exp, rs), count) in classes {
        let mut p = LaurentPoly::int_monomial(count, exp);
        for r in rs {
            p = &p * &loop_weight(r as i64);
        }
        total += &p;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{compile_gauss, parse_gauss, parse_term};
    use num_traits::One;

    fn gauss(text: &str) -> MorphismTerm {
        compile_gauss(&parse_gauss(text).unwrap())
    }

    fn poly(text: &str) -> LaurentPoly {
        text.parse().unwrap()
    }

    #[test]
    fn unknot_and_unlink() {
        let unknot = parse_term("U(+|-)\nC(+|-)\n").unwrap();
        assert_eq!(bracket_oracle(&unknot).unwrap(), LaurentPoly::delta());
        let empty = StateAssignment(vec![]);
        assert_eq!(loop_count(&unknot, &empty).unwrap(), 1);
        assert_eq!(loop_count(&gauss("(),()"), &empty).unwrap(), 2);
        assert_eq!(bracket_oracle(&gauss("(),()")).unwrap(), LaurentPoly::delta().pow(2));
        assert_eq!(bracket_oracle(&MorphismTerm::empty()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn curl_smoothings() {
        // A positive curl: one smoothing leaves one curve, the other two.
        let curl = gauss("O1+U1+");
        let a = loop_count(&curl, &StateAssignment(vec![Smoothing::A])).unwrap();
        let b = loop_count(&curl, &StateAssignment(vec![Smoothing::B])).unwrap();
        assert_eq!((a.min(b), a.max(b)), (1, 2));
        // framing factor -A^3 times the loop
        assert_eq!(bracket_oracle(&curl).unwrap(), LaurentPoly::delta() * LaurentPoly::int_monomial(-1, 3));
        let neg = gauss("O1-U1-");
        assert_eq!(bracket_oracle(&neg).unwrap(), LaurentPoly::delta() * LaurentPoly::int_monomial(-1, -3));
    }

    #[test]
    fn hopf_by_hand() {
        // states AA, BB give two curves, AB and BA one:
        // A^2 δ^2 + A^-2 δ^2 + 2δ = A^6 + A^2 + A^-2 + A^-6
        assert_eq!(bracket_oracle(&gauss("O1+U2+,U1+O2+")).unwrap(), poly("A^6 + A^2 + A^-2 + A^-6"));
    }

    #[test]
    fn virtual_curl_loop_has_rotation_zero() {
        let t = parse_term("U(+|-)\nV(+|-)\nC(-|+)\n").unwrap();
        assert_eq!(loop_rotations(&t, &StateAssignment(vec![])).unwrap(), vec![0]);
        assert_eq!(bracket_oracle(&t).unwrap(), LaurentPoly::constant(2));
    }

    #[test]
    fn open_terms_and_limits() {
        let open = parse_term("[+]\n").unwrap();
        assert!(matches!(bracket_oracle(&open), Err(Error::NotClosed { .. })));
        let labels: Vec<String> = (1..=21).map(|k| format!("O{k}+U{k}+")).collect();
        let big = gauss(&labels.concat());
        assert!(matches!(bracket_oracle(&big), Err(Error::TooManyCrossings(21))));
    }
}
