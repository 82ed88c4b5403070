//! Gauss code to sliced term.
//!
//! The sweep keeps the current bottom boundary as a list of open strand
//! ends. Every crossing is emitted as a `[+][+]` crossing with both
//! incoming strands on top. An incoming edge that is not open yet is born
//! with a cup; its upward end waits until the crossing that emits the edge
//! closes it with a cap. Ends are brought next to each other with virtual
//! crossings, always moving the right end leftward.

use crate::terms::{CrossSign, Generator, Letter, MorphismTerm, PWord, SeqObject, Slice};

use super::gauss::{GaussCode, Layer};

/// Edge `(component, i)` runs from pass `i` to pass `i + 1` (cyclically).
type EdgeId = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct End {
    edge: EdgeId,
    /// `Plus`: flows down into what follows; `Minus`: waits to be fed from below.
    letter: Letter,
}

struct Sweep {
    boundary: Vec<End>,
    slices: Vec<Slice>,
}

impl Sweep {
    fn ids(ends: &[End]) -> impl Iterator<Item = Generator> + '_ {
        ends.iter().map(|e| Generator::id_letter(e.letter))
    }

    fn emit(&mut self, pos: usize, consumed: usize, g: Generator, produced: Vec<End>) {
        let mut cells: Vec<Generator> = Self::ids(&self.boundary[..pos]).collect();
        cells.push(g);
        cells.extend(Self::ids(&self.boundary[pos + consumed..]));
        self.slices.push(Slice::new(cells));
        self.boundary.splice(pos..pos + consumed, produced);
    }

    fn swap(&mut self, pos: usize) {
        let (a, b) = (self.boundary[pos], self.boundary[pos + 1]);
        self.emit(pos, 2, Generator::virtual_letters(a.letter, b.letter), vec![b, a]);
    }

    fn find(&self, edge: EdgeId, letter: Letter) -> Option<usize> {
        self.boundary.iter().position(|e| e.edge == edge && e.letter == letter)
    }

    /// Moves the end at `right` leftward until it sits just after `left`.
    fn close_up(&mut self, left: usize, mut right: usize) {
        while right > left + 1 {
            self.swap(right - 1);
            right -= 1;
        }
    }

    /// Makes `first` immediately precede `second`; returns the position of `first`.
    fn bring_in_order(&mut self, first: usize, second: usize) -> usize {
        if first < second {
            self.close_up(first, second);
            first
        } else {
            let mut x = first;
            while x > second {
                self.swap(x - 1);
                x -= 1;
            }
            x
        }
    }

    fn cup(&mut self, pos: usize, left: End, right: End) {
        self.emit(pos, 0, Generator::cup(left.letter, right.letter), vec![left, right]);
    }

    /// Ensures an open downward end for `edge`, born next to `partner`
    /// (on the given side) when that is already open.
    fn open_input(&mut self, edge: EdgeId, partner: EdgeId, edge_is_left: bool) {
        if self.find(edge, Letter::Plus).is_some() {
            return;
        }
        let plus = End { edge, letter: Letter::Plus };
        let minus = End { edge, letter: Letter::Minus };
        match self.find(partner, Letter::Plus) {
            Some(p) if edge_is_left => self.cup(p, minus, plus),
            Some(p) => self.cup(p + 1, plus, minus),
            None => {
                let n = self.boundary.len();
                self.cup(n, plus, minus)
            }
        }
    }

    /// Caps off `edge` if its upward end is waiting.
    fn close_output(&mut self, edge: EdgeId) {
        let Some(m) = self.find(edge, Letter::Minus) else { return };
        let p = self.find(edge, Letter::Plus).expect("output end is open");
        let (l, r) = (p.min(m), p.max(m));
        self.close_up(l, r);
        let (a, b) = (self.boundary[l].letter, self.boundary[l + 1].letter);
        self.emit(l, 2, Generator::cap(a, b), vec![]);
    }
}

/// Compiles a Gauss code to a closed term over one-letter intervals, with
/// one real crossing per label.
pub fn compile_gauss(code: &GaussCode) -> MorphismTerm {
    sweep_code(code, false)
}

/// Long version: the first component is cut open on the edge entering its
/// first pass, giving a term `[+] → [+]`. `None` if there are no components.
pub fn compile_gauss_long(code: &GaussCode) -> Option<MorphismTerm> {
    code.components.first()?;
    Some(sweep_code(code, true))
}

// Edge id for the lower half of the cut edge.
const CUT_OUT: EdgeId = (usize::MAX, 0);

fn sweep_code(code: &GaussCode, cut: bool) -> MorphismTerm {
    let mut sweep = Sweep { boundary: Vec::new(), slices: Vec::new() };
    let plus = SeqObject::single(PWord::Leaf(Letter::Plus));
    if cut {
        let n = code.components[0].len();
        let edge = if n == 0 { CUT_OUT } else { (0, n - 1) };
        sweep.boundary.push(End { edge, letter: Letter::Plus });
    }
    let positions = |label: u32, layer: Layer| -> (usize, usize) {
        for (c, comp) in code.components.iter().enumerate() {
            for (i, p) in comp.iter().enumerate() {
                if p.label == label && p.layer == layer {
                    return (c, i);
                }
            }
        }
        unreachable!("validated gauss code")
    };
    let incoming = |(c, i): (usize, usize)| -> EdgeId {
        let n = code.components[c].len();
        (c, (i + n - 1) % n)
    };
    let outgoing = |(c, i): (usize, usize)| -> EdgeId {
        if cut && c == 0 && i + 1 == code.components[0].len() {
            CUT_OUT
        } else {
            (c, i)
        }
    };

    for (label, sign) in code.crossings() {
        let over = positions(label, Layer::Over);
        let under = positions(label, Layer::Under);
        // (+,+) positive crossings carry the over strand from top-right
        let (tl, tr) = match sign {
            CrossSign::Pos => (under, over),
            CrossSign::Neg => (over, under),
        };
        let (tl_in, tr_in) = (incoming(tl), incoming(tr));
        sweep.open_input(tl_in, tr_in, true);
        sweep.open_input(tr_in, tl_in, false);
        let a = sweep.find(tl_in, Letter::Plus).expect("opened");
        let b = sweep.find(tr_in, Letter::Plus).expect("opened");
        let p = sweep.bring_in_order(a, b);
        let (bl, br) = (outgoing(tr), outgoing(tl));
        let produced = vec![End { edge: bl, letter: Letter::Plus }, End { edge: br, letter: Letter::Plus }];
        sweep.emit(p, 2, Generator::crossing(sign, Letter::Plus, Letter::Plus), produced);
        sweep.close_output(bl);
        sweep.close_output(br);
    }

    let skip = usize::from(cut);
    for (c, comp) in code.components.iter().enumerate().skip(skip) {
        if comp.is_empty() {
            let edge = (c, 0);
            let n = sweep.boundary.len();
            sweep.cup(n, End { edge, letter: Letter::Plus }, End { edge, letter: Letter::Minus });
            sweep.close_output(edge);
        }
    }
    if cut {
        debug_assert_eq!(sweep.boundary.len(), 1, "sweep left open ends");
        if sweep.slices.is_empty() {
            return MorphismTerm::identity(plus);
        }
        MorphismTerm::from_parts(plus.clone(), plus, sweep.slices)
    } else {
        debug_assert!(sweep.boundary.is_empty(), "sweep left open ends");
        MorphismTerm::from_parts(SeqObject::empty(), SeqObject::empty(), sweep.slices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::gauss::parse_gauss;

    fn compiled(text: &str) -> MorphismTerm {
        compile_gauss(&parse_gauss(text).unwrap())
    }

    #[test]
    fn compiled_terms_validate() {
        for text in [
            "",
            "()",
            "O1+U1+",
            "O1-U1-",
            "O1+U2+,U1+O2+",
            "O1+U2+O3+U1+O2+U3+",
            "O1+U2+U1+O2+",
            "O1+,U1+",
            "O1-U2+O3-U1-O2+U3-",
            "(),O1+U1+",
        ] {
            let t = compiled(text);
            assert!(t.validate().is_ok(), "{text}");
            assert!(t.is_closed(), "{text}");
            assert!(t.dom().num_letters() == 0);
        }
    }

    #[test]
    fn one_real_crossing_per_label_and_one_cell_per_slice() {
        let g = parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap();
        let t = compile_gauss(&g);
        assert_eq!(t.real_crossing_count(), 3);
        assert_eq!(t.writhe(), 3);
        assert!(t.slices().iter().all(|s| s.non_identity_count() == 1));
        assert!(t.slices().iter().all(|s| s.dom().is_one_letter_intervals()));
    }

    #[test]
    fn circles() {
        let t = compiled("(),()");
        assert_eq!(t.slices().len(), 4);
        assert_eq!(compiled("").slices().len(), 0);
    }

    #[test]
    fn long_terms() {
        for text in ["()", "O1+U1+", "O1+U2+O3+U1+O2+U3+", "O1+U2+U1+O2+", "O1+U2+,U1+O2+"] {
            let t = compile_gauss_long(&parse_gauss(text).unwrap()).unwrap();
            assert!(t.validate().is_ok(), "{text}");
            assert_eq!(t.dom().to_text(), "[+]");
            assert_eq!(t.cod().to_text(), "[+]");
        }
        assert!(compile_gauss_long(&GaussCode::default()).is_none());
    }
}
