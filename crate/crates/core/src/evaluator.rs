//! Evaluation of terms in the matrix category of a ribbon datum.
//!
//! Matrices follow the column-vector convention: a term `X → Y` becomes a
//! `dim(Y) × dim(X)` matrix and composition `f` then `g` is `G · F`.
//! Bracket structure is invisible here; split, merge, unit, counit and
//! associators are identities.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;

use crate::algebra::{LaurentPoly, RibbonDatum, RingMatrix};
use crate::error::{Error, Result};
use crate::terms::{CrossSign, Generator, Letter, MorphismTerm, SeqObject, Slice};

/// A datum together with a memo of generator matrices.
pub struct EvalContext {
    datum: RibbonDatum,
    cache: RwLock<HashMap<Generator, RingMatrix>>,
}

impl EvalContext {
    pub fn new(datum: RibbonDatum) -> Self {
        EvalContext { datum, cache: RwLock::new(HashMap::new()) }
    }

    pub fn bracket() -> Self {
        Self::new(RibbonDatum::bracket())
    }

    pub fn datum(&self) -> &RibbonDatum {
        &self.datum
    }

    fn dim_letters(&self, n: usize) -> usize {
        self.datum.dim.pow(n as u32)
    }

    /// Dimension of the image of an object: `dim^(number of letters)`.
    pub fn eval_object(&self, o: &SeqObject) -> usize {
        self.dim_letters(o.num_letters())
    }

    pub fn eval_generator(&self, g: &Generator) -> RingMatrix {
        if let Some(m) = self.cache.read().expect("cache lock").get(g) {
            return m.clone();
        }
        let m = self.derive_generator(g);
        self.cache.write().expect("cache lock").insert(g.clone(), m.clone());
        m
    }

    fn derive_generator(&self, g: &Generator) -> RingMatrix {
        let d = &self.datum;
        match g {
            Generator::Crossing { sign, top, .. } => self.crossing(*sign, *top),
            Generator::Virtual { left, right } => {
                RingMatrix::flip(self.dim_letters(left.num_letters()), self.dim_letters(right.num_letters()))
            }
            Generator::Cup { ends, .. } => d.cup(ends[0], ends[1]).clone(),
            Generator::Cap { ends, .. } => d.cap(ends[0], ends[1]).clone(),
            other => RingMatrix::identity(self.eval_object(&other.dom())),
        }
    }

    fn crossing(&self, sign: CrossSign, top: [Letter; 2]) -> RingMatrix {
        let base = match sign {
            CrossSign::Pos => self.datum.r_pos.clone(),
            CrossSign::Neg => self.datum.r_neg.clone(),
        };
        // (+,+) -> (-,+) -> (-,-) -> (+,-)
        let mut m = base;
        let mut cur = [Letter::Plus, Letter::Plus];
        while cur != top {
            m = self.dress_left(&m, cur);
            cur = [!cur[1], cur[0]];
        }
        m
    }

    /// Turns a crossing with top `[a][b]` into the same crossing seen with
    /// top `[b̄][a]`, bending the `b` strand around the left.
    fn dress_left(&self, y: &RingMatrix, top: [Letter; 2]) -> RingMatrix {
        let b = top[1];
        let id = self.datum.id();
        let open = RingMatrix::kron_all([&id, &id, self.datum.cup(b, !b)]);
        let cross = RingMatrix::kron_all([&id, y, &id]);
        let close = RingMatrix::kron_all([self.datum.cap(!b, b), &id, &id]);
        &(&close * &cross) * &open
    }

    /// Matrix of a term, applying cells locally to a running state.
    pub fn eval_term(&self, t: &MorphismTerm) -> Result<RingMatrix> {
        t.validate().into_result()?;
        let cols = self.eval_object(t.dom());
        let mut state = State { rows: cols, cols, entries: identity_entries(cols) };
        for s in t.slices() {
            self.apply_slice(&mut state, s);
        }
        Ok(RingMatrix::from_vec(state.rows, state.cols, state.entries))
    }

    fn apply_slice(&self, state: &mut State, s: &Slice) {
        // letters to the left are already in codomain form
        let mut left = 0;
        let mut right: usize = s.cells.iter().map(|c| c.dom().num_letters()).sum();
        for g in &s.cells {
            let (din, dout) = (g.dom().num_letters(), g.cod().num_letters());
            right -= din;
            if !is_trivial(g) {
                let m = self.eval_generator(g);
                state.apply(
                    &m,
                    self.dim_letters(left),
                    self.dim_letters(din),
                    self.dim_letters(dout),
                    self.dim_letters(right),
                );
            }
            left += dout;
        }
    }

    /// Same matrix as [`eval_term`](Self::eval_term), as a literal product of
    /// Kronecker products; kept as an independent check.
    pub fn eval_term_naive(&self, t: &MorphismTerm) -> Result<RingMatrix> {
        t.validate().into_result()?;
        let mut m = RingMatrix::identity(self.eval_object(t.dom()));
        for s in t.slices() {
            let factors: Vec<RingMatrix> = s.cells.iter().map(|g| self.eval_generator(g)).collect();
            m = &RingMatrix::kron_all(&factors) * &m;
        }
        Ok(m)
    }

    /// Scalar invariant of a closed term. With `normalize`, the framing is
    /// corrected by the twist scalar and one loop factor is divided out, so
    /// the unknot gives 1; fails with `NotDivisible` when the quotient is not
    /// a Laurent polynomial (see [`Normalized`]).
    pub fn invariant_closed(&self, t: &MorphismTerm, normalize: bool) -> Result<LaurentPoly> {
        if normalize {
            return self.invariant_normalized(t)?.value().ok_or(Error::NotDivisible);
        }
        if !t.is_closed() {
            return Err(Error::NotClosed { dom: t.dom().clone(), cod: t.cod().clone() });
        }
        Ok(self.eval_term(t)?.get(0, 0).clone())
    }

    /// Framing-corrected invariant with the loop factor still to divide.
    pub fn invariant_normalized(&self, t: &MorphismTerm) -> Result<Normalized> {
        let raw = self.invariant_closed(t, false)?;
        let w = i32::try_from(t.writhe()).expect("writhe fits");
        let theta = self
            .datum
            .twist_scalar()
            .and_then(|th| th.monomial_pow(-w))
            .ok_or_else(|| Error::Datum("normalization needs a monomial scalar twist".into()))?;
        Ok(Normalized { numerator: &raw * &theta, loop_value: self.datum.loop_value() })
    }

    /// Matrix of a long term `[w] → [w]`, kept as a matrix.
    pub fn long_invariant(&self, t: &MorphismTerm) -> Result<RingMatrix> {
        if t.dom() != t.cod() {
            return Err(Error::BoundaryMismatch { left: t.dom().clone(), right: t.cod().clone() });
        }
        self.eval_term(t)
    }

    /// Closes a `[a] → [a]` matrix on the right: `cap · (M ⊗ I) · cup`.
    pub fn close_long_matrix(&self, m: &RingMatrix, a: Letter) -> LaurentPoly {
        let opened = &m.kron(&self.datum.id()) * self.datum.cup(a, !a);
        (self.datum.cap(a, !a) * &opened).get(0, 0).clone()
    }
}

/// `numerator / loop_value`, where the numerator is the framing-corrected
/// invariant.
///
/// Classical diagrams always give an exact quotient. Virtual ones need not:
/// with the flip as virtual crossing a curve of rotation number 0 is worth
/// 2 rather than `δ`, so the quotient can leave the Laurent ring. Equality
/// of normalized values is equality of numerators either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub numerator: LaurentPoly,
    pub loop_value: LaurentPoly,
}

impl Normalized {
    /// The exact quotient, if there is one.
    pub fn value(&self) -> Option<LaurentPoly> {
        self.numerator.div_exact(&self.loop_value)
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.loop_value
    }
}

impl std::fmt::Display for Normalized {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "({}) / ({})", self.numerator, self.loop_value),
        }
    }
}

/// Closes a long term `[a] → [a]` on the right with a cup and a cap.
pub fn close_long(t: &MorphismTerm) -> Result<MorphismTerm> {
    let a = match (t.dom().letters().0.as_slice(), t.dom() == t.cod()) {
        ([a], true) => *a,
        _ => return Err(Error::BoundaryMismatch { left: t.dom().clone(), right: t.cod().clone() }),
    };
    let cup = MorphismTerm::generator(Generator::cup(a, !a));
    let cap = MorphismTerm::generator(Generator::cap(a, !a));
    let bar = MorphismTerm::identity(SeqObject::from_letters([!a]));
    cup.compose(&t.tensor(&bar))?.compose(&cap)
}

fn is_trivial(g: &Generator) -> bool {
    !matches!(g, Generator::Crossing { .. } | Generator::Virtual { .. } | Generator::Cup { .. } | Generator::Cap { .. })
}

fn identity_entries(n: usize) -> Vec<LaurentPoly> {
    let mut e = vec![LaurentPoly::zero(); n * n];
    for i in 0..n {
        e[i * n + i] = LaurentPoly::constant(1);
    }
    e
}

/// Row-major `rows × cols` matrix being built up slice by slice.
struct State {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl State {
    /// Applies `m` (`dout × din`) to the middle factor of rows split as
    /// `l ⊗ din ⊗ r`.
    fn apply(&mut self, m: &RingMatrix, l: usize, din: usize, dout: usize, r: usize) {
        debug_assert_eq!(self.rows, l * din * r);
        let cols = self.cols;
        let mut out = vec![LaurentPoly::zero(); l * dout * r * cols];
        let nonzero: Vec<(usize, usize, &LaurentPoly)> = (0..dout)
            .flat_map(|y| (0..din).map(move |x| (y, x)))
            .map(|(y, x)| (y, x, m.get(y, x)))
            .filter(|(_, _, v)| !v.is_zero())
            .collect();
        for li in 0..l {
            for &(y, x, v) in &nonzero {
                for ri in 0..r {
                    let src = ((li * din + x) * r + ri) * cols;
                    let dst = ((li * dout + y) * r + ri) * cols;
                    for c in 0..cols {
                        let s = &self.entries[src + c];
                        if !s.is_zero() {
                            out[dst + c] += &(v * s);
                        }
                    }
                }
            }
        }
        self.rows = l * dout * r;
        self.entries = out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::bracket_oracle;
    use crate::parser::{compile_gauss, compile_gauss_long, parse_gauss, parse_term};

    fn gauss(text: &str) -> MorphismTerm {
        compile_gauss(&parse_gauss(text).unwrap())
    }

    fn poly(text: &str) -> LaurentPoly {
        text.parse().unwrap()
    }

    #[test]
    fn object_dimensions() {
        let ctx = EvalContext::bracket();
        assert_eq!(ctx.eval_object(&crate::parser::parse_object("[+]").unwrap()), 2);
        assert_eq!(ctx.eval_object(&SeqObject::empty()), 1);
        assert_eq!(ctx.eval_object(&crate::parser::parse_object("[]").unwrap()), 1);
        assert_eq!(ctx.eval_object(&crate::parser::parse_object("[+-][+]").unwrap()), 8);
    }

    #[test]
    fn generator_examples() {
        let ctx = EvalContext::bracket();
        assert_eq!(ctx.eval_generator(&Generator::virtual_letters(Letter::Plus, Letter::Plus)), RingMatrix::flip(2, 2));
        assert_eq!(ctx.eval_generator(&Generator::id_letter(Letter::Plus)), RingMatrix::identity(2));
        let d = ctx.datum();
        assert_eq!(ctx.eval_generator(&Generator::crossing(CrossSign::Pos, Letter::Plus, Letter::Plus)), d.r_pos);
    }

    #[test]
    fn term_examples() {
        let ctx = EvalContext::bracket();
        let vv = parse_term("V(+|+)\nV(+|+)\n").unwrap();
        assert_eq!(ctx.eval_term(&vv).unwrap(), RingMatrix::identity(4));
        let unknot = parse_term("U(+|-)\nC(+|-)\n").unwrap();
        assert_eq!(ctx.eval_term(&unknot).unwrap(), RingMatrix::scalar(poly("-A^2 - A^-2")));
        assert_eq!(ctx.invariant_closed(&unknot, false).unwrap(), LaurentPoly::delta());
        assert_eq!(ctx.invariant_closed(&unknot, true).unwrap(), LaurentPoly::constant(1));
        let id = parse_term("[+]\n").unwrap();
        assert_eq!(ctx.long_invariant(&id).unwrap(), RingMatrix::identity(2));
        assert!(matches!(ctx.invariant_closed(&id, false), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn local_and_naive_agree() {
        let ctx = EvalContext::bracket();
        for text in ["O1+U2+O3+U1+O2+U3+", "O1+U2+U1+O2+", "O1-U2-,U1-O2-"] {
            let t = gauss(text);
            assert_eq!(ctx.eval_term(&t).unwrap(), ctx.eval_term_naive(&t).unwrap(), "{text}");
        }
        let long = compile_gauss_long(&parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap()).unwrap();
        assert_eq!(ctx.eval_term(&long).unwrap(), ctx.eval_term_naive(&long).unwrap());
    }

    fn id(letters: &[Letter]) -> MorphismTerm {
        MorphismTerm::identity(SeqObject::from_letters(letters.iter().copied()))
    }

    fn cell(g: Generator) -> MorphismTerm {
        MorphismTerm::generator(g)
    }

    #[test]
    fn all_crossing_variants_match_the_state_sum() {
        let ctx = EvalContext::bracket();
        for sign in CrossSign::ALL {
            for a in Letter::ALL {
                for b in Letter::ALL {
                    let x = cell(Generator::crossing(sign, a, b));
                    let closed = if a != b {
                        cell(Generator::cup(a, b)).compose(&x).unwrap().compose(&cell(Generator::cap(b, a))).unwrap()
                    } else {
                        let long = id(&[a])
                            .tensor(&cell(Generator::cup(b, !b)))
                            .compose(&x.tensor(&id(&[!b])))
                            .unwrap()
                            .compose(&id(&[b]).tensor(&cell(Generator::cap(a, !b))))
                            .unwrap();
                        cell(Generator::cup(!a, a))
                            .compose(&id(&[!a]).tensor(&long))
                            .unwrap()
                            .compose(&cell(Generator::cap(!a, a)))
                            .unwrap()
                    };
                    assert_eq!(
                        ctx.invariant_closed(&closed, false).unwrap(),
                        bracket_oracle(&closed).unwrap(),
                        "{sign:?} {a:?} {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn long_trefoil_closes_to_the_knot() {
        let ctx = EvalContext::bracket();
        let code = parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap();
        let long = compile_gauss_long(&code).unwrap();
        let m = ctx.long_invariant(&long).unwrap();
        let closed = close_long(&long).unwrap();
        assert_eq!(ctx.close_long_matrix(&m, Letter::Plus), ctx.invariant_closed(&closed, false).unwrap());
        assert_eq!(
            ctx.invariant_closed(&closed, true).unwrap(),
            ctx.invariant_closed(&compile_gauss(&code), true).unwrap()
        );
    }

    #[test]
    fn trefoil_and_hopf() {
        let ctx = EvalContext::bracket();
        let trefoil = gauss("O1+U2+O3+U1+O2+U3+");
        assert_eq!(ctx.invariant_closed(&trefoil, false).unwrap(), bracket_oracle(&trefoil).unwrap());
        assert_eq!(ctx.invariant_closed(&trefoil, true).unwrap(), poly("A^-4 + A^-12 - A^-16"));
        let hopf = gauss("O1+U2+,U1+O2+");
        assert_eq!(ctx.invariant_closed(&hopf, false).unwrap(), poly("A^6 + A^2 + A^-2 + A^-6"));
        assert_eq!(ctx.invariant_closed(&hopf, true).unwrap(), poly("-A^-2 - A^-10"));
    }
}
