//! Sliced morphism terms.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Generator, Letter, PWord, SeqObject};
use crate::error::{Error, Result};

/// One horizontal layer of a term: a total left-to-right decomposition of
/// the layer into cells, identities included.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Slice {
    pub cells: Vec<Generator>,
}

impl Slice {
    pub fn new(cells: Vec<Generator>) -> Self {
        Slice { cells }
    }

    /// Identity cells on every interval of `obj`.
    pub fn identity(obj: &SeqObject) -> Self {
        Slice { cells: obj.intervals().iter().cloned().map(Generator::id).collect() }
    }

    pub fn dom(&self) -> SeqObject {
        SeqObject(self.cells.iter().flat_map(|c| c.dom().0).collect())
    }

    pub fn cod(&self) -> SeqObject {
        SeqObject(self.cells.iter().flat_map(|c| c.cod().0).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.cells.iter().all(Generator::is_identity)
    }

    pub fn non_identity_count(&self) -> usize {
        self.cells.iter().filter(|c| !c.is_identity()).count()
    }
}

/// A morphism `dom → cod` read top to bottom as a list of slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MorphismTerm {
    dom: SeqObject,
    cod: SeqObject,
    slices: Vec<Slice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IssueKind {
    Interface,
    Orientation,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub kind: IssueKind,
    /// Slice index (for interfaces: the lower slice of the mismatched pair).
    pub slice: usize,
    pub message: String,
}

/// Problems found by [`MorphismTerm::validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn has(&self, kind: IssueKind) -> bool {
        self.issues.iter().any(|i| i.kind == kind)
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        let lines: Vec<String> =
            self.issues.iter().map(|i| format!("slice {}: {:?}: {}", i.slice, i.kind, i.message)).collect();
        f.write_str(&lines.join("; "))
    }
}

impl MorphismTerm {
    pub fn identity(obj: SeqObject) -> Self {
        MorphismTerm { cod: obj.clone(), dom: obj, slices: Vec::new() }
    }

    pub fn empty() -> Self {
        Self::identity(SeqObject::empty())
    }

    /// Single-slice term on one generator.
    pub fn generator(g: Generator) -> Self {
        Self::slice(Slice::new(vec![g]))
    }

    pub fn slice(s: Slice) -> Self {
        MorphismTerm { dom: s.dom(), cod: s.cod(), slices: vec![s] }
    }

    /// Builds and validates a term; `dom` is only consulted when `slices`
    /// is empty or to check the first slice.
    pub fn new(dom: SeqObject, slices: Vec<Slice>) -> Result<Self> {
        let cod = slices.last().map_or_else(|| dom.clone(), Slice::cod);
        let t = MorphismTerm { dom, cod, slices };
        let report = t.validate();
        if report.is_ok() {
            Ok(t)
        } else {
            Err(Error::Validation(report))
        }
    }

    /// Builds without checking; pair with [`MorphismTerm::validate`].
    pub fn from_parts(dom: SeqObject, cod: SeqObject, slices: Vec<Slice>) -> Self {
        MorphismTerm { dom, cod, slices }
    }

    /// Validating constructor from slices alone; the term must have at least
    /// one slice.
    pub fn from_slices(slices: Vec<Slice>) -> Result<Self> {
        let dom = slices.first().map(Slice::dom).unwrap_or_default();
        Self::new(dom, slices)
    }

    pub fn dom(&self) -> &SeqObject {
        &self.dom
    }

    pub fn cod(&self) -> &SeqObject {
        &self.cod
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn into_slices(self) -> Vec<Slice> {
        self.slices
    }

    pub fn is_closed(&self) -> bool {
        self.dom.is_empty() && self.cod.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = &Generator> {
        self.slices.iter().flat_map(|s| s.cells.iter())
    }

    pub fn non_identity_count(&self) -> usize {
        self.slices.iter().map(Slice::non_identity_count).sum()
    }

    pub fn real_crossing_count(&self) -> usize {
        self.cells().filter(|c| c.is_real_crossing()).count()
    }

    /// Signed count of real crossings; virtual crossings contribute nothing.
    pub fn writhe(&self) -> i64 {
        self.cells()
            .map(|c| match c {
                Generator::Crossing { sign, .. } => sign.value(),
                _ => 0,
            })
            .sum()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        if self.slices.is_empty() && self.dom != self.cod {
            issues.push(Issue {
                kind: IssueKind::Boundary,
                slice: 0,
                message: format!("empty term with dom {} != cod {}", self.dom, self.cod),
            });
        }
        let mut above = self.dom.clone();
        for (i, s) in self.slices.iter().enumerate() {
            for c in &s.cells {
                if let Some(msg) = c.orientation_error() {
                    issues.push(Issue { kind: IssueKind::Orientation, slice: i, message: msg });
                }
            }
            let d = s.dom();
            if d != above {
                let kind = if i == 0 { IssueKind::Boundary } else { IssueKind::Interface };
                issues.push(Issue { kind, slice: i, message: format!("slice expects {d} but receives {above}") });
            }
            above = s.cod();
        }
        if !self.slices.is_empty() && above != self.cod {
            issues.push(Issue {
                kind: IssueKind::Boundary,
                slice: self.slices.len() - 1,
                message: format!("last slice produces {above} but cod is {}", self.cod),
            });
        }
        ValidationReport { issues }
    }

    /// `self` followed by `next` (diagrammatic order).
    pub fn compose(&self, next: &MorphismTerm) -> Result<MorphismTerm> {
        if self.cod != next.dom {
            return Err(Error::BoundaryMismatch { left: self.cod.clone(), right: next.dom.clone() });
        }
        let slices = self.slices.iter().chain(&next.slices).cloned().collect();
        Ok(MorphismTerm { dom: self.dom.clone(), cod: next.cod.clone(), slices })
    }

    /// Juxtaposition: `self` to the left of `other`, padded with identities
    /// so both run side by side from the top.
    pub fn tensor(&self, other: &MorphismTerm) -> MorphismTerm {
        let n = self.slices.len().max(other.slices.len());
        let pad_left = Slice::identity(&self.cod);
        let pad_right = Slice::identity(&other.cod);
        let slices = (0..n)
            .map(|i| {
                let l = self.slices.get(i).unwrap_or(&pad_left);
                let r = other.slices.get(i).unwrap_or(&pad_right);
                Slice::new(l.cells.iter().chain(&r.cells).cloned().collect())
            })
            .collect();
        MorphismTerm { dom: self.dom.concat(&other.dom), cod: self.cod.concat(&other.cod), slices }
    }

    pub fn tensor_all<'a, I: IntoIterator<Item = &'a MorphismTerm>>(terms: I) -> MorphismTerm {
        terms.into_iter().fold(MorphismTerm::empty(), |acc, t| acc.tensor(t))
    }

    /// Drops slices made only of identity cells (including empty slices).
    pub fn elide_identities(&self) -> MorphismTerm {
        let slices = self.slices.iter().filter(|s| !s.is_identity()).cloned().collect();
        MorphismTerm { dom: self.dom.clone(), cod: self.cod.clone(), slices }
    }

    /// Slice range `[start, end)` as its own term.
    pub fn sub_term(&self, start: usize, end: usize) -> MorphismTerm {
        let dom = if start == 0 { self.dom.clone() } else { self.slices[start - 1].cod() };
        let cod = if end == 0 { self.dom.clone() } else { self.slices[end - 1].cod() };
        MorphismTerm { dom, cod, slices: self.slices[start..end].to_vec() }
    }
}

/// The symmetry `a·b → b·a`, built from virtual crossings of intervals.
///
/// The intervals of `a` are carried to the right one at a time, last one
/// first, each passing every interval of `b`.
pub fn build_symmetry(a: &SeqObject, b: &SeqObject) -> MorphismTerm {
    let mut current: Vec<PWord> = a.0.iter().chain(&b.0).cloned().collect();
    let mut slices = Vec::new();
    let (ka, kb) = (a.len(), b.len());
    for i in (0..ka).rev() {
        for step in 0..kb {
            let pos = i + step;
            let mut cells = Vec::with_capacity(current.len() - 1);
            cells.extend(current[..pos].iter().cloned().map(Generator::id));
            cells.push(Generator::Virtual { left: current[pos].clone(), right: current[pos + 1].clone() });
            cells.extend(current[pos + 2..].iter().cloned().map(Generator::id));
            slices.push(Slice::new(cells));
            current.swap(pos, pos + 1);
        }
    }
    MorphismTerm { dom: a.concat(b), cod: b.concat(a), slices }
}

/// Identity term on one-letter intervals.
pub fn identity_letters<I: IntoIterator<Item = Letter>>(letters: I) -> MorphismTerm {
    MorphismTerm::identity(SeqObject::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::CrossSign;
    use Letter::{Minus as M, Plus as P};

    fn leaf(l: Letter) -> PWord {
        PWord::Leaf(l)
    }

    #[test]
    fn compose_examples() {
        let f = MorphismTerm::generator(Generator::crossing(CrossSign::Pos, P, P));
        let id = identity_letters([P, P]);
        assert_eq!(id.compose(&f).unwrap(), f);

        let cup = MorphismTerm::generator(Generator::Cup { ends: [P, M], layout: crate::terms::Layout::Fused });
        let cap = MorphismTerm::generator(Generator::Cap { ends: [P, M], layout: crate::terms::Layout::Fused });
        let lp = cup.compose(&cap).unwrap();
        assert!(lp.is_closed());
        assert!(lp.validate().is_ok());

        let bad_cap = MorphismTerm::generator(Generator::cap(M, P));
        let half = MorphismTerm::generator(Generator::cup(P, M));
        assert!(half.compose(&bad_cap).is_err());
        let g = MorphismTerm::new(SeqObject::from_letters([M]), vec![]).unwrap();
        match MorphismTerm::identity(SeqObject::from_letters([P])).compose(&g) {
            Err(Error::BoundaryMismatch { left, right }) => {
                assert_eq!(left, SeqObject::from_letters([P]));
                assert_eq!(right, SeqObject::from_letters([M]));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn tensor_examples() {
        let g = MorphismTerm::generator(Generator::crossing(CrossSign::Neg, P, M));
        assert_eq!(MorphismTerm::empty().tensor(&g), g);
        let v = MorphismTerm::generator(Generator::virtual_letters(P, P));
        let t = v.tensor(&identity_letters([P]));
        assert_eq!(t.slices().len(), 1);
        assert_eq!(t.slices()[0].dom().len(), 3);
        assert!(t.validate().is_ok());

        let two = v.compose(&v).unwrap();
        let t = two.tensor(&g);
        assert_eq!(t.slices().len(), 2);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn symmetry_shapes() {
        let a = SeqObject::single(leaf(P));
        let b = SeqObject::single(PWord::product(leaf(P), leaf(M)));
        let s = build_symmetry(&a, &b);
        assert_eq!(s.slices().len(), 1);
        assert!(matches!(s.slices()[0].cells[0], Generator::Virtual { .. }));

        let b2 = SeqObject(vec![leaf(M), leaf(P)]);
        let s = build_symmetry(&a, &b2);
        assert_eq!(s.slices().len(), 2);
        assert!(s.validate().is_ok());
        assert_eq!(s.slices()[0].cells.len(), 2);
        assert!(matches!(s.slices()[0].cells[0], Generator::Virtual { .. }));
        assert!(matches!(s.slices()[1].cells[1], Generator::Virtual { .. }));
        assert_eq!(s.cod(), &SeqObject(vec![leaf(M), leaf(P), leaf(P)]));

        let e = build_symmetry(&SeqObject::empty(), &b2);
        assert_eq!(e, MorphismTerm::identity(b2));
    }

    #[test]
    fn validation_examples() {
        let bad = MorphismTerm::from_parts(
            SeqObject::from_letters([P]),
            SeqObject::from_letters([M]),
            vec![Slice::new(vec![Generator::id_letter(P)]), Slice::new(vec![Generator::id_letter(M)])],
        );
        let r = bad.validate();
        assert!(r.has(IssueKind::Interface));
        assert_eq!(r.issues[0].slice, 1);

        let cup = MorphismTerm::from_parts(
            SeqObject::empty(),
            SeqObject::from_letters([P, P]),
            vec![Slice::new(vec![Generator::cup(P, P)])],
        );
        assert!(cup.validate().has(IssueKind::Orientation));
    }
}
