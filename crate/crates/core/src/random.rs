//! Seeded random diagrams and terms for fuzzing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::parser::{compile_gauss, GaussCode, Layer, Pass};
use crate::terms::{AssocDir, CrossSign, Generator, Layout, Letter, MorphismTerm, PWord, SeqObject, Slice};

fn sign<R: Rng>(rng: &mut R) -> CrossSign {
    if rng.gen() {
        CrossSign::Pos
    } else {
        CrossSign::Neg
    }
}

fn letter<R: Rng>(rng: &mut R) -> Letter {
    if rng.gen() {
        Letter::Plus
    } else {
        Letter::Minus
    }
}

/// A random virtual Gauss code with `crossings` crossings spread over
/// `components` components (every component gets at least one pass when
/// there are enough of them).
pub fn random_gauss<R: Rng>(rng: &mut R, crossings: usize, components: usize) -> GaussCode {
    let mut passes: Vec<Pass> = (1..=crossings as u32)
        .flat_map(|label| {
            let s = sign(rng);
            [Pass { label, layer: Layer::Over, sign: s }, Pass { label, layer: Layer::Under, sign: s }]
        })
        .collect();
    passes.shuffle(rng);
    let components = components.max(1);
    let mut cuts: Vec<usize> = if passes.len() >= components {
        let mut c: Vec<usize> = (1..passes.len()).collect();
        c.shuffle(rng);
        c.truncate(components - 1);
        c
    } else {
        Vec::new()
    };
    cuts.sort_unstable();
    let mut out = Vec::new();
    let mut start = 0;
    for c in cuts {
        out.push(passes[start..c].to_vec());
        start = c;
    }
    out.push(passes[start..].to_vec());
    while out.len() < components {
        out.push(Vec::new());
    }
    GaussCode::new(out).expect("labels are paired")
}

/// A random closed diagram with `1..=max_crossings` crossings, one or two
/// components.
pub fn random_closed<R: Rng>(rng: &mut R, max_crossings: usize) -> MorphismTerm {
    let n = rng.gen_range(1..=max_crossings.max(1));
    let k = rng.gen_range(1..=2);
    compile_gauss(&random_gauss(rng, n, k))
}

/// Largest number of letters across any level of `t`.
pub fn width(t: &MorphismTerm) -> usize {
    t.slices().iter().map(|s| s.cod().num_letters()).chain([t.dom().num_letters()]).max().unwrap_or(0)
}

fn leaf(w: &PWord) -> Option<Letter> {
    match w {
        PWord::Leaf(l) => Some(*l),
        _ => None,
    }
}

/// Every single-cell move available on `obj`, as (interval position, cell).
fn candidates<R: Rng>(rng: &mut R, obj: &SeqObject, max_letters: usize) -> Vec<(usize, Generator)> {
    let iv = &obj.0;
    let mut out = Vec::new();
    let grow_ok = obj.num_letters() + 2 <= max_letters;
    for i in 0..=iv.len() {
        if grow_ok {
            let a = letter(rng);
            let layout = if rng.gen_bool(0.8) { Layout::Split } else { Layout::Fused };
            out.push((i, Generator::Cup { ends: [a, !a], layout }));
        }
        out.push((i, Generator::Unit));
    }
    for i in 0..iv.len() {
        match &iv[i] {
            PWord::Empty => out.push((i, Generator::Counit)),
            PWord::Pair(l, r) => {
                out.push((i, Generator::Split { left: (**l).clone(), right: (**r).clone() }));
                if let (Some(a), Some(b)) = (leaf(l), leaf(r)) {
                    out.push((i, Generator::Crossing { sign: sign(rng), top: [a, b], layout: Layout::Fused }));
                    if a != b {
                        out.push((i, Generator::Cap { ends: [a, b], layout: Layout::Fused }));
                    }
                }
                if let PWord::Pair(u, v) = &**l {
                    let words = [(**u).clone(), (**v).clone(), (**r).clone()];
                    out.push((i, Generator::Assoc { dir: AssocDir::Forward, words }));
                }
                if let PWord::Pair(v, w) = &**r {
                    let words = [(**l).clone(), (**v).clone(), (**w).clone()];
                    out.push((i, Generator::Assoc { dir: AssocDir::Backward, words }));
                }
            }
            PWord::Leaf(_) => {}
        }
        if i + 1 < iv.len() {
            let (l, r) = (&iv[i], &iv[i + 1]);
            out.push((i, Generator::Virtual { left: l.clone(), right: r.clone() }));
            out.push((i, Generator::Merge { left: l.clone(), right: r.clone() }));
            if let (Some(a), Some(b)) = (leaf(l), leaf(r)) {
                out.push((i, Generator::crossing(sign(rng), a, b)));
                if a != b {
                    out.push((i, Generator::cap(a, b)));
                }
            }
        }
    }
    out
}

/// One random non-identity slice on `obj`.
pub fn random_slice<R: Rng>(rng: &mut R, obj: &SeqObject, max_letters: usize) -> Slice {
    let options = candidates(rng, obj, max_letters);
    let (pos, g) = options.choose(rng).expect("unit is always available").clone();
    let consumed = g.dom_len();
    let mut cells: Vec<Generator> = obj.0[..pos].iter().cloned().map(Generator::id).collect();
    cells.push(g);
    cells.extend(obj.0[pos + consumed..].iter().cloned().map(Generator::id));
    Slice::new(cells)
}

/// A random valid term from `dom` with `slices` slices, never wider than
/// `max_letters` letters (unless `dom` already is).
pub fn random_term<R: Rng>(rng: &mut R, dom: &SeqObject, slices: usize, max_letters: usize) -> MorphismTerm {
    let mut cur = dom.clone();
    let mut out = Vec::new();
    for _ in 0..slices {
        let s = random_slice(rng, &cur, max_letters);
        cur = s.cod();
        out.push(s);
    }
    MorphismTerm::new(dom.clone(), out).expect("random slices chain")
}

/// A random object of one-letter and small bracketed intervals.
pub fn random_object<R: Rng>(rng: &mut R, max_letters: usize) -> SeqObject {
    let mut iv = Vec::new();
    let mut letters = 0;
    let target = rng.gen_range(0..=max_letters);
    while letters < target {
        let w = match rng.gen_range(0..5) {
            0 if letters + 2 <= target => {
                letters += 2;
                PWord::product(PWord::Leaf(letter(rng)), PWord::Leaf(letter(rng)))
            }
            1 => PWord::Empty,
            _ => {
                letters += 1;
                PWord::Leaf(letter(rng))
            }
        };
        iv.push(w);
    }
    SeqObject(iv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn gauss_codes_are_well_formed() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 0..8 {
            for k in 1..4 {
                let g = random_gauss(&mut rng, n, k);
                assert_eq!(g.num_crossings(), n);
                assert_eq!(g.components.len(), k);
                assert!(compile_gauss(&g).validate().is_ok());
            }
        }
    }

    #[test]
    fn random_terms_validate_and_respect_width() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let dom = random_object(&mut rng, 4);
            let t = random_term(&mut rng, &dom, 5, 6);
            assert!(t.validate().is_ok());
            assert!(width(&t) <= dom.num_letters().max(6));
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = random_closed(&mut StdRng::seed_from_u64(3), 6);
        let b = random_closed(&mut StdRng::seed_from_u64(3), 6);
        assert_eq!(a, b);
    }
}
