//! The files under `corpus/`: Gauss codes, their compiled terms, and values.

use std::path::PathBuf;

use vtangle::evaluator::EvalContext;
use vtangle::oracle::bracket_oracle;
use vtangle::parser::{compile_gauss, compile_gauss_long, parse_gauss, parse_term, render};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn read(name: &str) -> String {
    std::fs::read_to_string(dir().join(name)).unwrap()
}

fn names() -> Vec<String> {
    let mut out: Vec<String> = std::fs::read_dir(dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "gauss").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    out.sort();
    out
}

#[test]
fn corpus_files_are_compiled_gauss_codes() {
    assert_eq!(names().len(), 9);
    for n in names() {
        let code = parse_gauss(read(&format!("{n}.gauss")).trim()).unwrap();
        let t = parse_term(&read(&format!("{n}.vt"))).unwrap();
        assert_eq!(t, compile_gauss(&code), "{n}");
        assert_eq!(parse_term(&render(&t)).unwrap(), t, "{n}");
    }
}

#[test]
fn evaluator_matches_oracle_on_corpus() {
    let ctx = EvalContext::bracket();
    for n in names() {
        let t = parse_term(&read(&format!("{n}.vt"))).unwrap();
        assert_eq!(ctx.invariant_closed(&t, false).unwrap(), bracket_oracle(&t).unwrap(), "{n}");
    }
}

#[test]
fn frozen_values() {
    let ctx = EvalContext::bracket();
    let raw =
        |n: &str| ctx.invariant_closed(&parse_term(&read(&format!("{n}.vt"))).unwrap(), false).unwrap().to_string();
    let norm = |n: &str| ctx.invariant_normalized(&parse_term(&read(&format!("{n}.vt"))).unwrap()).unwrap().to_string();
    assert_eq!(raw("unknot"), "-A^2 - A^-2");
    assert_eq!(raw("unlink2"), "A^4 + 2 + A^-4");
    assert_eq!(raw("curl-pos"), "A^5 + A");
    assert_eq!(raw("trefoil"), "A^7 + A^3 + A^-1 - A^-9");
    assert_eq!(raw("hopf"), "A^6 + A^2 + A^-2 + A^-6");
    assert_eq!(raw("virtual-trefoil"), "A^6 + 2 + A^-2 - 2A^-4");
    assert_eq!(raw("virtual-hopf"), "A^5 + 2A^-1 + A^-3");
    assert_eq!(norm("curl-pos"), "1");
    assert_eq!(norm("curl-neg"), "1");
    assert_eq!(norm("trefoil"), "A^-4 + A^-12 - A^-16");
    assert_eq!(norm("hopf"), "-A^-2 - A^-10");
    assert_eq!(norm("figure-eight"), "A^8 - A^4 + 1 - A^-4 + A^-8");
}

#[test]
fn long_trefoil_file() {
    let t = parse_term(&read("long-trefoil.vt")).unwrap();
    let code = parse_gauss(read("trefoil.gauss").trim()).unwrap();
    assert_eq!(Some(t.clone()), compile_gauss_long(&code));
    let m = EvalContext::bracket().long_invariant(&t).unwrap();
    assert_eq!(m.to_string(), "[-A^5 - A^-3 + A^-7, 0]\n[0, -A^5 - A^-3 + A^-7]\n");
}
