//! The state sum against the evaluator on random virtual diagrams.

use rand::rngs::StdRng;
use rand::SeedableRng;

use vtangle::evaluator::EvalContext;
use vtangle::oracle::bracket_oracle;
use vtangle::parser::compile_gauss;
use vtangle::random::random_gauss;

#[test]
fn random_diagrams_agree() {
    let ctx = EvalContext::bracket();
    let mut rng = StdRng::seed_from_u64(2024);
    for n in 0..=8 {
        for k in 1..=3 {
            for _ in 0..4 {
                let t = compile_gauss(&random_gauss(&mut rng, n, k));
                assert_eq!(
                    ctx.invariant_closed(&t, false).unwrap(),
                    bracket_oracle(&t).unwrap(),
                    "{n} crossings, {k} components"
                );
            }
        }
    }
}

#[test]
fn classical_values_are_divisible_by_the_loop() {
    let ctx = EvalContext::bracket();
    for code in ["O1+U2+O3+U1+O2+U3+", "O1-U2-O3-U1-O2-U3-", "O1+U2+,U1+O2+", "O1-U4+O2+U1-O3-U2+O4+U3-"] {
        let t = compile_gauss(&vtangle::parser::parse_gauss(code).unwrap());
        assert!(ctx.invariant_normalized(&t).unwrap().value().is_some(), "{code}");
    }
}
