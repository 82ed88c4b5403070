use criterion::{criterion_group, criterion_main, Criterion};
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::hint::black_box;

use vtangle::evaluator::EvalContext;
use vtangle::oracle::bracket_oracle;
use vtangle::parser::{compile_gauss, parse_gauss};
use vtangle::random::random_gauss;
use vtangle::rewrite::{relation, simplify, MoveId};

const TREFOIL: &str = "O1+U2+O3+U1+O2+U3+";

fn evaluation(c: &mut Criterion) {
    let ctx = EvalContext::bracket();
    let trefoil = compile_gauss(&parse_gauss(TREFOIL).unwrap());
    let big = compile_gauss(&random_gauss(&mut StdRng::seed_from_u64(1), 10, 1));
    c.bench_function("eval trefoil", |b| b.iter(|| ctx.invariant_closed(black_box(&trefoil), false).unwrap()));
    c.bench_function("eval trefoil naive", |b| b.iter(|| ctx.eval_term_naive(black_box(&trefoil)).unwrap()));
    c.bench_function("eval 10 crossings", |b| b.iter(|| ctx.invariant_closed(black_box(&big), false).unwrap()));
    c.bench_function("oracle trefoil", |b| b.iter(|| bracket_oracle(black_box(&trefoil)).unwrap()));
    c.bench_function("oracle 10 crossings", |b| b.iter(|| bracket_oracle(black_box(&big)).unwrap()));
}

fn rewriting(c: &mut Criterion) {
    let ctx = EvalContext::bracket();
    let big = compile_gauss(&random_gauss(&mut StdRng::seed_from_u64(1), 10, 1));
    c.bench_function("simplify 10 crossings", |b| b.iter(|| simplify(black_box(&big))));
    c.bench_function("relation suite", |b| {
        b.iter(|| {
            for id in MoveId::ALL {
                for (l, r) in relation(id) {
                    assert_eq!(ctx.eval_term(&l).unwrap(), ctx.eval_term(&r).unwrap());
                }
            }
        })
    });
}

criterion_group!(benches, evaluation, rewriting);
criterion_main!(benches);
