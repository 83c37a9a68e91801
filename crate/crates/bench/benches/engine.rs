use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use abhk::coradical::{corad_degree, delta_mixed_closed};
use abhk::corpus::{load_dir, run_all};
use abhk::hopfstruct::verify_hopf_axioms;
use abhk::{sample, Overrides};
use abhk_bench::{corpus_dir, hopf, session};

fn multiplication(c: &mut Criterion) {
    let mut g = c.benchmark_group("mul");
    for name in ["usl2", "laurent-pi", "uqsl2"] {
        let alg = session(name).algebra().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pairs: Vec<_> = (0..16)
            .map(|_| {
                (
                    sample::ambi_element(&alg, &mut rng, 3, 3),
                    sample::ambi_element(&alg, &mut rng, 3, 3),
                )
            })
            .collect();
        g.bench_with_input(BenchmarkId::from_parameter(name), &pairs, |b, pairs| {
            b.iter(|| {
                for (x, y) in pairs {
                    black_box(alg.mul(x, y));
                }
            })
        });
    }
    g.finish();
}

fn coproducts(c: &mut Criterion) {
    let h = hopf("laurent-pi");
    let mut g = c.benchmark_group("delta_x_power");
    for m in [2u32, 4, 6] {
        g.bench_with_input(BenchmarkId::new("engine_cached", m), &m, |b, &m| {
            b.iter(|| black_box(h.delta_x_power(m, m)))
        });
        g.bench_with_input(BenchmarkId::new("closed", m), &m, |b, &m| {
            b.iter(|| black_box(delta_mixed_closed(&h, m, m).unwrap()))
        });
    }
    g.finish();
}

fn checks(c: &mut Criterion) {
    let s = session("uqsl2-standard");
    c.bench_function("check/uqsl2-standard", |b| {
        b.iter(|| black_box(s.check().unwrap()))
    });
    let h = hopf("uqsl2");
    c.bench_function("axioms/uqsl2", |b| {
        b.iter(|| black_box(verify_hopf_axioms(&h)))
    });
    let alg = h.algebra();
    let e = session("uqsl2").eval(alg, "E^3*X+^2*X-").unwrap();
    c.bench_function("corad/uqsl2", |b| {
        b.iter(|| black_box(corad_degree(&h, &e).unwrap()))
    });
}

fn corpus(c: &mut Criterion) {
    let entries = load_dir(&corpus_dir()).unwrap();
    let mut g = c.benchmark_group("corpus");
    g.sample_size(10);
    g.bench_function("run_all", |b| {
        b.iter(|| black_box(run_all(&entries, Overrides::default())))
    });
    g.finish();
}

criterion_group!(benches, multiplication, coproducts, checks, corpus);
criterion_main!(benches);
