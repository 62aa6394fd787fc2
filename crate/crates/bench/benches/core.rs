use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use matdarboux::algebra::{MatP, Poly};
use matdarboux::catalog::{default_samples, run_verification};
use matdarboux::{monic_sequence, solve_bounded_order, verify_strong, Caps, Kernel, MatDiffOp, MatrixWeight};

/// `e^{-x²}(1+x², x; x, 1)` with its factor `T = (1, x; 0, 1)`.
fn hermite_ii() -> MatrixWeight {
    let t = MatP::from_rows(vec![vec![Poly::one(), Poly::x()], vec![Poly::zero(), Poly::one()]]);
    MatrixWeight::from_factor(Kernel::Hermite, t, vec![Poly::one(); 2]).unwrap()
}

/// `e^{-x²}(x⁴+3x²+1, x³+2x; x³+2x, x²+1)`.
fn beyond_1() -> MatrixWeight {
    let h = MatP::from_rows(vec![
        vec![Poly::from_ints(&[1, 0, 3, 0, 1]), Poly::from_ints(&[0, 2, 0, 1])],
        vec![Poly::from_ints(&[0, 2, 0, 1]), Poly::from_ints(&[1, 0, 1])],
    ]);
    MatrixWeight::new(Kernel::Hermite, h).unwrap()
}

/// `∂(0, 1; 1, −x) − 2I`.
fn hermite_ii_transformer() -> MatDiffOp {
    let f0 = MatP::from_rows(vec![vec![Poly::from_int(-2), Poly::zero()], vec![Poly::zero(), Poly::from_int(-2)]]);
    let f1 = MatP::from_rows(vec![vec![Poly::zero(), Poly::one()], vec![Poly::one(), Poly::from_ints(&[0, -1])]]);
    MatDiffOp::from_poly_coeffs(2, vec![f0, f1]).unwrap()
}

fn mop_table(c: &mut Criterion) {
    let w = beyond_1();
    let mut g = c.benchmark_group("monic_sequence");
    for n in [6, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| monic_sequence(black_box(&w), n).unwrap()));
    }
    g.finish();
}

fn certificate(c: &mut Criterion) {
    let (src, tgt, v) = (MatrixWeight::scalar(Kernel::Hermite, 2).unwrap(), hermite_ii(), hermite_ii_transformer());
    c.bench_function("verify_strong/hermite-II", |b| {
        b.iter(|| verify_strong(black_box(&v), &src, &tgt, Caps::default()).unwrap())
    });
}

fn solver(c: &mut Criterion) {
    let w = beyond_1();
    let mut g = c.benchmark_group("solve_bounded_order");
    g.sample_size(10);
    g.bench_function("beyond-1/m=2", |b| b.iter(|| solve_bounded_order(black_box(&w), 2, 4).unwrap()));
    g.finish();
}

fn catalog(c: &mut Criterion) {
    let p = default_samples("hermite-II").unwrap().swap_remove(0);
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    g.bench_function("hermite-II", |b| b.iter(|| run_verification("hermite-II", black_box(&p), Caps::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, mop_table, certificate, solver, catalog);
criterion_main!(benches);
