use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qsusy_bench::{ladder_word, maps, spin};
use qsusy_core::superspace::{verify_sym_abelian, verify_wz_lagrangian, LagrangianParams};
use qsusy_core::susy::jacobi_sweep;
use qsusy_core::uq::{check_yang_baxter, quantum_lie_basis, r_matrix};
use qsusy_core::{BracketTable, Scalar};

fn scalars(c: &mut Criterion) {
    let x = (&Scalar::q() - &Scalar::q().inv().unwrap()).pow(3).unwrap();
    let y = Scalar::q_int(5, &Scalar::q());
    c.bench_function("scalar/mul_div", |b| b.iter(|| black_box(&x * &y).checked_div(black_box(&y)).unwrap()));
}

fn rewriting(c: &mut Criterion) {
    let m = maps();
    let mut g = c.benchmark_group("normal_form");
    for n in [2, 3, 4] {
        let w = ladder_word(n);
        g.bench_with_input(BenchmarkId::new("E^nF^n", n), &w, |b, w| b.iter(|| m.rs().normal_form(w).unwrap()));
    }
    g.finish();
    let w = ladder_word(2);
    c.bench_function("coproduct/E^2F^2", |b| b.iter(|| m.coproduct(black_box(&w)).unwrap()));
}

fn jacobi(c: &mut Criterion) {
    let t = BracketTable::new(2).unwrap();
    let mut g = c.benchmark_group("jacobi");
    g.sample_size(10);
    g.bench_function("sweep_n2", |b| b.iter(|| jacobi_sweep(&t)));
    g.finish();
}

fn quantum_group(c: &mut Criterion) {
    let mut g = c.benchmark_group("uq");
    for two_j in [1, 2] {
        let rep = spin(two_j);
        g.bench_with_input(BenchmarkId::new("r_matrix", two_j), &rep, |b, r| b.iter(|| r_matrix(r, r).unwrap()));
        g.bench_with_input(BenchmarkId::new("yang_baxter", two_j), &rep, |b, r| b.iter(|| check_yang_baxter(r).unwrap()));
    }
    let m = maps();
    g.bench_function("quantum_lie_basis", |b| b.iter(|| quantum_lie_basis(&m, 2).unwrap()));
    g.finish();
}

fn superspace(c: &mut Criterion) {
    c.bench_function("superspace/wz", |b| b.iter(|| verify_wz_lagrangian().unwrap()));
    let p = LagrangianParams::default();
    c.bench_function("superspace/sym", |b| b.iter(|| verify_sym_abelian(&p).unwrap()));
}

criterion_group!(benches, scalars, rewriting, jacobi, quantum_group, superspace);
criterion_main!(benches);
