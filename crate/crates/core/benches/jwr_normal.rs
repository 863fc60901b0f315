use aicrepair::aic::{check_justified_weak_repair, decide_jwr_normal};
use aicrepair::syntax::parse_update_set;
use aicrepair::{parse_instance, AicProgram, Database, Program, UpdateSet};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

/// `not x0 -> +x0`, then `x{i}, not x{i+1} -> +x{i+1}`, over an empty database.
fn chain(n: usize) -> (Database, AicProgram, UpdateSet) {
    let mut text = String::from("db: .\naic:\nnot x0 -> +x0.\n");
    for i in 1..n {
        text.push_str(&format!("x{}, not x{i} -> +x{i}.\n", i - 1));
    }
    let inst = parse_instance(&text).unwrap();
    let Program::Aic(eta) = inst.program else {
        unreachable!()
    };
    let all: Vec<String> = (0..n).map(|i| format!("+x{i}")).collect();
    let e = parse_update_set(eta.universe(), &all.join(", ")).unwrap();
    (inst.db, eta, e)
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("jwr_normal_chain");
    for n in [4, 8, 12] {
        let (db, eta, e) = chain(n);
        assert!(decide_jwr_normal(&db, &eta, &e).unwrap());
        assert!(check_justified_weak_repair(&db, &eta, &e));
        group.bench_with_input(BenchmarkId::new("least_closure", n), &n, |b, _| {
            b.iter(|| decide_jwr_normal(&db, &eta, &e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("generic", n), &n, |b, _| {
            b.iter(|| check_justified_weak_repair(&db, &eta, &e))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
