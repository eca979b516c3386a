//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rtab::enumeration::{count_richardson, gf_coefficient, involutions, motzkin, motzkin_table, q_count_richardson};
use rtab::evacuation::evacuation;
use rtab::guemes::{hook_expansion, is_reduced, x_tau, GuemesTableau};
use rtab::oracle::{self, BruhatClosure};
use rtab::richardson::{
    is_prime, is_richardson_crop, is_richardson_def, is_richardson_slides, is_richardson_strong, is_richardson_word, psi,
    psi_inverse,
};
use rtab::selftest::{compositions_up_to, is_partition_vector};
use rtab::springer::{
    deodhar_set, enumerate_cells, is_richardson_bruhat, is_richardson_gap, k_component_tableau, lehmer_w_direct,
    reading_v, reading_w, richardson_envelope, richardson_smooth, top_cells, CellIndex,
};
use rtab::symgroup::{all_permutations, bruhat_leq};
use rtab::tableau::{all_syt, enumerate_syt};
use rtab::{Error, Partition, Permutation, StandardTableau};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn t(word: &str) -> StandardTableau {
    word.parse().unwrap()
}

fn p(word: &str) -> Permutation {
    word.parse().unwrap()
}

fn lam(s: &str) -> Partition {
    s.parse().unwrap()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn richardson_of_shape(lambda: &Partition) -> Vec<StandardTableau> {
    enumerate_syt(lambda).unwrap().into_iter().filter(is_richardson_def).collect()
}

fn motzkin_identity() -> Outcome {
    for n in 0..=14 {
        let total: BigUint = Partition::all(n).iter().map(count_richardson).sum();
        ensure!(total == motzkin(n), "shape sum {total} ≠ M_{n}");
        ensure!(motzkin(n) == oracle::motzkin_paths(n), "M_{n} ≠ lattice path count");
    }
    for n in 0..=10 {
        let tableaux = all_syt(n).unwrap();
        ensure!(BigUint::from(tableaux.len()) == involutions(n), "SYT count of size {n} ≠ T_{n}");
        let hits = tableaux.iter().filter(|s| is_richardson_def(s)).count();
        ensure!(BigUint::from(hits) == motzkin(n), "brute count {hits} ≠ M_{n} at n = {n}");
        if n == 10 {
            ensure!(tableaux.len() == 9496, "scanned {} tableaux of size 10", tableaux.len());
        }
    }
    Ok(())
}

fn constants() -> Outcome {
    let m: Vec<BigUint> = motzkin_table(5);
    ensure!(m == [1u64, 1, 2, 4, 9, 21].map(big), "M_0..M_5 = {m:?}");
    let l = lam("4,2,2");
    ensure!(count_richardson(&l) == big(15), "count (4,2,2)");
    ensure!(oracle::hook_length_count(&l) == big(56), "f^(4,2,2)");
    ensure!(enumerate_syt(&l).unwrap().len() == 56, "SYT(4,2,2) enumeration");
    ensure!(richardson_of_shape(&l).len() == 15, "brute Richardson(4,2,2)");
    let l = lam("3,2,1");
    ensure!(count_richardson(&l) == big(8) && richardson_of_shape(&l).len() == 8, "count (3,2,1)");
    let q = q_count_richardson(&l);
    ensure!(q.to_string() == "q^7 + 2*q^8 + 2*q^9 + 2*q^10 + q^11", "q-count (3,2,1) = {q}");
    let by_maj: Vec<usize> = richardson_of_shape(&l).iter().map(|s| s.maj()).collect();
    for e in 0..=12 {
        let brute = by_maj.iter().filter(|&&m| m == e).count();
        ensure!(q.coeff(e) == brute.into(), "q^{e} coefficient vs maj distribution");
    }
    ensure!(count_richardson(&lam("2,2")) == big(1), "count (2,2)");
    ensure!(richardson_of_shape(&lam("2,2")) == vec![t("1212")], "Richardson(2,2)");
    ensure!(count_richardson(&lam("3,1")) == big(3) && richardson_of_shape(&lam("3,1")).len() == 3, "count (3,1)");
    Ok(())
}

fn characterizations() -> Outcome {
    for n in 0..=9 {
        for s in all_syt(n).unwrap() {
            let verdicts = [
                is_richardson_def(&s),
                is_richardson_strong(&s),
                is_richardson_word(s.word()),
                is_richardson_crop(&s),
                is_richardson_slides(&s),
                is_richardson_def(&evacuation(&s)),
                is_richardson_gap(&s),
                is_richardson_bruhat(&s),
            ];
            ensure!(verdicts.iter().all(|&b| b == verdicts[0]), "verdicts {verdicts:?} disagree at {s}");
        }
    }
    Ok(())
}

fn pipeline() -> Outcome {
    let s = t("12113123");
    ensure!(s.rows() == vec![vec![1, 3, 4, 6], vec![2, 7], vec![5, 8]], "rows of σ");
    let dual = evacuation(&s);
    ensure!(dual == t("12312113"), "σ∨ = {dual}");
    let v = reading_v(&s);
    let w = reading_w(&s);
    ensure!(v == p("15726348"), "v_σ = {v}");
    ensure!(w == p("75182364"), "w_σ = {w}");
    let code = vec![6, 4, 0, 4, 0, 0, 1, 0];
    ensure!(w.lehmer_code() == code && lehmer_w_direct(&s) == code, "Lehmer code of w_σ");
    let cell = richardson_envelope(&s).map_err(|e| e.to_string())?;
    ensure!(cell.dim == 6 && s.shape().n_lambda() == 6, "gap {} vs n(λ)", cell.dim);
    let first = deodhar_set(&v, &w).unwrap();
    ensure!(first == vec![(1, 2), (1, 3), (2, 3), (4, 5), (5, 8), (7, 8)], "first Deodhar set {first:?}");
    let w0 = Permutation::longest(8);
    let (a, b) = (w.compose(&w0), v.compose(&w0));
    ensure!(a == p("46328157") && b == p("84362751"), "w_σw₀ = {a}, v_σw₀ = {b}");
    let second = deodhar_set(&a, &b).unwrap();
    ensure!(second == vec![(1, 2), (2, 5), (4, 5), (6, 7), (6, 8), (7, 8)], "second Deodhar set {second:?}");
    ensure!(richardson_smooth(&v, &w) == Ok(true), "richardson_smooth");
    Ok(())
}

fn perms(list: &[&str]) -> BTreeSet<Permutation> {
    list.iter().map(|s| p(s)).collect()
}

/// Cells not contained in the closure of a different cell.
fn maximal(cells: &[CellIndex]) -> Vec<&CellIndex> {
    cells
        .iter()
        .filter(|c| {
            !cells.iter().any(|d| {
                d != *c && bruhat_leq(&d.v, &c.v).unwrap() && bruhat_leq(&c.w, &d.w).unwrap()
            })
        })
        .collect()
}

fn z_cells() -> Outcome {
    let cells = enumerate_cells(&lam("2,2")).map_err(|e| e.to_string())?;
    ensure!(cells.len() == 13, "{} cells for (2,2)", cells.len());
    let vertices: BTreeSet<Permutation> = cells.iter().filter(|c| c.dim == 0).map(|c| c.v.clone()).collect();
    ensure!(vertices == perms(&["1234", "1324", "1342", "3124", "3142", "3412"]), "vertices of (2,2)");
    let edges: BTreeSet<(Permutation, Permutation)> =
        cells.iter().filter(|c| c.dim == 1).map(|c| (c.v.clone(), c.w.clone())).collect();
    let expected: BTreeSet<(Permutation, Permutation)> = [
        ("1234", "1324"),
        ("1324", "1342"),
        ("1324", "3124"),
        ("1342", "3142"),
        ("3124", "3142"),
        ("3142", "3412"),
    ]
    .iter()
    .map(|(a, b)| (p(a), p(b)))
    .collect();
    ensure!(edges == expected, "edges of (2,2)");
    let squares: Vec<_> = cells.iter().filter(|c| c.dim == 2).collect();
    ensure!(squares.len() == 1 && squares[0].v == p("1324") && squares[0].w == p("3142"), "2-cell of (2,2)");
    let mut maxima: Vec<(String, String, usize)> =
        maximal(&cells).iter().map(|c| (c.v.to_string(), c.w.to_string(), c.dim)).collect();
    maxima.sort();
    ensure!(
        maxima
            == vec![
                ("1234".into(), "1324".into(), 1),
                ("1324".into(), "3142".into(), 2),
                ("3142".into(), "3412".into(), 1)
            ],
        "maximal cells of (2,2): {maxima:?}"
    );
    let top = top_cells(&lam("2,2")).unwrap();
    ensure!(top.len() == 1 && top[0].v == p("1324") && top[0].w == p("3142"), "top cell of (2,2)");

    let cells = enumerate_cells(&lam("3,1")).map_err(|e| e.to_string())?;
    ensure!(cells.len() == 7, "{} cells for (3,1)", cells.len());
    let vertices: BTreeSet<Permutation> = cells.iter().filter(|c| c.dim == 0).map(|c| c.v.clone()).collect();
    ensure!(vertices == perms(&["1234", "1243", "1423", "4123"]), "vertices of (3,1)");
    let edges: Vec<(String, String)> =
        cells.iter().filter(|c| c.dim == 1).map(|c| (c.v.to_string(), c.w.to_string())).collect();
    ensure!(
        edges
            == vec![
                ("1234".into(), "1243".into()),
                ("1243".into(), "1423".into()),
                ("1423".into(), "4123".into())
            ],
        "edges of (3,1): {edges:?}"
    );
    ensure!(top_cells(&lam("3,1")).unwrap().len() == 3, "top cells of (3,1)");
    let labels: BTreeSet<(Permutation, Permutation)> = richardson_of_shape(&lam("3,1"))
        .iter()
        .map(|s| (reading_v(s), reading_w(s)))
        .collect();
    let tops: BTreeSet<(Permutation, Permutation)> =
        top_cells(&lam("3,1")).unwrap().into_iter().map(|c| (c.v, c.w)).collect();
    ensure!(labels == tops, "Richardson tableaux of (3,1) do not label the top cells");
    Ok(())
}

fn smoothness() -> Outcome {
    let mut seen = 0;
    for n in 0..=8 {
        for s in all_syt(n).unwrap().into_iter().filter(is_richardson_def) {
            let v = reading_v(&s);
            let w = reading_w(&s);
            ensure!(richardson_smooth(&v, &w) == Ok(true), "not smooth at {s}");
            seen += 1;
        }
    }
    let expected: BigUint = (0..=8).map(motzkin).sum();
    ensure!(BigUint::from(seen as u64) == expected, "checked {seen} Richardson tableaux");
    let vargas = StandardTableau::from_rows(&[vec![1, 3], vec![2, 5], vec![4], vec![6]]).unwrap();
    let fresse_melnikov = StandardTableau::from_rows(&[vec![1, 2, 5], vec![3, 4], vec![6, 7]]).unwrap();
    ensure!(!is_richardson_def(&vargas), "first singular witness is Richardson");
    ensure!(!is_richardson_def(&fresse_melnikov), "second singular witness is Richardson");
    Ok(())
}

fn guemes() -> Outcome {
    let sigma = StandardTableau::from_rows(&[vec![1, 4, 5, 6], vec![2], vec![3], vec![7]]).unwrap();
    ensure!(reading_v(&sigma) == p("1523467") && reading_w(&sigma) == p("7123654"), "hook reading words");
    let got: Vec<String> = hook_expansion(&sigma).map_err(|e| e.to_string())?.iter().map(|w| w.to_string()).collect();
    ensure!(got == ["4765123", "5763124", "6735124", "6752134"], "expansion {got:?}");
    let tau = GuemesTableau::new(vec![vec![1, 3, 4], vec![2, 4], vec![3]]).unwrap();
    let tau2 = GuemesTableau::new(vec![vec![1, 3, 4], vec![2, 4], vec![4]]).unwrap();
    ensure!(is_reduced(&tau, 5) == Ok(true), "τ should be reduced");
    ensure!(is_reduced(&tau2, 5) == Ok(false), "τ' should not be reduced");
    let simples = |js: &[usize]| js.iter().fold(Permutation::identity(5), |acc, &j| acc.compose(&Permutation::simple(5, j)));
    ensure!(x_tau(&tau, 5).unwrap() == simples(&[3, 2, 1, 4, 3, 4]), "x_τ");
    ensure!(x_tau(&tau2, 5).unwrap() == simples(&[2, 1, 3, 4]), "x_τ'");
    Ok(())
}

fn subset(bits: u32, n: usize) -> Vec<usize> {
    (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect()
}

fn k_components() -> Outcome {
    let sigma = k_component_tableau(&[3, 4, 6, 7], 7).unwrap();
    ensure!(sigma.rows() == vec![vec![1, 3, 4, 6], vec![2, 7], vec![5]], "σ({{3,4,6,7}}) = {sigma}");
    ensure!(
        evacuation(&sigma).rows() == vec![vec![1, 3, 5, 6], vec![2, 4], vec![7]],
        "σ({{3,4,6,7}})∨"
    );
    for n in 0..=10 {
        let mut images = BTreeSet::new();
        for bits in 0..(1u32 << n) {
            let s = k_component_tableau(&subset(bits, n), n).unwrap();
            ensure!(is_richardson_def(&s), "σ({:?}) = {s} is not Richardson", subset(bits, n));
            if n <= 8 {
                let c = k_component_tableau(&subset(!bits & ((1 << n) - 1), n), n).unwrap();
                ensure!(c == s, "complement symmetry fails for {:?}", subset(bits, n));
            }
            images.insert(s);
        }
        let expected = if n == 0 { 1 } else { 1usize << (n - 1) };
        ensure!(images.len() == expected, "{} distinct σ(I) for n = {n}", images.len());
        if n == 4 {
            let mut rich: BTreeSet<StandardTableau> = all_syt(4).unwrap().into_iter().filter(is_richardson_def).collect();
            ensure!(rich.remove(&t("1213")), "1213 is Richardson");
            ensure!(images == rich, "n = 4 image differs from Richardson tableaux without 1213");
        }
    }
    Ok(())
}

fn bijection_psi() -> Outcome {
    for m in 0..=8 {
        for mu in Partition::all(m) {
            let mut parts = mu.parts().to_vec();
            parts.extend([1, 1]);
            let big_shape = Partition::new(parts).unwrap();
            let ell = big_shape.len();
            let (sources, composite): (Vec<_>, Vec<_>) =
                richardson_of_shape(&big_shape).into_iter().partition(|r| is_prime(r.word()) == Ok(true));
            for r in &composite {
                ensure!(psi(r.word()) == Err(Error::NotPrime), "psi accepted the composite word {r}");
            }
            let targets: BTreeSet<Vec<usize>> = richardson_of_shape(&mu).into_iter().map(|s| s.into_word()).collect();
            let mut images = BTreeSet::new();
            for r in &sources {
                let image = psi(r.word()).map_err(|e| format!("psi({r}): {e}"))?;
                ensure!(targets.contains(&image), "psi({r}) lands outside Richardson({mu})");
                let mut removed = r.word().to_vec();
                removed.sort();
                let mut kept = image.clone();
                kept.extend([ell - 1, ell]);
                kept.sort();
                ensure!(removed == kept, "letter multisets of {r} and its image");
                ensure!(psi_inverse(&image, ell).as_deref() == Ok(r.word()), "psi⁻¹ ∘ psi ≠ id at {r}");
                ensure!(images.insert(image), "psi is not injective on ({mu},1,1)");
            }
            ensure!(images == targets, "psi is not onto Richardson({mu})");
            ensure!(BigUint::from(sources.len()) == count_richardson(&mu), "prime count of ({mu},1,1) ≠ |Richardson({mu})|");
        }
    }
    Ok(())
}

fn generating_functions() -> Outcome {
    for n in 0..=8 {
        for lambda in Partition::all(n) {
            let got = gf_coefficient(lambda.len(), lambda.parts());
            ensure!(got == count_richardson(&lambda), "coefficient at {lambda} is {got}");
        }
    }
    let mut zeros = 0;
    for alpha in compositions_up_to(6) {
        if !is_partition_vector(&alpha) {
            let got = gf_coefficient(alpha.len(), &alpha);
            ensure!(got == big(0), "coefficient at non-partition {alpha:?} is {got}");
            zeros += 1;
        }
    }
    ensure!(zeros > 0, "no non-partition vectors generated");
    Ok(())
}

fn bruhat_engine() -> Outcome {
    let mut pairs = 0;
    for n in 0..=5 {
        let closure = BruhatClosure::new(n);
        let all = all_permutations(n);
        for v in &all {
            for w in &all {
                ensure!(bruhat_leq(v, w).unwrap() == closure.leq(v, w), "mismatch at ({v}, {w})");
                if n == 5 {
                    pairs += 1;
                }
            }
        }
    }
    ensure!(pairs == 14_400, "{pairs} pairs in S_5");
    let closure = BruhatClosure::new(7);
    let all = all_permutations(7);
    let mut rng = StdRng::seed_from_u64(0xb40a);
    let mut comparable = 0;
    for _ in 0..10_000 {
        let v = &all[rng.gen_range(0..all.len())];
        let w = &all[rng.gen_range(0..all.len())];
        let got = bruhat_leq(v, w).unwrap();
        ensure!(got == closure.leq(v, w), "mismatch at ({v}, {w})");
        comparable += got as usize;
    }
    ensure!(comparable > 0, "no comparable random pairs");
    Ok(())
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "Motzkin identity", limit: Duration::from_secs(60), run: motzkin_identity },
        Criterion { name: "reference constants", limit: Duration::from_secs(60), run: constants },
        Criterion { name: "characterization equivalence", limit: Duration::from_secs(300), run: characterizations },
        Criterion { name: "worked pipeline 12113123", limit: Duration::from_secs(60), run: pipeline },
        Criterion { name: "Z_λ cells", limit: Duration::from_secs(1), run: z_cells },
        Criterion { name: "smoothness", limit: Duration::from_secs(120), run: smoothness },
        Criterion { name: "Guemes expansion", limit: Duration::from_secs(60), run: guemes },
        Criterion { name: "K-components", limit: Duration::from_secs(60), run: k_components },
        Criterion { name: "bijection psi", limit: Duration::from_secs(60), run: bijection_psi },
        Criterion { name: "generating functions", limit: Duration::from_secs(60), run: generating_functions },
        Criterion { name: "Bruhat engine", limit: Duration::from_secs(60), run: bruhat_engine },
    ];
    let mut failed = 0;
    for (k, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > c.limit {
                Err(format!("took {elapsed:.2?}, limit {:?}", c.limit))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {} ({elapsed:.2?})", k + 1, c.name),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {msg}", k + 1, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
