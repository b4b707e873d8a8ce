//! Acceptance criteria, one line of output per criterion.
//!
//! Every criterion is exact: boolean or vector equality, zero counterexamples.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rootkit::classify::{
    fundamental_weight, highest_roots, is_cospecial, is_quasi_constant, is_special,
    multiplicities,
};
use rootkit::suite::check_all;
use rootkit::weyl::{apply_word, dominant_rep, orbit, reflect};
use rootkit::witness::levi_conjugator;
use rootkit::{CartanType, Family, RatVector, Rational, RootSystem, SimpleSubset};

/// Wall-clock budget for the full rank-8 verification run.
const VERIFY_BUDGET: Duration = Duration::from_secs(60);
/// Random lattice vectors per type for the dominance oracle comparison.
const DOMINANCE_SAMPLES: usize = 200;
/// Coefficient bound for those vectors on the fundamental weights.
const WEIGHT_BOUND: i64 = 3;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn types_of(families: &[Family], max_rank: usize) -> Vec<CartanType> {
    CartanType::all_up_to(max_rank)
        .into_iter()
        .filter(|t| families.contains(&t.family()))
        .collect()
}

fn ac1_exhaustive_verification() -> Check {
    let expected: Vec<String> = (1..=8)
        .map(|n| format!("A{n}"))
        .chain((2..=8).map(|n| format!("B{n}")))
        .chain((3..=8).map(|n| format!("C{n}")))
        .chain((4..=8).map(|n| format!("D{n}")))
        .chain((6..=8).map(|n| format!("E{n}")))
        .chain(["F4".to_owned(), "G2".to_owned()])
        .collect();
    let types: Vec<String> = CartanType::all_up_to(8).iter().map(ToString::to_string).collect();
    ensure(types == expected, || format!("admissible types {types:?}"))?;

    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_rootkit"))
        .args(["verify", "--max-rank", "8"])
        .env_remove("ROOTKIT_MAX_RANK")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || format!("exit code {:?}", out.status.code()))?;
    let summary = format!("{} systems checked", expected.len());
    ensure(text.contains(&summary) && text.contains(" 0 failures"), || {
        format!("summary line missing: {}", text.lines().last().unwrap_or(""))
    })?;
    for t in &expected {
        ensure(
            text.lines().any(|l| l.starts_with(&format!("{t} ")) && l.ends_with("ok")),
            || format!("{t} not reported ok"),
        )?;
    }
    ensure(elapsed < VERIFY_BUDGET, || format!("took {elapsed:?}"))?;

    let checks = check_all(&CartanType::all_up_to(8));
    let rows: usize = checks.iter().map(|c| c.rows.len()).sum();
    ensure(
        checks.iter().flat_map(|c| &c.rows).all(|r| r.is_consistent()),
        || "some row has disagreeing predicates".into(),
    )?;
    Ok(format!("{} types, {rows} rows, exit 0 in {:.2?}", expected.len(), elapsed))
}

fn census(s: &RootSystem) -> (Vec<usize>, Vec<usize>) {
    let sp = (0..s.rank()).filter(|&i| is_special(s, i).unwrap()).collect();
    let co = (0..s.rank()).filter(|&i| is_cospecial(s, i).unwrap()).collect();
    (sp, co)
}

fn ac2_special_censuses() -> Check {
    let mut n_checked = 0;
    for t in CartanType::all_up_to(8) {
        let n = t.rank();
        let all: Vec<usize> = (0..n).collect();
        let expected = match t.family() {
            Family::A => (all.clone(), all),
            Family::D => (vec![0, n - 2, n - 1], vec![0, n - 2, n - 1]),
            Family::B => (vec![0], vec![n - 1]),
            Family::C => (vec![n - 1], vec![0]),
            Family::G => (vec![], vec![]),
            _ => continue,
        };
        let got = census(&RootSystem::build(t));
        ensure(got == expected, || format!("{t}: special/co-special {got:?}, expected {expected:?}"))?;
        n_checked += 1;
    }
    Ok(format!("{n_checked} classical types and G2 match"))
}

fn ac3_g2_identities() -> Check {
    let s = sys("G2");
    let (a, b) = (s.simple(0).clone(), s.simple(1).clone());
    let comb = |x: i64, y: i64| {
        &a.scale(&Rational::from_integer(x.into())) + &b.scale(&Rational::from_integer(y.into()))
    };
    let (h, h2) = highest_roots(&s);
    let sa_b = reflect(&s, 0, &b).unwrap();
    let sb_a = reflect(&s, 1, &a).unwrap();
    let checks = [
        ("α = e1-e2", a == int_vec(&[1, -1, 0])),
        ("β = -2e1+e2+e3", b == int_vec(&[-2, 1, 1])),
        ("α^h = 3α+2β", h == comb(3, 2) && h == int_vec(&[-1, -1, 2])),
        ("α^h2 = 2α+β", h2 == comb(2, 1) && h2 == int_vec(&[0, -1, 1])),
        ("s_α(β) = 3α+β", sa_b == comb(3, 1) && sa_b == int_vec(&[1, -2, 1])),
        ("s_α(β) ≠ α^h", sa_b != h),
        ("s_β(α) = α+β = e3-e1", sb_a == comb(1, 1) && sb_a == int_vec(&[-1, 0, 1])),
        ("s_β(α) ≠ e3-e2", sb_a != int_vec(&[0, -1, 1])),
    ];
    for (name, ok) in checks {
        ensure(ok, || format!("{name} fails"))?;
    }
    Ok(format!("{} identities hold", checks.len()))
}

fn ac4_highest_root_pairs() -> Check {
    let mut n_checked = 0;
    for t in types_of(&[Family::A, Family::B, Family::C, Family::D], 8) {
        let s = RootSystem::build(t);
        let n = s.ambient_dim();
        let expected = match t.family() {
            Family::A => (e(n, &[(1, 1), (n, -1)]), e(n, &[(1, 1), (n, -1)])),
            Family::B => (e(n, &[(1, 1), (2, 1)]), e(n, &[(1, 1)])),
            Family::C => (e(n, &[(1, 2)]), e(n, &[(1, 1), (2, 1)])),
            Family::D => (e(n, &[(1, 1), (2, 1)]), e(n, &[(1, 1), (2, 1)])),
            _ => unreachable!(),
        };
        let got = highest_roots(&s);
        ensure(got == expected, || format!("{t}: got {got:?}"))?;
        n_checked += 1;
    }
    Ok(format!("{n_checked} types"))
}

fn ac5_pairing_obstruction() -> Check {
    let mut examined = 0usize;
    for t in CartanType::all_up_to(8) {
        let s = RootSystem::build(t);
        for i in 0..s.rank() {
            for &b in s.positives() {
                if b == s.simple_index(i) || !s.is_long(b) {
                    continue;
                }
                examined += 1;
                let mult_ok = s.coefficients(b)[i] <= 1;
                let others_nonpositive = (0..s.rank())
                    .filter(|&j| j != i)
                    .all(|j| !s.inner(s.root(b), s.simple(j)).is_positive());
                ensure(!(mult_ok && others_nonpositive), || {
                    format!("{t}: counterexample β = {} for simple {i}", s.root(b))
                })?;
            }
        }
    }
    Ok(format!("0 counterexamples among {examined} (α, β) pairs"))
}

fn ac6_levi_preserves_multiplicity() -> Check {
    let mut orbits = 0usize;
    for t in CartanType::all_up_to(6) {
        let s = RootSystem::build(t);
        for i in 0..s.rank() {
            let levi = SimpleSubset::levi(s.rank(), i);
            for r in s.roots() {
                let m = multiplicities(&s, r).unwrap().root[i];
                for x in orbit(&s, r, &levi).unwrap().elements() {
                    let mx = multiplicities(&s, x).map_err(|e| e.to_string())?.root[i];
                    ensure(mx == m, || format!("{t}: {x} in orbit of {r} has m = {mx} ≠ {m}"))?;
                }
                orbits += 1;
            }
        }
    }
    Ok(format!("0 violations over {orbits} Levi orbits"))
}

fn ac7_constructive_conjugators() -> Check {
    let mut built = 0usize;
    for t in CartanType::all_up_to(6) {
        let s = RootSystem::build(t);
        for i in (0..s.rank()).filter(|&i| is_special(&s, i).unwrap()) {
            for &b in s.positives() {
                if !s.is_long(b) || s.coefficients(b)[i] == 0 {
                    continue;
                }
                let beta = s.root(b);
                let w = levi_conjugator(&s, i, beta).map_err(|e| format!("{t}: {e}"))?;
                ensure(w.word.avoids(i), || format!("{t}: word {} uses {i}", w.word))?;
                let image = apply_word(&s, &w.word, s.simple(i)).unwrap();
                ensure(image == *beta, || format!("{t}: replay gives {image}, expected {beta}"))?;
                built += 1;
            }
        }
    }
    Ok(format!("{built}/{built} conjugators replay correctly"))
}

fn ac8_dominance_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut compared = 0usize;
    for t in CartanType::all_up_to(4) {
        let s = RootSystem::build(t);
        let weights = oracle_fundamental_weights(&s);
        let subsets: Vec<SimpleSubset> = std::iter::once(SimpleSubset::full(s.rank()))
            .chain((0..s.rank()).map(|i| SimpleSubset::levi(s.rank(), i)))
            .collect();
        for _ in 0..DOMINANCE_SAMPLES {
            let v: RatVector = random_weight(&s, &weights, &mut rng, WEIGHT_BOUND);
            for sub in &subsets {
                let brute = oracle_dominant(&s, &v, sub.indices());
                ensure(brute.len() == 1, || format!("{t}: {} dominant elements", brute.len()))?;
                let (d, _) = dominant_rep(&s, &v, sub).unwrap();
                ensure(d == brute[0], || format!("{t}: {v} gives {d}, oracle {}", brute[0]))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} (vector, subset) pairs agree"))
}

fn ac9_quasi_constant_oracle() -> Check {
    let mut compared = 0usize;
    for t in CartanType::all_up_to(4) {
        let s = RootSystem::build(t);
        for i in 0..s.rank() {
            let eta = fundamental_weight(&s, i).unwrap();
            let fast = is_quasi_constant(&s, &eta).unwrap();
            let brute = oracle_quasi_constant(&s, &eta);
            ensure(fast == brute, || format!("{t} η{}: {fast} vs brute {brute}", i + 1))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} fundamental weights agree"))
}

fn ac10_construction_cross_check() -> Check {
    let mut n_checked = 0;
    for t in types_of(&[Family::A, Family::B, Family::C, Family::D, Family::G], 8) {
        let coords = RootSystem::coordinate_model(t).map_err(|e| e.to_string())?;
        let closure = RootSystem::from_cartan(t).map_err(|e| e.to_string())?;
        ensure(coords.cartan_matrix() == closure.cartan_matrix(), || format!("{t}: Cartan matrices differ"))?;
        ensure(coords.roots().len() == closure.roots().len(), || format!("{t}: root counts differ"))?;
        // the closure is a fixed point of every simple reflection
        for r in closure.roots() {
            for i in 0..closure.rank() {
                ensure(closure.contains(&reflect(&closure, i, r).unwrap()), || {
                    format!("{t}: closure not reflection-stable")
                })?;
            }
        }
        let again = RootSystem::from_cartan(t).map_err(|e| e.to_string())?;
        ensure(again.roots() == closure.roots(), || format!("{t}: closure not reproducible"))?;
        let again = RootSystem::coordinate_model(t).map_err(|e| e.to_string())?;
        ensure(again.roots() == coords.roots(), || format!("{t}: model not reproducible"))?;
        n_checked += 1;
    }
    Ok(format!("{n_checked} types agree"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Check); 10] = [
        ("AC1", "exhaustive equivalence over all types of rank ≤ 8", ac1_exhaustive_verification),
        ("AC2", "special and co-special censuses", ac2_special_censuses),
        ("AC3", "G2 identities in explicit coordinates", ac3_g2_identities),
        ("AC4", "highest root pairs of A, B, C, D", ac4_highest_root_pairs),
        ("AC5", "no long root escapes the pairing obstruction (rank ≤ 8)", ac5_pairing_obstruction),
        ("AC6", "Levi orbits preserve the coefficient of α (rank ≤ 6)", ac6_levi_preserves_multiplicity),
        ("AC7", "constructive Levi conjugators replay (rank ≤ 6)", ac7_constructive_conjugators),
        ("AC8", "dominant_rep matches brute-force orbits (rank ≤ 4)", ac8_dominance_oracle),
        ("AC9", "quasi-constancy matches the literal definition (rank ≤ 4)", ac9_quasi_constant_oracle),
        ("AC10", "coordinate and Cartan-closure models agree (rank ≤ 8)", ac10_construction_cross_check),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id:<4} {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id:<4} {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
