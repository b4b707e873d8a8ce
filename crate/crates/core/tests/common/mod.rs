//! Brute-force oracles shared by the integration tests.
//!
//! These use only the bilinear form and the simple roots of a system; they
//! do not call the library's reflection, orbit, dominance, or quasi-constant
//! code.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};
use rand::Rng;
use rootkit::{RatVector, Rational, RootSystem};

pub fn sys(t: &str) -> RootSystem {
    RootSystem::build(t.parse().unwrap())
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

/// `v - 2 (v, a) / (a, a) a` straight from the form.
pub fn oracle_reflect(s: &RootSystem, a: &RatVector, v: &RatVector) -> RatVector {
    let c = two() * s.inner(v, a) / s.inner(a, a);
    let scaled = a.scale(&c);
    v - &scaled
}

/// Full orbit of `v` under reflections in the given simple roots.
pub fn oracle_orbit(s: &RootSystem, v: &RatVector, gens: &[usize]) -> HashSet<RatVector> {
    let mut seen = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        for &i in gens {
            let y = oracle_reflect(s, s.simple(i), &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn oracle_is_dominant(s: &RootSystem, v: &RatVector, gens: &[usize]) -> bool {
    gens.iter().all(|&i| !s.inner(v, s.simple(i)).is_negative())
}

/// The dominant elements of the enumerated orbit; exactly one is expected.
pub fn oracle_dominant(s: &RootSystem, v: &RatVector, gens: &[usize]) -> Vec<RatVector> {
    oracle_orbit(s, v, gens)
        .into_iter()
        .filter(|x| oracle_is_dominant(s, x, gens))
        .collect()
}

/// Literal quasi-constancy: for every root `α` with `(χ, α^vee) ≠ 0`, every
/// `γ^vee` in the Weyl orbit of `α^vee` gives a ratio in `{-1, 0, 1}`.
pub fn oracle_quasi_constant(s: &RootSystem, chi: &RatVector) -> bool {
    let all: Vec<usize> = (0..s.rank()).collect();
    for alpha in s.roots() {
        let coroot = alpha.scale(&(two() / s.inner(alpha, alpha)));
        let p = s.inner(chi, &coroot);
        if p.is_zero() {
            continue;
        }
        for gamma in oracle_orbit(s, &coroot, &all) {
            let q = s.inner(chi, &gamma) / &p;
            let one = Rational::from_integer(1.into());
            if !(q.is_zero() || q == one || q == -one) {
                return false;
            }
        }
    }
    true
}

/// Fundamental weights solved directly from the form: `η_i = Σ c_j α_j`
/// with `(η_i, α_k^vee) = δ_ik`, by Gaussian elimination here in the test.
pub fn oracle_fundamental_weights(s: &RootSystem) -> Vec<RatVector> {
    let n = s.rank();
    let coroots: Vec<RatVector> = s
        .simples()
        .map(|a| a.scale(&(two() / s.inner(a, a))))
        .collect();
    // M[k][j] = (α_j, α_k^vee); solve M c = e_i for each i
    (0..n)
        .map(|i| {
            let mut rows: Vec<Vec<Rational>> = (0..n)
                .map(|k| {
                    let mut row: Vec<Rational> =
                        (0..n).map(|j| s.inner(s.simple(j), &coroots[k])).collect();
                    row.push(if k == i { Rational::from_integer(1.into()) } else { Rational::zero() });
                    row
                })
                .collect();
            for col in 0..n {
                let piv = (col..n).find(|&r| !rows[r][col].is_zero()).unwrap();
                rows.swap(col, piv);
                let p = rows[col][col].clone();
                for x in rows[col].iter_mut() {
                    *x /= &p;
                }
                for r in 0..n {
                    if r != col && !rows[r][col].is_zero() {
                        let f = rows[r][col].clone();
                        let pivot_row = rows[col].clone();
                        for (x, y) in rows[r].iter_mut().zip(pivot_row) {
                            *x -= &f * y;
                        }
                    }
                }
            }
            (0..n).fold(RatVector::zero(s.ambient_dim()), |acc, j| {
                &acc + &s.simple(j).scale(&rows[j][n])
            })
        })
        .collect()
}

/// Random element of the weight lattice: integer combination of
/// fundamental weights with coefficients in `-bound..=bound`.
pub fn random_weight(s: &RootSystem, weights: &[RatVector], rng: &mut impl Rng, bound: i64) -> RatVector {
    weights.iter().fold(RatVector::zero(s.ambient_dim()), |acc, w| {
        let c = Rational::from_integer(rng.gen_range(-bound..=bound).into());
        &acc + &w.scale(&c)
    })
}

pub fn int_vec(xs: &[i64]) -> RatVector {
    RatVector::from_ints(xs)
}

/// `Σ c_i e_i` for 1-based indices, in dimension `n`.
pub fn e(n: usize, terms: &[(usize, i64)]) -> RatVector {
    let mut v = vec![0i64; n];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    RatVector::from_ints(&v)
}
