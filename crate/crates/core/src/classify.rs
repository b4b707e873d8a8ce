//! Multiplicities, highest roots, special and co-special simple roots, the
//! quasi-constant predicate, and the per-simple-root equivalence report.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::roots::{
    combine, rat, solve_on_basis, RatMatrix, RatVector, Rational, RootIndex, RootSystem,
};
use crate::weyl::{dominant_rep, orbit, SimpleSubset, WeylWord};

/// Coefficients of `β` on `Δ` and of `β^vee` on `Δ^vee`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
}

pub fn multiplicities(s: &RootSystem, beta: &RatVector) -> Result<MultiplicityProfile> {
    let idx = s.require_root(beta)?;
    let root = s.coefficients(idx).to_vec();
    let coroot = coroot_coefficients(s, beta)?;
    Ok(MultiplicityProfile { root, coroot })
}

fn coroot_coefficients(s: &RootSystem, beta: &RatVector) -> Result<Vec<i64>> {
    let basis: Vec<RatVector> = s.simples().map(|a| s.coroot(a)).collect::<Result<_>>()?;
    let lowered: Vec<RatVector> = basis.iter().map(|b| s.form().lower(b)).collect();
    let n = basis.len();
    let gram_inv = RatMatrix::from_fn(n, n, |i, j| basis[i].dot(&lowered[j]))
        .inverse()
        .expect("simple coroots are linearly independent");
    solve_on_basis(&basis, &lowered, &gram_inv, &s.coroot(beta)?)
}

/// `(α^h, α^{h₂})`: the highest root, and the dual of the highest coroot.
pub fn highest_roots(s: &RootSystem) -> (RatVector, RatVector) {
    s.highest
        .get_or_init(|| {
            let highest = dominant_long_root(s);
            let dual = s.dual();
            let highest_coroot = dominant_long_root(&dual);
            let highest_short = dual.coroot(&highest_coroot).expect("highest coroot is a root");
            (highest, highest_short)
        })
        .clone()
}

fn dominant_long_root(s: &RootSystem) -> RatVector {
    let long = (0..s.rank())
        .find(|&i| s.is_long(s.simple_index(i)))
        .expect("some simple root is long");
    dominant_rep(s, s.simple(long), &SimpleSubset::full(s.rank()))
        .expect("valid simple root")
        .0
}

pub fn height(s: &RootSystem, beta: &RatVector) -> Result<i64> {
    let idx = s.require_root(beta)?;
    if !s.is_positive(idx) {
        return Err(Error::NotPositiveRoot(beta.to_string()));
    }
    Ok(s.signed_height(idx))
}

/// `m(α_i)`, the multiplicity of `α_i` in the highest root.
pub fn highest_multiplicity(s: &RootSystem, i: usize) -> Result<i64> {
    s.check_simple(i)?;
    let (h, _) = highest_roots(s);
    Ok(multiplicities(s, &h)?.root[i])
}

/// `m^vee(α_i)`, the multiplicity of `α_i^vee` in the highest coroot.
pub fn highest_dual_multiplicity(s: &RootSystem, i: usize) -> Result<i64> {
    s.check_simple(i)?;
    let (_, h2) = highest_roots(s);
    Ok(multiplicities(s, &h2)?.coroot[i])
}

pub fn is_special(s: &RootSystem, i: usize) -> Result<bool> {
    Ok(highest_multiplicity(s, i)? == 1)
}

pub fn is_cospecial(s: &RootSystem, i: usize) -> Result<bool> {
    Ok(highest_dual_multiplicity(s, i)? == 1)
}

/// The fundamental weight dual to `α_i^vee`, expressed in the span of `Δ`.
pub fn fundamental_weight(s: &RootSystem, i: usize) -> Result<RatVector> {
    s.check_simple(i)?;
    let n = s.rank();
    let a = s.cartan_matrix();
    let inv = RatMatrix::from_fn(n, n, |r, c| rat(a[r][c]))
        .inverse()
        .expect("Cartan matrix is invertible");
    let row: Vec<Rational> = (0..n).map(|j| inv.get(i, j).clone()).collect();
    Ok(combine(s.simples(), &row, s.ambient_dim()))
}

/// Whether every Weyl translate of a coroot pairs with `chi` in ratio
/// `-1`, `0` or `1` against the original nonzero pairing.
///
/// The Weyl orbits of coroots are the length classes, so this reduces to: in
/// each length class, all nonzero `|<χ, γ^vee>|` coincide.
pub fn is_quasi_constant(s: &RootSystem, chi: &RatVector) -> Result<bool> {
    s.check_dim(chi)?;
    let mut seen: BTreeMap<&Rational, Rational> = BTreeMap::new();
    for (k, gamma) in s.roots().iter().enumerate() {
        let p = rat(2) * s.inner(chi, gamma) / s.squared_length(RootIndex(k));
        if p.is_zero() {
            continue;
        }
        let p = p.abs();
        match seen.get(s.squared_length(RootIndex(k))) {
            Some(q) if *q != p => return Ok(false),
            Some(_) => {}
            None => {
                seen.insert(s.squared_length(RootIndex(k)), p);
            }
        }
    }
    Ok(true)
}

/// Per-simple-root facts behind the three-way equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub simple_index: usize,
    pub m: i64,
    pub m_dual: i64,
    pub special: bool,
    pub cospecial: bool,
    pub quasi_constant: bool,
    pub dom_eq_levi_dom: bool,
    pub dominant: RatVector,
    pub levi_dominant: RatVector,
    /// A word avoiding `simple_index` mapping `α_i` to `dom(α_i)`, present iff
    /// `dom_eq_levi_dom`.
    pub witness: Option<WeylWord>,
}

impl ClassificationRow {
    pub fn special_or_cospecial(&self) -> bool {
        self.special || self.cospecial
    }

    /// All three predicates agree.
    pub fn is_consistent(&self) -> bool {
        self.quasi_constant == self.special_or_cospecial()
            && self.special_or_cospecial() == self.dom_eq_levi_dom
    }
}

pub fn theorem_row(s: &RootSystem, i: usize) -> Result<ClassificationRow> {
    s.check_simple(i)?;
    let alpha = s.simple(i);
    let m = highest_multiplicity(s, i)?;
    let m_dual = highest_dual_multiplicity(s, i)?;
    let quasi_constant = is_quasi_constant(s, &fundamental_weight(s, i)?)?;
    let (dominant, _) = dominant_rep(s, alpha, &SimpleSubset::full(s.rank()))?;
    let (levi_dominant, word) = dominant_rep(s, alpha, &SimpleSubset::levi(s.rank(), i))?;
    let dom_eq_levi_dom = dominant == levi_dominant;
    Ok(ClassificationRow {
        simple_index: i,
        m,
        m_dual,
        special: m == 1,
        cospecial: m_dual == 1,
        quasi_constant,
        dom_eq_levi_dom,
        dominant,
        levi_dominant,
        witness: dom_eq_levi_dom.then_some(word),
    })
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub name: String,
    pub rows: Vec<ClassificationRow>,
    pub all_equivalent: bool,
    pub highest_root: RatVector,
    pub highest_short: RatVector,
    /// Positive roots in root order, with their heights.
    pub heights: IndexMap<RatVector, i64>,
}

pub fn verify_theorem(s: &RootSystem) -> TheoremReport {
    let rows: Vec<ClassificationRow> = (0..s.rank())
        .map(|i| theorem_row(s, i).expect("index in range"))
        .collect();
    let (highest_root, highest_short) = highest_roots(s);
    let heights = s
        .positives()
        .iter()
        .map(|&k| (s.root(k).clone(), s.signed_height(k)))
        .collect();
    TheoremReport {
        name: s.name(),
        all_equivalent: rows.iter().all(ClassificationRow::is_consistent),
        rows,
        highest_root,
        highest_short,
        heights,
    }
}

/// Long positive roots `β ≠ α_i` with `m_β(α_i) ≤ 1` and `(β, α') ≤ 0` for
/// every other simple `α'`. Such a root cannot exist; the result is expected
/// to be empty for every simple index.
pub fn pairing_obstruction_counterexamples(s: &RootSystem, i: usize) -> Result<Vec<RootIndex>> {
    s.check_simple(i)?;
    let alpha = s.simple_index(i);
    Ok(s
        .positives()
        .iter()
        .copied()
        .filter(|&b| b != alpha && s.is_long(b))
        .filter(|&b| s.coefficients(b)[i] <= 1)
        .filter(|&b| nonpositive_off(s, b, i))
        .collect())
}

fn nonpositive_off(s: &RootSystem, b: RootIndex, i: usize) -> bool {
    (0..s.rank())
        .filter(|&j| j != i)
        .all(|j| !s.inner(s.root(b), s.simple(j)).is_positive())
}

/// Positive roots `β` with `(β, α') ≤ 0` for all `α' ≠ α_i` but `(β, α_i) ≤ 0`:
/// violations of "`α_i` is then the unique simple root pairing positively".
pub fn unique_positive_pairing_violations(s: &RootSystem, i: usize) -> Result<Vec<RootIndex>> {
    s.check_simple(i)?;
    Ok(s
        .positives()
        .iter()
        .copied()
        .filter(|&b| nonpositive_off(s, b, i))
        .filter(|&b| !s.inner(s.root(b), s.simple(i)).is_positive())
        .collect())
}

/// Roots whose `W_{α_i}`-orbit contains a root with a different coefficient
/// of `α_i`. Orbits partition `Φ`, so each orbit is enumerated once.
pub fn levi_multiplicity_violations(s: &RootSystem, i: usize) -> Result<Vec<RootIndex>> {
    s.check_simple(i)?;
    let levi = SimpleSubset::levi(s.rank(), i);
    let mut visited = vec![false; s.roots().len()];
    let mut bad = Vec::new();
    for k in 0..s.roots().len() {
        if visited[k] {
            continue;
        }
        let m = s.coefficients(RootIndex(k))[i];
        for v in orbit(s, s.root(RootIndex(k)), &levi)?.elements() {
            let idx = s.require_root(v)?;
            visited[idx.0] = true;
            if s.coefficients(idx)[i] != m {
                bad.push(idx);
            }
        }
    }
    Ok(bad)
}
