//! Simple reflections, Weyl words, orbits and dominant representatives.
//!
//! Everything here acts on vectors; Weyl group elements are never
//! materialized beyond the words that produce them.

use std::fmt;

use indexmap::IndexSet;
use num_traits::Signed;

use crate::error::Result;
use crate::roots::{RatVector, RootSystem};

/// A word in the simple reflections.
///
/// Letters act right to left: `[i, j]` applied to `v` is `s_i(s_j(v))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether the word lies in the Levi subgroup generated by `Δ ∖ {α_i}`.
    pub fn avoids(&self, i: usize) -> bool {
        !self.0.contains(&i)
    }

    pub fn uses_only(&self, subset: &SimpleSubset) -> bool {
        self.0.iter().all(|&l| subset.contains(l))
    }

    /// `self · other`, acting as `other` first.
    pub fn compose(&self, other: &WeylWord) -> WeylWord {
        WeylWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// A set of simple-root indices generating a parabolic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleSubset(Vec<usize>);

impl SimpleSubset {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SimpleSubset(indices)
    }

    /// All of `Δ`.
    pub fn full(rank: usize) -> Self {
        SimpleSubset((0..rank).collect())
    }

    /// `Δ ∖ {α_i}`, the generators of the maximal Levi Weyl group `W_α`.
    pub fn levi(rank: usize, i: usize) -> Self {
        SimpleSubset((0..rank).filter(|&j| j != i).collect())
    }

    pub fn empty() -> Self {
        SimpleSubset(Vec::new())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

/// A finite orbit, in breadth-first discovery order starting from the seed.
#[derive(Clone, Debug)]
pub struct Orbit {
    elements: IndexSet<RatVector>,
    generators: SimpleSubset,
}

impl Orbit {
    pub fn elements(&self) -> impl Iterator<Item = &RatVector> + '_ {
        self.elements.iter()
    }

    pub fn seed(&self) -> &RatVector {
        &self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        self.elements.contains(v)
    }

    pub fn generators(&self) -> &SimpleSubset {
        &self.generators
    }
}

/// `s_i(v) = v - <v, α_i^vee> α_i`.
pub fn reflect(s: &RootSystem, i: usize, v: &RatVector) -> Result<RatVector> {
    s.check_simple(i)?;
    s.check_dim(v)?;
    Ok(reflect_unchecked(s, i, v))
}

pub(crate) fn reflect_unchecked(s: &RootSystem, i: usize, v: &RatVector) -> RatVector {
    v.sub_scaled(&s.pairing_simple(v, i), s.simple(i))
}

fn check_word(s: &RootSystem, w: &WeylWord) -> Result<()> {
    w.letters().iter().try_for_each(|&l| s.check_simple(l))
}

pub fn apply_word(s: &RootSystem, w: &WeylWord, v: &RatVector) -> Result<RatVector> {
    check_word(s, w)?;
    s.check_dim(v)?;
    Ok(w
        .letters()
        .iter()
        .rev()
        .fold(v.clone(), |acc, &i| reflect_unchecked(s, i, &acc)))
}

/// Intermediate vectors while applying `w` to `v`, starting with `v` itself
/// and ending with `w(v)`.
pub fn replay(s: &RootSystem, w: &WeylWord, v: &RatVector) -> Result<Vec<RatVector>> {
    check_word(s, w)?;
    s.check_dim(v)?;
    let mut trace = vec![v.clone()];
    for &i in w.letters().iter().rev() {
        let next = reflect_unchecked(s, i, trace.last().unwrap());
        trace.push(next);
    }
    Ok(trace)
}

/// Breadth-first closure of `{v}` under the reflections in `subset`.
pub fn orbit(s: &RootSystem, v: &RatVector, subset: &SimpleSubset) -> Result<Orbit> {
    s.check_dim(v)?;
    subset.iter().try_for_each(|i| s.check_simple(i))?;
    let mut elements = IndexSet::new();
    elements.insert(v.clone());
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        for i in subset.iter() {
            elements.insert(reflect_unchecked(s, i, &current));
        }
        head += 1;
    }
    Ok(Orbit {
        elements,
        generators: subset.clone(),
    })
}

pub fn is_dominant(s: &RootSystem, v: &RatVector, subset: &SimpleSubset) -> Result<bool> {
    s.check_dim(v)?;
    subset.iter().try_for_each(|i| s.check_simple(i))?;
    Ok(subset.iter().all(|i| !s.pairing_simple(v, i).is_negative()))
}

/// The unique `subset`-dominant conjugate of `v`, with a word in `subset`
/// carrying `v` to it.
///
/// Each step reflects at the lowest index with a negative pairing.
pub fn dominant_rep(
    s: &RootSystem,
    v: &RatVector,
    subset: &SimpleSubset,
) -> Result<(RatVector, WeylWord)> {
    s.check_dim(v)?;
    subset.iter().try_for_each(|i| s.check_simple(i))?;
    let mut current = v.clone();
    let mut applied = Vec::new();
    while let Some((i, p)) = subset
        .iter()
        .map(|i| (i, s.pairing_simple(&current, i)))
        .find(|(_, p)| p.is_negative())
    {
        current = current.sub_scaled(&p, s.simple(i));
        applied.push(i);
    }
    applied.reverse();
    Ok((current, WeylWord(applied)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{ratio, LengthClass};

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn reflect_simple_root_negates_it() {
        let s = sys("C3");
        for i in 0..3 {
            assert_eq!(reflect(&s, i, s.simple(i)).unwrap(), -s.simple(i));
        }
        assert!(reflect(&s, 3, s.simple(0)).is_err());
    }

    #[test]
    fn g2_reflections() {
        let g = sys("G2");
        let (a, b) = (g.simple(0).clone(), g.simple(1).clone());
        assert_eq!(reflect(&g, 1, &a).unwrap(), &a + &b);
        assert_eq!(reflect(&g, 1, &a).unwrap(), RatVector::from_ints(&[-1, 0, 1]));
        let three_a = &(&a + &a) + &a;
        assert_eq!(reflect(&g, 0, &b).unwrap(), &three_a + &b);
        assert_eq!(reflect(&g, 0, &b).unwrap(), RatVector::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn apply_word_order_and_identity() {
        let g = sys("G2");
        let a = g.simple(0).clone();
        assert_eq!(apply_word(&g, &WeylWord::identity(), &a).unwrap(), a);
        assert_eq!(apply_word(&g, &WeylWord::new(vec![1, 1]), &a).unwrap(), a);
        assert_eq!(
            apply_word(&g, &WeylWord::new(vec![1]), &a).unwrap(),
            RatVector::from_ints(&[-1, 0, 1])
        );
        let w1 = WeylWord::new(vec![0, 1]);
        let w2 = WeylWord::new(vec![1, 0, 0, 1]);
        let v = RatVector::new(vec![ratio(1, 2), ratio(-3, 5), ratio(1, 10)]);
        assert_eq!(
            apply_word(&g, &w1.compose(&w2), &v).unwrap(),
            apply_word(&g, &w1, &apply_word(&g, &w2, &v).unwrap()).unwrap()
        );
        assert!(apply_word(&g, &WeylWord::new(vec![2]), &v).is_err());
    }

    #[test]
    fn replay_ends_at_image() {
        let s = sys("B3");
        let w = WeylWord::new(vec![0, 2, 1]);
        let trace = replay(&s, &w, s.simple(1)).unwrap();
        assert_eq!(trace.len(), 4);
        assert_eq!(trace[0], *s.simple(1));
        assert_eq!(*trace.last().unwrap(), apply_word(&s, &w, s.simple(1)).unwrap());
    }

    #[test]
    fn orbit_of_zero_is_trivial() {
        let s = sys("D4");
        let o = orbit(&s, &RatVector::zero(4), &SimpleSubset::full(4)).unwrap();
        assert_eq!(o.len(), 1);
    }

    #[test]
    fn a2_orbit_is_all_roots() {
        let s = sys("A2");
        let o = orbit(&s, s.simple(0), &SimpleSubset::full(2)).unwrap();
        assert_eq!(o.len(), 6);
        assert!(s.roots().iter().all(|r| o.contains(r)));
        assert_eq!(o.seed(), s.simple(0));
    }

    #[test]
    fn b2_long_orbit_is_long_roots() {
        let s = sys("B2");
        let o = orbit(&s, s.simple(0), &SimpleSubset::full(2)).unwrap();
        let long: Vec<_> = s
            .roots()
            .iter()
            .filter(|r| s.length_class(r).unwrap() == LengthClass::Long)
            .collect();
        assert_eq!(o.len(), 4);
        assert_eq!(long.len(), 4);
        assert!(long.iter().all(|r| o.contains(r)));
    }

    #[test]
    fn dominance() {
        let s = sys("A3");
        let full = SimpleSubset::full(3);
        assert!(is_dominant(&s, &RatVector::from_ints(&[1, 0, 0, -1]), &full).unwrap());
        assert!(!is_dominant(&s, s.simple(1), &full).unwrap());
        assert!(is_dominant(&s, &RatVector::zero(4), &SimpleSubset::levi(3, 0)).unwrap());
    }

    #[test]
    fn dominant_rep_of_dominant_is_fixpoint() {
        let s = sys("B3");
        let h = RatVector::from_ints(&[1, 1, 0]);
        let (d, w) = dominant_rep(&s, &h, &SimpleSubset::full(3)).unwrap();
        assert_eq!(d, h);
        assert!(w.is_empty());
    }

    #[test]
    fn g2_levi_dominant_rep() {
        let g = sys("G2");
        let (d, w) = dominant_rep(&g, g.simple(0), &SimpleSubset::levi(2, 0)).unwrap();
        assert_eq!(d, RatVector::from_ints(&[-1, 0, 1]));
        assert_eq!(w, WeylWord::new(vec![1]));
        let (full, _) = dominant_rep(&g, g.simple(0), &SimpleSubset::full(2)).unwrap();
        assert_eq!(full, RatVector::from_ints(&[0, -1, 1]));
        assert_ne!(d, full);
    }

    #[test]
    fn dominant_rep_word_recovers_vector() {
        let s = sys("F4");
        let full = SimpleSubset::full(4);
        for r in s.roots() {
            let (d, w) = dominant_rep(&s, r, &full).unwrap();
            assert_eq!(apply_word(&s, &w, r).unwrap(), d);
            assert!(is_dominant(&s, &d, &full).unwrap());
        }
    }

    #[test]
    fn subset_normalizes() {
        let s = SimpleSubset::new(vec![3, 1, 1, 0]);
        assert_eq!(s.indices(), &[0, 1, 3]);
        assert!(!s.contains(2));
        assert_eq!(SimpleSubset::levi(4, 2).indices(), &[0, 1, 3]);
    }
}
