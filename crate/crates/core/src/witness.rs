//! Explicit Levi-Weyl words carrying a special simple root to a long root,
//! and a special or co-special simple root to its dominant conjugate.

use num_traits::Signed;

use crate::classify::{highest_roots, is_cospecial, is_special};
use crate::error::{Error, Result};
use crate::roots::{RatVector, RootSystem};
use crate::weyl::{apply_word, reflect_unchecked, WeylWord};

/// A word avoiding `avoided` with `word(source) == target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    pub avoided: usize,
    pub word: WeylWord,
    pub source: RatVector,
    pub target: RatVector,
}

impl WitnessResult {
    /// Replays the word and checks both invariants.
    pub fn verify(&self, s: &RootSystem) -> bool {
        self.word.avoids(self.avoided)
            && apply_word(s, &self.word, &self.source).is_ok_and(|v| v == self.target)
    }
}

/// For special `α_i` and a long positive root `β` in which `α_i` appears, a
/// word in `Δ ∖ {α_i}` mapping `α_i` to `β`.
///
/// Descends from `β` by height: while `β ≠ α_i`, reflect at the lowest-index
/// `α' ≠ α_i` with `(β, α') > 0`. Such an `α'` always exists for special
/// `α_i`; each step keeps `β` long and positive, lowers its height, and leaves
/// the coefficient of `α_i` at 1.
pub fn levi_conjugator(s: &RootSystem, i: usize, beta: &RatVector) -> Result<WitnessResult> {
    s.check_simple(i)?;
    let idx = s.require_root(beta)?;
    if !is_special(s, i)? {
        return Err(Error::NotSpecial(i));
    }
    if !s.is_long(idx) {
        return Err(Error::NotLong(beta.to_string()));
    }
    if s.coefficients(idx)[i] == 0 {
        return Err(Error::MultiplicityZero {
            index: i,
            root: beta.to_string(),
        });
    }
    if !s.is_positive(idx) {
        return Err(Error::NotPositiveRoot(beta.to_string()));
    }

    let alpha = s.simple(i);
    let mut current = beta.clone();
    let mut letters = Vec::new();
    while current != *alpha {
        let j = (0..s.rank())
            .filter(|&j| j != i)
            .find(|&j| s.inner(&current, s.simple(j)).is_positive())
            .ok_or_else(|| Error::DescentStalled(current.to_string()))?;
        current = reflect_unchecked(s, j, &current);
        letters.push(j);
    }
    // s_{j_k} ... s_{j_1} β = α, hence β = s_{j_1} ... s_{j_k} α
    Ok(WitnessResult {
        avoided: i,
        word: WeylWord::new(letters),
        source: alpha.clone(),
        target: beta.clone(),
    })
}

/// A word in `Δ ∖ {α_i}` mapping `α_i` to `dom(α_i)`.
///
/// For special `α_i` the target is the highest root. For co-special `α_i` the
/// conjugator is built in the dual system, carrying `α_i^vee` to the highest
/// coroot, and the same word carries `α_i` to `α^{h₂}`.
pub fn dominant_witness(s: &RootSystem, i: usize) -> Result<WitnessResult> {
    s.check_simple(i)?;
    let (highest, highest_short) = highest_roots(s);
    let result = if is_special(s, i)? {
        levi_conjugator(s, i, &highest)?
    } else if is_cospecial(s, i)? {
        let dual = s.dual();
        let highest_coroot = s.coroot(&highest_short)?;
        let w = levi_conjugator(&dual, i, &highest_coroot)?;
        WitnessResult {
            avoided: i,
            word: w.word,
            source: s.simple(i).clone(),
            target: highest_short,
        }
    } else {
        return Err(Error::NeitherSpecialNorCospecial(i));
    };
    debug_assert!(result.verify(s));
    Ok(result)
}
