//! Irreducible reduced root systems over the rationals.
//!
//! Two construction paths are provided. [`RootSystem::build`] returns the
//! canonical model: the classical families and `G2` in their explicit
//! coordinate realizations (standard dot product), and `E6`-`E8`, `F4` by
//! reflection closure from the Cartan matrix. [`RootSystem::from_cartan`]
//! runs the closure construction for any type; it is used to cross-check the
//! coordinate models.
//!
//! Roots are stored sorted by the height of `±β` and then lexicographically by
//! coordinates, so root indices are deterministic.

pub mod cartan;
pub mod vector;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, ToPrimitive, Zero};

pub use cartan::{CartanType, Family};
pub use vector::{format_pq, parse_pq, rat, ratio, RatMatrix, RatVector, Rational};

use crate::error::{Error, Result};

/// Index of a root in [`RootSystem::roots`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LengthClass {
    Long,
    Short,
}

/// Symmetric bilinear form given by a Gram matrix on the ambient coordinates.
#[derive(Clone, Debug)]
pub struct Form {
    gram: RatMatrix,
    standard: bool,
}

impl Form {
    pub fn new(gram: RatMatrix) -> Self {
        let standard = gram.is_identity();
        Form { gram, standard }
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// The covector `G v`, so that `(u, v) = u . (G v)`.
    pub fn lower(&self, v: &RatVector) -> RatVector {
        if self.standard {
            v.clone()
        } else {
            self.gram.mul_vec(v)
        }
    }

    pub fn eval(&self, u: &RatVector, v: &RatVector) -> Rational {
        if self.standard {
            u.dot(v)
        } else {
            u.dot(&self.gram.mul_vec(v))
        }
    }
}

/// An immutable root system `(V, Φ, (,))` with a chosen base.
pub struct RootSystem {
    ctype: CartanType,
    dual: bool,
    form: Form,
    roots: Vec<RatVector>,
    index: HashMap<RatVector, usize>,
    neg: Vec<usize>,
    coeffs: Vec<Vec<i64>>,
    sq_lens: Vec<Rational>,
    max_sq_len: Rational,
    simple_roots: Vec<usize>,
    positives: Vec<RootIndex>,
    simple_gram_inv: RatMatrix,
    // c_i with v . c_i = <v, alpha_i^vee>
    coroot_covectors: Vec<RatVector>,
    pub(crate) highest: OnceLock<(RatVector, RatVector)>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("type", &self.name())
            .field("roots", &self.roots.len())
            .field("dim", &self.ambient_dim())
            .finish()
    }
}

impl RootSystem {
    /// The canonical model of `ctype`.
    pub fn build(ctype: CartanType) -> RootSystem {
        match ctype.family() {
            Family::E | Family::F => Self::from_cartan(ctype),
            _ => Self::coordinate_model(ctype),
        }
        .expect("canonical models are well-formed")
    }

    /// Closure model: ambient coordinates are coefficients on the simple
    /// roots, the form is the minimal positive-integer symmetrization of the
    /// Cartan matrix, and `Φ` is the orbit of `Δ` under simple reflections.
    pub fn from_cartan(ctype: CartanType) -> Result<RootSystem> {
        let n = ctype.rank();
        let a = ctype.cartan_matrix();
        let gram = symmetrize(&a);
        let form = Form::new(gram);
        let simples: Vec<RatVector> = (0..n).map(|i| RatVector::unit(n, i)).collect();
        let covectors: Vec<RatVector> = simples
            .iter()
            .map(|s| form.lower(s).scale(&(rat(2) / form.eval(s, s))))
            .collect();

        let mut seen: HashMap<RatVector, ()> = HashMap::new();
        let mut roots = Vec::new();
        let mut queue: VecDeque<RatVector> = simples.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            if seen.contains_key(&beta) {
                continue;
            }
            for (alpha, c) in simples.iter().zip(&covectors) {
                let image = beta.sub_scaled(&beta.dot(c), alpha);
                if !seen.contains_key(&image) {
                    queue.push_back(image);
                }
            }
            seen.insert(beta.clone(), ());
            roots.push(beta);
        }
        Self::assemble(ctype, false, form, roots, simples)
    }

    /// Explicit coordinates for `A`, `B`, `C`, `D` (in `Q^n`) and `G2` (in the
    /// sum-zero plane of `Q^3`), with the standard dot product.
    pub fn coordinate_model(ctype: CartanType) -> Result<RootSystem> {
        let r = ctype.rank();
        let (dim, roots, simples) = match ctype.family() {
            Family::A => {
                let n = r + 1;
                let roots = type_a_roots(n);
                let simples = (0..r).map(|i| RatVector::e_diff(n, i, i + 1)).collect();
                (n, roots, simples)
            }
            Family::B | Family::C | Family::D => {
                let n = r;
                let mut roots = type_d_roots(n);
                let short = match ctype.family() {
                    Family::B => 1,
                    Family::C => 2,
                    _ => 0,
                };
                if short != 0 {
                    for i in 0..n {
                        roots.push(RatVector::e_signed(n, &[(i, short)]));
                        roots.push(RatVector::e_signed(n, &[(i, -short)]));
                    }
                }
                let mut simples: Vec<RatVector> =
                    (0..n - 1).map(|i| RatVector::e_diff(n, i, i + 1)).collect();
                simples.push(match ctype.family() {
                    Family::D => RatVector::e_signed(n, &[(n - 2, 1), (n - 1, 1)]),
                    _ => RatVector::e_signed(n, &[(n - 1, short)]),
                });
                (n, roots, simples)
            }
            Family::G => {
                let mut roots = type_a_roots(3);
                for i in 0..3 {
                    let mut v = RatVector::from_ints(&[-1, -1, -1]);
                    v = &v + &RatVector::e_signed(3, &[(i, 3)]);
                    roots.push(-&v);
                    roots.push(v);
                }
                let simples = vec![
                    RatVector::from_ints(&[1, -1, 0]),
                    RatVector::from_ints(&[-2, 1, 1]),
                ];
                (3, roots, simples)
            }
            Family::E | Family::F => return Self::from_cartan(ctype),
        };
        Self::assemble(ctype, false, Form::new(RatMatrix::identity(dim)), roots, simples)
    }

    fn assemble(
        ctype: CartanType,
        dual: bool,
        form: Form,
        roots: Vec<RatVector>,
        simples: Vec<RatVector>,
    ) -> Result<RootSystem> {
        let rank = simples.len();
        let lowered: Vec<RatVector> = simples.iter().map(|s| form.lower(s)).collect();
        let simple_gram = RatMatrix::from_fn(rank, rank, |i, j| simples[i].dot(&lowered[j]));
        let simple_gram_inv = simple_gram
            .inverse()
            .expect("simple roots are linearly independent");

        let mut entries: Vec<(RatVector, Vec<i64>)> = roots
            .into_iter()
            .map(|beta| {
                let c = solve_on_basis(&simples, &lowered, &simple_gram_inv, &beta)?;
                Ok((beta, c))
            })
            .collect::<Result<_>>()?;
        entries.sort_by(|(u, cu), (v, cv)| {
            let hu = cu.iter().sum::<i64>().abs();
            let hv = cv.iter().sum::<i64>().abs();
            hu.cmp(&hv).then_with(|| u.cmp(v))
        });
        entries.dedup_by(|a, b| a.0 == b.0);

        let (roots, coeffs): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let index: HashMap<RatVector, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let neg = roots
            .iter()
            .map(|r| index.get(&-r).copied())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotARoot("negation of a root".into()))?;
        let simple_roots = simples
            .iter()
            .map(|s| index.get(s).copied().ok_or_else(|| Error::NotARoot(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let positives = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().all(|&m| m >= 0))
            .map(|(i, _)| RootIndex(i))
            .collect();
        let sq_lens: Vec<Rational> = roots.iter().map(|r| form.eval(r, r)).collect();
        let max_sq_len = sq_lens.iter().max().cloned().unwrap_or_else(Rational::zero);
        let coroot_covectors = simples
            .iter()
            .zip(&lowered)
            .map(|(s, l)| l.scale(&(rat(2) / s.dot(l))))
            .collect();

        Ok(RootSystem {
            ctype,
            dual,
            form,
            roots,
            index,
            neg,
            coeffs,
            sq_lens,
            max_sq_len,
            simple_roots,
            positives,
            simple_gram_inv,
            coroot_covectors,
            highest: OnceLock::new(),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    /// True for a system produced by [`RootSystem::dual`] an odd number of times.
    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// `B3`, or `B3∨` for the dual of `B3`.
    pub fn name(&self) -> String {
        if self.dual {
            format!("{}∨", self.ctype)
        } else {
            self.ctype.to_string()
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.gram.rows()
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn inner(&self, u: &RatVector, v: &RatVector) -> Rational {
        self.form.eval(u, v)
    }

    pub fn roots(&self) -> &[RatVector] {
        &self.roots
    }

    pub fn root(&self, idx: RootIndex) -> &RatVector {
        &self.roots[idx.0]
    }

    pub fn root_index(&self, v: &RatVector) -> Option<RootIndex> {
        self.index.get(v).copied().map(RootIndex)
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        self.index.contains_key(v)
    }

    pub(crate) fn require_root(&self, v: &RatVector) -> Result<RootIndex> {
        self.check_dim(v)?;
        self.root_index(v).ok_or_else(|| Error::NotARoot(v.to_string()))
    }

    pub(crate) fn check_dim(&self, v: &RatVector) -> Result<()> {
        if v.dim() == self.ambient_dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.dim(),
            })
        }
    }

    pub(crate) fn check_simple(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::BadIndex {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn negate(&self, idx: RootIndex) -> RootIndex {
        RootIndex(self.neg[idx.0])
    }

    pub fn simple(&self, i: usize) -> &RatVector {
        &self.roots[self.simple_roots[i]]
    }

    pub fn simples(&self) -> impl Iterator<Item = &RatVector> + '_ {
        self.simple_roots.iter().map(|&k| &self.roots[k])
    }

    pub fn simple_index(&self, i: usize) -> RootIndex {
        RootIndex(self.simple_roots[i])
    }

    pub fn positives(&self) -> &[RootIndex] {
        &self.positives
    }

    pub fn is_positive(&self, idx: RootIndex) -> bool {
        self.coeffs[idx.0].iter().all(|&m| m >= 0)
    }

    /// Coefficients of a root on `Δ`.
    pub fn coefficients(&self, idx: RootIndex) -> &[i64] {
        &self.coeffs[idx.0]
    }

    /// Sum of the `Δ`-coefficients (negative for negative roots).
    pub fn signed_height(&self, idx: RootIndex) -> i64 {
        self.coeffs[idx.0].iter().sum()
    }

    pub fn squared_length(&self, idx: RootIndex) -> &Rational {
        &self.sq_lens[idx.0]
    }

    pub fn max_squared_length(&self) -> &Rational {
        &self.max_sq_len
    }

    pub fn is_simply_laced(&self) -> bool {
        self.sq_lens.iter().all(|l| *l == self.max_sq_len)
    }

    /// `<v, alpha_i^vee>` for the `i`-th simple root; no membership check on `v`.
    pub fn pairing_simple(&self, v: &RatVector, i: usize) -> Rational {
        v.dot(&self.coroot_covectors[i])
    }

    /// `β^vee = 2β / (β, β)`.
    pub fn coroot(&self, beta: &RatVector) -> Result<RatVector> {
        let idx = self.require_root(beta)?;
        Ok(beta.scale(&(rat(2) / &self.sq_lens[idx.0])))
    }

    /// `<χ, β^vee> = 2 (χ, β) / (β, β)`.
    pub fn pairing(&self, chi: &RatVector, beta: &RatVector) -> Result<Rational> {
        self.check_dim(chi)?;
        let idx = self.require_root(beta)?;
        Ok(rat(2) * self.form.eval(chi, beta) / &self.sq_lens[idx.0])
    }

    pub fn length_class(&self, beta: &RatVector) -> Result<LengthClass> {
        let idx = self.require_root(beta)?;
        Ok(self.length_class_of(idx))
    }

    pub fn length_class_of(&self, idx: RootIndex) -> LengthClass {
        if self.sq_lens[idx.0] == self.max_sq_len {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    /// Long in the simply-laced convention: every root of a simply-laced system is long.
    pub fn is_long(&self, idx: RootIndex) -> bool {
        self.length_class_of(idx) == LengthClass::Long
    }

    /// Short in the simply-laced convention: every root of a simply-laced system is short.
    pub fn is_short(&self, idx: RootIndex) -> bool {
        self.is_simply_laced() || self.length_class_of(idx) == LengthClass::Short
    }

    /// Cartan matrix `<alpha_i, alpha_j^vee>` read off the simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| {
                        let p = self.pairing_simple(self.simple(i), j);
                        p.to_integer().to_i64().filter(|_| p.is_integer()).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect()
    }

    /// Coordinates of a vector in the span of `Δ` on the simple roots.
    pub fn coordinates_on_simples(&self, v: &RatVector) -> Result<Vec<Rational>> {
        self.check_dim(v)?;
        let lowered: Vec<RatVector> = self.simples().map(|s| self.form.lower(s)).collect();
        let c = solve_rational(&lowered, &self.simple_gram_inv, v);
        let recon = combine(self.simples(), &c, self.ambient_dim());
        if recon != *v {
            return Err(Error::NonIntegralSolution(v.to_string()));
        }
        Ok(c)
    }

    /// The root system `{β^vee}` with the same form and simple roots `Δ^vee`.
    pub fn dual(&self) -> RootSystem {
        let roots = self
            .roots
            .iter()
            .zip(&self.sq_lens)
            .map(|(r, l)| r.scale(&(rat(2) / l)))
            .collect();
        let simples = self
            .simple_roots
            .iter()
            .map(|&k| self.roots[k].scale(&(rat(2) / &self.sq_lens[k])))
            .collect();
        Self::assemble(self.ctype, !self.dual, self.form.clone(), roots, simples)
            .expect("dual of a root system is a root system")
    }
}

/// `Σ c_i b_i`.
pub(crate) fn combine<'a>(
    basis: impl Iterator<Item = &'a RatVector>,
    coeffs: &[Rational],
    dim: usize,
) -> RatVector {
    basis
        .zip(coeffs)
        .fold(RatVector::zero(dim), |acc, (b, c)| acc.sub_scaled(&-c, b))
}

fn solve_rational(lowered: &[RatVector], gram_inv: &RatMatrix, v: &RatVector) -> Vec<Rational> {
    let rhs = RatVector::new(lowered.iter().map(|l| v.dot(l)).collect());
    gram_inv.mul_vec(&rhs).coords().to_vec()
}

/// Integer coefficients of `v` on `basis`, checked by reconstruction.
pub(crate) fn solve_on_basis(
    basis: &[RatVector],
    lowered: &[RatVector],
    gram_inv: &RatMatrix,
    v: &RatVector,
) -> Result<Vec<i64>> {
    let c = solve_rational(lowered, gram_inv, v);
    if combine(basis.iter(), &c, v.dim()) != *v {
        return Err(Error::NonIntegralSolution(v.to_string()));
    }
    c.iter()
        .map(|x| {
            x.is_integer()
                .then(|| x.to_integer().to_i64())
                .flatten()
                .ok_or_else(|| Error::NonIntegralSolution(v.to_string()))
        })
        .collect()
}

fn type_a_roots(n: usize) -> Vec<RatVector> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| RatVector::e_diff(n, i, j))
        .collect()
}

fn type_d_roots(n: usize) -> Vec<RatVector> {
    let mut roots = type_a_roots(n);
    for i in 0..n {
        for j in i + 1..n {
            roots.push(RatVector::e_signed(n, &[(i, 1), (j, 1)]));
            roots.push(RatVector::e_signed(n, &[(i, -1), (j, -1)]));
        }
    }
    roots
}

/// Gram matrix `(alpha_i, alpha_j)` for a connected Cartan matrix, scaled to
/// the smallest positive-integer form.
pub fn symmetrize(a: &[Vec<i64>]) -> RatMatrix {
    let n = a.len();
    let mut len: Vec<Option<Rational>> = vec![None; n];
    len[0] = Some(Rational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if j != i && a[i][j] != 0 && len[j].is_none() {
                // a_ij l_j = a_ji l_i
                let lj = len[i].as_ref().unwrap() * ratio(a[j][i], a[i][j]);
                len[j] = Some(lj);
                queue.push_back(j);
            }
        }
    }
    let len: Vec<Rational> = len
        .into_iter()
        .map(|l| l.expect("Cartan matrix of an irreducible type is connected"))
        .collect();
    let raw = RatMatrix::from_fn(n, n, |i, j| rat(a[i][j]) * &len[j] / rat(2));
    let mut denom_lcm = num_bigint::BigInt::one();
    for i in 0..n {
        for j in 0..n {
            denom_lcm = num_integer::lcm(denom_lcm, raw.get(i, j).denom().clone());
        }
    }
    let scaled = RatMatrix::from_fn(n, n, |i, j| raw.get(i, j) * Rational::from_integer(denom_lcm.clone()));
    let mut g = num_bigint::BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            g = num_integer::gcd(g, scaled.get(i, j).numer().clone());
        }
    }
    let g = Rational::from_integer(g.abs());
    RatMatrix::from_fn(n, n, |i, j| scaled.get(i, j) / &g)
}
