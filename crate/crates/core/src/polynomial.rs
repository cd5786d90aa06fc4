//! `s`-homogeneous polynomials `P: R^n → R^d` and their symmetric
//! `s`-linear maps `P̌`.
//!
//! # Coefficient convention
//!
//! A polynomial is stored as a sparse map from sorted index multisets
//! `κ = (i_1 ≤ ... ≤ i_s)` to codomain vectors `c_κ`. The coefficient is the
//! entry of the symmetric tensor at any ordering of `κ`, so
//!
//! ```text
//! P̌(f_1, ..., f_s) = Σ_κ c_κ Σ_{σ distinct ordering of κ} Π_k f_k[σ_k]
//! P(f)             = Σ_κ c_κ · mult(κ) · Π_{i ∈ κ} f_i
//! ```
//!
//! where `mult(κ) = s! / Π m_j!` counts the distinct orderings of `κ`. With
//! this convention `P(f) = P̌(f, ..., f)` term by term. For example
//! `(f_1 + f_2)²` has `c_{11} = c_{12} = c_{22} = 1`.
//!
//! Index multisets use 0-based coordinates, in memory and in JSON.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{check_dim, LatticeVector, PositiveVector, Scalar, Vector};
use crate::report::{residual, ClaimId, Counterexample, Tolerances, VerificationReport};
use crate::sampling;

/// Largest degree a polynomial may have (keeps `s!` within `u64`).
pub const MAX_DEGREE: usize = 20;

/// Largest degree accepted by [`polarize_blackbox`].
pub const MAX_POLARIZATION_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPolynomial<T = f64> {
    degree: usize,
    domain_dim: usize,
    codomain_dim: usize,
    terms: BTreeMap<Vec<usize>, Vec<T>>,
}

/// Number of distinct orderings of a sorted multiset.
pub fn multinomial(key: &[usize]) -> u64 {
    let mut result: u64 = 1;
    let mut placed: u64 = 0;
    let mut i = 0;
    while i < key.len() {
        let mut run = 1;
        while i + run < key.len() && key[i + run] == key[i] {
            run += 1;
        }
        // multiply by C(placed + run, run) one factor at a time, exactly
        for j in 1..=run as u64 {
            result = result * (placed + j) / j;
        }
        placed += run as u64;
        i += run;
    }
    result
}

/// Rearranges `xs` into the next lexicographic permutation; false at the last one.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

impl<T: Scalar> HomogeneousPolynomial<T> {
    /// The zero polynomial of the given shape.
    pub fn zero(degree: usize, domain_dim: usize, codomain_dim: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidParameter { name: "s", reason: format!("degree must be in 1..={MAX_DEGREE}") });
        }
        if domain_dim == 0 || codomain_dim == 0 {
            return Err(Error::InvalidParameter { name: "n/d", reason: "dimensions must be positive".into() });
        }
        Ok(Self { degree, domain_dim, codomain_dim, terms: BTreeMap::new() })
    }

    /// Builds a polynomial from symmetric tensor entries `c_κ` (see the
    /// module docs). Keys may come in any order; repeated keys add up.
    pub fn from_tensor_entries(
        degree: usize,
        domain_dim: usize,
        codomain_dim: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<T>)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree, domain_dim, codomain_dim)?;
        for (key, coeff) in entries {
            p.add_term(key, coeff)?;
        }
        Ok(p)
    }

    /// Builds a polynomial from monomial coefficients, i.e. the coefficient
    /// of `Π_{i∈κ} f_i` in the expanded `P(f)`.
    pub fn from_monomials(
        degree: usize,
        domain_dim: usize,
        codomain_dim: usize,
        monomials: impl IntoIterator<Item = (Vec<usize>, Vec<T>)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree, domain_dim, codomain_dim)?;
        for (mut key, coeff) in monomials {
            key.sort_unstable();
            let m = T::from_usize(multinomial(&key) as usize);
            let coeff = coeff.into_iter().map(|c| c / m.clone()).collect();
            p.add_term(key, coeff)?;
        }
        Ok(p)
    }

    /// `P(f) = Σ_i c_i f_i^s`: orthogonally additive by construction.
    pub fn diagonal(coefficients: Vec<Vec<T>>, degree: usize) -> Result<Self> {
        let n = coefficients.len();
        let d = coefficients.first().map(Vec::len).ok_or(Error::Empty("diagonal needs at least one coefficient"))?;
        let entries = coefficients.into_iter().enumerate().map(|(i, c)| (vec![i; degree], c));
        Self::from_tensor_entries(degree, n, d, entries)
    }

    fn add_term(&mut self, mut key: Vec<usize>, coeff: Vec<T>) -> Result<()> {
        if key.len() != self.degree {
            return Err(Error::InvalidParameter {
                name: "key",
                reason: format!("key {key:?} has degree {}, expected {}", key.len(), self.degree),
            });
        }
        if let Some(&i) = key.iter().find(|&&i| i >= self.domain_dim) {
            return Err(Error::InvalidParameter {
                name: "key",
                reason: format!("index {i} out of range for dimension {}", self.domain_dim),
            });
        }
        check_dim(self.codomain_dim, coeff.len())?;
        if let Some(i) = coeff.iter().position(|c| !c.is_admissible()) {
            return Err(Error::NonFinite(i));
        }
        key.sort_unstable();
        let slot = self.terms.entry(key).or_insert_with(|| vec![T::zero(); coeff.len()]);
        for (s, c) in slot.iter_mut().zip(coeff) {
            *s = s.clone() + c;
        }
        self.terms.retain(|_, c| c.iter().any(|x| !x.is_zero()));
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    /// Nonzero terms, keyed by sorted index multiset.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Vec<T>> {
        &self.terms
    }

    pub fn coefficient(&self, key: &[usize]) -> Option<&Vec<T>> {
        let mut k = key.to_vec();
        k.sort_unstable();
        self.terms.get(&k)
    }

    /// Terms whose index multiset touches at least two distinct coordinates.
    pub fn mixed_terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<T>)> {
        self.terms.iter().filter(|(k, _)| k.first() != k.last())
    }

    /// No mixed term survives: exactly the orthogonally additive polynomials
    /// on `R^n`.
    pub fn is_structurally_oa(&self) -> bool {
        self.mixed_terms().next().is_none()
    }

    pub fn multilinear(&self) -> SymmetricMultilinearView<'_, T> {
        SymmetricMultilinearView { poly: self }
    }

    /// `P(f)`.
    pub fn eval(&self, f: &Vector<T>) -> Result<Vec<T>> {
        check_dim(self.domain_dim, f.dim())?;
        let x = f.entries();
        let mut out = vec![T::zero(); self.codomain_dim];
        for (key, coeff) in &self.terms {
            let monomial = key.iter().fold(T::one(), |acc, &i| acc * x[i].clone());
            if monomial.is_zero() {
                continue;
            }
            let weight = monomial * T::from_usize(multinomial(key) as usize);
            for (o, c) in out.iter_mut().zip(coeff) {
                *o = o.clone() + c.clone() * weight.clone();
            }
        }
        Ok(out)
    }

    /// Polynomial with every coefficient replaced by its absolute value;
    /// evaluated on `|f|` it bounds the magnitude of each term of `P`.
    pub fn abs(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.iter().map(|x| x.abs()).collect())).collect(),
            ..self.clone()
        }
    }

    pub fn to_f64(&self) -> HomogeneousPolynomial<f64> {
        HomogeneousPolynomial {
            degree: self.degree,
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.iter().map(Scalar::to_f64).collect())).collect(),
        }
    }
}

/// The symmetric `s`-linear map `P̌` attached to a polynomial.
#[derive(Debug, Clone, Copy)]
pub struct SymmetricMultilinearView<'a, T = f64> {
    poly: &'a HomogeneousPolynomial<T>,
}

impl<T: Scalar> SymmetricMultilinearView<'_, T> {
    pub fn polynomial(&self) -> &HomogeneousPolynomial<T> {
        self.poly
    }

    /// `P̌(f_1, ..., f_s)`.
    pub fn eval(&self, fs: &[&Vector<T>]) -> Result<Vec<T>> {
        let p = self.poly;
        if fs.len() != p.degree {
            return Err(Error::ArityMismatch { expected: p.degree, found: fs.len() });
        }
        for f in fs {
            check_dim(p.domain_dim, f.dim())?;
        }
        let mut out = vec![T::zero(); p.codomain_dim];
        let mut order = Vec::with_capacity(p.degree);
        for (key, coeff) in &p.terms {
            order.clear();
            order.extend_from_slice(key);
            let mut sum = T::zero();
            loop {
                let term = order
                    .iter()
                    .zip(fs)
                    .fold(T::one(), |acc, (&i, f)| acc * f.entries()[i].clone());
                sum = sum + term;
                if !next_permutation(&mut order) {
                    break;
                }
            }
            if sum.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(coeff) {
                *o = o.clone() + c.clone() * sum.clone();
            }
        }
        Ok(out)
    }

    /// `P̌` on owned arguments.
    pub fn eval_owned(&self, fs: &[Vector<T>]) -> Result<Vec<T>> {
        let refs: Vec<&Vector<T>> = fs.iter().collect();
        self.eval(&refs)
    }

    /// `P̌` on positive arguments.
    pub fn eval_positive(&self, fs: &[PositiveVector<T>]) -> Result<Vec<T>> {
        let refs: Vec<&Vector<T>> = fs.iter().map(|f| f.as_vector()).collect();
        self.eval(&refs)
    }
}

/// Recovers `P̌(f_1..f_s)` from evaluations of an `s`-homogeneous map:
///
/// ```text
/// P̌(f_1..f_s) = 1/(2^s s!) Σ_{ε ∈ {±1}^s} (Π ε_k) P(Σ ε_k f_k)
/// ```
///
/// Sign vectors `ε` and `-ε` contribute equally, so only `ε_1 = +1` is
/// evaluated. Homogeneity is spot-checked first on `Σ f_k` at `λ = 2` and
/// `λ = -1/2`.
pub fn polarize_blackbox<F>(p: F, degree: usize, fs: &[LatticeVector]) -> Result<Vec<f64>>
where
    F: Fn(&LatticeVector) -> Result<Vec<f64>>,
{
    if degree == 0 {
        return Err(Error::InvalidParameter { name: "s", reason: "must be at least 1".into() });
    }
    if degree > MAX_POLARIZATION_DEGREE {
        return Err(Error::DegreeTooLarge(degree));
    }
    if fs.len() != degree {
        return Err(Error::ArityMismatch { expected: degree, found: fs.len() });
    }
    let n = fs[0].dim();
    for f in fs {
        check_dim(n, f.dim())?;
    }

    let total = fs[1..].iter().try_fold(fs[0].clone(), |acc, f| acc.add(f))?;
    let base = p(&total)?;
    for lambda in [2.0f64, -0.5] {
        let scaled = p(&total.scale(&lambda))?;
        let factor = lambda.powi(degree as i32);
        let expected: Vec<f64> = base.iter().map(|v| v * factor).collect();
        let deviation = residual(&scaled, &expected, 1.0);
        if !(deviation <= 1e-8) {
            return Err(Error::NotHomogeneous { lambda, deviation });
        }
    }

    let mut acc = vec![0.0; base.len()];
    let mut point = vec![0.0; n];
    for mask in 0u32..(1 << (degree - 1)) {
        point.iter_mut().for_each(|x| *x = 0.0);
        let mut sign = 1.0;
        for (k, f) in fs.iter().enumerate() {
            // slot 0 is pinned to +1; bit k-1 flips slot k
            let eps = if k > 0 && mask >> (k - 1) & 1 == 1 { -1.0 } else { 1.0 };
            sign *= eps;
            for (x, v) in point.iter_mut().zip(f.entries()) {
                *x += eps * v;
            }
        }
        let value = p(&LatticeVector::new(point.clone())?)?;
        check_dim(acc.len(), value.len())?;
        for (a, v) in acc.iter_mut().zip(value) {
            *a += sign * v;
        }
    }
    let factorial: f64 = (1..=degree).map(|k| k as f64).product();
    let scale = 1.0 / (2f64.powi(degree as i32 - 1) * factorial);
    Ok(acc.into_iter().map(|a| a * scale).collect())
}

/// Shape and mixed-term budget for [`random_polynomial`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomPolynomialSpec {
    pub degree: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub pure_terms: usize,
    pub mixed_terms: usize,
    /// Share of total coefficient L1 mass carried by mixed terms, in `[0, 1]`.
    pub mixed_mass: f64,
}

fn random_coeff<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Vec<f64> {
    loop {
        let c: Vec<f64> = (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect();
        if c.iter().any(|x| x.abs() > 0.1) {
            return c;
        }
    }
}

/// `P(f) = Σ_i c_i f_i^s` with random `c_i ∈ [-2, 2]^d`.
pub fn random_diagonal<R: Rng + ?Sized>(rng: &mut R, degree: usize, n: usize, d: usize) -> Result<HomogeneousPolynomial> {
    HomogeneousPolynomial::diagonal((0..n).map(|_| random_coeff(rng, d)).collect(), degree)
}

/// Random sparse polynomial whose mixed terms carry exactly the requested
/// fraction of coefficient mass (L1 over all terms and codomain components).
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, spec: RandomPolynomialSpec) -> Result<HomogeneousPolynomial> {
    let RandomPolynomialSpec { degree, domain_dim: n, codomain_dim: d, pure_terms, mixed_terms, mixed_mass } = spec;
    if !(0.0..=1.0).contains(&mixed_mass) {
        return Err(Error::InvalidParameter { name: "mixed_mass", reason: "must lie in [0, 1]".into() });
    }
    let wants_mixed = mixed_terms > 0 && mixed_mass > 0.0;
    if wants_mixed && (n < 2 || degree < 2) {
        return Err(Error::InvalidParameter { name: "mixed_terms", reason: "mixed terms need n ≥ 2 and s ≥ 2".into() });
    }
    let impossible = (mixed_mass == 1.0 && pure_terms > 0)
        || (mixed_mass > 0.0 && mixed_terms == 0)
        || (mixed_mass > 0.0 && mixed_mass < 1.0 && pure_terms == 0);
    if impossible {
        return Err(Error::InvalidParameter {
            name: "mixed_mass",
            reason: "term counts cannot realize the requested mass split".into(),
        });
    }

    let mut pure: BTreeMap<Vec<usize>, Vec<f64>> = BTreeMap::new();
    let mut coords: Vec<usize> = (0..n).collect();
    rand::seq::SliceRandom::shuffle(coords.as_mut_slice(), rng);
    for &i in coords.iter().cycle().take(pure_terms.min(n)) {
        pure.insert(vec![i; degree], random_coeff(rng, d));
    }
    let mut mixed: BTreeMap<Vec<usize>, Vec<f64>> = BTreeMap::new();
    let max_mixed = count_mixed_keys(n, degree);
    while wants_mixed && mixed.len() < mixed_terms.min(max_mixed) {
        let mut key: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..n)).collect();
        key.sort_unstable();
        if key.first() != key.last() && !mixed.contains_key(&key) {
            mixed.insert(key, random_coeff(rng, d));
        }
    }

    let l1 = |m: &BTreeMap<Vec<usize>, Vec<f64>>| m.values().flatten().map(|x| x.abs()).sum::<f64>();
    let (pure_mass, raw_mixed) = (l1(&pure), l1(&mixed));
    if raw_mixed > 0.0 && pure_mass > 0.0 {
        // mixed / (pure + mixed) = mixed_mass
        let target = mixed_mass / (1.0 - mixed_mass) * pure_mass;
        let k = target / raw_mixed;
        mixed.values_mut().flatten().for_each(|x| *x *= k);
    }
    HomogeneousPolynomial::from_tensor_entries(degree, n, d, pure.into_iter().chain(mixed))
}

/// Multisets of size `s` from `n` symbols with at least two distinct symbols.
fn count_mixed_keys(n: usize, s: usize) -> usize {
    // C(n + s - 1, s) - n
    let mut c: u128 = 1;
    for j in 1..=s as u128 {
        c = c * (n as u128 + j - 1) / j;
    }
    (c as usize).saturating_sub(n)
}

/// Share of coefficient L1 mass carried by mixed terms.
pub fn mixed_mass(p: &HomogeneousPolynomial) -> f64 {
    let total: f64 = p.terms().values().flatten().map(|x| x.abs()).sum();
    if total == 0.0 {
        return 0.0;
    }
    p.mixed_terms().flat_map(|(_, c)| c).map(|x| x.abs()).sum::<f64>() / total
}

fn additivity_trial(
    p: &HomogeneousPolynomial,
    f: &LatticeVector,
    g: &LatticeVector,
    tol: &Tolerances,
    report: &mut VerificationReport,
) -> Result<()> {
    let lhs = p.eval(&f.add(g)?)?;
    let pf = p.eval(f)?;
    let pg = p.eval(g)?;
    let rhs: Vec<f64> = pf.iter().zip(&pg).map(|(a, b)| a + b).collect();
    let r = residual(&lhs, &rhs, tol.relative_switch);
    report.record(r, || Counterexample {
        inputs: vec![f.entries().to_vec(), g.entries().to_vec()],
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        residual: r,
        note: Some("P(f+g) vs P(f)+P(g)".into()),
    });
    Ok(())
}

/// Checks `P(f+g) = P(f) + P(g)` on `trials` random disjoint pairs in `E_+`.
/// Failure is a report outcome, not an error.
pub fn is_positively_orthogonally_additive(p: &HomogeneousPolynomial, trials: u64, seed: u64) -> VerificationReport {
    let tol = Tolerances::default();
    let mut report = VerificationReport::forward(ClaimId::PositiveOa, tol.identity_rel);
    let mut rng = sampling::rng(seed);
    for _ in 0..trials.max(1) {
        let (f, g) = sampling::disjoint_pair(&mut rng, p.domain_dim());
        // dimensions match by construction
        let _ = additivity_trial(p, &f, &g, &tol, &mut report);
    }
    report
}

/// Largest domain dimension for [`exhaustive_positive_oa`].
pub const MAX_EXHAUSTIVE_DIM: usize = 16;

/// Checks positive orthogonal additivity on every bipartition of the
/// coordinates into two nonempty blocks, with random positive entries.
pub fn exhaustive_positive_oa(p: &HomogeneousPolynomial, seed: u64) -> Result<VerificationReport> {
    let n = p.domain_dim();
    if n > MAX_EXHAUSTIVE_DIM {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: format!("exhaustive bipartitions need n ≤ {MAX_EXHAUSTIVE_DIM}"),
        });
    }
    let tol = Tolerances::default();
    let mut report = VerificationReport::forward(ClaimId::PositiveOa, tol.identity_rel);
    let mut rng = sampling::rng(seed);
    if n < 2 {
        // only the trivial split exists; P(f + 0) = P(f) + P(0)
        let f = sampling::positive_vector(&mut rng, n);
        let zero = LatticeVector::zeros(n)?;
        additivity_trial(p, &f, &zero, &tol, &mut report)?;
        return Ok(report);
    }
    // mask bit n-1 fixed to the right block to skip mirror images
    for mask in 1u32..(1 << (n - 1)) {
        let left: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let right: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let f = sampling::moderate_supported_on(&mut rng, n, &left);
        let g = sampling::moderate_supported_on(&mut rng, n, &right);
        additivity_trial(p, &f, &g, &tol, &mut report)?;
    }
    Ok(report)
}

/// Full orthogonal additivity on disjoint pairs with entries of both signs.
pub fn is_orthogonally_additive(p: &HomogeneousPolynomial, trials: u64, seed: u64) -> VerificationReport {
    let tol = Tolerances::default();
    let mut report = VerificationReport::forward(ClaimId::Oa, tol.identity_rel);
    let mut rng = sampling::rng(seed);
    for _ in 0..trials.max(1) {
        let (f, g) = sampling::disjoint_pair(&mut rng, p.domain_dim());
        let mut signed = |v: &PositiveVector| {
            let e = v.entries().iter().map(|x| if rng.gen_bool(0.5) { -x } else { *x }).collect();
            LatticeVector::new(e).expect("finite")
        };
        let (f, g) = (signed(&f), signed(&g));
        let _ = additivity_trial(p, &f, &g, &tol, &mut report);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct TermJson {
    key: Vec<usize>,
    coeff: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermsJson {
    s: usize,
    n: usize,
    d: usize,
    terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagonalJson {
    #[serde(default)]
    s: Option<usize>,
    diagonal: Vec<Vec<f64>>,
}

fn parse_with_path<'a, D: Deserialize<'a>>(text: &'a str) -> Result<D> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse(format!("at `{path}`: {}", e.into_inner()))
    })
}

impl HomogeneousPolynomial<f64> {
    /// Parses the polynomial JSON format:
    ///
    /// ```text
    /// {"s": 2, "n": 2, "d": 1, "terms": [{"key": [0, 1], "coeff": [1.0]}]}
    /// {"s": 2, "diagonal": [[1.0], [1.0]]}
    /// ```
    ///
    /// Keys are symmetric tensor entries over 0-based coordinates. In the
    /// diagonal form `s` may be omitted when `default_degree` is given.
    pub fn from_json_str(text: &str, default_degree: Option<usize>) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if value.get("diagonal").is_some() {
            let parsed: DiagonalJson = parse_with_path(text)?;
            let s = parsed.s.or(default_degree).ok_or_else(|| Error::Parse("at `s`: missing degree".into()))?;
            if parsed.diagonal.iter().any(|c| c.len() != parsed.diagonal[0].len()) {
                return Err(Error::Parse("at `diagonal`: coefficient vectors differ in length".into()));
            }
            Self::diagonal(parsed.diagonal, s).map_err(|e| Error::Parse(format!("at `diagonal`: {e}")))
        } else {
            let parsed: TermsJson = parse_with_path(text)?;
            let mut p = Self::zero(parsed.s, parsed.n, parsed.d).map_err(|e| Error::Parse(format!("at `s/n/d`: {e}")))?;
            for (i, t) in parsed.terms.into_iter().enumerate() {
                p.add_term(t.key, t.coeff).map_err(|e| Error::Parse(format!("at `terms[{i}]`: {e}")))?;
            }
            Ok(p)
        }
    }

    pub fn to_json_value(&self) -> Value {
        let doc = TermsJson {
            s: self.degree,
            n: self.domain_dim,
            d: self.codomain_dim,
            terms: self.terms.iter().map(|(k, c)| TermJson { key: k.clone(), coeff: c.clone() }).collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}
