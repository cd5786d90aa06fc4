//! Root mean power, geometric, harmonic and weighted geometric means on the
//! positive cone, applied coordinatewise.
//!
//! The harmonic and weighted geometric means are concave and positively
//! homogeneous, so each is the infimum of its tangents:
//!
//! ```text
//! η_s(f)           = s · inf { Σ a_k f_k : 0 ≤ a_k ≤ 1, Σ √a_k = 1 }
//! γ_{r/s}(f)       = (1/s) · inf { Σ r_k θ_k f_k : θ_k > 0, Π θ_k^{r_k/s} = 1 }
//! ```
//!
//! Besides the closed forms, both infima are evaluated by a Lagrange
//! stationary point and by exact minimization over a resolution-`m` lattice
//! of feasible parameters. The lattice route only ever evaluates feasible
//! points, so its value bounds the mean from above and is nonincreasing
//! when `m` doubles.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{apply_homogeneous, common_dim, PositiveVector, Scalar};
use crate::partitions::WeightVector;

/// Which mean is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeanKind {
    Rmp,
    Gm,
    Hm,
    Wgm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Lagrange,
    Grid,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Lagrange => "lagrange",
            Method::Grid => "grid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfimumKind {
    Harmonic { arity: usize },
    WeightedGeometric { weights: WeightVector },
}

impl InfimumKind {
    fn name(&self) -> &'static str {
        match self {
            InfimumKind::Harmonic { .. } => "harmonic",
            InfimumKind::WeightedGeometric { .. } => "weighted_geometric",
        }
    }
}

/// Describes one of the two infimum representations and the lattice
/// resolution `m` used by the grid route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfimumSpec {
    pub kind: InfimumKind,
    pub resolution: u32,
}

impl InfimumSpec {
    pub fn harmonic(arity: usize, resolution: u32) -> Result<Self> {
        Self::new(InfimumKind::Harmonic { arity }, resolution)
    }

    pub fn weighted_geometric(weights: WeightVector, resolution: u32) -> Result<Self> {
        Self::new(InfimumKind::WeightedGeometric { weights }, resolution)
    }

    pub fn new(kind: InfimumKind, resolution: u32) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::InvalidParameter { name: "resolution", reason: "must be at least 1".into() });
        }
        if let InfimumKind::Harmonic { arity: 0 } = kind {
            return Err(Error::InvalidParameter { name: "arity", reason: "must be at least 1".into() });
        }
        Ok(Self { kind, resolution })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeanResult {
    pub value: PositiveVector,
    pub method: Method,
    /// Upper bound on `value - exact`, maximized over coordinates; grid only.
    pub residual_bound: Option<f64>,
}

impl MeanResult {
    fn exact(value: PositiveVector, method: Method) -> Self {
        Self { value, method, residual_bound: None }
    }
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::ArityMismatch { expected, found });
    }
    Ok(())
}

/// `𝔖_s(f_1, ..., f_r) = (Σ_k f_k^s)^{1/s}`.
pub fn root_mean_power(s: u32, fs: &[PositiveVector]) -> Result<PositiveVector> {
    if s == 0 {
        return Err(Error::InvalidParameter { name: "s", reason: "must be at least 1".into() });
    }
    let exponent = f64::from(s);
    apply_homogeneous(
        |xs| {
            // scale by the max to keep x^s in range
            let top = xs.iter().cloned().fold(0.0, f64::max);
            if top == 0.0 {
                return 0.0;
            }
            let sum: f64 = xs.iter().map(|x| (x / top).powi(s as i32)).sum();
            top * sum.powf(1.0 / exponent)
        },
        fs,
    )
}

/// Scalar `(Π x_k)^{1/s}` for nonnegative `x`.
pub(crate) fn geometric_scalar(xs: &[f64]) -> f64 {
    if xs.contains(&0.0) {
        return 0.0;
    }
    let s = xs.len();
    let product: f64 = xs.iter().product();
    if product.is_normal() {
        match s {
            1 => product,
            2 => product.sqrt(),
            _ => product.powf(1.0 / s as f64),
        }
    } else {
        (xs.iter().map(|x| x.ln()).sum::<f64>() / s as f64).exp()
    }
}

/// `𝔊_s(f_1, ..., f_s)`, with `s` the number of arguments.
pub fn geometric_mean(fs: &[PositiveVector]) -> Result<PositiveVector> {
    apply_homogeneous(geometric_scalar, fs)
}

/// Scalar harmonic mean: `s / Σ 1/x_k`, or 0 when any `x_k` is 0.
///
/// Evaluated as `min · (s / Σ min/x_k)`: every ratio is at most 1 and the
/// ratio at the minimizer is exactly 1, so in floating point the result still
/// lies in `[min, s·min]` and equal arguments return themselves exactly.
pub fn harmonic_scalar<T: Scalar>(xs: &[T]) -> T {
    if xs.iter().any(|x| x.is_zero()) {
        return T::zero();
    }
    let min = xs[1..].iter().fold(xs[0].clone(), |m, x| if *x < m { x.clone() } else { m });
    let ratios = xs.iter().fold(T::zero(), |acc, x| acc + min.clone() / x.clone());
    min * (T::from_usize(xs.len()) / ratios)
}

/// `η_s(f_1, ..., f_s)`; works in any [`Scalar`], exactly for rationals.
pub fn harmonic_mean<T: Scalar>(fs: &[PositiveVector<T>]) -> Result<PositiveVector<T>> {
    apply_homogeneous(harmonic_scalar, fs)
}

/// Arithmetic mean, coordinatewise.
pub fn arithmetic_mean(fs: &[PositiveVector]) -> Result<PositiveVector> {
    apply_homogeneous(|xs| xs.iter().sum::<f64>() / xs.len() as f64, fs)
}

/// `γ_{t_1..t_p}(f_1, ..., f_p) = Π f_k^{t_k}`.
pub fn weighted_geometric_mean(w: &WeightVector, fs: &[PositiveVector]) -> Result<PositiveVector> {
    check_arity(w.len(), fs.len())?;
    let t = w.as_f64();
    apply_homogeneous(
        |xs| {
            if xs.contains(&0.0) {
                return 0.0;
            }
            xs.iter().zip(&t).map(|(x, tk)| x.powf(*tk)).product()
        },
        fs,
    )
}

/// `η_s` through its infimum representation.
pub fn harmonic_mean_via_infimum(fs: &[PositiveVector], spec: &InfimumSpec, method: Method) -> Result<MeanResult> {
    let arity = match spec.kind {
        InfimumKind::Harmonic { arity } => arity,
        ref other => return Err(Error::WrongKind { expected: "harmonic", found: other.name() }),
    };
    check_arity(arity, fs.len())?;
    common_dim(fs)?;
    match method {
        Method::ClosedForm => Ok(MeanResult::exact(harmonic_mean(fs)?, method)),
        Method::Lagrange => Ok(MeanResult::exact(apply_homogeneous(harmonic_lagrange, fs)?, method)),
        Method::Grid => {
            let mut bound = 0.0f64;
            let value = apply_homogeneous(
                |xs| {
                    let (v, b) = harmonic_grid(xs, spec.resolution);
                    bound = bound.max(b);
                    v
                },
                fs,
            )?;
            Ok(MeanResult { value, method, residual_bound: Some(bound) })
        }
    }
}

/// `γ_{r/s}` through its infimum representation.
pub fn wgm_via_infimum(w: &WeightVector, fs: &[PositiveVector], spec: &InfimumSpec, method: Method) -> Result<MeanResult> {
    match &spec.kind {
        InfimumKind::WeightedGeometric { weights } if weights == w => {}
        InfimumKind::WeightedGeometric { .. } => {
            return Err(Error::InvalidParameter { name: "weights", reason: "do not match the infimum spec".into() })
        }
        other => return Err(Error::WrongKind { expected: "weighted_geometric", found: other.name() }),
    }
    check_arity(w.len(), fs.len())?;
    common_dim(fs)?;
    let (s, parts) = w.integer_form();
    match method {
        Method::ClosedForm => Ok(MeanResult::exact(weighted_geometric_mean(w, fs)?, method)),
        Method::Lagrange => Ok(MeanResult::exact(
            apply_homogeneous(|xs| wgm_lagrange(xs, &parts, s), fs)?,
            method,
        )),
        Method::Grid => {
            let mut bound = 0.0f64;
            let value = apply_homogeneous(
                |xs| {
                    let (v, b) = wgm_grid(xs, &parts, spec.resolution);
                    bound = bound.max(b);
                    v
                },
                fs,
            )?;
            Ok(MeanResult { value, method, residual_bound: Some(bound) })
        }
    }
}

/// With `u_k = √a_k` the problem is `min s·Σ u_k² x_k` over the simplex
/// `Σ u_k = 1`; the objective is convex in `u` and the interior stationary
/// point is `u_k ∝ 1/x_k`. A zero coordinate puts all mass there.
fn harmonic_lagrange(xs: &[f64]) -> f64 {
    if xs.contains(&0.0) {
        return 0.0;
    }
    let s = xs.len() as f64;
    let total: f64 = xs.iter().map(|x| x.recip()).sum();
    let objective: f64 = xs
        .iter()
        .map(|x| {
            let u = x.recip() / total;
            u * u * x
        })
        .sum();
    s * objective
}

/// Stationary point `θ_k = λ/(s x_k)` with `λ = s·Π x_k^{r_k/s}`, at which
/// every term `r_k θ_k x_k` equals `r_k λ / s`.
fn wgm_lagrange(xs: &[f64], parts: &[u64], s: u64) -> f64 {
    if xs.contains(&0.0) {
        return 0.0;
    }
    let sf = s as f64;
    let log_mean: f64 = xs.iter().zip(parts).map(|(x, &r)| r as f64 * x.ln()).sum::<f64>() / sf;
    let lambda = sf * log_mean.exp();
    xs.iter()
        .zip(parts)
        .map(|(x, &r)| {
            let theta = lambda / (sf * x);
            r as f64 * theta * x
        })
        .sum::<f64>()
        / sf
}

/// Exact minimizer of a separable convex objective `Σ_k cost(k, n_k)` over
/// integer points with fixed `Σ n_k`, starting from any such point.
///
/// A point admitting no improving unit transfer between two slots is a
/// global minimum for separable convex costs.
fn exchange_descent(n: &mut [i64], cost: impl Fn(usize, i64) -> f64) {
    let slots = n.len();
    if slots < 2 {
        return;
    }
    // cap guards against cycling on ties created by rounding
    let cap = 64 + 16 * slots * (1 + n.iter().map(|v| v.unsigned_abs() as usize).sum::<usize>());
    for _ in 0..cap {
        let mut best_up = (f64::INFINITY, usize::MAX);
        let mut best_down = (f64::NEG_INFINITY, usize::MAX);
        #[allow(clippy::needless_range_loop)]
        for k in 0..slots {
            let here = cost(k, n[k]);
            let up = cost(k, n[k] + 1) - here;
            if up < best_up.0 {
                best_up = (up, k);
            }
            let down = here - cost(k, n[k] - 1);
            if down > best_down.0 {
                best_down = (down, k);
            }
        }
        if best_down.1 == usize::MAX || best_up.0 >= best_down.0 {
            return;
        }
        n[best_up.1] += 1;
        n[best_down.1] -= 1;
    }
}

/// Resolutions visited on the way to `m`: 1, then halving chain back up.
fn resolution_chain(m: u32) -> Vec<u32> {
    let mut chain = vec![m];
    let mut cur = m;
    while cur > 1 {
        cur /= 2;
        chain.push(cur);
    }
    chain.reverse();
    chain
}

/// Minimum of `s·Σ x_k u_k²` over `Σ u_k = 1` with the ratios `u_j/u_k`
/// restricted to powers of `ρ = e^{1/(2m)}`, so the tangent coefficients
/// `θ_k = s u_k²` lie on a common multiple of `e^{Z/m}`. Returns the value and
/// a duality certificate for its distance above the infimum.
///
/// The objective is `s·Q/S²` with `Q = Σ x_k u_k²`, `S = Σ u_k`, and
/// minimizing `Q/S²` is the same as minimizing the separable
/// `Σ_k (x_k v_k² - 2 v_k)` over all rescalings `v = t·u`. For a fixed scale
/// offset each coordinate independently takes the unique lattice point in
/// `[2/(x_k(1+ρ)), 2ρ/(x_k(1+ρ)))`, so only the `s` configurations
/// obtained as the offset crosses the fractional parts need comparing.
fn harmonic_grid(xs: &[f64], m: u32) -> (f64, f64) {
    if xs.contains(&0.0) {
        return (0.0, 0.0);
    }
    let s = xs.len() as f64;
    let units = 2.0 * f64::from(m);
    let rho = units.recip().exp();
    // left window ends, in lattice units
    let left: Vec<f64> = xs.iter().map(|x| units * (2.0 / (x * (1.0 + rho))).ln()).collect();
    let mut offsets: Vec<f64> = left.iter().map(|l| l - l.floor()).collect();
    offsets.sort_by(f64::total_cmp);
    offsets.dedup();
    let mut best = f64::INFINITY;
    for (i, lo) in offsets.iter().enumerate() {
        let hi = offsets.get(i + 1).copied().unwrap_or(offsets[0] + 1.0);
        let tau = 0.5 * (lo + hi);
        let exps: Vec<i64> = left.iter().map(|l| (l - tau).ceil() as i64).collect();
        let top = *exps.iter().max().expect("nonempty");
        let (mut q, mut sum) = (0.0, 0.0);
        for (&e, x) in exps.iter().zip(xs) {
            let u = ((e - top) as f64 / units).exp();
            q += x * u * u;
            sum += u;
        }
        best = best.min(q / (sum * sum));
    }
    let value = s * best;
    // dual function g(λ) = λ - λ² Σ(1/x_k) / (4s) is a lower bound on the
    // infimum for every λ; λ = 2·value gives the certificate below
    let reciprocal_sum: f64 = xs.iter().map(|x| x.recip()).sum();
    let gap = value * (value * reciprocal_sum / s - 1.0);
    (value, gap.max(0.0))
}

/// Minimum of `(1/s)·Σ_k r_k θ_k x_k` over log-lattice points.
///
/// Argument `k` is split into `r_k` copies with parameters `θ = e^{n/m}`;
/// the constraint `Π θ_k^{r_k/s} = 1` becomes `Σ n = 0` over all `s` copies,
/// and the split objective is separable, so [`exchange_descent`] solves it
/// exactly. Merging copies by their log-mean is feasible for the original
/// problem with no larger objective, so the value bounds the infimum from
/// above.
fn wgm_grid(xs: &[f64], parts: &[u64], m: u32) -> (f64, f64) {
    if xs.contains(&0.0) {
        return (0.0, 0.0);
    }
    let copies: Vec<f64> = xs
        .iter()
        .zip(parts)
        .flat_map(|(&x, &r)| std::iter::repeat_n(x, r as usize))
        .collect();
    let s = copies.len() as f64;
    let mut exps = vec![0i64; copies.len()];
    let mut level = 1u32;
    for target in resolution_chain(m) {
        let factor = i64::from(target / level);
        for n in exps.iter_mut() {
            *n *= factor;
        }
        let mf = f64::from(target);
        exchange_descent(&mut exps, |k, n| copies[k] * (n as f64 / mf).exp() / s);
        level = target;
    }
    let mf = f64::from(m);
    let value = exps.iter().zip(&copies).map(|(&n, x)| x * (n as f64 / mf).exp()).sum::<f64>() / s;
    // an integer point within 1/m of the continuous optimum (in every copy)
    // costs at most γ·(e^{1/m} - 1 - 1/m) extra, and γ ≤ value
    let h = 1.0 / mf;
    (value, value * (h.exp_m1() - h))
}

/// The means in a given scalar field. Exact scalars fail with an error when
/// a root comes out irrational.
pub trait Means: Scalar {
    fn root_mean_power(s: u32, fs: &[PositiveVector<Self>]) -> Result<PositiveVector<Self>>;
    fn geometric_mean(fs: &[PositiveVector<Self>]) -> Result<PositiveVector<Self>>;
    fn weighted_geometric_mean(w: &WeightVector, fs: &[PositiveVector<Self>]) -> Result<PositiveVector<Self>>;
}

impl Means for f64 {
    fn root_mean_power(s: u32, fs: &[PositiveVector]) -> Result<PositiveVector> {
        root_mean_power(s, fs)
    }

    fn geometric_mean(fs: &[PositiveVector]) -> Result<PositiveVector> {
        geometric_mean(fs)
    }

    fn weighted_geometric_mean(w: &WeightVector, fs: &[PositiveVector]) -> Result<PositiveVector> {
        weighted_geometric_mean(w, fs)
    }
}

/// `q^{1/k}` when it is rational.
pub fn exact_root(q: &BigRational, k: u32) -> Option<BigRational> {
    if q.is_negative() || k == 0 {
        return None;
    }
    let root = |z: &BigInt| {
        let r = z.nth_root(k);
        (num::pow(r.clone(), k as usize) == *z).then_some(r)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

fn exact_coordinatewise(
    fs: &[PositiveVector<BigRational>],
    phi: impl Fn(&[BigRational]) -> Option<BigRational>,
) -> Result<PositiveVector<BigRational>> {
    let n = common_dim(fs)?;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let column: Vec<BigRational> = fs.iter().map(|f| f.entries()[i].clone()).collect();
        out.push(phi(&column).ok_or_else(|| Error::InvalidParameter {
            name: "inputs",
            reason: format!("mean is irrational at coordinate {i}"),
        })?);
    }
    PositiveVector::from_entries(out)
}

impl Means for BigRational {
    fn root_mean_power(s: u32, fs: &[PositiveVector<Self>]) -> Result<PositiveVector<Self>> {
        if s == 0 {
            return Err(Error::InvalidParameter { name: "s", reason: "must be at least 1".into() });
        }
        exact_coordinatewise(fs, |xs| {
            let total = xs.iter().fold(BigRational::zero(), |acc, x| acc + num::pow(x.clone(), s as usize));
            exact_root(&total, s)
        })
    }

    fn geometric_mean(fs: &[PositiveVector<Self>]) -> Result<PositiveVector<Self>> {
        let s = fs.len() as u32;
        exact_coordinatewise(fs, |xs| exact_root(&xs.iter().fold(BigRational::one(), |acc, x| acc * x), s))
    }

    fn weighted_geometric_mean(w: &WeightVector, fs: &[PositiveVector<Self>]) -> Result<PositiveVector<Self>> {
        check_arity(w.len(), fs.len())?;
        let (s, parts) = w.integer_form();
        exact_coordinatewise(fs, |xs| {
            let product = xs
                .iter()
                .zip(&parts)
                .fold(BigRational::one(), |acc, (x, &r)| acc * num::pow(x.clone(), r as usize));
            exact_root(&product, s as u32)
        })
    }
}
