//! Executable checks of the identities that tie harmonic and completely
//! partitioned weighted geometric means to orthogonally additive polynomials.
//!
//! Forward directions are checked pointwise ([`check_hm_identity`],
//! [`check_wgm_identity`], ...) and in seeded sweeps ([`sweep`]). Converse
//! directions are existential: if `P` is not orthogonally additive, some
//! positive input violates the identity. [`falsify`] searches for such a
//! witness, first over disjoint pairs placed into the argument slots the way
//! the converse arguments do, then over random samples. An exhausted budget
//! is reported as inconclusive, never as a pass.
//!
//! `Y` is modelled as `R^d`, where every polynomial is bounded, so the
//! boundedness hypotheses hold automatically.

use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{inf_all, LatticeVector, PositiveVector, Scalar, Vector};
use crate::means::{harmonic_mean, Means};
use crate::partitions::{enumerate_complete, CompletePartition};
use crate::polynomial::{exhaustive_positive_oa, is_positively_orthogonally_additive, random_diagonal, HomogeneousPolynomial};
use crate::report::{ClaimId, Counterexample, Tolerances, VerificationReport};
use crate::sampling;

/// Largest domain dimension for which the non-additivity precondition of
/// [`falsify`] is decided by exhaustive bipartitions.
pub const EXHAUSTIVE_PRECONDITION_DIM: usize = 6;

/// [`falsify`] budget used when none is given.
pub const DEFAULT_FALSIFY_BUDGET: u64 = 10_000;

fn side_residual<T: Scalar>(lhs: &[T], rhs: &[T], switch: f64) -> f64 {
    if lhs.len() != rhs.len() {
        return f64::INFINITY;
    }
    let mut diff = T::zero();
    let mut magnitude = T::zero();
    for (a, b) in lhs.iter().zip(rhs) {
        let d = (a.clone() - b.clone()).abs();
        #[allow(clippy::eq_op)]
        if d != d {
            return f64::NAN;
        }
        if d > diff {
            diff = d;
        }
        for m in [a.abs(), b.abs()] {
            if m > magnitude {
                magnitude = m;
            }
        }
    }
    let (diff, magnitude) = (diff.to_f64(), magnitude.to_f64());
    if magnitude > switch {
        diff / magnitude
    } else {
        diff
    }
}

fn floats<T: Scalar>(xs: &[T]) -> Vec<f64> {
    xs.iter().map(Scalar::to_f64).collect()
}

fn inputs<T: Scalar>(fs: &[PositiveVector<T>]) -> Vec<Vec<f64>> {
    fs.iter().map(|f| floats(f.entries())).collect()
}

fn record_sides<T: Scalar>(
    report: &mut VerificationReport,
    fs: &[PositiveVector<T>],
    lhs: &[T],
    rhs: &[T],
    switch: f64,
) -> f64 {
    let r = side_residual(lhs, rhs, switch);
    report.record(r, || Counterexample {
        inputs: inputs(fs),
        lhs: floats(lhs),
        rhs: floats(rhs),
        residual: r,
        note: None,
    });
    r
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::ArityMismatch { expected, found });
    }
    Ok(())
}

fn add_into<T: Scalar>(acc: &mut [T], v: Vec<T>) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = a.clone() + x;
    }
}

/// `(P(𝔖_s(f_1..f_r)), Σ_k P(f_k))`
pub fn rmp_sides<T: Means>(p: &HomogeneousPolynomial<T>, fs: &[PositiveVector<T>]) -> Result<(Vec<T>, Vec<T>)> {
    let mean = T::root_mean_power(p.degree() as u32, fs)?;
    let lhs = p.eval(&mean)?;
    let mut rhs = vec![T::zero(); p.codomain_dim()];
    for f in fs {
        add_into(&mut rhs, p.eval(f)?);
    }
    Ok((lhs, rhs))
}

/// `(P(𝔊_s(f_1..f_s)), P̌(f_1..f_s))`
pub fn gm_sides<T: Means>(p: &HomogeneousPolynomial<T>, fs: &[PositiveVector<T>]) -> Result<(Vec<T>, Vec<T>)> {
    check_arity(p.degree(), fs.len())?;
    let lhs = p.eval(T::geometric_mean(fs)?.as_vector())?;
    let rhs = p.multilinear().eval_positive(fs)?;
    Ok((lhs, rhs))
}

/// `(P̌(f_1..f_s), (1/s) Σ_j P̌(f_1, .., η_s(f), .., f_s))` with `η_s(f)` in slot `j`.
pub fn hm_sides<T: Scalar>(p: &HomogeneousPolynomial<T>, fs: &[PositiveVector<T>]) -> Result<(Vec<T>, Vec<T>)> {
    let s = p.degree();
    check_arity(s, fs.len())?;
    let eta = harmonic_mean(fs)?;
    let view = p.multilinear();
    let lhs = view.eval_positive(fs)?;
    let mut rhs = vec![T::zero(); p.codomain_dim()];
    let mut args: Vec<&Vector<T>> = fs.iter().map(|f| f.as_vector()).collect();
    for j in 0..s {
        let saved = args[j];
        args[j] = eta.as_vector();
        add_into(&mut rhs, view.eval(&args)?);
        args[j] = saved;
    }
    let inv_s = T::one() / T::from_usize(s);
    let rhs = rhs.into_iter().map(|x| x * inv_s.clone()).collect();
    Ok((lhs, rhs))
}

/// `f_k` repeated `r_k` times, in order.
pub fn expand_arguments<T: Scalar>(cp: &CompletePartition, fs: &[PositiveVector<T>]) -> Result<Vec<PositiveVector<T>>> {
    check_arity(cp.len(), fs.len())?;
    Ok(cp.expanded_slots().into_iter().map(|k| fs[k].clone()).collect())
}

/// `(γ_{r/s}(f_1..f_p), 𝔊_s(f_1 ×r_1, ..., f_p ×r_p))`
pub fn geos_sides<T: Means>(cp: &CompletePartition, fs: &[PositiveVector<T>]) -> Result<(Vec<T>, Vec<T>)> {
    let lhs = T::weighted_geometric_mean(&cp.weights(), fs)?;
    let rhs = T::geometric_mean(&expand_arguments(cp, fs)?)?;
    Ok((lhs.into_vector().into_entries(), rhs.into_vector().into_entries()))
}

/// `(P(γ_{r/s}(f_1..f_p)), P̌(f_1 ×r_1, ..., f_p ×r_p))`
pub fn wgm_sides<T: Means>(
    p: &HomogeneousPolynomial<T>,
    cp: &CompletePartition,
    fs: &[PositiveVector<T>],
) -> Result<(Vec<T>, Vec<T>)> {
    if cp.target() as usize != p.degree() {
        return Err(Error::InvalidParameter {
            name: "partition",
            reason: format!("partition of {} does not match degree {}", cp.target(), p.degree()),
        });
    }
    let lhs = p.eval(T::weighted_geometric_mean(&cp.weights(), fs)?.as_vector())?;
    let rhs = p.multilinear().eval_positive(&expand_arguments(cp, fs)?)?;
    Ok((lhs, rhs))
}

/// `P(𝔖_s(f_1..f_r)) = Σ_k P(f_k)`; expected to hold when `P` is
/// orthogonally additive.
pub fn check_rmp<T: Means>(p: &HomogeneousPolynomial<T>, fs: &[PositiveVector<T>], tol: &Tolerances) -> Result<VerificationReport> {
    let (lhs, rhs) = rmp_sides(p, fs)?;
    let mut report = VerificationReport::forward(ClaimId::Rmp, tol.identity_rel);
    record_sides(&mut report, fs, &lhs, &rhs, tol.relative_switch);
    Ok(report)
}

/// `P(𝔊_s(f_1..f_s)) = P̌(f_1..f_s)`; expected to hold when `P` is
/// orthogonally additive.
pub fn check_gm<T: Means>(p: &HomogeneousPolynomial<T>, fs: &[PositiveVector<T>], tol: &Tolerances) -> Result<VerificationReport> {
    let (lhs, rhs) = gm_sides(p, fs)?;
    let mut report = VerificationReport::forward(ClaimId::Gm, tol.identity_rel);
    record_sides(&mut report, fs, &lhs, &rhs, tol.relative_switch);
    Ok(report)
}

/// `⋀_k f_k ≤ η_s(f) ≤ s·⋀_k f_k`, coordinatewise. Floats get
/// `tol.exact_slack_ulps` of slack on each comparison; rationals get none.
pub fn check_schur_bounds<T: Scalar>(fs: &[PositiveVector<T>], tol: &Tolerances) -> Result<VerificationReport> {
    let eta = harmonic_mean(fs)?;
    let low = inf_all(fs)?;
    let s = T::from_usize(fs.len());
    let mut worst = T::zero();
    for (m, e) in low.entries().iter().zip(eta.entries()) {
        let high = m.clone() * s.clone();
        let below = m.clone() - e.widen_ulps(tol.exact_slack_ulps);
        let above = e.clone() - high.widen_ulps(tol.exact_slack_ulps);
        for v in [below, above] {
            if v > worst {
                worst = v;
            }
        }
    }
    let mut report = VerificationReport::forward(ClaimId::Schur, 0.0);
    let r = worst.to_f64();
    report.record(r, || Counterexample {
        inputs: inputs(fs),
        lhs: floats(low.entries()),
        rhs: floats(eta.entries()),
        residual: r,
        note: Some("lhs = min, rhs = harmonic mean".into()),
    });
    Ok(report)
}

/// `η_s(f) = 0` exactly whenever two of the arguments are disjoint.
pub fn check_eta_disjoint<T: Scalar>(fs: &[PositiveVector<T>]) -> Result<VerificationReport> {
    let has_pair = (0..fs.len()).any(|i| {
        (i + 1..fs.len()).any(|j| fs[i].is_disjoint(&fs[j]).unwrap_or(false))
    });
    if !has_pair {
        return Err(Error::Precondition("no two arguments are disjoint".into()));
    }
    let eta = harmonic_mean(fs)?;
    let worst = eta.entries().iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max);
    let mut report = VerificationReport::forward(ClaimId::Ortho, 0.0);
    report.record(worst, || Counterexample {
        inputs: inputs(fs),
        lhs: floats(eta.entries()),
        rhs: vec![0.0; eta.dim()],
        residual: worst,
        note: None,
    });
    Ok(report)
}

/// `P̌(f_1..f_s) = (1/s) Σ_j P̌(f_1, .., η_s(f), .., f_s)` for `s ≥ 2`.
pub fn check_hm_identity<T: Scalar>(
    p: &HomogeneousPolynomial<T>,
    fs: &[PositiveVector<T>],
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if p.degree() < 2 {
        return Err(Error::InvalidParameter { name: "s", reason: "the harmonic identity needs s ≥ 2".into() });
    }
    let (lhs, rhs) = hm_sides(p, fs)?;
    let mut report = VerificationReport::forward(ClaimId::Hm, tol.identity_rel);
    record_sides(&mut report, fs, &lhs, &rhs, tol.relative_switch);
    Ok(report)
}

/// `γ_{r/s}(f_1..f_p) = 𝔊_s(f_1 ×r_1, ..., f_p ×r_p)`, relative tolerance.
pub fn check_geos_lemma<T: Means>(cp: &CompletePartition, fs: &[PositiveVector<T>], tol: &Tolerances) -> Result<VerificationReport> {
    let (lhs, rhs) = geos_sides(cp, fs)?;
    let mut report = VerificationReport::forward(ClaimId::Geos, tol.geos_rel);
    record_sides(&mut report, fs, &lhs, &rhs, 0.0);
    Ok(report)
}

/// `P(γ_{r/s}(f_1..f_p)) = P̌(f_1 ×r_1, ..., f_p ×r_p)`.
pub fn check_wgm_identity<T: Means>(
    p: &HomogeneousPolynomial<T>,
    cp: &CompletePartition,
    fs: &[PositiveVector<T>],
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let (lhs, rhs) = wgm_sides(p, cp, fs)?;
    let mut report = VerificationReport::forward(ClaimId::Wgm, tol.identity_rel);
    record_sides(&mut report, fs, &lhs, &rhs, tol.relative_switch);
    Ok(report)
}

/// For disjoint `f, g ≥ 0`: every mixed value `P̌(f ×k, g ×(s-k))`,
/// `0 < k < s`, is below `tol.cross_abs`, and the binomial expansion
/// `P(f+g) = Σ_k C(s,k) P̌(f ×k, g ×(s-k))` holds.
pub fn check_cross_terms<T: Scalar>(
    p: &HomogeneousPolynomial<T>,
    f: &PositiveVector<T>,
    g: &PositiveVector<T>,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if !f.is_disjoint(g)? {
        return Err(Error::Precondition("f and g are not disjoint".into()));
    }
    let s = p.degree();
    let view = p.multilinear();
    let mut report = VerificationReport::forward(ClaimId::CrossTerms, tol.identity_rel);
    let mut expansion = vec![T::zero(); p.codomain_dim()];
    let mut binomial = T::one();
    for k in 0..=s {
        let args: Vec<&Vector<T>> = (0..s).map(|slot| if slot < k { f.as_vector() } else { g.as_vector() }).collect();
        let value = view.eval(&args)?;
        if k > 0 && k < s {
            let worst = value.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max);
            if !(worst <= tol.cross_abs) {
                report.fail_with(Counterexample {
                    inputs: vec![floats(f.entries()), floats(g.entries())],
                    lhs: floats(&value),
                    rhs: vec![0.0; value.len()],
                    residual: worst,
                    note: Some(format!("mixed term with {k} copies of f and {} of g", s - k)),
                });
            }
        }
        add_into(&mut expansion, value.into_iter().map(|x| x * binomial.clone()).collect());
        // C(s, k+1) = C(s, k)·(s-k)/(k+1)
        binomial = binomial * T::from_usize(s - k) / T::from_usize(k + 1);
    }
    let whole = p.eval(f.add(g)?.as_vector())?;
    let r = side_residual(&whole, &expansion, tol.relative_switch);
    report.record(r, || Counterexample {
        inputs: vec![floats(f.entries()), floats(g.entries())],
        lhs: floats(&whole),
        rhs: floats(&expansion),
        residual: r,
        note: Some("P(f+g) vs binomial expansion".into()),
    });
    Ok(report)
}

/// Identity targeted by [`falsify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Rmp,
    Gm,
    Hm,
    Wgm(CompletePartition),
}

impl Claim {
    pub fn id(&self) -> ClaimId {
        match self {
            Claim::Rmp => ClaimId::Rmp,
            Claim::Gm => ClaimId::Gm,
            Claim::Hm => ClaimId::Hm,
            Claim::Wgm(_) => ClaimId::Wgm,
        }
    }

    fn arity(&self, degree: usize) -> usize {
        match self {
            Claim::Rmp => 2,
            Claim::Gm | Claim::Hm => degree,
            Claim::Wgm(cp) => cp.len(),
        }
    }

    fn sides(&self, p: &HomogeneousPolynomial, fs: &[PositiveVector]) -> Result<(Vec<f64>, Vec<f64>)> {
        match self {
            Claim::Rmp => rmp_sides(p, fs),
            Claim::Gm => gm_sides(p, fs),
            Claim::Hm => hm_sides(p, fs),
            Claim::Wgm(cp) => wgm_sides(p, cp, fs),
        }
    }

    /// Ways to place a disjoint pair into the argument slots (`true` = `f`).
    /// Each contributes a mixed term `P̌(f ×q, g ×(s-q))` with `0 < q < s`.
    fn placements(&self, degree: usize) -> Vec<Vec<bool>> {
        match self {
            Claim::Rmp => vec![vec![true, false]],
            Claim::Gm | Claim::Hm => (1..degree).map(|k| (0..degree).map(|slot| slot < k).collect()).collect(),
            Claim::Wgm(cp) => {
                let p = cp.len();
                (1u64..(1 << p) - 1).map(|mask| (0..p).map(|k| mask >> k & 1 == 1).collect()).collect()
            }
        }
    }
}

/// Searches for an input violating `claim` by more than `tol.witness`.
///
/// Errors with a precondition violation when `P` is orthogonally additive
/// (decided on exhaustive bipartitions for `n ≤ 6`, by sampling otherwise).
/// The search visits, in order and until `budget` inputs are spent:
///
/// 1. unit pairs `f = e_i`, `g = e_j` in every slot placement,
/// 2. every bipartition of the coordinates with random positive entries,
/// 3. random disjoint pairs in random placements, interleaved with random
///    positive tuples containing a disjoint pair.
pub fn falsify(p: &HomogeneousPolynomial, claim: &Claim, budget: u64, seed: u64, tol: &Tolerances) -> Result<VerificationReport> {
    let (s, n) = (p.degree(), p.domain_dim());
    if s < 2 {
        return Err(Error::Precondition("degree-1 polynomials are always orthogonally additive".into()));
    }
    if let Claim::Wgm(cp) = claim {
        if cp.target() as usize != s {
            return Err(Error::InvalidParameter { name: "partition", reason: format!("must partition {s}") });
        }
    }
    let additive = if n <= EXHAUSTIVE_PRECONDITION_DIM {
        exhaustive_positive_oa(p, seed)?.passed
    } else {
        is_positively_orthogonally_additive(p, 1000, seed).passed
    };
    if additive {
        return Err(Error::Precondition("polynomial is orthogonally additive; nothing to falsify".into()));
    }

    let mut report = VerificationReport::falsification(claim.id(), tol.witness);
    let placements = claim.placements(s);
    let arity = claim.arity(s);
    let mut rng = sampling::rng(seed);

    let attempt = |fs: Vec<PositiveVector>, note: &str, report: &mut VerificationReport| -> Result<bool> {
        let (lhs, rhs) = claim.sides(p, &fs)?;
        let r = side_residual(&lhs, &rhs, tol.relative_switch);
        report.record(r, || Counterexample {
            inputs: inputs(&fs),
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            residual: r,
            note: Some(note.to_string()),
        });
        Ok(report.passed || report.trials >= budget)
    };
    let place = |f: &PositiveVector, g: &PositiveVector, placement: &[bool]| -> Vec<PositiveVector> {
        placement.iter().map(|&on_f| if on_f { f.clone() } else { g.clone() }).collect()
    };

    if budget == 0 {
        return Ok(report);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let f = PositiveVector::new(LatticeVector::unit(n, i)?)?;
            let g = PositiveVector::new(LatticeVector::unit(n, j)?)?;
            for placement in &placements {
                if attempt(place(&f, &g, placement), "unit pair", &mut report)? {
                    return Ok(report);
                }
            }
        }
    }
    if n <= crate::polynomial::MAX_EXHAUSTIVE_DIM {
        for mask in 1u32..(1 << n) - 1 {
            let left: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let right: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            let f = sampling::moderate_supported_on(&mut rng, n, &left);
            let g = sampling::moderate_supported_on(&mut rng, n, &right);
            for placement in &placements {
                if attempt(place(&f, &g, placement), "bipartition", &mut report)? {
                    return Ok(report);
                }
            }
        }
    }
    loop {
        let fs = if report.trials % 4 == 3 && arity >= 2 {
            sampling::tuple_with_disjoint_pair(&mut rng, arity, n)
        } else {
            let (f, g) = sampling::disjoint_pair(&mut rng, n);
            let placement = &placements[rng.gen_range(0..placements.len())];
            place(&f, &g, placement)
        };
        if attempt(fs, "random", &mut report)? {
            return Ok(report);
        }
    }
}

/// Parameters of a seeded sweep over random inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub s: usize,
    pub n: usize,
    pub d: usize,
    pub trials: u64,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl SweepConfig {
    pub fn new(s: usize, n: usize, trials: u64, seed: u64) -> Self {
        Self { s, n, d: 1, trials, seed, tolerances: Tolerances::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.s == 0 || self.n == 0 || self.d == 0 {
            return Err(Error::InvalidParameter { name: "s/n/d", reason: "must be positive".into() });
        }
        if self.trials == 0 {
            return Err(Error::InvalidParameter { name: "trials", reason: "must be at least 1".into() });
        }
        Ok(())
    }
}

fn sweep_polynomial(cfg: &SweepConfig, given: Option<&HomogeneousPolynomial>) -> Result<HomogeneousPolynomial> {
    match given {
        Some(p) => {
            if p.degree() != cfg.s || p.domain_dim() != cfg.n {
                return Err(Error::InvalidParameter {
                    name: "poly",
                    reason: format!(
                        "polynomial has s = {}, n = {} but the sweep asks for s = {}, n = {}",
                        p.degree(),
                        p.domain_dim(),
                        cfg.s,
                        cfg.n
                    ),
                });
            }
            Ok(p.clone())
        }
        None => random_diagonal(&mut sampling::substream(cfg.seed, u64::MAX), cfg.s, cfg.n, cfg.d),
    }
}

fn sweep_partitions(cfg: &SweepConfig, partition: Option<&CompletePartition>) -> Result<Vec<CompletePartition>> {
    match partition {
        Some(cp) if cp.target() as usize != cfg.s => Err(Error::InvalidParameter {
            name: "partition",
            reason: format!("{:?} does not partition s = {}", cp.parts(), cfg.s),
        }),
        Some(cp) => Ok(vec![cp.clone()]),
        None => enumerate_complete(cfg.s as u64),
    }
}

/// Runs one forward claim over `cfg.trials` seeded random inputs (per
/// partition for GEOS and WGM). Without `poly`, a random diagonal
/// polynomial derived from the seed is used.
pub fn sweep(
    claim: ClaimId,
    cfg: &SweepConfig,
    partition: Option<&CompletePartition>,
    poly: Option<&HomogeneousPolynomial>,
) -> Result<VerificationReport> {
    cfg.validate()?;
    let tol = &cfg.tolerances;
    let (s, n) = (cfg.s, cfg.n);
    let needs_pair = |what: &str| -> Result<()> {
        if s < 2 {
            return Err(Error::InvalidParameter { name: "s", reason: format!("{what} needs s ≥ 2") });
        }
        Ok(())
    };
    let mut rng = sampling::rng(cfg.seed);
    let mut merged: Option<VerificationReport> = None;
    let mut push = |r: VerificationReport| {
        merged = Some(match merged.take() {
            Some(acc) => acc.merge(r),
            None => r,
        });
    };
    match claim {
        ClaimId::Rmp => {
            let p = sweep_polynomial(cfg, poly)?;
            for _ in 0..cfg.trials {
                let r = rng.gen_range(2..=4);
                push(check_rmp(&p, &sampling::positive_tuple(&mut rng, r, n), tol)?);
            }
        }
        ClaimId::Gm => {
            let p = sweep_polynomial(cfg, poly)?;
            for _ in 0..cfg.trials {
                push(check_gm(&p, &sampling::positive_tuple(&mut rng, s, n), tol)?);
            }
        }
        ClaimId::Schur => {
            for t in 0..cfg.trials {
                let fs = if s >= 2 && t % 4 == 3 {
                    sampling::tuple_with_disjoint_pair(&mut rng, s, n)
                } else {
                    sampling::positive_tuple(&mut rng, s, n)
                };
                push(check_schur_bounds(&fs, tol)?);
            }
        }
        ClaimId::Ortho => {
            needs_pair("ORTHO")?;
            for _ in 0..cfg.trials {
                push(check_eta_disjoint(&sampling::tuple_with_disjoint_pair(&mut rng, s, n))?);
            }
        }
        ClaimId::Hm => {
            needs_pair("HM")?;
            let p = sweep_polynomial(cfg, poly)?;
            for _ in 0..cfg.trials {
                push(check_hm_identity(&p, &sampling::positive_tuple(&mut rng, s, n), tol)?);
            }
        }
        ClaimId::Geos => {
            for (idx, cp) in sweep_partitions(cfg, partition)?.iter().enumerate() {
                let mut rng = sampling::substream(cfg.seed, idx as u64 + 1);
                for _ in 0..cfg.trials {
                    push(check_geos_lemma(cp, &sampling::positive_tuple(&mut rng, cp.len(), n), tol)?);
                }
            }
        }
        ClaimId::Wgm => {
            let p = sweep_polynomial(cfg, poly)?;
            for (idx, cp) in sweep_partitions(cfg, partition)?.iter().enumerate() {
                let mut rng = sampling::substream(cfg.seed, idx as u64 + 1);
                for _ in 0..cfg.trials {
                    push(check_wgm_identity(&p, cp, &sampling::positive_tuple(&mut rng, cp.len(), n), tol)?);
                }
            }
        }
        ClaimId::CrossTerms => {
            needs_pair("CROSS_TERMS")?;
            let p = sweep_polynomial(cfg, poly)?;
            for _ in 0..cfg.trials {
                let (f, g) = sampling::disjoint_pair(&mut rng, n);
                push(check_cross_terms(&p, &f, &g, tol)?);
            }
        }
        other => {
            return Err(Error::InvalidParameter { name: "claim", reason: format!("{} has no sweep", other.as_str()) });
        }
    }
    Ok(merged.expect("at least one trial ran"))
}

/// The claims run by [`verify_all`], in report order.
pub const ALL_CLAIMS: [ClaimId; 8] = [
    ClaimId::Rmp,
    ClaimId::Gm,
    ClaimId::Schur,
    ClaimId::Ortho,
    ClaimId::Hm,
    ClaimId::Geos,
    ClaimId::Wgm,
    ClaimId::CrossTerms,
];

/// Every forward claim at the same configuration; needs `s ≥ 2`.
pub fn verify_all(cfg: &SweepConfig, poly: Option<&HomogeneousPolynomial>) -> Result<Vec<VerificationReport>> {
    ALL_CLAIMS.iter().map(|&claim| sweep(claim, cfg, None, poly)).collect()
}
