//! Verification reports, claim identifiers and the tolerance record.

use serde::{Deserialize, Serialize};

/// Identity or property a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimId {
    /// `P(𝔖_s(f_1..f_r)) = Σ P(f_k)`
    Rmp,
    /// `P(𝔊_s(f_1..f_s)) = P̌(f_1..f_s)`
    Gm,
    /// `⋀ f_k ≤ η_s(f) ≤ s·⋀ f_k`
    Schur,
    /// `η_s(f) = 0` when two arguments are disjoint
    Ortho,
    /// `P̌(f) = (1/s) Σ_j P̌(f with η_s(f) in slot j)`
    Hm,
    /// `γ_{r/s}(f) = 𝔊_s(f_1 ×r_1, ..., f_p ×r_p)`
    Geos,
    /// `P(γ_{r/s}(f)) = P̌(f_1 ×r_1, ..., f_p ×r_p)`
    Wgm,
    /// mixed terms of disjoint positive pairs vanish
    CrossTerms,
    /// `P(f+g) = P(f) + P(g)` for disjoint `f, g ≥ 0`
    PositiveOa,
    /// `P(f+g) = P(f) + P(g)` for disjoint `f, g` of any sign
    Oa,
    /// polarization agrees with the stored symmetric multilinear map
    Polarization,
}

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Rmp => "RMP",
            ClaimId::Gm => "GM",
            ClaimId::Schur => "SCHUR",
            ClaimId::Ortho => "ORTHO",
            ClaimId::Hm => "HM",
            ClaimId::Geos => "GEOS",
            ClaimId::Wgm => "WGM",
            ClaimId::CrossTerms => "CROSS_TERMS",
            ClaimId::PositiveOa => "POSITIVE_OA",
            ClaimId::Oa => "OA",
            ClaimId::Polarization => "POLARIZATION",
        }
    }
}

/// Forward checks assert an identity; falsification searches for a witness
/// against it, and "passed" then means a witness was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Forward,
    Falsification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// falsification budget spent without a witness
    Inconclusive,
}

/// Inputs and both sides of an identity at a violating (or witnessing) point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Vec<Vec<f64>>,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Every threshold used by the checkers, in one place.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// polynomial identities (RMP, GM, HM, WGM, OA, binomial reconstruction)
    pub identity_rel: f64,
    /// weighted geometric vs repeated-argument geometric mean
    pub geos_rel: f64,
    /// closed form vs Lagrange route of a mean
    pub lagrange_rel: f64,
    /// grid route distance from the closed form at the finest resolution
    pub grid_abs: f64,
    /// ulps of slack allowed on order comparisons
    pub exact_slack_ulps: u32,
    /// absolute bound on mixed multilinear terms of disjoint pairs
    pub cross_abs: f64,
    /// polarization vs stored multilinear map
    pub polarization_rel: f64,
    /// residual a falsification witness must exceed
    pub witness: f64,
    /// residuals are relative above this reference magnitude, absolute below
    pub relative_switch: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            identity_rel: 1e-9,
            geos_rel: 1e-12,
            lagrange_rel: 1e-9,
            grid_abs: 1e-4,
            exact_slack_ulps: 1,
            cross_abs: 1e-10,
            polarization_rel: 1e-8,
            witness: 1e-6,
            relative_switch: 1.0,
        }
    }
}

/// Max-norm distance between two sides, divided by their max-norm magnitude
/// when that magnitude exceeds `switch`.
pub fn residual(lhs: &[f64], rhs: &[f64], switch: f64) -> f64 {
    let mut diff = 0.0f64;
    let mut magnitude = 0.0f64;
    for (a, b) in lhs.iter().zip(rhs) {
        let d = (a - b).abs();
        // NaN must poison the residual rather than vanish in max
        if d.is_nan() {
            return f64::NAN;
        }
        diff = diff.max(d);
        magnitude = magnitude.max(a.abs()).max(b.abs());
    }
    if lhs.len() != rhs.len() {
        return f64::INFINITY;
    }
    if magnitude > switch {
        diff / magnitude
    } else {
        diff
    }
}

/// Outcome of checking one claim over one or more trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: ClaimId,
    pub mode: Mode,
    pub trials: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    /// An empty forward report; it passes until a trial exceeds `tolerance`.
    pub fn forward(claim_id: ClaimId, tolerance: f64) -> Self {
        Self {
            claim_id,
            mode: Mode::Forward,
            trials: 0,
            max_residual: 0.0,
            tolerance,
            passed: true,
            verdict: Verdict::Pass,
            counterexample: None,
        }
    }

    /// An empty falsification report; inconclusive until a witness is found.
    pub fn falsification(claim_id: ClaimId, threshold: f64) -> Self {
        Self {
            claim_id,
            mode: Mode::Falsification,
            trials: 0,
            max_residual: 0.0,
            tolerance: threshold,
            passed: false,
            verdict: Verdict::Inconclusive,
            counterexample: None,
        }
    }

    /// Folds one trial in. `witness` is built only when the trial is the
    /// first one to cross the tolerance.
    pub fn record(&mut self, residual: f64, witness: impl FnOnce() -> Counterexample) {
        self.trials += 1;
        let crosses = !(residual <= self.tolerance);
        if residual.is_nan() {
            self.max_residual = f64::NAN;
        } else if !self.max_residual.is_nan() {
            self.max_residual = self.max_residual.max(residual);
        }
        if crosses && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
        self.refresh();
    }

    /// Records a failed precondition or structural violation directly.
    pub fn fail_with(&mut self, counterexample: Counterexample) {
        self.trials += 1;
        self.max_residual = if counterexample.residual.is_nan() {
            f64::NAN
        } else {
            self.max_residual.max(counterexample.residual)
        };
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
        self.refresh();
    }

    fn refresh(&mut self) {
        match self.mode {
            Mode::Forward => {
                self.passed = self.max_residual <= self.tolerance && self.counterexample.is_none();
                self.verdict = if self.passed { Verdict::Pass } else { Verdict::Fail };
            }
            Mode::Falsification => {
                self.passed = self.counterexample.is_some();
                self.verdict = if self.passed { Verdict::Pass } else { Verdict::Inconclusive };
            }
        }
    }

    /// Combines two reports on the same claim; the earlier counterexample wins.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        debug_assert_eq!(self.claim_id, other.claim_id);
        self.trials += other.trials;
        self.max_residual = if self.max_residual.is_nan() || other.max_residual.is_nan() {
            f64::NAN
        } else {
            self.max_residual.max(other.max_residual)
        };
        self.tolerance = self.tolerance.max(other.tolerance);
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.refresh();
        self
    }
}
