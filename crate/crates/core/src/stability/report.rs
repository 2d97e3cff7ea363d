use serde::{Deserialize, Serialize};

use super::beta::{beta_norm_certificate, decay_time, m_pair, MPair, BETA_TARGET, BETA_TOLERANCE};
use super::q::{compute_q_linear, compute_q_nonlinear, QEstimate, QMode};
use super::thresholds::{delta_of_epsilon, epsilon_threshold};
use crate::error::Result;
use crate::matfun::FracSystem;
use crate::norm::VectorNorm;
use crate::quad::TimeGrid;
use crate::solver::PerturbationSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    RobustStable,
    UniformSmallStable,
    DecayingStable,
    /// No certificate applies. This is not a claim of instability.
    Inconclusive,
    SectorViolated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorSummary {
    pub satisfied: bool,
    /// `min |arg lambda| - alpha pi / 2` over the spectrum.
    pub margin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ClassifyOptions {
    pub q_mode: QMode,
    /// Radius of the ball that `delta` is computed for.
    pub eps_ball: f64,
    pub seed: u64,
    /// Grid size of the beta-norm probe.
    pub probe_points: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            q_mode: QMode::ProductNorm,
            eps_ball: 1.0,
            seed: 42,
            probe_points: 512,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub alpha: f64,
    pub norm: VectorNorm,
    pub perturbation: String,
    pub sector: SectorSummary,
    pub q: Option<QEstimate>,
    pub epsilon: Option<f64>,
    pub sup_lipschitz: f64,
    pub lipschitz_limit: f64,
    /// `sup_t K(t) < epsilon`.
    pub uniform_small: bool,
    pub eps_ball: f64,
    /// Radius of initial states guaranteed to stay within `eps_ball`.
    pub delta: Option<f64>,
    pub m_pair: Option<MPair>,
    pub t_decay: Option<f64>,
    pub beta_contraction: Option<f64>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl StabilityReport {
    /// Checks that the verdict is backed by the fields that justify it.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let ok = match self.verdict {
            Verdict::SectorViolated => !self.sector.satisfied,
            Verdict::RobustStable => self.q.as_ref().is_some_and(|q| q.value < 1.0),
            Verdict::UniformSmallStable => self.epsilon.is_some_and(|e| self.sup_lipschitz < e),
            Verdict::DecayingStable => self
                .beta_contraction
                .is_some_and(|c| c <= BETA_TARGET + BETA_TOLERANCE),
            Verdict::Inconclusive => true,
        };
        if !ok {
            return Err(format!("{:?} is not supported by the report fields", self.verdict));
        }
        if self.verdict != Verdict::SectorViolated && !self.sector.satisfied {
            return Err("stability verdict with a violated sector condition".into());
        }
        Ok(())
    }
}

/// Runs every certificate and reports the first that passes, in the order
/// robust (`q < 1`), uniformly small (`sup K < epsilon`), decaying
/// (beta-norm contraction). Failures of individual certificates are
/// recorded in `notes` and never abort the classification.
pub fn classify(sys: &FracSystem, pert: &PerturbationSpec, opts: &ClassifyOptions) -> Result<StabilityReport> {
    pert.validate(sys.dim())?;
    let norm = sys.norm();
    let cond = sys.sector();
    let mut report = StabilityReport {
        alpha: sys.alpha().value(),
        norm,
        perturbation: pert.kind_name().to_string(),
        sector: SectorSummary {
            satisfied: cond.satisfied,
            margin: cond.margin,
        },
        q: None,
        epsilon: None,
        sup_lipschitz: pert.sup_lipschitz(norm),
        lipschitz_limit: pert.lipschitz_limit(norm),
        uniform_small: false,
        eps_ball: opts.eps_ball,
        delta: None,
        m_pair: None,
        t_decay: None,
        beta_contraction: None,
        verdict: Verdict::Inconclusive,
        notes: Vec::new(),
    };
    if !cond.satisfied {
        report.verdict = Verdict::SectorViolated;
        if let Some(l) = cond.critical_eigenvalue() {
            report.notes.push(format!("eigenvalue {} {:+}i violates the sector", l.re, l.im));
        }
        return Ok(report);
    }

    let q = if pert.is_linear() {
        compute_q_linear(sys, pert, opts.q_mode)
    } else {
        compute_q_nonlinear(sys, pert)
    };
    match q {
        Ok(q) => report.q = Some(q),
        Err(e) => report.notes.push(format!("q-integral failed: {e}")),
    }
    match epsilon_threshold(sys) {
        Ok(eps) => {
            report.epsilon = Some(eps);
            report.uniform_small = report.sup_lipschitz < eps;
        }
        Err(e) => report.notes.push(format!("epsilon threshold failed: {e}")),
    }
    let q_value = report.q.as_ref().map(|q| q.value);
    if let Some(q) = q_value.filter(|&q| q < 1.0) {
        match delta_of_epsilon(q, opts.eps_ball, sys) {
            Ok(d) => report.delta = Some(d),
            Err(e) => report.notes.push(format!("delta failed: {e}")),
        }
    }

    let beta = run_beta(sys, pert, opts, &mut report);

    report.verdict = if q_value.is_some_and(|q| q < 1.0) {
        Verdict::RobustStable
    } else if report.uniform_small {
        Verdict::UniformSmallStable
    } else if beta.is_some_and(|(c, _)| c <= BETA_TARGET + BETA_TOLERANCE) {
        Verdict::DecayingStable
    } else {
        Verdict::Inconclusive
    };
    if report.delta.is_none() && report.verdict == Verdict::DecayingStable {
        // ||xi||_inf <= beta(T) ||xi||_beta <= beta(T) sup||E_alpha|| ||x0|| / (1 - c)
        let (c, ln_beta_max) = beta.expect("decaying verdict has a certificate");
        match sys.sup_ea() {
            Ok(s) => {
                let delta = ((1.0 - c) * opts.eps_ball / s.value).ln() - ln_beta_max;
                report.delta = Some(delta.exp());
                if delta.exp() == 0.0 {
                    report.notes.push(format!("delta underflows: ln delta = {delta}"));
                }
            }
            Err(e) => report.notes.push(format!("delta failed: {e}")),
        }
    }
    if report.verdict == Verdict::Inconclusive {
        report
            .notes
            .push("no certificate applies; the criteria are sufficient conditions only".into());
    }
    Ok(report)
}

/// Beta-norm certificate on a uniform grid reaching twice the decay time.
/// Returns the contraction estimate and `ln beta(T)`.
fn run_beta(
    sys: &FracSystem,
    pert: &PerturbationSpec,
    opts: &ClassifyOptions,
    report: &mut StabilityReport,
) -> Option<(f64, f64)> {
    let m = match m_pair(sys, pert) {
        Ok(m) => m,
        Err(e) => {
            report.notes.push(format!("beta certificate skipped: {e}"));
            return None;
        }
    };
    report.m_pair = Some(m);
    let threshold = 1.0 / (5.0 * m.m);
    if report.lipschitz_limit > 0.0 && report.lipschitz_limit < threshold {
        report.notes.push(format!(
            "perturbation does not decay to zero; its limit {} is below 1/(5M) = {threshold}",
            report.lipschitz_limit
        ));
    }
    let scan: Vec<f64> = std::iter::once(0.0)
        .chain((0..=180).map(|k| 1e-3 * 10f64.powf(k as f64 / 20.0)))
        .collect();
    let Some(t_scan) = decay_time(pert, sys, &scan, threshold) else {
        report.notes.push(format!(
            "beta certificate skipped: K(t) does not fall below 1/(5M) = {threshold} before t = 1e6"
        ));
        return None;
    };
    let horizon = (2.0 * t_scan).max(10.0);
    let grid = match TimeGrid::uniform(horizon, opts.probe_points.max(2)) {
        Ok(g) => g,
        Err(e) => {
            report.notes.push(format!("beta certificate skipped: {e}"));
            return None;
        }
    };
    match beta_norm_certificate(sys, pert, &grid, opts.seed) {
        Ok(c) => {
            report.t_decay = Some(c.t_decay);
            report.beta_contraction = Some(c.contraction);
            Some((c.contraction, c.ln_beta_max))
        }
        Err(e) => {
            report.notes.push(format!("beta certificate failed: {e}"));
            None
        }
    }
}
