//! Log-log decay fits of `||E_alpha(t^alpha A)||` and `||E_{alpha,alpha}(t^alpha A)||`.

use fracstab::matfun::FracSystem;
use fracstab::{Error, Result};
use serde::Serialize;

use crate::output::Table;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecayRow {
    pub t: f64,
    pub norm_ea: f64,
    pub norm_eaa: f64,
    /// Local slope `d log ||.|| / d log t` from neighbouring samples.
    pub slope_ea: f64,
    pub slope_eaa: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecayFit {
    pub alpha: f64,
    /// Least-squares slope over the last decade of the range.
    pub fitted_slope_ea: f64,
    pub fitted_slope_eaa: f64,
    /// Least-squares slope over the whole range.
    pub full_slope_ea: f64,
    pub full_slope_eaa: f64,
    #[serde(skip)]
    pub rows: Vec<DecayRow>,
}

impl DecayFit {
    pub fn table(&self) -> Table {
        let mut t = Table::new(
            ["t", "norm_ea", "norm_eaa", "slope_ea", "slope_eaa"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        );
        t.rows = self
            .rows
            .iter()
            .map(|r| vec![r.t, r.norm_ea, r.norm_eaa, r.slope_ea, r.slope_eaa])
            .collect();
        t
    }
}

/// `per_decade` log-spaced samples from `t_min` to `t_max`, both included.
pub fn geometric_times(t_min: f64, t_max: f64, per_decade: usize) -> Vec<f64> {
    let n = ((t_max / t_min).log10() * per_decade as f64).round().max(1.0) as usize;
    let ratio = t_max / t_min;
    let mut ts: Vec<f64> = (0..=n).map(|k| t_min * ratio.powf(k as f64 / n as f64)).collect();
    ts[n] = t_max;
    ts
}

/// Ordinary least-squares slope of `y` against `x`.
pub fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

fn local_slopes(lt: &[f64], ly: &[f64]) -> Vec<f64> {
    let n = lt.len();
    (0..n)
        .map(|i| {
            let (a, b) = (i.saturating_sub(1), (i + 1).min(n - 1));
            if a == b {
                f64::NAN
            } else {
                (ly[b] - ly[a]) / (lt[b] - lt[a])
            }
        })
        .collect()
}

/// Samples both propagator norms in the system norm and fits their decay
/// exponents. Fails with a sector violation when the matrix functions do
/// not decay.
pub fn decay_fit(sys: &FracSystem, t_min: f64, t_max: f64, per_decade: usize) -> Result<DecayFit> {
    if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) || per_decade == 0 {
        return Err(Error::InvalidInput("decay fit needs 0 < t_min < t_max".into()));
    }
    let sector = sys.sector();
    if !sector.satisfied {
        let lambda = sector.critical_eigenvalue().unwrap_or_default();
        return Err(Error::SectorViolation {
            lambda,
            bound: sys.alpha().sector_half_angle(),
        });
    }
    let norm = sys.norm();
    let ts = geometric_times(t_min, t_max, per_decade);
    let mut ea = Vec::with_capacity(ts.len());
    let mut eaa = Vec::with_capacity(ts.len());
    for &t in &ts {
        ea.push(norm.operator(&sys.ea(t)?));
        eaa.push(norm.operator(&sys.eaa(t)?));
    }
    if ea.iter().chain(&eaa).any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::Domain("propagator norm vanished or overflowed on the fit range".into()));
    }
    let lt: Vec<f64> = ts.iter().map(|t| t.ln()).collect();
    let lea: Vec<f64> = ea.iter().map(|v| v.ln()).collect();
    let leaa: Vec<f64> = eaa.iter().map(|v| v.ln()).collect();
    let start = ts.partition_point(|&t| t < t_max / 10.0 * (1.0 - 1e-12)).min(ts.len() - 2);
    let (s_ea, s_eaa) = (local_slopes(&lt, &lea), local_slopes(&lt, &leaa));
    let rows = (0..ts.len())
        .map(|i| DecayRow {
            t: ts[i],
            norm_ea: ea[i],
            norm_eaa: eaa[i],
            slope_ea: s_ea[i],
            slope_eaa: s_eaa[i],
        })
        .collect();
    Ok(DecayFit {
        alpha: sys.alpha().value(),
        fitted_slope_ea: ls_slope(&lt[start..], &lea[start..]),
        fitted_slope_eaa: ls_slope(&lt[start..], &leaa[start..]),
        full_slope_ea: ls_slope(&lt, &lea),
        full_slope_eaa: ls_slope(&lt, &leaa),
        rows,
    })
}
