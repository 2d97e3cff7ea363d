use nalgebra::DVector;
use serde::Serialize;

use crate::norm::VectorNorm;
use crate::quad::TimeGrid;

/// How a trajectory was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    LinearExact,
    Abm,
    LyapunovPerron,
    RiemannLiouvilleExact,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryMeta {
    pub method: Method,
    pub iterations: usize,
    /// Fixed-point defect, when it was measured.
    pub residual: Option<f64>,
    /// Ratios of successive iteration differences (fixed-point solver only).
    pub contraction_ratios: Vec<f64>,
}

impl TrajectoryMeta {
    pub fn new(method: Method) -> Self {
        TrajectoryMeta {
            method,
            iterations: 0,
            residual: None,
            contraction_ratios: Vec::new(),
        }
    }
}

/// States on the nodes `grid[first_index..]`.
///
/// Caputo solutions start at `t = 0`; Riemann-Liouville solutions are
/// singular there and start at the first positive node.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    grid: TimeGrid,
    first_index: usize,
    states: Vec<DVector<f64>>,
    pub meta: TrajectoryMeta,
}

impl Trajectory {
    pub fn new(grid: TimeGrid, first_index: usize, states: Vec<DVector<f64>>, meta: TrajectoryMeta) -> Self {
        debug_assert_eq!(states.len() + first_index, grid.len());
        Trajectory {
            grid,
            first_index,
            states,
            meta,
        }
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn first_index(&self) -> usize {
        self.first_index
    }

    /// Times of the stored states.
    pub fn times(&self) -> &[f64] {
        &self.grid.nodes()[self.first_index..]
    }

    pub fn states(&self) -> &[DVector<f64>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.states.first().map_or(0, |s| s.len())
    }

    pub fn last(&self) -> &DVector<f64> {
        self.states.last().expect("trajectory has at least one state")
    }

    pub fn norms(&self, norm: VectorNorm) -> Vec<f64> {
        self.states.iter().map(|s| norm.vector(s)).collect()
    }

    /// Largest distance between two trajectories on the same nodes.
    pub fn max_distance(&self, other: &Trajectory, norm: VectorNorm) -> f64 {
        self.states
            .iter()
            .zip(&other.states)
            .map(|(a, b)| norm.vector(&(a - b)))
            .fold(0.0, f64::max)
    }
}
