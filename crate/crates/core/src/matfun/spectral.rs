//! Eigen-decomposition with an explicit defectiveness test and support for
//! user-declared Jordan structure.

use std::f64::consts::FRAC_PI_2;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::SquareMatrix;
use crate::error::{Error, Result};
use crate::special_fn::{FracOrder, MAX_DERIVATIVE_ORDER};

/// Largest supported dimension.
pub const MAX_DIMENSION: usize = 64;

/// Condition number of the (column-normalized) eigenvector matrix above
/// which a matrix is treated as defective.
pub const DEFECTIVE_CONDITION: f64 = 1e8;

/// A declared Jordan block: `size` copies of the eigenvalue at
/// `eigenvalue_index` in the sorted spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanBlock {
    pub eigenvalue_index: usize,
    pub size: usize,
}

/// One invariant subspace of the decomposition: columns
/// `start..start + size` of the basis, on which `A` acts as
/// `eigenvalue * I + nilpotent`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBlock {
    pub start: usize,
    pub size: usize,
    pub eigenvalue: Complex64,
    pub nilpotent: DMatrix<Complex64>,
    /// Index of nilpotency of `nilpotent` (1 when it vanishes).
    pub index: usize,
}

/// Block-diagonal factorization `A = W diag(lambda_c I + N_c) W^{-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    eigenvalues: Vec<Complex64>,
    basis: DMatrix<Complex64>,
    basis_inv: DMatrix<Complex64>,
    blocks: Vec<SpectralBlock>,
    condition_estimate: f64,
    jordan_structure: Option<Vec<JordanBlock>>,
    operator_scale: f64,
}

impl SpectralData {
    /// Eigenvalues sorted by (real part, imaginary part).
    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    /// Eigenvectors (generalized eigenvectors on declared Jordan blocks) as columns.
    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.basis
    }

    pub(crate) fn basis_inverse(&self) -> &DMatrix<Complex64> {
        &self.basis_inv
    }

    pub fn blocks(&self) -> &[SpectralBlock] {
        &self.blocks
    }

    pub fn condition_estimate(&self) -> f64 {
        self.condition_estimate
    }

    pub fn jordan_structure(&self) -> Option<&[JordanBlock]> {
        self.jordan_structure.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// min |arg lambda| - alpha pi / 2.
    pub fn arg_margin(&self, alpha: FracOrder) -> f64 {
        condition_from_eigenvalues(&self.eigenvalues, self.operator_scale, alpha).margin
    }

    pub fn spectral_condition(&self, alpha: FracOrder) -> SpectralCondition {
        condition_from_eigenvalues(&self.eigenvalues, self.operator_scale, alpha)
    }
}

fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    m.clone().svd(false, false).singular_values.max()
}

/// Eigenvalues of `A`, sorted by (real part, imaginary part).
pub fn eigenvalues(a: &SquareMatrix) -> Result<Vec<Complex64>> {
    check_size(a)?;
    let mut ev: Vec<Complex64> = a.matrix().complex_eigenvalues().iter().copied().collect();
    if ev.iter().any(|z| !z.is_finite()) {
        return Err(Error::NonConvergence("eigenvalue iteration produced non-finite values".into()));
    }
    sort_eigenvalues(&mut ev);
    Ok(ev)
}

fn sort_eigenvalues(ev: &mut [Complex64]) {
    ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

fn check_size(a: &SquareMatrix) -> Result<()> {
    if a.dim() > MAX_DIMENSION {
        return Err(Error::InvalidInput(format!(
            "dimension {} exceeds the supported maximum {MAX_DIMENSION}",
            a.dim()
        )));
    }
    Ok(())
}

fn complexify(a: &DMatrix<f64>) -> DMatrix<Complex64> {
    a.map(|v| Complex64::new(v, 0.0))
}

fn shifted(a: &DMatrix<Complex64>, lambda: Complex64) -> DMatrix<Complex64> {
    let mut m = a.clone();
    for i in 0..m.nrows() {
        m[(i, i)] -= lambda;
    }
    m
}

/// Right singular vectors of `m` for its `k` smallest singular values
/// (as columns), together with all singular values in ascending order.
fn smallest_singular_vectors(m: &DMatrix<Complex64>, k: usize) -> (DMatrix<Complex64>, Vec<f64>) {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let d = m.ncols();
    let mut out = DMatrix::zeros(d, k);
    for (c, &i) in order.iter().take(k).enumerate() {
        for r in 0..d {
            out[(r, c)] = v_t[(i, r)].conj();
        }
    }
    let sv = order.iter().map(|&i| svd.singular_values[i]).collect();
    (out, sv)
}

/// Condition number of `w` after scaling its columns to unit length.
fn normalized_condition(w: &DMatrix<Complex64>) -> f64 {
    let mut v = w.clone();
    for mut c in v.column_iter_mut() {
        let n = c.norm();
        if n > 0.0 {
            c /= Complex64::new(n, 0.0);
        }
    }
    let sv = v.svd(false, false).singular_values;
    let (lo, hi) = (sv.min(), sv.max());
    if lo == 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

/// Groups indices of `points` whose pairwise distance (chained) is within `tol`.
fn cluster(points: &[Complex64], tol: f64) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (points[i] - points[j]).norm() <= tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_of[r] == usize::MAX {
            root_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[root_of[r]].push(i);
    }
    groups
}

fn mean(points: &[Complex64], idx: &[usize]) -> Complex64 {
    idx.iter().map(|&i| points[i]).sum::<Complex64>() / idx.len() as f64
}

/// Diagonalizes `A`.
///
/// Eigenvalues that coincide to working accuracy are grouped; a group
/// whose shifted matrix has a null space of full dimension is semisimple
/// and gets an orthonormal eigenbasis. Otherwise each eigenvalue gets its
/// own null vector and the conditioning of the resulting basis decides.
pub fn spectral_decompose(a: &SquareMatrix) -> Result<SpectralData> {
    let ev = eigenvalues(a)?;
    let d = a.dim();
    let scale = spectral_norm(a.matrix()).max(1.0);
    let ac = complexify(a.matrix());
    let mut basis = DMatrix::<Complex64>::zeros(d, d);
    let mut eigs = ev.clone();

    for group in cluster(&ev, 1e-6 * scale) {
        let k = group.len();
        let centre = mean(&ev, &group);
        let spread = group.iter().map(|&i| (ev[i] - centre).norm()).fold(0.0, f64::max);
        let (vecs, sv) = smallest_singular_vectors(&shifted(&ac, centre), k);
        if sv[k - 1] <= 1e-9 * scale {
            for (c, &i) in group.iter().enumerate() {
                basis.set_column(i, &vecs.column(c));
                eigs[i] = centre;
            }
        } else if k > 1 && sv[k - 1] > 100.0 * spread + 1e-9 * scale {
            // a nontrivial Jordan chain: one eigenvector for the whole group
            for &i in &group {
                basis.set_column(i, &vecs.column(0));
            }
        } else {
            for &i in &group {
                let (v, _) = smallest_singular_vectors(&shifted(&ac, ev[i]), 1);
                basis.set_column(i, &v.column(0));
            }
        }
    }

    let condition = normalized_condition(&basis);
    if !(condition <= DEFECTIVE_CONDITION) {
        return Err(Error::Defective { condition });
    }
    let basis_inv = basis
        .clone()
        .try_inverse()
        .ok_or(Error::Defective { condition: f64::INFINITY })?;
    let blocks = (0..d)
        .map(|i| SpectralBlock {
            start: i,
            size: 1,
            eigenvalue: eigs[i],
            nilpotent: DMatrix::zeros(1, 1),
            index: 1,
        })
        .collect();
    Ok(SpectralData {
        eigenvalues: eigs,
        basis,
        basis_inv,
        blocks,
        condition_estimate: condition,
        jordan_structure: None,
        operator_scale: scale,
    })
}

/// Block decomposition following a declared Jordan structure.
///
/// Each declared block claims the eigenvalues nearest to the one it names;
/// unclaimed eigenvalues become 1x1 blocks. Blocks sharing an eigenvalue
/// are merged and spanned by the null space of `(A - lambda I)^m`, with `m`
/// the largest declared block size.
pub fn spectral_decompose_with_jordan(a: &SquareMatrix, structure: &[JordanBlock]) -> Result<SpectralData> {
    let ev = eigenvalues(a)?;
    let d = a.dim();
    let scale = spectral_norm(a.matrix()).max(1.0);

    // (members, block size) per declared or implicit block
    let mut groups: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut claimed = vec![false; d];
    for jb in structure {
        if jb.eigenvalue_index >= d {
            return Err(Error::InvalidInput(format!(
                "Jordan block refers to eigenvalue {} of a {d}x{d} matrix",
                jb.eigenvalue_index
            )));
        }
        if jb.size == 0 || jb.size > MAX_DERIVATIVE_ORDER + 1 {
            return Err(Error::InvalidInput(format!(
                "Jordan block size must be between 1 and {}, got {}",
                MAX_DERIVATIVE_ORDER + 1,
                jb.size
            )));
        }
        if claimed[jb.eigenvalue_index] {
            return Err(Error::InvalidInput(format!(
                "eigenvalue {} is claimed by two Jordan blocks",
                jb.eigenvalue_index
            )));
        }
        let anchor = ev[jb.eigenvalue_index];
        let mut free: Vec<usize> = (0..d).filter(|&i| !claimed[i]).collect();
        if free.len() < jb.size {
            return Err(Error::InvalidInput("Jordan blocks exceed the matrix dimension".into()));
        }
        free.sort_by(|&i, &j| (ev[i] - anchor).norm().total_cmp(&(ev[j] - anchor).norm()));
        let members: Vec<usize> = free[..jb.size].to_vec();
        for &i in &members {
            claimed[i] = true;
        }
        groups.push((members, jb.size));
    }
    for i in 0..d {
        if !claimed[i] {
            groups.push((vec![i], 1));
        }
    }

    let centres: Vec<Complex64> = groups.iter().map(|(m, _)| mean(&ev, m)).collect();
    let max_spread = groups
        .iter()
        .zip(&centres)
        .flat_map(|((m, _), c)| m.iter().map(|&i| (ev[i] - *c).norm()))
        .fold(0.0, f64::max);
    let merged = cluster(&centres, 2.0 * max_spread + 1e-8 * scale);

    let ac = complexify(a.matrix());
    let mut basis = DMatrix::<Complex64>::zeros(d, d);
    let mut eigs = Vec::with_capacity(d);
    // (start, size, centre, index)
    let mut layout = Vec::new();
    let mut col = 0;
    for g in &merged {
        let members: Vec<usize> = g.iter().flat_map(|&b| groups[b].0.iter().copied()).collect();
        let index = g.iter().map(|&b| groups[b].1).max().unwrap();
        let k = members.len();
        let centre = mean(&ev, &members);
        let shifted_a = shifted(&ac, centre);
        let mut power = shifted_a.clone();
        for _ in 1..index {
            power = &power * &shifted_a;
        }
        let (vecs, _) = smallest_singular_vectors(&power, k);
        for c in 0..k {
            basis.set_column(col + c, &vecs.column(c));
        }
        layout.push((col, k, centre, index));
        eigs.extend(std::iter::repeat(centre).take(k));
        col += k;
    }

    let condition = normalized_condition(&basis);
    let basis_inv = match basis.clone().try_inverse() {
        Some(inv) if condition.is_finite() => inv,
        _ => return Err(Error::Defective { condition }),
    };
    let reduced = &basis_inv * &ac * &basis;
    let blocks = layout
        .into_iter()
        .map(|(start, size, centre, index)| {
            let nilpotent = shifted(&reduced.view((start, start), (size, size)).into_owned(), centre);
            SpectralBlock {
                start,
                size,
                eigenvalue: centre,
                nilpotent,
                index,
            }
        })
        .collect();

    sort_eigenvalues(&mut eigs);
    let mut declared = structure.to_vec();
    declared.sort_by_key(|b| b.eigenvalue_index);
    Ok(SpectralData {
        eigenvalues: eigs,
        basis,
        basis_inv,
        blocks,
        condition_estimate: condition,
        jordan_structure: Some(declared),
        operator_scale: scale,
    })
}

/// Outcome of the sector test `|arg lambda| > alpha pi / 2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCondition {
    pub satisfied: bool,
    pub margin: f64,
    /// A (numerically) zero eigenvalue was found.
    pub degenerate: bool,
    #[serde(serialize_with = "serialize_complex_list")]
    pub eigenvalues: Vec<Complex64>,
}

fn serialize_complex_list<S: serde::Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

impl SpectralCondition {
    /// Eigenvalue with the smallest |arg|.
    pub fn critical_eigenvalue(&self) -> Option<Complex64> {
        self.eigenvalues
            .iter()
            .copied()
            .min_by(|a, b| a.arg().abs().total_cmp(&b.arg().abs()))
    }
}

fn condition_from_eigenvalues(ev: &[Complex64], scale: f64, alpha: FracOrder) -> SpectralCondition {
    let half = alpha.value() * FRAC_PI_2;
    let zero_tol = 1e-12 * scale.max(1.0);
    let degenerate = ev.iter().any(|z| z.norm() <= zero_tol);
    let min_arg = ev
        .iter()
        .map(|z| if z.norm() <= zero_tol { 0.0 } else { z.arg().abs() })
        .fold(f64::INFINITY, f64::min);
    let margin = min_arg - half;
    SpectralCondition {
        satisfied: !degenerate && margin > 0.0,
        margin,
        degenerate,
        eigenvalues: ev.to_vec(),
    }
}

/// Checks the sector condition on the spectrum of `A`.
pub fn check_spectral_condition(a: &SquareMatrix, alpha: FracOrder) -> Result<SpectralCondition> {
    let ev = eigenvalues(a)?;
    Ok(condition_from_eigenvalues(&ev, spectral_norm(a.matrix()), alpha))
}
