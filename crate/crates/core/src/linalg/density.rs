use num_complex::Complex64;

use super::eigen::hermitian_eigenvalues;
use super::matrix::{kron, ComplexMatrix};
use crate::error::{argument, Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-NEGATIVE_CLIP, 0)` are roundoff and clipped to zero.
pub const NEGATIVE_CLIP: f64 = 1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix with its tensor
/// factor dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        check_dims(&matrix, &dims)?;
        let herm = matrix.hermiticity_error();
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {herm:e})")));
        }
        let tr = matrix.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let min = hermitian_eigenvalues(&matrix)?.last().copied().unwrap_or(0.0);
        if min < -NEGATIVE_CLIP {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { matrix, dims })
    }

    /// Skips the physicality checks; for matrices that are states by construction.
    pub(crate) fn from_parts_unchecked(matrix: ComplexMatrix, dims: Vec<usize>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), matrix.rows());
        Self { matrix, dims }
    }

    /// Projector onto the normalized `vector`.
    pub fn pure(vector: &[Complex64], dims: Vec<usize>) -> Result<Self> {
        let norm = vector.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(argument("state vector must have finite nonzero norm"));
        }
        let normalized: Vec<Complex64> = vector.iter().map(|z| z / norm).collect();
        let matrix = ComplexMatrix::outer(&normalized);
        check_dims(&matrix, &dims)?;
        Ok(Self { matrix, dims })
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let d: usize = dims.iter().product();
        Self { matrix: ComplexMatrix::identity(d).scale(1.0 / d as f64), dims }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let dims = self.dims.iter().chain(&other.dims).copied().collect();
        Self { matrix: kron(&self.matrix, &other.matrix), dims }
    }

    /// `U rho U^dagger` for a unitary of matching dimension.
    pub fn evolve(&self, unitary: &ComplexMatrix) -> Result<Self> {
        if unitary.rows() != self.dim() || !unitary.is_square() {
            return Err(argument(format!(
                "unitary is {}x{}, state dimension is {}",
                unitary.rows(),
                unitary.cols(),
                self.dim()
            )));
        }
        Ok(Self { matrix: self.matrix.conjugate_by(unitary), dims: self.dims.clone() })
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix).expect("density matrices are Hermitian")
    }

    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        partial_trace(self, keep)
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }
}

fn check_dims(matrix: &ComplexMatrix, dims: &[usize]) -> Result<()> {
    if !matrix.is_square() {
        return Err(argument(format!("density matrix must be square, got {}x{}", matrix.rows(), matrix.cols())));
    }
    if dims.is_empty() || dims.contains(&0) || dims.iter().product::<usize>() != matrix.rows() {
        return Err(argument(format!("factor dimensions {dims:?} do not multiply to {}", matrix.rows())));
    }
    Ok(())
}

/// Reduced state on the factors listed in `keep`; kept factors retain
/// their original relative order.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let dims = rho.dims();
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() {
        return Err(argument("partial trace must keep at least one factor"));
    }
    if let Some(&bad) = keep.iter().find(|&&k| k >= dims.len()) {
        return Err(argument(format!("factor index {bad} out of range for {} factors", dims.len())));
    }
    if keep.len() == dims.len() {
        return Ok(rho.clone());
    }

    let total = rho.dim();
    let digits = |mut idx: usize| {
        let mut out = vec![0usize; dims.len()];
        for (slot, &d) in out.iter_mut().zip(dims).rev() {
            *slot = idx % d;
            idx /= d;
        }
        out
    };
    let all: Vec<Vec<usize>> = (0..total).map(digits).collect();
    let kept_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
    let reduced_index = |ds: &[usize]| keep.iter().fold(0, |acc, &k| acc * dims[k] + ds[k]);
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep.contains(k)).collect();

    let out_dim: usize = kept_dims.iter().product();
    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    let m = rho.matrix();
    for i in 0..total {
        for j in 0..total {
            if traced.iter().all(|&t| all[i][t] == all[j][t]) {
                out[(reduced_index(&all[i]), reduced_index(&all[j]))] += m[(i, j)];
            }
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(out, kept_dims))
}

/// `-sum lambda log2 lambda` in bits, with `0 log 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    entropy_of_spectrum(&rho.eigenvalues())
}

fn entropy_of_spectrum(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -NEGATIVE_CLIP {
            return Err(Error::InvalidState(format!("negative eigenvalue {l:e}")));
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s)
}
