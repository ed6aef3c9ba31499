//! Gaussian bosonic states described by first and second moments.
//!
//! Quadratures are ordered `(q1, p1, q2, p2, ...)` and normalized so that
//! the vacuum covariance is the identity: a thermal mode with mean photon
//! number `N` has covariance `(2N + 1) I`. The symplectic form is
//! `Omega = [[0, 1], [-1, 0]]` repeated on each mode.

mod channels;
mod dilation;

pub use channels::{
    apply_amplifier_gaussian, apply_attenuator_gaussian, apply_phase_insensitive, attenuator_is_entanglement_breaking,
    is_entanglement_breaking, twisted_decompose, PhaseInsensitiveParams, TwistedFactors,
};
pub use dilation::{
    attenuator_dilation, beamsplitter_symplectic, coherent_info_attenuator_gaussian, coherent_info_extended_gaussian,
    extended_attenuator_moments, two_mode_squeezed_cov, MODE_B, MODE_E_PRIME, MODE_F,
};

use num_complex::Complex64;

use crate::error::{argument, Error, Result};
use crate::linalg::{hermitian_eigenvalues, symmetric_eigen, ComplexMatrix, RealMatrix};

/// Symplectic eigenvalues within this distance below 1 are rounded up to 1.
pub const SYMPLECTIC_CLIP: f64 = 1e-9;
/// Symplectic eigenvalues further than this below 1 mark an unphysical state.
pub const SYMPLECTIC_REJECT: f64 = 1e-6;

const SYMMETRY_TOL: f64 = 1e-12;

/// Gaussian state of `m` modes: mean vector of length `2m` and `2m x 2m`
/// covariance matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianState {
    mean: Vec<f64>,
    cov: RealMatrix,
}

impl GaussianState {
    pub fn new(mean: Vec<f64>, cov: RealMatrix) -> Result<Self> {
        check_shape(&mean, &cov)?;
        let sym = cov.symmetry_error();
        if sym > SYMMETRY_TOL * cov.max_abs().max(1.0) {
            return Err(argument(format!("covariance is not symmetric (deviation {sym:e})")));
        }
        let nu = symplectic_eigenvalues(&cov)?;
        if let Some(&min) = nu.last() {
            if min < 1.0 - SYMPLECTIC_CLIP {
                return Err(Error::InvalidState(format!("symplectic eigenvalue {min} below 1")));
            }
        }
        Ok(Self { mean, cov })
    }

    pub(crate) fn from_parts_unchecked(mean: Vec<f64>, cov: RealMatrix) -> Self {
        debug_assert_eq!(mean.len(), cov.rows());
        Self { mean, cov }
    }

    pub fn vacuum(modes: usize) -> Self {
        Self { mean: vec![0.0; 2 * modes], cov: RealMatrix::identity(2 * modes) }
    }

    /// Single-mode thermal state with mean photon number `n`.
    pub fn thermal(n: f64) -> Result<Self> {
        if !(n >= 0.0) || !n.is_finite() {
            return Err(argument(format!("mean photon number must be finite and >= 0, got {n}")));
        }
        Ok(Self { mean: vec![0.0; 2], cov: RealMatrix::scaled_identity(2, 2.0 * n + 1.0) })
    }

    pub fn modes(&self) -> usize {
        self.mean.len() / 2
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn cov(&self) -> &RealMatrix {
        &self.cov
    }

    /// Reduced state on the listed modes, in the given order.
    pub fn marginal(&self, modes: &[usize]) -> Result<Self> {
        if modes.is_empty() {
            return Err(argument("marginal needs at least one mode"));
        }
        if let Some(&bad) = modes.iter().find(|&&k| k >= self.modes()) {
            return Err(argument(format!("mode {bad} out of range for {} modes", self.modes())));
        }
        let idx: Vec<usize> = modes.iter().flat_map(|&k| [2 * k, 2 * k + 1]).collect();
        Ok(Self { mean: idx.iter().map(|&i| self.mean[i]).collect(), cov: self.cov.select(&idx) })
    }

    /// Tensor product (direct sum of moments).
    pub fn product(&self, other: &Self) -> Self {
        let (a, b) = (self.mean.len(), other.mean.len());
        let cov = RealMatrix::from_fn(a + b, a + b, |i, j| match (i < a, j < a) {
            (true, true) => self.cov[(i, j)],
            (false, false) => other.cov[(i - a, j - a)],
            _ => 0.0,
        });
        Self { mean: self.mean.iter().chain(&other.mean).copied().collect(), cov }
    }

    /// Moments after the linear map `r -> S r`.
    pub fn transform(&self, s: &RealMatrix) -> Result<Self> {
        if s.rows() != self.mean.len() || !s.is_square() {
            return Err(argument(format!(
                "transform is {}x{}, state has {} quadratures",
                s.rows(),
                s.cols(),
                self.mean.len()
            )));
        }
        let mean = (0..s.rows()).map(|i| (0..s.cols()).map(|j| s[(i, j)] * self.mean[j]).sum()).collect();
        Ok(Self { mean, cov: s.matmul(&self.cov).matmul(&s.transpose()) })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.mean.len() != other.mean.len() {
            return f64::INFINITY;
        }
        let dm = self.mean.iter().zip(&other.mean).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        dm.max(self.cov.max_abs_diff(&other.cov))
    }
}

fn check_shape(mean: &[f64], cov: &RealMatrix) -> Result<()> {
    if mean.is_empty() || mean.len() % 2 == 1 {
        return Err(argument(format!("mean vector length must be even and positive, got {}", mean.len())));
    }
    if !cov.is_square() || cov.rows() != mean.len() {
        return Err(argument(format!("covariance is {}x{}, expected {n}x{n}", cov.rows(), cov.cols(), n = mean.len())));
    }
    Ok(())
}

/// Block-diagonal symplectic form on `modes` modes.
pub fn symplectic_form(modes: usize) -> RealMatrix {
    let mut omega = RealMatrix::zeros(2 * modes, 2 * modes);
    for k in 0..modes {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    omega
}

/// Symplectic eigenvalues of a covariance matrix, descending.
///
/// These are the moduli of the eigenvalues of `i Omega V`. They are read
/// off as the positive eigenvalues of the Hermitian `i V^{1/2} Omega V^{1/2}`,
/// which is similar to `i Omega V`.
pub fn symplectic_eigenvalues(cov: &RealMatrix) -> Result<Vec<f64>> {
    if !cov.is_square() || cov.rows() == 0 || cov.rows() % 2 == 1 {
        return Err(argument(format!("covariance must be square of even size, got {}x{}", cov.rows(), cov.cols())));
    }
    let modes = cov.rows() / 2;
    let eig = symmetric_eigen(cov)?;
    if let Some(&min) = eig.values.last() {
        if !(min > 0.0) {
            return Err(Error::InvalidState(format!("covariance is not positive definite (eigenvalue {min:e})")));
        }
    }
    let q = &eig.vectors;
    let root = RealMatrix::from_fn(cov.rows(), cov.rows(), |i, j| {
        (0..cov.rows()).map(|k| q[(i, k)] * eig.values[k].sqrt() * q[(j, k)]).sum()
    });
    let k = root.matmul(&symplectic_form(modes)).matmul(&root);
    let h = ComplexMatrix::from_fn(cov.rows(), cov.rows(), |i, j| Complex64::new(0.0, 0.5 * (k[(i, j)] - k[(j, i)])));
    let spectrum = hermitian_eigenvalues(&h)?;
    spectrum[..modes]
        .iter()
        .map(|&nu| {
            if nu < 1.0 - SYMPLECTIC_REJECT {
                Err(Error::InvalidState(format!("symplectic eigenvalue {nu} violates the uncertainty principle")))
            } else if (1.0 - SYMPLECTIC_CLIP..1.0).contains(&nu) {
                Ok(1.0)
            } else {
                Ok(nu)
            }
        })
        .collect()
}

/// `g(n) = (n + 1) log2(n + 1) - n log2 n`, the entropy in bits of a
/// thermal mode with mean photon number `n`.
pub fn g_function(n: f64) -> Result<f64> {
    if !(n >= 0.0) {
        return Err(argument(format!("g is defined for n >= 0, got {n}")));
    }
    Ok(g(n))
}

pub(crate) fn g(n: f64) -> f64 {
    if n <= 0.0 {
        return 0.0;
    }
    if n.is_infinite() {
        return f64::INFINITY;
    }
    (n + 1.0) * (n + 1.0).log2() - n * n.log2()
}

/// Von Neumann entropy in bits, `sum_k g((nu_k - 1) / 2)`.
pub fn gaussian_entropy(s: &GaussianState) -> Result<f64> {
    Ok(symplectic_eigenvalues(&s.cov)?.iter().map(|nu| g(0.5 * (nu - 1.0))).sum())
}
