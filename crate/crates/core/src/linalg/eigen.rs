//! Cyclic Jacobi eigensolver for small real symmetric matrices, and the
//! Hermitian eigenvalue routine built on its real embedding.

use super::matrix::{ComplexMatrix, RealMatrix};
use crate::error::{argument, Result};

const MAX_SWEEPS: usize = 64;

/// Off-diagonal Frobenius norm at convergence, relative to the full norm.
pub const JACOBI_TOLERANCE: f64 = 1e-13;

/// Accepted deviation from Hermiticity (or symmetry) for eigen inputs.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Eigenvalues in descending order with matching eigenvector columns.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: RealMatrix,
}

fn check_symmetric(m: &RealMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(argument(format!("expected a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let err = m.symmetry_error();
    if !(err <= HERMITIAN_TOLERANCE * m.max_abs().max(1.0)) {
        return Err(argument(format!("matrix is not symmetric (deviation {err:e})")));
    }
    Ok(())
}

/// Full eigendecomposition of a real symmetric matrix.
pub fn symmetric_eigen(m: &RealMatrix) -> Result<SymmetricEigen> {
    check_symmetric(m)?;
    let (values, vectors) = jacobi(m, true);
    Ok(SymmetricEigen { values, vectors })
}

/// Eigenvalues of a real symmetric matrix, descending.
pub fn symmetric_eigenvalues(m: &RealMatrix) -> Result<Vec<f64>> {
    check_symmetric(m)?;
    Ok(jacobi(m, false).0)
}

/// Real eigenvalues of a Hermitian matrix in descending order.
///
/// The `n x n` Hermitian `A + iB` is embedded as the real symmetric
/// `[[A, -B], [B, A]]`, whose spectrum is that of the original with every
/// eigenvalue doubled.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(argument(format!("expected a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let err = m.hermiticity_error();
    if !(err <= HERMITIAN_TOLERANCE) {
        return Err(argument(format!("matrix is not Hermitian (deviation {err:e})")));
    }
    let n = m.rows();
    let embedded = RealMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (a, b) = (i % n, j % n);
        let z = (m[(a, b)] + m[(b, a)].conj()) * 0.5;
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let doubled = jacobi(&embedded, false).0;
    Ok(doubled.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect())
}

fn jacobi(m: &RealMatrix, want_vectors: bool) -> (Vec<f64>, RealMatrix) {
    let n = m.rows();
    let mut a = RealMatrix::from_fn(n, n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let mut v = RealMatrix::identity(n);
    let norm = a.as_slice().iter().map(|x| x * x).sum::<f64>().sqrt();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= JACOBI_TOLERANCE * norm {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                if want_vectors {
                    for k in 0..n {
                        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = if want_vectors { RealMatrix::from_fn(n, n, |r, c| v[(r, order[c])]) } else { v };
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn diagonal_input() {
        let m = ComplexMatrix::diag(&[0.3, 0.7]);
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] - 0.7).abs() < 1e-15 && (ev[1] - 0.3).abs() < 1e-15);
    }

    #[test]
    fn pauli_x_spectrum() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_y_spectrum() {
        let i = Complex64::new(0.0, 1.0);
        let m = ComplexMatrix::new(2, 2, vec![0.0.into(), -i, i, 0.0.into()]).unwrap();
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(hermitian_eigenvalues(&m).is_err());
        let r = RealMatrix::new(2, 2, vec![0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(symmetric_eigen(&r).is_err());
        assert!(hermitian_eigenvalues(&ComplexMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn zero_matrix() {
        let ev = hermitian_eigenvalues(&ComplexMatrix::zeros(3, 3)).unwrap();
        assert_eq!(ev, vec![0.0; 3]);
    }

    #[test]
    fn eigenvectors_reconstruct() {
        let m = RealMatrix::new(3, 3, vec![4.0, 1.0, -2.0, 1.0, 2.0, 0.5, -2.0, 0.5, 3.0]).unwrap();
        let eig = symmetric_eigen(&m).unwrap();
        let d = RealMatrix::from_fn(3, 3, |i, j| if i == j { eig.values[i] } else { 0.0 });
        let rebuilt = eig.vectors.matmul(&d).matmul(&eig.vectors.transpose());
        assert!(rebuilt.max_abs_diff(&m) < 1e-13);
        let gram = eig.vectors.transpose().matmul(&eig.vectors);
        assert!(gram.max_abs_diff(&RealMatrix::identity(3)) < 1e-14);
        assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
    }

    proptest! {
        #[test]
        fn two_by_two_matches_quadratic_roots(
            a in -5.0f64..5.0, d in -5.0f64..5.0, re in -3.0f64..3.0, im in -3.0f64..3.0
        ) {
            let b = Complex64::new(re, im);
            let m = ComplexMatrix::new(2, 2, vec![a.into(), b, b.conj(), d.into()]).unwrap();
            let ev = hermitian_eigenvalues(&m).unwrap();
            let mean = 0.5 * (a + d);
            let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
            prop_assert!((ev[0] - (mean + radius)).abs() <= 1e-12);
            prop_assert!((ev[1] - (mean - radius)).abs() <= 1e-12);
        }
    }
}
