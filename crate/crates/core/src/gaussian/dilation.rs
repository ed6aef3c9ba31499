//! Three-mode dilation of the thermal attenuator: input `A`, thermal
//! environment `E` and its purification `E'`, mapped to `B, F, E'` by a
//! beam splitter on `A, E`.

use super::{gaussian_entropy, GaussianState};
use crate::error::{argument, Result};
use crate::linalg::RealMatrix;

/// Mode positions in the dilated output.
pub const MODE_B: usize = 0;
pub const MODE_F: usize = 1;
pub const MODE_E_PRIME: usize = 2;

/// Two-mode squeezed vacuum whose marginals are thermal with mean photon
/// number `noise`.
pub fn two_mode_squeezed_cov(noise: f64) -> Result<GaussianState> {
    if !(noise >= 0.0) || !noise.is_finite() {
        return Err(argument(format!("noise must be finite and >= 0, got {noise}")));
    }
    let v = 2.0 * noise + 1.0;
    let c = (v * v - 1.0).sqrt();
    #[rustfmt::skip]
    let cov = RealMatrix::new(4, 4, vec![
        v,   0.0, c,   0.0,
        0.0, v,   0.0, -c,
        c,   0.0, v,   0.0,
        0.0, -c,  0.0, v,
    ])?;
    Ok(GaussianState::from_parts_unchecked(vec![0.0; 4], cov))
}

/// `[[sqrt(eta) I, sqrt(1 - eta) I], [-sqrt(1 - eta) I, sqrt(eta) I]]`.
pub fn beamsplitter_symplectic(eta: f64) -> RealMatrix {
    let (t, r) = (eta.sqrt(), (1.0 - eta).sqrt());
    RealMatrix::from_fn(4, 4, |i, j| {
        if i % 2 != j % 2 {
            return 0.0;
        }
        match (i < 2, j < 2) {
            (true, true) | (false, false) => t,
            (true, false) => r,
            (false, true) => -r,
        }
    })
}

fn check_params(n: f64, eta: f64, noise: f64) -> Result<()> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(argument(format!("input photon number must be finite and >= 0, got {n}")));
    }
    if !(0.0..=1.0).contains(&eta) {
        return Err(argument(format!("eta must lie in [0, 1], got {eta}")));
    }
    if !(noise >= 0.0) || !noise.is_finite() {
        return Err(argument(format!("noise must be finite and >= 0, got {noise}")));
    }
    Ok(())
}

/// Output moments on `B, F, E'` for a thermal input with `n` photons.
pub fn attenuator_dilation(n: f64, eta: f64, noise: f64) -> Result<GaussianState> {
    check_params(n, eta, noise)?;
    let input = GaussianState::thermal(n)?.product(&two_mode_squeezed_cov(noise)?);
    let bs = beamsplitter_symplectic(eta);
    let s = RealMatrix::from_fn(6, 6, |i, j| match (i < 4, j < 4) {
        (true, true) => bs[(i, j)],
        (false, false) if i == j => 1.0,
        _ => 0.0,
    });
    input.transform(&s)
}

/// Extended-channel output on `B, E'` and its complementary output on `F`.
pub fn extended_attenuator_moments(n: f64, eta: f64, noise: f64) -> Result<(GaussianState, GaussianState)> {
    let out = attenuator_dilation(n, eta, noise)?;
    Ok((out.marginal(&[MODE_B, MODE_E_PRIME])?, out.marginal(&[MODE_F])?))
}

/// `S(B E') - S(F)` for a thermal input with `n` photons.
pub fn coherent_info_extended_gaussian(n: f64, eta: f64, noise: f64) -> Result<f64> {
    let (be, f) = extended_attenuator_moments(n, eta, noise)?;
    Ok(gaussian_entropy(&be)? - gaussian_entropy(&f)?)
}

/// `S(B) - S(F E')` for a thermal input with `n` photons.
pub fn coherent_info_attenuator_gaussian(n: f64, eta: f64, noise: f64) -> Result<f64> {
    let out = attenuator_dilation(n, eta, noise)?;
    Ok(gaussian_entropy(&out.marginal(&[MODE_B])?)? - gaussian_entropy(&out.marginal(&[MODE_F, MODE_E_PRIME])?)?)
}

#[cfg(test)]
mod tests {
    use super::super::{g, symplectic_eigenvalues, symplectic_form};
    use super::*;

    #[test]
    fn squeezed_examples() {
        let s = two_mode_squeezed_cov(0.0).unwrap();
        assert_eq!(s.cov(), &RealMatrix::identity(4));
        let s = two_mode_squeezed_cov(0.5).unwrap();
        assert!((s.cov()[(0, 2)] - 3f64.sqrt()).abs() < 1e-15 && (s.cov()[(1, 3)] + 3f64.sqrt()).abs() < 1e-15);
        let s = two_mode_squeezed_cov(1.0).unwrap();
        assert!((s.cov()[(0, 2)] - 8f64.sqrt()).abs() < 1e-15);
        let marg = s.marginal(&[1]).unwrap();
        assert!(marg.cov().max_abs_diff(GaussianState::thermal(1.0).unwrap().cov()) < 1e-12);
        assert!(two_mode_squeezed_cov(-0.1).is_err());
    }

    #[test]
    fn beamsplitter_is_symplectic() {
        let omega = symplectic_form(2);
        for eta in [0.0, 0.3, 0.5, 1.0] {
            let s = beamsplitter_symplectic(eta);
            assert!(s.matmul(&omega).matmul(&s.transpose()).max_abs_diff(&omega) < 1e-15);
        }
    }

    #[test]
    fn unit_transmissivity_does_not_interact() {
        let (be, f) = extended_attenuator_moments(2.0, 1.0, 0.4).unwrap();
        let expected = GaussianState::thermal(2.0).unwrap().product(&GaussianState::thermal(0.4).unwrap());
        assert!(be.max_abs_diff(&expected) < 1e-15);
        assert!(f.max_abs_diff(&GaussianState::thermal(0.4).unwrap()) < 1e-15);
    }

    #[test]
    fn pure_environment_keeps_ancilla_in_vacuum() {
        let (be, _) = extended_attenuator_moments(1.5, 0.6, 0.0).unwrap();
        let ancilla = be.marginal(&[1]).unwrap();
        assert_eq!(ancilla.cov(), &RealMatrix::identity(2));
        for i in 0..2 {
            for j in 2..4 {
                assert_eq!(be.cov()[(i, j)], 0.0);
            }
        }
    }

    #[test]
    fn all_vacuum_input() {
        let (be, f) = extended_attenuator_moments(0.0, 0.5, 0.0).unwrap();
        assert!(be.cov().max_abs_diff(&RealMatrix::identity(4)) < 1e-15);
        assert!(f.cov().max_abs_diff(&RealMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn dilation_output_is_pure_for_vacuum_input() {
        let out = attenuator_dilation(0.0, 0.37, 1.3).unwrap();
        let nu = symplectic_eigenvalues(out.cov()).unwrap();
        assert!(nu.iter().all(|v| (v - 1.0).abs() < 1e-9));
    }

    #[test]
    fn pure_environment_reduction() {
        for &(n, eta) in &[(0.5, 0.3), (3.0, 0.8), (10.0, 0.55)] {
            let expected = g(eta * n) - g((1.0 - eta) * n);
            assert!((coherent_info_extended_gaussian(n, eta, 0.0).unwrap() - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(attenuator_dilation(-1.0, 0.5, 0.1).is_err());
        assert!(attenuator_dilation(1.0, 1.5, 0.1).is_err());
        assert!(attenuator_dilation(1.0, 0.5, -0.1).is_err());
    }
}
