use super::GaussianState;
use crate::error::{argument, Error, Result};
use crate::linalg::RealMatrix;

/// Slack allowed on the `y >= |1 - tau|` constraint for roundoff.
const NOISE_SLACK: f64 = 1e-12;

/// Phase-insensitive single-mode channel `m -> sqrt(tau) m`,
/// `V -> tau V + y I`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseInsensitiveParams {
    tau: f64,
    y: f64,
}

impl PhaseInsensitiveParams {
    pub fn new(tau: f64, y: f64) -> Result<Self> {
        if !(tau >= 0.0) || !tau.is_finite() {
            return Err(argument(format!("tau must be finite and >= 0, got {tau}")));
        }
        if !(y >= (1.0 - tau).abs() - NOISE_SLACK) || !y.is_finite() {
            return Err(argument(format!(
                "noise y = {y} is below the quantum limit |1 - tau| = {}",
                (1.0 - tau).abs()
            )));
        }
        Ok(Self { tau, y })
    }

    /// Thermal attenuator: `tau = eta`, `y = (1 - eta)(2N + 1)`.
    pub fn attenuator(eta: f64, noise: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eta) {
            return Err(argument(format!("eta must lie in [0, 1], got {eta}")));
        }
        check_noise(noise)?;
        Self::new(eta, (1.0 - eta) * (2.0 * noise + 1.0))
    }

    /// Thermal amplifier: `tau = kappa`, `y = (kappa - 1)(2N + 1)`.
    pub fn amplifier(kappa: f64, noise: f64) -> Result<Self> {
        if !(kappa >= 1.0) || !kappa.is_finite() {
            return Err(argument(format!("gain must be finite and >= 1, got {kappa}")));
        }
        check_noise(noise)?;
        Self::new(kappa, (kappa - 1.0) * (2.0 * noise + 1.0))
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

fn check_noise(noise: f64) -> Result<()> {
    if !(noise >= 0.0) || !noise.is_finite() {
        return Err(argument(format!("noise must be finite and >= 0, got {noise}")));
    }
    Ok(())
}

pub fn apply_phase_insensitive(s: &GaussianState, p: &PhaseInsensitiveParams) -> Result<GaussianState> {
    if s.modes() != 1 {
        return Err(argument(format!("phase-insensitive channels act on one mode, state has {}", s.modes())));
    }
    let scale = p.tau.sqrt();
    let mean = s.mean().iter().map(|m| m * scale).collect();
    let cov = s.cov().scale(p.tau).add(&RealMatrix::scaled_identity(2, p.y));
    Ok(GaussianState::from_parts_unchecked(mean, cov))
}

pub fn apply_attenuator_gaussian(s: &GaussianState, eta: f64, noise: f64) -> Result<GaussianState> {
    apply_phase_insensitive(s, &PhaseInsensitiveParams::attenuator(eta, noise)?)
}

pub fn apply_amplifier_gaussian(s: &GaussianState, kappa: f64, noise: f64) -> Result<GaussianState> {
    apply_phase_insensitive(s, &PhaseInsensitiveParams::amplifier(kappa, noise)?)
}

/// `y >= 1 + tau`; the boundary counts as entanglement-breaking.
pub fn is_entanglement_breaking(p: &PhaseInsensitiveParams) -> bool {
    p.y >= 1.0 + p.tau
}

/// Attenuator form of the criterion, `N >= eta / (1 - eta)`, evaluated
/// without dividing so that `eta = 1` is handled.
pub fn attenuator_is_entanglement_breaking(eta: f64, noise: f64) -> bool {
    noise * (1.0 - eta) >= eta
}

/// Quantum-limited amplifier gain `kappa_prime` followed by quantum-limited
/// attenuation `eta_prime`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwistedFactors {
    eta_prime: f64,
    kappa_prime: f64,
}

impl TwistedFactors {
    pub fn new(eta_prime: f64, kappa_prime: f64) -> Result<Self> {
        if !(eta_prime > 0.0 && eta_prime <= 1.0) {
            return Err(argument(format!("eta' must lie in (0, 1], got {eta_prime}")));
        }
        if !(kappa_prime >= 1.0) || !kappa_prime.is_finite() {
            return Err(argument(format!("kappa' must be finite and >= 1, got {kappa_prime}")));
        }
        Ok(Self { eta_prime, kappa_prime })
    }

    pub fn eta_prime(&self) -> f64 {
        self.eta_prime
    }

    pub fn kappa_prime(&self) -> f64 {
        self.kappa_prime
    }

    /// Amplifier then attenuator, both at zero temperature.
    pub fn apply(&self, s: &GaussianState) -> Result<GaussianState> {
        let amplified = apply_amplifier_gaussian(s, self.kappa_prime, 0.0)?;
        apply_attenuator_gaussian(&amplified, self.eta_prime, 0.0)
    }
}

/// Factor a non-entanglement-breaking channel as a quantum-limited
/// amplifier followed by a quantum-limited attenuator, with
/// `eta' = (1 + tau - y) / 2` and `kappa' = tau / eta'`.
pub fn twisted_decompose(p: &PhaseInsensitiveParams) -> Result<TwistedFactors> {
    if is_entanglement_breaking(p) {
        return Err(Error::Domain(format!(
            "channel with tau = {}, y = {} is entanglement-breaking; no twisted decomposition",
            p.tau, p.y
        )));
    }
    // y >= |1 - tau| gives eta' <= 1 and kappa' >= 1 up to the roundoff slack
    let eta_prime = (0.5 * (1.0 + p.tau - p.y)).min(1.0);
    let kappa_prime = (p.tau / eta_prime).max(1.0);
    TwistedFactors::new(eta_prime, kappa_prime)
}
