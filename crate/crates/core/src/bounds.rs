//! Capacity bounds for the qubit and Gaussian thermal attenuators, and the
//! per-channel report that picks the tightest upper bound.
//!
//! Values are in bits per channel use. Gaussian bounds diverge at
//! `eta = 1` and are reported as `f64::INFINITY` there.

use std::fmt;
use std::str::FromStr;

use crate::error::{argument, Result};
use crate::gaussian::{attenuator_is_entanglement_breaking, g};
use crate::optimize::{maximize_scalar, DEFAULT_TOL};
use crate::qubit::{coherent_information_qubit, QubitAttenuatorParams, QubitState, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    Qubit,
    Gaussian,
}

impl ChannelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChannelKind::Qubit => "qubit",
            ChannelKind::Gaussian => "gaussian",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChannelKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qubit" => Ok(ChannelKind::Qubit),
            "gaussian" => Ok(ChannelKind::Gaussian),
            other => Err(argument(format!("unknown channel kind '{other}'"))),
        }
    }
}

fn qubit_single_letter(eta: f64, noise: f64, variant: Variant) -> Result<f64> {
    let params = QubitAttenuatorParams::new(eta, noise)?;
    if eta <= 0.5 {
        return Ok(0.0);
    }
    let objective = |p: f64| {
        QubitState::diagonal(p).and_then(|s| coherent_information_qubit(&s, &params, variant)).unwrap_or(f64::NAN)
    };
    Ok(maximize_scalar(objective, 0.0, 1.0, DEFAULT_TOL)?.value.max(0.0))
}

/// Single-letter coherent information of the qubit attenuator over
/// diagonal inputs; zero for `eta <= 1/2`.
pub fn qubit_lower(eta: f64, noise: f64) -> Result<f64> {
    qubit_single_letter(eta, noise, Variant::Direct)
}

/// Capacity of the (degradable) extended qubit channel; zero for
/// `eta <= 1/2`.
pub fn qubit_upper_extended(eta: f64, noise: f64) -> Result<f64> {
    qubit_single_letter(eta, noise, Variant::Extended)
}

/// Best point of a brute-force grid over `(p, |gamma|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitAudit {
    pub value: f64,
    pub p: f64,
    pub gamma_abs: f64,
}

/// Slow check of the diagonal-input restriction used by [`qubit_lower`]:
/// maximizes the direct coherent information over `steps + 1` populations
/// and `steps + 1` coherence magnitudes. Only `|gamma|` matters because the
/// channel commutes with phase rotations.
pub fn qubit_lower_audit(eta: f64, noise: f64, steps: usize) -> Result<QubitAudit> {
    let params = QubitAttenuatorParams::new(eta, noise)?;
    if steps == 0 {
        return Err(argument("audit needs at least one grid step"));
    }
    let mut best = QubitAudit { value: 0.0, p: 0.0, gamma_abs: 0.0 };
    for i in 0..=steps {
        let p = i as f64 / steps as f64;
        let max_gamma = (p * (1.0 - p)).sqrt();
        for j in 0..=steps {
            let gamma_abs = max_gamma * j as f64 / steps as f64;
            let s = QubitState::new(p, gamma_abs.into())?;
            let value = coherent_information_qubit(&s, &params, Variant::Direct)?;
            if value > best.value {
                best = QubitAudit { value, p, gamma_abs };
            }
        }
    }
    Ok(best)
}

fn check_gaussian(eta: f64, noise: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(argument(format!("eta must lie in [0, 1], got {eta}")));
    }
    if !(noise >= 0.0) || !noise.is_finite() {
        return Err(argument(format!("noise must be finite and >= 0, got {noise}")));
    }
    Ok(())
}

fn log_ratio(eta: f64) -> f64 {
    (eta / (1.0 - eta)).log2()
}

fn clamp(x: f64) -> f64 {
    x.max(0.0)
}

/// `max{0, log2(eta / (1 - eta)) - g(N)}`, the Gaussian-input single-letter value.
pub fn gauss_lower(eta: f64, noise: f64) -> Result<f64> {
    check_gaussian(eta, noise)?;
    Ok(clamp(log_ratio(eta) - g(noise)))
}

/// `max{0, log2(eta / (1 - eta)) + g(N)}`, the extended-channel capacity.
pub fn gauss_upper_extended(eta: f64, noise: f64) -> Result<f64> {
    check_gaussian(eta, noise)?;
    Ok(clamp(log_ratio(eta) + g(noise)))
}

/// Bottleneck bound from the amplifier-then-attenuator decomposition,
/// `max{0, log2[(eta - N(1 - eta)) / ((1 + N)(1 - eta))]}`; zero for
/// entanglement-breaking parameters.
pub fn gauss_upper_twist(eta: f64, noise: f64) -> Result<f64> {
    check_gaussian(eta, noise)?;
    if attenuator_is_entanglement_breaking(eta, noise) {
        return Ok(0.0);
    }
    Ok(clamp(((eta - noise * (1.0 - eta)) / ((1.0 + noise) * (1.0 - eta))).log2()))
}

/// `max{0, -log2[(1 - eta) eta^N] - g(N)}`.
pub fn gauss_upper_plob(eta: f64, noise: f64) -> Result<f64> {
    check_gaussian(eta, noise)?;
    Ok(clamp(-((1.0 - eta) * eta.powf(noise)).log2() - g(noise)))
}

/// `max{0, log2(eta / (1 - eta)) - log2(N + 1)}`.
pub fn gauss_upper_swat(eta: f64, noise: f64) -> Result<f64> {
    check_gaussian(eta, noise)?;
    Ok(clamp(log_ratio(eta) - (noise + 1.0).log2()))
}

/// Upper bounds by name. Only `extended` exists for the qubit channel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Uppers {
    pub extended: f64,
    pub twist: Option<f64>,
    pub plob: Option<f64>,
    pub swat: Option<f64>,
}

impl Uppers {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        [("extended", Some(self.extended)), ("twist", self.twist), ("plob", self.plob), ("swat", self.swat)]
            .into_iter()
            .filter_map(|(name, v)| v.map(|v| (name, v)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundsReport {
    pub kind: ChannelKind,
    pub eta: f64,
    pub noise: f64,
    pub lower: f64,
    pub uppers: Uppers,
    pub best_upper: f64,
    pub gap: f64,
}

impl BoundsReport {
    fn assemble(kind: ChannelKind, eta: f64, noise: f64, lower: f64, uppers: Uppers) -> Self {
        let best_upper = uppers.iter().map(|(_, v)| v).filter(|v| v.is_finite()).reduce(f64::min);
        let best_upper = best_upper.unwrap_or(f64::INFINITY);
        // identical infinite bounds pin the capacity; no gap
        let gap = if lower.is_infinite() && best_upper.is_infinite() { 0.0 } else { (best_upper - lower).max(0.0) };
        Self { kind, eta, noise, lower, uppers, best_upper, gap }
    }
}

/// All bounds for one channel. Gaussian channels that break entanglement
/// have zero capacity, and every entry is reported as zero.
pub fn report(kind: ChannelKind, eta: f64, noise: f64) -> Result<BoundsReport> {
    match kind {
        ChannelKind::Qubit => {
            let lower = qubit_lower(eta, noise)?;
            let extended = qubit_upper_extended(eta, noise)?;
            let uppers = Uppers { extended, twist: None, plob: None, swat: None };
            Ok(BoundsReport::assemble(kind, eta, noise, lower, uppers))
        }
        ChannelKind::Gaussian => {
            check_gaussian(eta, noise)?;
            let (lower, uppers) = if attenuator_is_entanglement_breaking(eta, noise) {
                (0.0, Uppers { extended: 0.0, twist: Some(0.0), plob: Some(0.0), swat: Some(0.0) })
            } else {
                (
                    gauss_lower(eta, noise)?,
                    Uppers {
                        extended: gauss_upper_extended(eta, noise)?,
                        twist: Some(gauss_upper_twist(eta, noise)?),
                        plob: Some(gauss_upper_plob(eta, noise)?),
                        swat: Some(gauss_upper_swat(eta, noise)?),
                    },
                )
            };
            Ok(BoundsReport::assemble(kind, eta, noise, lower, uppers))
        }
    }
}
