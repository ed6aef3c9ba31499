//! Qubit thermal attenuator (generalized amplitude damping).
//!
//! Conventions used throughout this module:
//!
//! * single-qubit basis `{|0>, |1>}` = ground, excited;
//! * a qubit state is `[[1 - p, gamma], [gamma*, p]]`;
//! * multi-qubit basis `{|00>, |01>, |10>, |11>}` with the first listed
//!   factor as the most significant index;
//! * the dilation acts on factors `A, E, E'` (in that order), producing
//!   `B, F, E'`. `E'` purifies the thermal environment `E` and never
//!   interacts.

pub mod explicit;

use num_complex::Complex64;

use crate::error::{argument, Result};
use crate::linalg::{kron, partial_trace, ComplexMatrix, DensityMatrix};

/// Factor positions in the dilated `B, F, E'` state.
pub const FACTOR_B: usize = 0;
pub const FACTOR_F: usize = 1;
pub const FACTOR_E_PRIME: usize = 2;

const STATE_TOL: f64 = 1e-12;

/// Transmissivity `eta` and thermal population `noise` of the qubit attenuator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitAttenuatorParams {
    eta: f64,
    noise: f64,
}

impl QubitAttenuatorParams {
    pub fn new(eta: f64, noise: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eta) {
            return Err(argument(format!("eta must lie in [0, 1], got {eta}")));
        }
        check_noise(noise)?;
        Ok(Self { eta, noise })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn noise(&self) -> f64 {
        self.noise
    }
}

fn check_noise(noise: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&noise) {
        return Err(argument(format!("qubit noise must lie in [0, 1/2], got {noise}")));
    }
    Ok(())
}

/// Excited population `p` and coherence `gamma` of a qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitState {
    p: f64,
    gamma: Complex64,
}

impl QubitState {
    pub fn new(p: f64, gamma: Complex64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(argument(format!("population must lie in [0, 1], got {p}")));
        }
        if !(gamma.norm_sqr() <= p * (1.0 - p) + STATE_TOL) {
            return Err(argument(format!("|gamma|^2 = {} exceeds p(1-p) = {}", gamma.norm_sqr(), p * (1.0 - p))));
        }
        Ok(Self { p, gamma })
    }

    pub fn diagonal(p: f64) -> Result<Self> {
        Self::new(p, Complex64::new(0.0, 0.0))
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn to_density(&self) -> DensityMatrix {
        let m = ComplexMatrix::new(
            2,
            2,
            vec![Complex64::new(1.0 - self.p, 0.0), self.gamma, self.gamma.conj(), Complex64::new(self.p, 0.0)],
        )
        .expect("2x2");
        DensityMatrix::from_parts_unchecked(m, vec![2])
    }

    pub fn from_density(rho: &DensityMatrix) -> Result<Self> {
        if rho.dim() != 2 {
            return Err(argument(format!("expected a qubit, got dimension {}", rho.dim())));
        }
        let m = rho.matrix();
        Self::new(m[(1, 1)].re.clamp(0.0, 1.0), m[(0, 1)])
    }
}

/// `p -> eta p + (1 - eta) N`, `gamma -> sqrt(eta) gamma`.
pub fn apply_attenuator(s: &QubitState, c: &QubitAttenuatorParams) -> QubitState {
    QubitState { p: c.eta * s.p + (1.0 - c.eta) * c.noise, gamma: s.gamma * c.eta.sqrt() }
}

/// `gamma -> mu gamma` with the population untouched.
pub fn phase_damping(s: &QubitState, mu: f64) -> Result<QubitState> {
    if !(0.0..=1.0).contains(&mu) {
        return Err(argument(format!("phase damping parameter must lie in [0, 1], got {mu}")));
    }
    Ok(QubitState { p: s.p, gamma: s.gamma * mu })
}

/// Thermal environment `diag(1 - N, N)`.
pub fn thermal_qubit(noise: f64) -> Result<DensityMatrix> {
    check_noise(noise)?;
    Ok(DensityMatrix::from_parts_unchecked(ComplexMatrix::diag(&[1.0 - noise, noise]), vec![2]))
}

/// Excitation-preserving rotation on span{|01>, |10>}.
pub fn beamsplitter_unitary(eta: f64) -> ComplexMatrix {
    beamsplitter_with_sign(eta, 1.0)
}

/// `sign` multiplies the `sqrt(1 - eta)` entries; `+1` is the standard convention.
pub(crate) fn beamsplitter_with_sign(eta: f64, sign: f64) -> ComplexMatrix {
    let (t, r) = (eta.sqrt(), sign * (1.0 - eta).sqrt());
    #[rustfmt::skip]
    let entries = [
        1.0, 0.0, 0.0, 0.0,
        0.0, t,   r,   0.0,
        0.0, -r,  t,   0.0,
        0.0, 0.0, 0.0, 1.0,
    ];
    ComplexMatrix::from_real(4, 4, &entries).expect("4x4")
}

/// `sqrt(1 - N)|00> + sqrt(N)|11>` on `E, E'`.
pub fn purified_environment(noise: f64) -> Result<DensityMatrix> {
    check_noise(noise)?;
    let zero = Complex64::new(0.0, 0.0);
    let v = [Complex64::new((1.0 - noise).sqrt(), 0.0), zero, zero, Complex64::new(noise.sqrt(), 0.0)];
    Ok(DensityMatrix::from_parts_unchecked(ComplexMatrix::outer(&v), vec![2, 2]))
}

/// Input state on `A, E, E'` before the interaction.
pub fn joint_input(s: &QubitState, noise: f64) -> Result<DensityMatrix> {
    Ok(s.to_density().tensor(&purified_environment(noise)?))
}

/// Global output on `B, F, E'`.
pub fn dilated_state(s: &QubitState, c: &QubitAttenuatorParams) -> DensityMatrix {
    dilated_state_with_sign(s, c, 1.0)
}

pub(crate) fn dilated_state_with_sign(s: &QubitState, c: &QubitAttenuatorParams, sign: f64) -> DensityMatrix {
    let input = joint_input(s, c.noise).expect("noise validated by params");
    let u = kron(&beamsplitter_with_sign(c.eta, sign), &ComplexMatrix::identity(2));
    input.evolve(&u).expect("8x8")
}

fn marginal(s: &QubitState, c: &QubitAttenuatorParams, keep: &[usize]) -> DensityMatrix {
    partial_trace(&dilated_state(s, c), keep).expect("valid factors")
}

/// Channel output on `B`, obtained from the dilation.
pub fn channel_output(s: &QubitState, c: &QubitAttenuatorParams) -> DensityMatrix {
    marginal(s, c, &[FACTOR_B])
}

/// Output of the extended channel on `B, E'`.
pub fn extended_output(s: &QubitState, c: &QubitAttenuatorParams) -> DensityMatrix {
    marginal(s, c, &[FACTOR_B, FACTOR_E_PRIME])
}

/// Output of the weakly complementary channel on `F`. This is also the
/// complementary output of the extended channel.
pub fn weak_complementary_output(s: &QubitState, c: &QubitAttenuatorParams) -> DensityMatrix {
    marginal(s, c, &[FACTOR_F])
}

/// Output of the complementary channel on `F, E'`.
pub fn complementary_output(s: &QubitState, c: &QubitAttenuatorParams) -> DensityMatrix {
    marginal(s, c, &[FACTOR_F, FACTOR_E_PRIME])
}

/// Which channel the coherent information refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// The attenuator itself: `S(B) - S(F E')`.
    Direct,
    /// The extended channel: `S(B E') - S(F)`.
    Extended,
}

/// Coherent information in bits, all marginals taken from one dilation.
pub fn coherent_information_qubit(s: &QubitState, c: &QubitAttenuatorParams, variant: Variant) -> Result<f64> {
    let global = dilated_state(s, c);
    let (out, env): (&[usize], &[usize]) = match variant {
        Variant::Direct => (&[FACTOR_B], &[FACTOR_F, FACTOR_E_PRIME]),
        Variant::Extended => (&[FACTOR_B, FACTOR_E_PRIME], &[FACTOR_F]),
    };
    Ok(partial_trace(&global, out)?.entropy()? - partial_trace(&global, env)?.entropy()?)
}

/// Coherent information of the weakly complementary channel `S(F) - S(B E')`.
pub fn coherent_information_weak_complementary(s: &QubitState, c: &QubitAttenuatorParams) -> Result<f64> {
    let global = dilated_state(s, c);
    Ok(partial_trace(&global, &[FACTOR_F])?.entropy()?
        - partial_trace(&global, &[FACTOR_B, FACTOR_E_PRIME])?.entropy()?)
}
