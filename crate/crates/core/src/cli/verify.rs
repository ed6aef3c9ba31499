//! Seeded property suites behind `tacap verify`.
//!
//! Every check tracks its worst deviation and the first set of parameters
//! that violated its tolerance.

use std::fmt;
use std::io::{self, Write};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    gauss_lower, gauss_upper_extended, gauss_upper_plob, gauss_upper_swat, gauss_upper_twist, qubit_lower,
    qubit_upper_extended, report, ChannelKind,
};
use crate::gaussian::{
    apply_attenuator_gaussian, apply_phase_insensitive, attenuator_dilation, attenuator_is_entanglement_breaking,
    coherent_info_attenuator_gaussian, coherent_info_extended_gaussian, g_function, gaussian_entropy,
    is_entanglement_breaking, symplectic_eigenvalues, twisted_decompose, two_mode_squeezed_cov, GaussianState,
    PhaseInsensitiveParams, MODE_B, MODE_E_PRIME, MODE_F,
};
use crate::linalg::{
    hermitian_eigenvalues, kron, partial_trace, symmetric_eigen, ComplexMatrix, DensityMatrix, RealMatrix,
};
use crate::qubit::{
    apply_attenuator, beamsplitter_unitary, channel_output, coherent_information_qubit,
    coherent_information_weak_complementary, dilated_state, explicit, extended_output, joint_input, phase_damping,
    weak_complementary_output, QubitAttenuatorParams, QubitState, Variant, FACTOR_B, FACTOR_E_PRIME, FACTOR_F,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Linalg,
    Qubit,
    Gaussian,
    Bounds,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Linalg, Suite::Qubit, Suite::Gaussian, Suite::Bounds],
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Linalg => "linalg",
            Suite::Qubit => "qubit",
            Suite::Gaussian => "gaussian",
            Suite::Bounds => "bounds",
        }
    }
}

/// Outcome of one property check.
#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub tol: f64,
    pub worst: f64,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl Check {
    fn new(suite: Suite, name: &'static str, tol: f64) -> Self {
        Self { suite: suite.name(), name, tol, worst: 0.0, cases: 0, counterexample: None }
    }

    /// Record one deviation. NaN counts as a failure.
    fn record(&mut self, deviation: f64, context: impl FnOnce() -> String) {
        self.cases += 1;
        if deviation.is_nan() || deviation > self.worst {
            self.worst = if deviation.is_nan() { f64::NAN } else { deviation };
        }
        if !(deviation <= self.tol) && self.counterexample.is_none() {
            self.counterexample = Some(format!("{} (deviation {deviation:e})", context()));
        }
    }

    /// Record a boolean condition as deviation 0 or 1 against a tolerance of 0.
    fn require(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.record(if ok { 0.0 } else { 1.0 }, context);
    }

    /// Record an evaluation error as a failure.
    fn guard<T>(&mut self, r: crate::Result<T>, context: impl Fn() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                let ctx = context();
                self.record(f64::INFINITY, || format!("{ctx}: {e}"));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}/{} cases={} worst={:.3e} tol={:.0e}",
            self.suite, self.name, self.cases, self.worst, self.tol
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n     first counterexample: {c}")?;
        }
        Ok(())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_qubit_state(rng: &mut impl Rng) -> QubitState {
    let p: f64 = rng.gen();
    let r = rng.gen::<f64>() * (p * (1.0 - p)).sqrt();
    let phase = rng.gen::<f64>() * std::f64::consts::TAU;
    QubitState::new(p, Complex64::from_polar(r, phase)).expect("coherence within bound")
}

fn pure_qubit_state(rng: &mut impl Rng) -> QubitState {
    let p: f64 = rng.gen();
    let phase = rng.gen::<f64>() * std::f64::consts::TAU;
    QubitState::new(p, Complex64::from_polar((p * (1.0 - p)).sqrt(), phase)).expect("pure state")
}

fn random_qubit_params(rng: &mut impl Rng, eta_min: f64, eta_max: f64) -> QubitAttenuatorParams {
    let eta = eta_min + (eta_max - eta_min) * rng.gen::<f64>();
    QubitAttenuatorParams::new(eta, 0.5 * rng.gen::<f64>()).expect("params in range")
}

fn random_density(rng: &mut impl Rng, dims: Vec<usize>) -> DensityMatrix {
    let d: usize = dims.iter().product();
    let a = ComplexMatrix::from_fn(d, d, |_, _| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
    let m = a.matmul(&a.adjoint());
    let tr = m.trace().re;
    let m = m.scale(1.0 / tr);
    // exact Hermitian symmetrization before validation
    let m = ComplexMatrix::from_fn(d, d, |i, j| 0.5 * (m[(i, j)] + m[(j, i)].conj()));
    DensityMatrix::new(m, dims).expect("Gram matrix is a state")
}

fn random_unitary_2(rng: &mut impl Rng) -> ComplexMatrix {
    let tau = std::f64::consts::TAU;
    let (theta, a, b): (f64, f64, f64) = (rng.gen::<f64>() * tau, rng.gen::<f64>() * tau, rng.gen::<f64>() * tau);
    let (c, s) = (theta.cos(), theta.sin());
    ComplexMatrix::new(
        2,
        2,
        vec![
            Complex64::from_polar(c, a),
            Complex64::from_polar(s, b),
            -Complex64::from_polar(s, -b),
            Complex64::from_polar(c, -a),
        ],
    )
    .expect("2x2")
}

fn random_gaussian_state(rng: &mut impl Rng) -> GaussianState {
    let n = 5.0 * rng.gen::<f64>();
    let r = rng.gen::<f64>();
    let phi = rng.gen::<f64>() * std::f64::consts::TAU;
    let (c, s) = (phi.cos(), phi.sin());
    let rot = RealMatrix::new(2, 2, vec![c, -s, s, c]).expect("2x2");
    let sq = RealMatrix::new(2, 2, vec![(-r).exp(), 0.0, 0.0, r.exp()]).expect("2x2");
    let sym = rot.matmul(&sq);
    let cov = sym.matmul(&RealMatrix::scaled_identity(2, 2.0 * n + 1.0)).matmul(&sym.transpose());
    let cov = RealMatrix::from_fn(2, 2, |i, j| 0.5 * (cov[(i, j)] + cov[(j, i)]));
    let mean = vec![4.0 * rng.gen::<f64>() - 2.0, 4.0 * rng.gen::<f64>() - 2.0];
    GaussianState::new(mean, cov).expect("squeezed thermal state")
}

fn rel_diff(a: &GaussianState, b: &GaussianState) -> f64 {
    a.max_abs_diff(b) / a.cov().max_abs().max(1.0)
}

fn linalg_checks() -> Vec<Check> {
    let suite = Suite::Linalg;
    let mut rng = rng(11);

    let mut composition = Check::new(suite, "partial-trace-composition", 1e-12);
    let mut invariance = Check::new(suite, "entropy-unitary-invariance", 1e-12);
    let mut spectrum_sum = Check::new(suite, "eigenvalue-sum-equals-trace", 1e-12);
    for k in 0..200 {
        let rho = random_density(&mut rng, vec![2, 2, 2]);
        let joint = partial_trace(&rho, &[0]).unwrap();
        let seq = partial_trace(&partial_trace(&rho, &[0, 1]).unwrap(), &[0]).unwrap();
        composition.record(joint.matrix().max_abs_diff(seq.matrix()), || format!("sample {k}"));

        let local = kron(&kron(&random_unitary_2(&mut rng), &random_unitary_2(&mut rng)), &random_unitary_2(&mut rng));
        let eta: f64 = rng.gen();
        let u = kron(&beamsplitter_unitary(eta), &ComplexMatrix::identity(2)).matmul(&local);
        match (rho.entropy(), rho.evolve(&u).and_then(|r| r.entropy())) {
            (Ok(a), Ok(b)) => invariance.record((a - b).abs(), || format!("sample {k}, beam splitter eta {eta}")),
            _ => invariance.record(f64::NAN, || format!("sample {k}")),
        }

        let values = rho.eigenvalues();
        spectrum_sum.record((values.iter().sum::<f64>() - 1.0).abs(), || format!("sample {k}"));
    }

    let mut two_by_two = Check::new(suite, "hermitian-2x2-closed-form", 1e-12);
    let mut reconstruction = Check::new(suite, "symmetric-eigen-reconstruction", 1e-12);
    for k in 0..500 {
        let (a, d): (f64, f64) = (rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0);
        let b = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        let m = ComplexMatrix::new(2, 2, vec![a.into(), b, b.conj(), d.into()]).unwrap();
        let disc = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        let expected = [0.5 * (a + d) + disc, 0.5 * (a + d) - disc];
        if let Some(got) = two_by_two.guard(hermitian_eigenvalues(&m), || format!("a={a} b={b} d={d}")) {
            let dev = (got[0] - expected[0]).abs().max((got[1] - expected[1]).abs());
            two_by_two.record(dev, || format!("a={a} b={b} d={d}"));
        }

        let n = 2 + k % 5;
        let r = RealMatrix::from_fn(n, n, |_, _| rng.gen::<f64>() - 0.5);
        let s = r.add(&r.transpose());
        if let Some(e) = reconstruction.guard(symmetric_eigen(&s), || format!("size {n} sample {k}")) {
            let lam = RealMatrix::from_fn(n, n, |i, j| if i == j { e.values[i] } else { 0.0 });
            let back = e.vectors.matmul(&lam).matmul(&e.vectors.transpose());
            reconstruction.record(back.max_abs_diff(&s), || format!("size {n} sample {k}"));
        }
    }
    vec![composition, invariance, spectrum_sum, two_by_two, reconstruction]
}

fn qubit_checks() -> Vec<Check> {
    let suite = Suite::Qubit;
    let mut rng = rng(22);

    let mut closed_form = Check::new(suite, "closed-form-matrix-equality", 1e-12);
    let mut marginal = Check::new(suite, "dilation-reproduces-channel", 1e-12);
    let mut sign = Check::new(suite, "beam-splitter-sign-spectra", 1e-12);
    for k in 0..1000 {
        let s = random_qubit_state(&mut rng);
        let c = random_qubit_params(&mut rng, 0.0, 1.0);
        let ctx = || format!("p={} gamma={} eta={} N={}", s.p(), s.gamma(), c.eta(), c.noise());
        let input = joint_input(&s, c.noise());
        if let Some(input) = closed_form.guard(input, ctx) {
            closed_form.record(input.matrix().max_abs_diff(&explicit::joint_input(&s, c.noise())), ctx);
        }
        closed_form.record(extended_output(&s, &c).matrix().max_abs_diff(&explicit::extended_output(&s, &c)), ctx);
        closed_form.record(
            weak_complementary_output(&s, &c).matrix().max_abs_diff(&explicit::weak_complementary_output(&s, &c)),
            ctx,
        );
        marginal
            .record(channel_output(&s, &c).matrix().max_abs_diff(apply_attenuator(&s, &c).to_density().matrix()), ctx);

        if k % 4 == 0 {
            let flipped = crate::qubit::dilated_state_with_sign(&s, &c, -1.0);
            let plain = dilated_state(&s, &c);
            for keep in [&[FACTOR_B][..], &[FACTOR_F], &[FACTOR_B, FACTOR_E_PRIME], &[FACTOR_F, FACTOR_E_PRIME]] {
                let a = partial_trace(&plain, keep).unwrap().eigenvalues();
                let b = partial_trace(&flipped, keep).unwrap().eigenvalues();
                let dev = a.iter().zip(&b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
                sign.record(dev, || format!("{} keep {keep:?}", ctx()));
            }
        }
    }

    let mut degrade = Check::new(suite, "weak-degradability", 1e-12);
    for _ in 0..500 {
        let s = random_qubit_state(&mut rng);
        let c = random_qubit_params(&mut rng, 0.5, 1.0);
        let ctx = || format!("p={} gamma={} eta={} N={}", s.p(), s.gamma(), c.eta(), c.noise());
        let inner = QubitAttenuatorParams::new((1.0 - c.eta()) / c.eta(), c.noise()).unwrap();
        let b = apply_attenuator(&s, &c);
        let degraded = phase_damping(&apply_attenuator(&b, &inner), 1.0 - 2.0 * c.noise()).unwrap();
        degrade.record(degraded.to_density().matrix().max_abs_diff(weak_complementary_output(&s, &c).matrix()), ctx);
    }

    let mut purity = Check::new(suite, "pure-input-entropy-pairs", 1e-10);
    for _ in 0..300 {
        let s = pure_qubit_state(&mut rng);
        let c = random_qubit_params(&mut rng, 0.0, 1.0);
        let ctx = || format!("p={} gamma={} eta={} N={}", s.p(), s.gamma(), c.eta(), c.noise());
        let global = dilated_state(&s, &c);
        let ent = |keep: &[usize]| partial_trace(&global, keep).and_then(|r| r.entropy());
        if let (Ok(b), Ok(fe), Ok(be), Ok(f)) =
            (ent(&[FACTOR_B]), ent(&[FACTOR_F, FACTOR_E_PRIME]), ent(&[FACTOR_B, FACTOR_E_PRIME]), ent(&[FACTOR_F]))
        {
            purity.record((b - fe).abs().max((be - f).abs()), ctx);
        } else {
            purity.record(f64::NAN, ctx);
        }
    }

    let mut zero_noise = Check::new(suite, "zero-noise-variants-agree", 1e-10);
    let mut weak_sign = Check::new(suite, "extended-equals-minus-weak", 1e-12);
    let mut antidegradable = Check::new(suite, "no-coherent-information-below-half", 1e-12);
    for _ in 0..300 {
        let s = random_qubit_state(&mut rng);
        let eta: f64 = rng.gen();
        let c0 = QubitAttenuatorParams::new(eta, 0.0).unwrap();
        let ctx = || format!("p={} gamma={} eta={eta}", s.p(), s.gamma());
        let d = coherent_information_qubit(&s, &c0, Variant::Direct);
        let e = coherent_information_qubit(&s, &c0, Variant::Extended);
        if let (Ok(d), Ok(e)) = (d, e) {
            zero_noise.record((d - e).abs(), ctx);
        } else {
            zero_noise.record(f64::NAN, ctx);
        }

        let c = random_qubit_params(&mut rng, 0.0, 1.0);
        let ctx = || format!("p={} gamma={} eta={} N={}", s.p(), s.gamma(), c.eta(), c.noise());
        let e = coherent_information_qubit(&s, &c, Variant::Extended);
        let w = coherent_information_weak_complementary(&s, &c);
        if let (Ok(e), Ok(w)) = (e, w) {
            weak_sign.record((e + w).abs(), ctx);
        } else {
            weak_sign.record(f64::NAN, ctx);
        }

        let low = random_qubit_params(&mut rng, 0.0, 0.5);
        let ctx = || format!("p={} gamma={} eta={} N={}", s.p(), s.gamma(), low.eta(), low.noise());
        match coherent_information_qubit(&s, &low, Variant::Direct) {
            Ok(j) => antidegradable.record(j.max(0.0), ctx),
            Err(_) => antidegradable.record(f64::NAN, ctx),
        }
    }

    let mut concavity = Check::new(suite, "extended-concave-in-population", 1e-10);
    for &(eta, noise) in &[(0.6, 0.0), (0.7, 0.1), (0.8, 0.25), (0.9, 0.4), (0.95, 0.5)] {
        let c = QubitAttenuatorParams::new(eta, noise).unwrap();
        let j = |p: f64| {
            coherent_information_qubit(&QubitState::diagonal(p).unwrap(), &c, Variant::Extended).unwrap_or(f64::NAN)
        };
        let h = 1.0 / 64.0;
        for i in 1..64 {
            let p = i as f64 * h;
            let second = j(p - h) - 2.0 * j(p) + j(p + h);
            concavity.record(second.max(0.0), || format!("eta={eta} N={noise} p={p}"));
        }
    }

    vec![closed_form, marginal, sign, degrade, purity, zero_noise, weak_sign, antidegradable, concavity]
}

fn gaussian_checks() -> Vec<Check> {
    let suite = Suite::Gaussian;
    let mut rng = rng(33);

    let mut closure = Check::new(suite, "attenuator-composition", 1e-12);
    let mut degrade = Check::new(suite, "weak-degradability", 1e-12);
    let mut dilation = Check::new(suite, "dilation-marginals", 1e-12);
    for _ in 0..200 {
        let s = random_gaussian_state(&mut rng);
        let (e1, e2, noise): (f64, f64, f64) = (rng.gen(), rng.gen(), 3.0 * rng.gen::<f64>());
        let ctx = || format!("eta1={e1} eta2={e2} N={noise}");
        let twice = apply_attenuator_gaussian(&apply_attenuator_gaussian(&s, e1, noise).unwrap(), e2, noise).unwrap();
        closure.record(rel_diff(&twice, &apply_attenuator_gaussian(&s, e1 * e2, noise).unwrap()), ctx);

        let eta = 0.5 + 0.5 * rng.gen::<f64>();
        let ctx = || format!("eta={eta} N={noise}");
        let through =
            apply_attenuator_gaussian(&apply_attenuator_gaussian(&s, eta, noise).unwrap(), (1.0 - eta) / eta, noise)
                .unwrap();
        degrade.record(rel_diff(&through, &apply_attenuator_gaussian(&s, 1.0 - eta, noise).unwrap()), ctx);

        let n = 10.0 * rng.gen::<f64>();
        let ctx = || format!("n={n} eta={eta} N={noise}");
        if let Some(out) = dilation.guard(attenuator_dilation(n, eta, noise), ctx) {
            let thermal = GaussianState::thermal(n).unwrap();
            let b = out.marginal(&[MODE_B]).unwrap();
            let f = out.marginal(&[MODE_F]).unwrap();
            let e = out.marginal(&[MODE_E_PRIME]).unwrap();
            dilation.record(rel_diff(&b, &apply_attenuator_gaussian(&thermal, eta, noise).unwrap()), ctx);
            dilation.record(rel_diff(&f, &apply_attenuator_gaussian(&thermal, 1.0 - eta, noise).unwrap()), ctx);
            dilation.record(rel_diff(&e, &GaussianState::thermal(noise).unwrap()), ctx);
        }
    }

    let mut sign = Check::new(suite, "extended-attenuator-sign-identity", 1e-9);
    for _ in 0..100 {
        let (n, eta, noise) = (100.0 * rng.gen::<f64>(), rng.gen::<f64>(), 2.0 * rng.gen::<f64>());
        let ctx = || format!("n={n} eta={eta} N={noise}");
        let a = coherent_info_extended_gaussian(n, eta, noise);
        let b = coherent_info_attenuator_gaussian(n, 1.0 - eta, noise);
        match (a, b) {
            (Ok(a), Ok(b)) => sign.record((a + b).abs(), ctx),
            _ => sign.record(f64::NAN, ctx),
        }
    }

    let mut monotone = Check::new(suite, "extended-monotone-convergence", 1e-3);
    for &(eta, noise) in &[(0.8f64, 0.2), (0.6, 0.5), (0.95, 1.0)] {
        let limit = (eta / (1.0 - eta)).log2() + g_function(noise).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for k in 0..=5 {
            let n = 10f64.powi(k);
            let ctx = || format!("n={n} eta={eta} N={noise}");
            let Some(j) = monotone.guard(coherent_info_extended_gaussian(n, eta, noise), ctx) else { continue };
            monotone.require(j >= prev - 1e-12, || format!("{}: {j} after {prev}", ctx()));
            prev = j;
            if k == 5 {
                monotone.record((j - limit).abs(), ctx);
            }
        }
    }

    let mut purification = Check::new(suite, "two-mode-squeezed-purity", 1e-9);
    for _ in 0..100 {
        let noise = 10.0 * rng.gen::<f64>();
        let ctx = || format!("N={noise}");
        let tmsv = two_mode_squeezed_cov(noise).unwrap();
        if let Some(nu) = purification.guard(symplectic_eigenvalues(tmsv.cov()), ctx) {
            purification.record(nu.iter().fold(0.0f64, |m, v| m.max((v - 1.0).abs())), ctx);
        }
        let marginal = gaussian_entropy(&tmsv.marginal(&[0]).unwrap()).unwrap();
        purification.record((marginal - g_function(noise).unwrap()).abs(), ctx);
        let out = attenuator_dilation(0.0, rng.gen(), noise).unwrap();
        purification.record(gaussian_entropy(&out).unwrap().abs(), ctx);
    }

    let mut twisted = Check::new(suite, "twisted-reconstruction", 1e-12);
    let states: Vec<GaussianState> = (0..100).map(|_| random_gaussian_state(&mut rng)).collect();
    let mut channels = 0;
    while channels < 100 {
        let tau = 3.0 * rng.gen::<f64>();
        let y = (1.0 - tau).abs() + 2.0 * rng.gen::<f64>();
        let p = PhaseInsensitiveParams::new(tau, y).unwrap();
        if is_entanglement_breaking(&p) {
            continue;
        }
        channels += 1;
        let ctx = || format!("tau={tau} y={y}");
        let Some(f) = twisted.guard(twisted_decompose(&p), ctx) else { continue };
        twisted.record((f.eta_prime() - 0.5 * (1.0 + tau - y)).abs(), ctx);
        twisted.record((f.kappa_prime() - tau / f.eta_prime()).abs(), ctx);
        for s in &states {
            let direct = apply_phase_insensitive(s, &p).unwrap();
            if let Some(composed) = twisted.guard(f.apply(s), ctx) {
                twisted.record(rel_diff(&direct, &composed), ctx);
            }
        }
    }

    vec![closure, degrade, dilation, sign, monotone, purification, twisted]
}

/// Closed-form values at (0.9, 0.1) and (0.7, 0.1), evaluated to 30 digits.
const REFERENCE: [(f64, f64, [f64; 5]); 2] = [
    (
        0.9,
        0.1,
        [2.686_478_315_828_65, 3.653_371_687_055_98, 3.016_301_812_329_1, 2.853_681_718_618_2, 3.032_421_477_692_38],
    ),
    (
        0.7,
        0.1,
        [0.738_945_735_722_783, 1.705_839_106_950_11, 1.021_695_071_099_32, 1.304_976_225_835_52, 1.084_888_897_586_51],
    ),
];

fn bounds_checks() -> Vec<Check> {
    let suite = Suite::Bounds;

    let mut reference = Check::new(suite, "closed-form-reference-values", 1e-12);
    for (eta, noise, expected) in REFERENCE {
        let got = [
            gauss_lower(eta, noise),
            gauss_upper_extended(eta, noise),
            gauss_upper_twist(eta, noise),
            gauss_upper_plob(eta, noise),
            gauss_upper_swat(eta, noise),
        ];
        for (g, e) in got.into_iter().zip(expected) {
            reference.record((g.unwrap_or(f64::NAN) - e).abs(), || format!("eta={eta} N={noise}"));
        }
    }

    let mut sandwich = Check::new(suite, "gaussian-sandwich", 1e-9);
    let mut dominance = Check::new(suite, "twist-dominates-extended-and-swat", 1e-9);
    let mut bottleneck = Check::new(suite, "bottleneck-consistency", 1e-12);
    let mut window = Check::new(suite, "gaussian-window-is-2g", 1e-12);
    for i in 51..=99 {
        let eta = i as f64 / 100.0;
        for j in 0..=500 {
            let noise = j as f64 / 100.0;
            let ctx = || format!("eta={eta} N={noise}");
            let r = report(ChannelKind::Gaussian, eta, noise).unwrap();
            for (_, u) in r.uppers.iter().filter(|(_, u)| u.is_finite()) {
                sandwich.record(r.lower - u, ctx);
            }
            let lower = gauss_lower(eta, noise).unwrap();
            let ext = gauss_upper_extended(eta, noise).unwrap();
            if lower > 0.0 {
                window.record((ext - lower - 2.0 * g_function(noise).unwrap()).abs(), ctx);
            }
            if attenuator_is_entanglement_breaking(eta, noise) {
                continue;
            }
            let twist = gauss_upper_twist(eta, noise).unwrap();
            dominance.record((twist - ext).max(twist - gauss_upper_swat(eta, noise).unwrap()), ctx);
            let f = twisted_decompose(&PhaseInsensitiveParams::attenuator(eta, noise).unwrap()).unwrap();
            let ep = f.eta_prime();
            bottleneck.record((twist - (ep / (1.0 - ep)).log2().max(0.0)).abs(), ctx);
        }
    }

    let mut qubit = Check::new(suite, "qubit-sandwich", 1e-7);
    let mut closure = Check::new(suite, "qubit-zero-noise-closure", 1e-6);
    for i in 0..9 {
        let eta = 0.55 + 0.05 * i as f64;
        for noise in [0.0, 0.01, 0.1, 0.25] {
            let ctx = || format!("eta={eta} N={noise}");
            let (Some(lo), Some(hi)) =
                (qubit.guard(qubit_lower(eta, noise), ctx), qubit.guard(qubit_upper_extended(eta, noise), ctx))
            else {
                continue;
            };
            qubit.record(lo - hi, ctx);
            if noise == 0.0 {
                closure.record((hi - lo).abs(), ctx);
            }
        }
    }

    let mut monotone = Check::new(suite, "bounds-nondecreasing-in-eta", 1e-12);
    for (kind, noise) in [(ChannelKind::Gaussian, 0.1), (ChannelKind::Gaussian, 0.5), (ChannelKind::Qubit, 0.1)] {
        let mut prev: Option<crate::bounds::BoundsReport> = None;
        for i in 51..=99 {
            let eta = i as f64 / 100.0;
            let r = report(kind, eta, noise).unwrap();
            if let Some(p) = prev {
                let cols = |r: &crate::bounds::BoundsReport| {
                    let mut v = vec![r.lower, r.best_upper];
                    v.extend(r.uppers.iter().map(|(_, u)| u));
                    v
                };
                let drop = cols(&p).iter().zip(cols(&r)).fold(0.0f64, |m, (a, b)| m.max(a - b));
                monotone.record(drop, || format!("{kind} eta={eta} N={noise}"));
            }
            prev = Some(r);
        }
    }

    vec![reference, sandwich, dominance, bottleneck, window, qubit, closure, monotone]
}

/// Run `suite`, writing one line per check. Returns the checks run.
pub fn run_suite(suite: Suite, out: &mut impl Write) -> io::Result<Vec<Check>> {
    let mut all = Vec::new();
    for part in suite.parts() {
        let start = Instant::now();
        let checks = match part {
            Suite::Linalg => linalg_checks(),
            Suite::Qubit => qubit_checks(),
            Suite::Gaussian => gaussian_checks(),
            Suite::Bounds => bounds_checks(),
            Suite::All => unreachable!(),
        };
        for c in &checks {
            writeln!(out, "{c}")?;
        }
        let failed = checks.iter().filter(|c| !c.passed()).count();
        writeln!(
            out,
            "{}: {} checks, {failed} failed, {:.2}s",
            part.name(),
            checks.len(),
            start.elapsed().as_secs_f64()
        )?;
        all.extend(checks);
    }
    Ok(all)
}
