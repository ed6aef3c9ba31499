use proptest::prelude::*;
use tacap::gaussian::{
    apply_attenuator_gaussian, apply_phase_insensitive, attenuator_dilation, attenuator_is_entanglement_breaking,
    coherent_info_attenuator_gaussian, coherent_info_extended_gaussian, g_function, gaussian_entropy,
    is_entanglement_breaking, twisted_decompose, GaussianState, PhaseInsensitiveParams, MODE_B, MODE_E_PRIME, MODE_F,
};
use tacap::linalg::RealMatrix;

fn squeezed_thermal(n: f64, r: f64, phi: f64, q: f64, p: f64) -> GaussianState {
    let (c, s) = (phi.cos(), phi.sin());
    let rot = RealMatrix::new(2, 2, vec![c, -s, s, c]).unwrap();
    let sq = RealMatrix::new(2, 2, vec![(-r).exp(), 0.0, 0.0, r.exp()]).unwrap();
    let m = rot.matmul(&sq);
    let cov = m.matmul(&RealMatrix::scaled_identity(2, 2.0 * n + 1.0)).matmul(&m.transpose());
    let cov = RealMatrix::from_fn(2, 2, |i, j| 0.5 * (cov[(i, j)] + cov[(j, i)]));
    GaussianState::new(vec![q, p], cov).unwrap()
}

fn gaussian_state() -> impl Strategy<Value = GaussianState> {
    (0.0..5.0f64, 0.0..1.0f64, 0.0..6.3f64, -2.0..2.0f64, -2.0..2.0f64)
        .prop_map(|(n, r, phi, q, p)| squeezed_thermal(n, r, phi, q, p))
}

fn rel(a: &GaussianState, b: &GaussianState) -> f64 {
    a.max_abs_diff(b) / a.cov().max_abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn weak_degradation_composes(s in gaussian_state(), eta in 0.5..=1.0f64, noise in 0.0..3.0f64) {
        let out = apply_attenuator_gaussian(&s, eta, noise).unwrap();
        let degraded = apply_attenuator_gaussian(&out, (1.0 - eta) / eta, noise).unwrap();
        prop_assert!(rel(&degraded, &apply_attenuator_gaussian(&s, 1.0 - eta, noise).unwrap()) <= 1e-12);
    }

    #[test]
    fn twisted_factors_reproduce_channel(s in gaussian_state(), tau in 0.0..3.0f64, extra in 0.0..2.0f64) {
        let y = (1.0 - tau).abs() + extra;
        let p = PhaseInsensitiveParams::new(tau, y).unwrap();
        prop_assume!(!is_entanglement_breaking(&p));
        let f = twisted_decompose(&p).unwrap();
        prop_assert!((f.eta_prime() - 0.5 * (1.0 + tau - y)).abs() < 1e-15);
        prop_assert!((f.eta_prime() * f.kappa_prime() - tau).abs() < 1e-12);
        prop_assert!(rel(&apply_phase_insensitive(&s, &p).unwrap(), &f.apply(&s).unwrap()) <= 1e-12);
    }

    #[test]
    fn extended_and_attenuator_are_opposite(n in 0.0..100.0f64, eta in 0.0..=1.0f64, noise in 0.0..2.0f64) {
        let a = coherent_info_extended_gaussian(n, eta, noise).unwrap();
        let b = coherent_info_attenuator_gaussian(n, 1.0 - eta, noise).unwrap();
        prop_assert!((a + b).abs() <= 1e-9, "{a} {b}");
    }

    #[test]
    fn dilation_marginals(n in 0.0..20.0f64, eta in 0.0..=1.0f64, noise in 0.0..3.0f64) {
        let out = attenuator_dilation(n, eta, noise).unwrap();
        let th = GaussianState::thermal(n).unwrap();
        prop_assert!(rel(&out.marginal(&[MODE_B]).unwrap(), &apply_attenuator_gaussian(&th, eta, noise).unwrap()) < 1e-12);
        prop_assert!(rel(&out.marginal(&[MODE_F]).unwrap(), &apply_attenuator_gaussian(&th, 1.0 - eta, noise).unwrap()) < 1e-12);
        let s_total = gaussian_entropy(&out).unwrap();
        prop_assert!((s_total - g_function(n).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn entanglement_breaking_criteria_agree(eta in 0.0..1.0f64, noise in 0.0..5.0f64) {
        let ratio = eta / (1.0 - eta);
        prop_assume!((noise - ratio).abs() > 1e-9);
        let p = PhaseInsensitiveParams::attenuator(eta, noise).unwrap();
        prop_assert_eq!(is_entanglement_breaking(&p), attenuator_is_entanglement_breaking(eta, noise));
        prop_assert_eq!(attenuator_is_entanglement_breaking(eta, noise), noise >= ratio);
    }
}

#[test]
fn extended_information_increases_toward_closed_form() {
    let limit = 2.0 + g_function(0.2).unwrap();
    assert!((limit - 2.780_026_905_978_03).abs() < 1e-12);
    let values: Vec<f64> = (0..=5).map(|k| coherent_info_extended_gaussian(10f64.powi(k), 0.8, 0.2).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] >= w[0]), "{values:?}");
    assert!((values[5] - limit).abs() < 1e-3, "{values:?}");
}

#[test]
fn extended_at_half_transmissivity() {
    // zero only at N = 0 or n = 0; otherwise approaches g(N) from below
    assert!(coherent_info_extended_gaussian(10.0, 0.5, 0.0).unwrap().abs() < 1e-10);
    assert!(coherent_info_extended_gaussian(0.0, 0.5, 0.7).unwrap().abs() < 1e-10);
    let g = g_function(0.3).unwrap();
    let mut prev = 0.0;
    for k in 0..=5 {
        let j = coherent_info_extended_gaussian(10f64.powi(k), 0.5, 0.3).unwrap();
        assert!(j > prev && j < g + 1e-12, "n=1e{k}: {j}");
        prev = j;
    }
    assert!((g - prev).abs() < 1e-3);
}

#[test]
fn unit_transmissivity_dilation_is_identity_on_input() {
    let out = attenuator_dilation(1.5, 1.0, 0.4).unwrap();
    assert!(out.marginal(&[MODE_B]).unwrap().max_abs_diff(&GaussianState::thermal(1.5).unwrap()) < 1e-15);
    assert!(out.marginal(&[MODE_E_PRIME]).unwrap().max_abs_diff(&GaussianState::thermal(0.4).unwrap()) < 1e-15);
}
