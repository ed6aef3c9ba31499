use num_complex::Complex64;
use proptest::prelude::*;
use tacap::linalg::partial_trace;
use tacap::qubit::{
    apply_attenuator, channel_output, coherent_information_qubit, complementary_output, dilated_state, explicit,
    extended_output, phase_damping, weak_complementary_output, QubitAttenuatorParams, QubitState, Variant, FACTOR_B,
    FACTOR_E_PRIME, FACTOR_F,
};

fn state() -> impl Strategy<Value = QubitState> {
    (0.0..=1.0f64, 0.0..=1.0f64, 0.0..6.3f64).prop_map(|(p, r, phase)| {
        let gamma = Complex64::from_polar(r * (p * (1.0 - p)).sqrt(), phase);
        QubitState::new(p, gamma).unwrap()
    })
}

fn params(eta_min: f64) -> impl Strategy<Value = QubitAttenuatorParams> {
    (eta_min..=1.0f64, 0.0..=0.5f64).prop_map(|(eta, n)| QubitAttenuatorParams::new(eta, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn dilation_matches_closed_form_matrices(s in state(), c in params(0.0)) {
        prop_assert!(extended_output(&s, &c).matrix().max_abs_diff(&explicit::extended_output(&s, &c)) <= 1e-12);
        prop_assert!(
            weak_complementary_output(&s, &c).matrix().max_abs_diff(&explicit::weak_complementary_output(&s, &c)) <= 1e-12
        );
    }

    #[test]
    fn output_is_attenuated_state(s in state(), c in params(0.0)) {
        let b = channel_output(&s, &c);
        prop_assert!(b.matrix().max_abs_diff(apply_attenuator(&s, &c).to_density().matrix()) <= 1e-12);
    }

    #[test]
    fn weak_complementary_is_degraded_output(s in state(), c in params(0.5)) {
        let inner = QubitAttenuatorParams::new((1.0 - c.eta()) / c.eta(), c.noise()).unwrap();
        let degraded = phase_damping(&apply_attenuator(&apply_attenuator(&s, &c), &inner), 1.0 - 2.0 * c.noise()).unwrap();
        prop_assert!(degraded.to_density().matrix().max_abs_diff(weak_complementary_output(&s, &c).matrix()) <= 1e-12);
    }

    #[test]
    fn coherent_information_even_in_gamma(s in state(), c in params(0.0)) {
        let flipped = QubitState::new(s.p(), -s.gamma()).unwrap();
        for v in [Variant::Direct, Variant::Extended] {
            let a = coherent_information_qubit(&s, &c, v).unwrap();
            let b = coherent_information_qubit(&flipped, &c, v).unwrap();
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn diagonal_inputs_dominate_for_degradable_extension(s in state(), c in params(0.5)) {
        let diag = QubitState::diagonal(s.p()).unwrap();
        let j = coherent_information_qubit(&s, &c, Variant::Extended).unwrap();
        let j0 = coherent_information_qubit(&diag, &c, Variant::Extended).unwrap();
        prop_assert!(j <= j0 + 1e-10, "{j} > {j0}");
    }

    #[test]
    fn pure_inputs_pair_entropies(p in 0.0..=1.0f64, phase in 0.0..6.3f64, c in params(0.0)) {
        let s = QubitState::new(p, Complex64::from_polar((p * (1.0 - p)).sqrt(), phase)).unwrap();
        let global = dilated_state(&s, &c);
        let ent = |keep: &[usize]| partial_trace(&global, keep).unwrap().entropy().unwrap();
        prop_assert!((ent(&[FACTOR_B]) - ent(&[FACTOR_F, FACTOR_E_PRIME])).abs() < 1e-10);
        prop_assert!((ent(&[FACTOR_B, FACTOR_E_PRIME]) - ent(&[FACTOR_F])).abs() < 1e-10);
        prop_assert!(global.entropy().unwrap().abs() < 1e-10);
    }

    #[test]
    fn zero_noise_variants_coincide(s in state(), eta in 0.0..=1.0f64) {
        let c = QubitAttenuatorParams::new(eta, 0.0).unwrap();
        let d = coherent_information_qubit(&s, &c, Variant::Direct).unwrap();
        let e = coherent_information_qubit(&s, &c, Variant::Extended).unwrap();
        prop_assert!((d - e).abs() <= 1e-10);
    }
}

#[test]
fn complementary_output_has_expected_marginals() {
    let s = QubitState::new(0.3, Complex64::new(0.1, 0.2)).unwrap();
    let c = QubitAttenuatorParams::new(0.7, 0.2).unwrap();
    let comp = complementary_output(&s, &c);
    assert_eq!(comp.dims(), &[2, 2]);
    let f = partial_trace(&comp, &[0]).unwrap();
    assert!(f.matrix().max_abs_diff(weak_complementary_output(&s, &c).matrix()) < 1e-15);
    // E' never interacts, so it stays thermal
    let e = partial_trace(&comp, &[1]).unwrap();
    assert!((e.matrix()[(1, 1)].re - 0.2).abs() < 1e-15);
}
