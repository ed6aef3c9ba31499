use num_complex::Complex64;
use proptest::prelude::*;
use tacap::linalg::{kron, partial_trace, symmetric_eigenvalues, ComplexMatrix, DensityMatrix, RealMatrix};
use tacap::qubit::{extended_output, QubitAttenuatorParams, QubitState};

fn unitary_2(theta: f64, a: f64, b: f64) -> ComplexMatrix {
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
    .unwrap()
}

fn angles() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.0..6.3f64, 0.0..6.3f64, 0.0..6.3f64)
}

proptest! {
    #[test]
    fn entropy_invariant_under_local_unitaries(
        p in 0.0..1.0f64, eta in 0.0..1.0f64, noise in 0.0..0.5f64,
        u1 in angles(), u2 in angles(),
    ) {
        let s = QubitState::diagonal(p).unwrap();
        let c = QubitAttenuatorParams::new(eta, noise).unwrap();
        let rho = extended_output(&s, &c);
        let u = kron(&unitary_2(u1.0, u1.1, u1.2), &unitary_2(u2.0, u2.1, u2.2));
        let a = rho.entropy().unwrap();
        let b = rho.evolve(&u).unwrap().entropy().unwrap();
        prop_assert!((a - b).abs() < 1e-10, "{a} vs {b}");
    }

    #[test]
    fn marginals_of_products_are_factors(a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let ra = DensityMatrix::new(ComplexMatrix::diag(&[a, 1.0 - a]), vec![2]).unwrap();
        let rb = DensityMatrix::new(ComplexMatrix::diag(&[b, 1.0 - b, 0.0]), vec![3]).unwrap();
        let joint = ra.tensor(&rb);
        prop_assert!(partial_trace(&joint, &[0]).unwrap().matrix().max_abs_diff(ra.matrix()) < 1e-15);
        prop_assert!(partial_trace(&joint, &[1]).unwrap().matrix().max_abs_diff(rb.matrix()) < 1e-15);
        let sum = ra.entropy().unwrap() + rb.entropy().unwrap();
        prop_assert!((joint.entropy().unwrap() - sum).abs() < 1e-12);
    }
}

/// Real roots of a polynomial with all roots real, by bisection between the
/// critical points of its derivative.
fn char_poly_roots(coeffs: &[f64]) -> Vec<f64> {
    let eval = |c: &[f64], x: f64| c.iter().fold(0.0, |acc, &k| acc * x + k);
    let deg = coeffs.len() - 1;
    if deg == 1 {
        return vec![-coeffs[1] / coeffs[0]];
    }
    let deriv: Vec<f64> = coeffs[..deg].iter().enumerate().map(|(i, &k)| k * (deg - i) as f64).collect();
    let mut marks = vec![-10.0];
    marks.extend(char_poly_roots(&deriv));
    marks.push(10.0);
    let mut roots = Vec::new();
    for w in marks.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(coeffs, lo), eval(coeffs, hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval(coeffs, mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}

#[test]
fn extended_output_spectrum_matches_characteristic_polynomial() {
    // For p = 1/2 and gamma = 0 the extended output is real symmetric.
    let s = QubitState::diagonal(0.5).unwrap();
    let c = QubitAttenuatorParams::new(0.8, 0.1).unwrap();
    let rho = extended_output(&s, &c);
    let m = rho.matrix();
    assert!(m.as_slice().iter().all(|z| z.im == 0.0));
    let r = RealMatrix::from_fn(4, 4, |i, j| m[(i, j)].re);

    // Faddeev-LeVerrier coefficients of det(x I - R)
    let mut coeffs = vec![1.0];
    let mut mk = RealMatrix::zeros(4, 4);
    for k in 1..=4 {
        let prev = *coeffs.last().unwrap();
        mk = r.matmul(&mk).add(&RealMatrix::scaled_identity(4, prev));
        let rm = r.matmul(&mk);
        let tr: f64 = (0..4).map(|i| rm[(i, i)]).sum();
        coeffs.push(-tr / k as f64);
    }
    let mut roots = char_poly_roots(&coeffs);
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let jacobi = symmetric_eigenvalues(&r).unwrap();
    assert_eq!(roots.len(), 4);
    for (a, b) in roots.iter().zip(&jacobi) {
        assert!((a - b).abs() < 1e-12, "{roots:?} vs {jacobi:?}");
    }
    let expected = [0.54, 0.36, 0.06, 0.04];
    for (a, b) in expected.iter().zip(&jacobi) {
        assert!((a - b).abs() < 1e-12, "{jacobi:?}");
    }
    let h: f64 = expected.iter().map(|&l| -l * l.log2()).sum();
    assert!((rho.entropy().unwrap() - h).abs() < 1e-12);
}
