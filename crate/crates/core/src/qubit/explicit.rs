//! Closed-form matrices for the qubit dilation, written out entry by entry.
//! They are an independent route to the same states that
//! [`super::dilated_state`] produces by brute-force matrix products.

use num_complex::Complex64;

use super::{QubitAttenuatorParams, QubitState};
use crate::linalg::ComplexMatrix;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Joint input on `A, E, E'` in the basis `{|0>,|1>}^{x3}`.
pub fn joint_input(s: &QubitState, noise: f64) -> ComplexMatrix {
    let (p, g, n) = (s.p(), s.gamma(), noise);
    let gc = g.conj();
    let r = ((1.0 - n) * n).sqrt();
    let mut m = ComplexMatrix::zeros(8, 8);
    let rows: [(usize, [Complex64; 4]); 4] = [
        (0, [re((1.0 - n) * (1.0 - p)), re(r * (1.0 - p)), g * (1.0 - n), g * r]),
        (3, [re(r * (1.0 - p)), re(n * (1.0 - p)), g * r, g * n]),
        (4, [gc * (1.0 - n), gc * r, re(p - n * p), re(r * p)]),
        (7, [gc * r, gc * n, re(r * p), re(n * p)]),
    ];
    for (i, row) in rows {
        for (&j, v) in [0usize, 3, 4, 7].iter().zip(row) {
            m[(i, j)] = v;
        }
    }
    m
}

/// Extended-channel output on `B, E'`.
pub fn extended_output(s: &QubitState, c: &QubitAttenuatorParams) -> ComplexMatrix {
    let (p, g, n, eta) = (s.p(), s.gamma(), c.noise(), c.eta());
    let gc = g.conj();
    let se = eta.sqrt();
    let r = ((1.0 - n) * n * (1.0 - eta) * eta).sqrt();
    let q = ((1.0 - n) * n * (1.0 - eta)).sqrt();
    let corner = re((2.0 * p - 1.0) * q);
    #[rustfmt::skip]
    let entries = vec![
        re((1.0 - n) * (1.0 - p * eta)), gc * r,                  g * ((1.0 - n) * se),   corner,
        g * r,                           re(n * (1.0 - p) * eta), re(0.0),                g * (n * se),
        gc * ((1.0 - n) * se),           re(0.0),                 re(p * (1.0 - n) * eta), -gc * r,
        corner,                          gc * (n * se),           -g * r,                 re((p - 1.0) * eta * n + n),
    ];
    ComplexMatrix::new(4, 4, entries).expect("4x4")
}

/// Weakly complementary output on `F`.
pub fn weak_complementary_output(s: &QubitState, c: &QubitAttenuatorParams) -> ComplexMatrix {
    let (p, g, n, eta) = (s.p(), s.gamma(), c.noise(), c.eta());
    let k = (1.0 - 2.0 * n) * (1.0 - eta).sqrt();
    ComplexMatrix::new(
        2,
        2,
        vec![re(1.0 - p * (1.0 - eta) - n * eta), g * k, g.conj() * k, re(p * (1.0 - eta) + n * eta)],
    )
    .expect("2x2")
}
