//! Scalar maximization on a closed interval: a uniform coarse scan picks a
//! bracket, then golden-section search refines it.
//!
//! The scan matters when the objective is flat (identically zero) over part
//! of the interval, where a pure golden-section search could stall on the
//! plateau.

use crate::error::{argument, Error, Result};

/// Number of points in the initial uniform scan, endpoints included.
pub const SCAN_POINTS: usize = 129;
pub const DEFAULT_TOL: f64 = 1e-9;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarMaxResult {
    pub argmax: f64,
    pub value: f64,
    pub evaluations: usize,
}

struct Tracker<F> {
    f: F,
    best: ScalarMaxResult,
}

impl<F: FnMut(f64) -> f64> Tracker<F> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        let value = (self.f)(x);
        self.best.evaluations += 1;
        if !value.is_finite() {
            return Err(Error::Evaluation { x, value });
        }
        if value > self.best.value {
            self.best.argmax = x;
            self.best.value = value;
        }
        Ok(value)
    }
}

/// Maximize `f` over `[lo, hi]` to an abscissa tolerance `tol`.
///
/// Returns the best point evaluated. For a strictly concave objective the
/// argmax is within `tol` of the true maximizer.
pub fn maximize_scalar(f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<ScalarMaxResult> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(argument(format!("need a finite interval with lo < hi, got [{lo}, {hi}]")));
    }
    if !(tol > 0.0) {
        return Err(argument(format!("tolerance must be positive, got {tol}")));
    }
    let mut t = Tracker { f, best: ScalarMaxResult { argmax: lo, value: f64::NEG_INFINITY, evaluations: 0 } };

    let step = (hi - lo) / (SCAN_POINTS - 1) as f64;
    let grid = |i: usize| if i == SCAN_POINTS - 1 { hi } else { lo + step * i as f64 };
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..SCAN_POINTS {
        let v = t.eval(grid(i))?;
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }

    let (mut a, mut b) = (grid(best_i.saturating_sub(1)), grid((best_i + 1).min(SCAN_POINTS - 1)));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = t.eval(c)?;
    let mut fd = t.eval(d)?;
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = t.eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = t.eval(d)?;
        }
    }
    Ok(t.best)
}
