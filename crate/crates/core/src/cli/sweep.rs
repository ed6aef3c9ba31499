//! Parameter sweeps written as CSV.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use super::render::{fmt_real, round_significant};
use crate::bounds::{report, BoundsReport, ChannelKind};
use crate::error::{argument, Error, Result};

pub const MAX_POINTS: f64 = 1e6;

pub const HEADER_GAUSSIAN: [&str; 8] =
    ["x", "lower", "upper_extended", "upper_twist", "upper_plob", "upper_swat", "best_upper", "gap"];
pub const HEADER_QUBIT: [&str; 5] = ["x", "lower", "upper_extended", "best_upper", "gap"];
pub const HEADER_GRID: [&str; 3] = ["eta", "noise", "gap"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    Eta,
    Noise,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variable::Eta => "eta",
            Variable::Noise => "noise",
        })
    }
}

/// `start:stop:step` over one variable, as written after `--sweep var=`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub variable: Variable,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Range {
    pub fn new(variable: Variable, start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(argument(format!("--sweep {variable}: bounds and step must be finite")));
        }
        if !(start < stop) {
            return Err(argument(format!("--sweep {variable}: start {start} must be below stop {stop}")));
        }
        if !(step > 0.0) {
            return Err(argument(format!("--sweep {variable}: step must be positive, got {step}")));
        }
        if (stop - start) / step > MAX_POINTS {
            return Err(argument(format!("--sweep {variable}: more than 1e6 grid points")));
        }
        Ok(Self { variable, start, stop, step })
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid points `start + i step`, snapped to 12 significant digits so
    /// that `0.5 + 7 * 0.01` evaluates at `0.57` exactly as typed.
    pub fn points(&self) -> Vec<f64> {
        (0..self.len()).map(|i| round_significant(self.start + i as f64 * self.step)).collect()
    }
}

impl FromStr for Range {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || argument(format!("--sweep expects var=start:stop:step with var eta or noise, got '{s}'"));
        let (name, spec) = s.split_once('=').ok_or_else(bad)?;
        let variable = match name.trim() {
            "eta" => Variable::Eta,
            "noise" => Variable::Noise,
            _ => return Err(bad()),
        };
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut v = [0.0; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part.trim().parse().map_err(|_| bad())?;
        }
        Range::new(variable, v[0], v[1], v[2])
    }
}

/// A one-dimensional sweep with the other parameter held fixed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSpec {
    pub kind: ChannelKind,
    pub range: Range,
    pub fixed_value: f64,
}

impl SweepSpec {
    pub fn new(kind: ChannelKind, range: Range, fixed_value: f64) -> Result<Self> {
        Ok(Self { kind, range, fixed_value })
    }

    fn params(&self, x: f64) -> (f64, f64) {
        match self.range.variable {
            Variable::Eta => (x, self.fixed_value),
            Variable::Noise => (self.fixed_value, x),
        }
    }

    /// One report per grid point, in grid order.
    pub fn evaluate(&self) -> Result<Vec<(f64, BoundsReport)>> {
        self.range
            .points()
            .into_par_iter()
            .map(|x| {
                let (eta, noise) = self.params(x);
                report(self.kind, eta, noise).map(|r| (x, r))
            })
            .collect()
    }
}

/// Full `eta x noise` grid reporting the gap only.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub kind: ChannelKind,
    pub eta: Range,
    pub noise: Range,
}

impl GridSpec {
    pub fn evaluate(&self) -> Result<Vec<BoundsReport>> {
        let etas = self.eta.points();
        let noises = self.noise.points();
        let cells: Vec<(f64, f64)> = etas.iter().flat_map(|&e| noises.iter().map(move |&n| (e, n))).collect();
        cells.into_par_iter().map(|(eta, noise)| report(self.kind, eta, noise)).collect()
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

fn flush<W: Write>(w: csv::Writer<W>) -> io::Result<()> {
    w.into_inner().map_err(|e| e.into_error())?.flush()
}

pub fn write_sweep<W: Write>(kind: ChannelKind, rows: &[(f64, BoundsReport)], out: W) -> io::Result<()> {
    let mut w = csv_writer(out);
    match kind {
        ChannelKind::Gaussian => w.write_record(HEADER_GAUSSIAN)?,
        ChannelKind::Qubit => w.write_record(HEADER_QUBIT)?,
    }
    for (x, r) in rows {
        let mut record = vec![fmt_real(*x), fmt_real(r.lower), fmt_real(r.uppers.extended)];
        if kind == ChannelKind::Gaussian {
            for v in [r.uppers.twist, r.uppers.plob, r.uppers.swat] {
                record.push(fmt_real(v.unwrap_or(f64::NAN)));
            }
        }
        record.push(fmt_real(r.best_upper));
        record.push(fmt_real(r.gap));
        w.write_record(&record)?;
    }
    flush(w)
}

pub fn write_grid<W: Write>(rows: &[BoundsReport], out: W) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(HEADER_GRID)?;
    for r in rows {
        w.write_record([fmt_real(r.eta), fmt_real(r.noise), fmt_real(r.gap)])?;
    }
    flush(w)
}
