//! Text and JSON rendering of bound reports.

use std::fmt::Write as _;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundsReport, QubitAudit};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Round to [`SIGNIFICANT_DIGITS`] significant digits. Non-finite values
/// pass through.
pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        // also folds -0.0 into 0.0
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses")
}

/// Shortest decimal form of `x` rounded to 12 significant digits; `inf`
/// for infinities.
pub fn fmt_real(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.is_nan() {
        return "nan".into();
    }
    format!("{}", round_significant(x))
}

/// Extended real for serialization: a JSON number, or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtReal(pub f64);

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(round_significant(self.0))
        } else {
            s.serialize_str(&fmt_real(self.0))
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExtReal;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("a number or \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<ExtReal, E> {
                Ok(ExtReal(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtReal, E> {
                Ok(ExtReal(v as f64))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtReal, E> {
                Ok(ExtReal(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtReal, E> {
                match v {
                    "inf" => Ok(ExtReal(f64::INFINITY)),
                    "-inf" => Ok(ExtReal(f64::NEG_INFINITY)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UppersJson {
    pub extended: ExtReal,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub twist: Option<ExtReal>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub plob: Option<ExtReal>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub swat: Option<ExtReal>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditJson {
    pub steps: usize,
    pub value: ExtReal,
    pub p: ExtReal,
    pub gamma_abs: ExtReal,
}

/// Serialized form of a [`BoundsReport`]; field order is the output key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub kind: String,
    pub eta: ExtReal,
    pub noise: ExtReal,
    pub lower: ExtReal,
    pub uppers: UppersJson,
    pub best_upper: ExtReal,
    pub gap: ExtReal,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub audit: Option<AuditJson>,
}

impl ReportJson {
    pub fn new(r: &BoundsReport, audit: Option<(usize, QubitAudit)>) -> Self {
        Self {
            kind: r.kind.as_str().to_string(),
            eta: ExtReal(r.eta),
            noise: ExtReal(r.noise),
            lower: ExtReal(r.lower),
            uppers: UppersJson {
                extended: ExtReal(r.uppers.extended),
                twist: r.uppers.twist.map(ExtReal),
                plob: r.uppers.plob.map(ExtReal),
                swat: r.uppers.swat.map(ExtReal),
            },
            best_upper: ExtReal(r.best_upper),
            gap: ExtReal(r.gap),
            audit: audit.map(|(steps, a)| AuditJson {
                steps,
                value: ExtReal(a.value),
                p: ExtReal(a.p),
                gamma_abs: ExtReal(a.gamma_abs),
            }),
        }
    }

    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn render_json(r: &BoundsReport, audit: Option<(usize, QubitAudit)>) -> String {
    ReportJson::new(r, audit).to_pretty()
}

pub fn render_text(r: &BoundsReport, audit: Option<(usize, QubitAudit)>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "kind            {}", r.kind);
    let _ = writeln!(s, "eta             {}", fmt_real(r.eta));
    let _ = writeln!(s, "noise           {}", fmt_real(r.noise));
    let _ = writeln!(s, "lower           {}", fmt_real(r.lower));
    for (name, v) in r.uppers.iter() {
        let _ = writeln!(s, "{:<16}{}", format!("upper.{name}"), fmt_real(v));
    }
    let _ = writeln!(s, "best_upper      {}", fmt_real(r.best_upper));
    let _ = writeln!(s, "gap             {}", fmt_real(r.gap));
    if let Some((steps, a)) = audit {
        let _ = writeln!(
            s,
            "audit           {} at p={} |gamma|={} ({steps} steps per axis)",
            fmt_real(a.value),
            fmt_real(a.p),
            fmt_real(a.gamma_abs)
        );
    }
    s
}
