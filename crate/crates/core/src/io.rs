//! Text and JSON formats for curves, surfaces and sweeps.
//!
//! Angle functions travel in a plain text form,
//!
//! ```text
//! L=3.141592653589793 n=4
//! 0.000000000000000 0.000000000000000
//! 0.785398163397448 0.785398163397448
//! ...
//! ```
//!
//! or as JSON `{"length": .., "theta_samples": [..]}`. Surfaces and sweeps are
//! JSON documents built around a tagged [`Family`].

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::axisym::{Family, Surface};
use crate::curve::AngleFunction;
use crate::error::{Error, Result};

/// Default grid size for surfaces read from a spec without `n`.
pub const DEFAULT_N: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub length: f64,
    pub theta_samples: Vec<f64>,
}

impl CurveDoc {
    pub fn from_angle(a: &AngleFunction) -> Self {
        CurveDoc { length: a.length(), theta_samples: a.theta().to_vec() }
    }

    pub fn to_angle(&self) -> Result<AngleFunction> {
        AngleFunction::new(self.length, self.theta_samples.clone())
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Writes the text curve format with fixed 15-digit decimals.
pub fn write_curve(a: &AngleFunction) -> String {
    let mut out = format!("L={:.15} n={}\n", a.length(), a.n());
    for (i, t) in a.theta().iter().enumerate() {
        out.push_str(&format!("{:.15} {:.15}\n", a.s(i), t));
    }
    out
}

/// Reads either curve format; JSON is recognised by a leading `{`.
pub fn parse_curve(text: &str) -> Result<AngleFunction> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: CurveDoc = serde_json::from_str(trimmed).map_err(|e| parse_err(format!("curve JSON: {e}")))?;
        return doc.to_angle();
    }
    let mut lines = trimmed.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| parse_err("empty curve file"))?;
    let mut length = None;
    let mut n = None;
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("L", v)) => length = Some(v.parse::<f64>().map_err(|e| parse_err(format!("L: {e}")))?),
            Some(("n", v)) => n = Some(v.parse::<usize>().map_err(|e| parse_err(format!("n: {e}")))?),
            _ => return Err(parse_err(format!("unexpected header field `{field}`"))),
        }
    }
    let (length, n) = match (length, n) {
        (Some(l), Some(n)) => (l, n),
        _ => return Err(parse_err("header must read `L=<value> n=<count>`")),
    };
    let mut s = Vec::with_capacity(n + 1);
    let mut theta = Vec::with_capacity(n + 1);
    for (k, line) in lines.enumerate() {
        let mut cols = line.split_whitespace().map(str::parse::<f64>);
        match (cols.next(), cols.next(), cols.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => {
                s.push(a);
                theta.push(b);
            }
            _ => return Err(parse_err(format!("line {}: expected `s theta`", k + 2))),
        }
    }
    if theta.len() != n + 1 {
        return Err(parse_err(format!("expected {} samples, found {}", n + 1, theta.len())));
    }
    if (s[n] - length).abs() > 1e-9 * length.max(1.0) {
        return Err(parse_err(format!("last sample s = {} does not match L = {length}", s[n])));
    }
    AngleFunction::from_samples(&s, theta)
}

/// A single surface: either a named family or an explicit generating curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    #[serde(default)]
    pub surface: Option<Family>,
    #[serde(default)]
    pub curve: Option<CurveDoc>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub delta: Option<f64>,
}

impl SurfaceSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: SurfaceSpec = serde_json::from_str(text).map_err(|e| parse_err(format!("surface spec: {e}")))?;
        match (&spec.surface, &spec.curve) {
            (Some(_), None) | (None, Some(_)) => Ok(spec),
            _ => Err(parse_err("surface spec needs exactly one of `surface` and `curve`")),
        }
    }

    pub fn build(&self) -> Result<Surface> {
        if let Some(doc) = &self.curve {
            let angle = doc.to_angle()?;
            let curve = crate::axisym::generating_curve(angle)?;
            return Ok(Surface {
                name: "curve".into(),
                family: None,
                curve,
                delta: None,
                seed: None,
                singular: None,
            });
        }
        let family = self.surface.ok_or_else(|| parse_err("surface spec without a surface"))?;
        family.build(self.n.unwrap_or(DEFAULT_N), self.delta)
    }
}

/// Parameter range of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Range {
    pub param: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default)]
    pub log: bool,
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let m = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| {
                let t = k as f64 / m;
                if k == 0 {
                    self.start
                } else if k + 1 == self.count {
                    self.stop
                } else if self.log {
                    (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + t * (self.stop - self.start)
                }
            })
            .collect()
    }
}

/// A family swept over one parameter range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub family: String,
    /// Fixed parameters, e.g. `{"a": 1.0}`.
    #[serde(default)]
    pub params: Map<String, Value>,
    pub range: Option<Range>,
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default)]
    pub delta: Option<f64>,
    #[serde(default)]
    pub suites: Vec<String>,
    #[serde(default)]
    pub out: Option<String>,
}

fn default_n() -> usize {
    DEFAULT_N
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: SweepSpec = serde_json::from_str(text).map_err(|e| parse_err(format!("sweep spec: {e}")))?;
        spec.members()?;
        Ok(spec)
    }

    /// The families of the sweep in range order.
    pub fn members(&self) -> Result<Vec<Family>> {
        if self.n < 64 {
            return Err(parse_err(format!("sweep grid n = {} below 64", self.n)));
        }
        let values = match &self.range {
            Some(r) if r.count == 0 => return Err(parse_err("sweep range count must be at least 1")),
            Some(r) if r.log && (r.start <= 0.0 || r.stop <= 0.0) => {
                return Err(parse_err("log range needs positive endpoints"))
            }
            Some(r) => r.values().into_iter().map(|v| Some((r.param.clone(), v))).collect(),
            None => vec![None],
        };
        let mut out = Vec::with_capacity(values.len());
        for v in values {
            let mut obj = self.params.clone();
            obj.insert("family".into(), Value::String(self.family.clone()));
            if let Some((k, x)) = v {
                let num = if k == "seed" {
                    Value::from(x.round() as u64)
                } else {
                    Value::from(x)
                };
                obj.insert(k, num);
            }
            let family: Family =
                serde_json::from_value(Value::Object(obj)).map_err(|e| parse_err(format!("sweep member: {e}")))?;
            if family.is_mollified() && !self.delta.is_some_and(|d| d > 0.0) {
                return Err(parse_err(format!("{} needs a positive delta", self.family)));
            }
            out.push(family);
        }
        Ok(out)
    }
}
