use std::fs;
use std::path::PathBuf;

use clap::Args;
use surfineq::axisym::{generating_curve, Family, Surface};
use surfineq::io::{parse_curve, SurfaceSpec};
use surfineq::{Error, Result};

/// Where a single surface comes from.
#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    /// sphere, spheroid, cigar, pancake, gamma, broken_line, dumbbell, random_lipschitz
    #[arg(long)]
    pub family: Option<String>,
    /// Surface spec document (JSON).
    #[arg(long, conflicts_with_all = ["family", "curve"])]
    pub surface: Option<PathBuf>,
    /// Generating curve in the curve file format.
    #[arg(long, conflicts_with = "family")]
    pub curve: Option<PathBuf>,
    #[arg(long, default_value_t = 4096)]
    pub n: usize,
    /// Mollification width for singular families.
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long = "R", alias = "r")]
    pub radius: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long = "A")]
    pub a_mid: Option<f64>,
    #[arg(long)]
    pub neck: Option<f64>,
    #[arg(long)]
    pub bulge: Option<f64>,
    #[arg(long = "K")]
    pub k: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn need(v: Option<f64>, flag: &str, family: &str) -> Result<f64> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for {family}")))
}

impl SurfaceArgs {
    pub fn family(&self) -> Result<Family> {
        let name = self.family.as_deref().ok_or_else(|| Error::Parse("no surface given".into()))?;
        let f = match name {
            "sphere" => Family::Sphere { r: self.radius.unwrap_or(1.0) },
            "spheroid" => Family::Spheroid { a: need(self.a, "a", name)?, c: need(self.c, "c", name)? },
            "cigar" => Family::Cigar { eps: need(self.eps, "eps", name)? },
            "pancake" => Family::Pancake { eps: need(self.eps, "eps", name)? },
            "gamma" => Family::Gamma {
                h: need(self.h, "h", name)?,
                a: need(self.a, "a", name)?,
                a_mid: need(self.a_mid, "A", name)?,
            },
            "broken_line" => Family::BrokenLine { eps: need(self.eps, "eps", name)? },
            "dumbbell" => Family::Dumbbell { neck: need(self.neck, "neck", name)?, bulge: need(self.bulge, "bulge", name)? },
            "random_lipschitz" => Family::RandomLipschitz { seed: self.seed.unwrap_or(0), k: self.k.unwrap_or(8.0) },
            other => return Err(Error::Parse(format!("unknown family `{other}`"))),
        };
        Ok(f)
    }

    pub fn build(&self) -> Result<Surface> {
        if let Some(path) = &self.surface {
            return SurfaceSpec::parse(&read(path)?)?.build();
        }
        if let Some(path) = &self.curve {
            let angle = parse_curve(&read(path)?)?;
            return Ok(Surface {
                name: path.display().to_string(),
                family: None,
                curve: generating_curve(angle)?,
                delta: None,
                seed: None,
                singular: None,
            });
        }
        self.family()?.build(self.n, self.delta)
    }
}

pub fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}
