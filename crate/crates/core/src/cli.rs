//! Command-line front end shared by the `hypersym` binary and tests.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{validate_data, AffineSymplecticData, Connection, DataFile, SymplecticForm};
use crate::error::{Error, Result};
use crate::families::{affa_data, coframe_at_point, kodaira_data, metric_at_point, threestep_data};
use crate::geometry::{geodesic_closed_form, geodesic_numeric};
use crate::lie::{GroupElement, LieAlgebra};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};
use crate::report::{curvature_report, to_json, verify_all};

#[derive(Debug, Parser)]
#[command(name = "hypersym", version, about = "Hypersymplectic structures from affine symplectic data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the affine and compatibility conditions of a data file.
    Validate {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the bracket table, central series and centre.
    Build(Target),
    /// Run every check and emit the full report.
    VerifyAll(Target),
    /// Emit curvature, Ricci and the flatness triple.
    Curvature(Target),
    /// Integrate a geodesic numerically and write CSV samples.
    Geodesic {
        #[command(flatten)]
        target: Target,
        /// Comma-separated rationals, length m.
        #[arg(long, allow_hyphen_values = true)]
        a0: String,
        #[arg(long, allow_hyphen_values = true)]
        b0: String,
        #[arg(long, default_value = "10")]
        t_end: String,
        #[arg(long, default_value = "1/1000")]
        step: String,
    },
    /// Write a built-in example as a data file.
    Example(Target),
    /// Left-invariant coframe and metric at a point of the group chart.
    Coframe {
        #[command(flatten)]
        target: Target,
        /// Comma-separated rationals `x_1..x_m, x'_1..x'_m`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    Kodaira,
    Threestep,
    Affa,
    Abelian,
}

/// A data file or a built-in example with its parameters.
#[derive(Debug, Args)]
pub struct Target {
    #[arg(conflicts_with = "example", required_unless_present = "example")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub example: Option<ExampleName>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn param(value: &Option<String>, name: &str) -> Result<Rational> {
    match value {
        Some(s) => rational::parse(s),
        None => Err(Error::Input(format!("--{name} is required for this example"))),
    }
}

impl Target {
    pub fn load(&self) -> Result<AffineSymplecticData> {
        if let Some(path) = &self.file {
            return DataFile::read(path)?.to_data();
        }
        let n = || self.n.ok_or_else(|| Error::Input("--n is required for this example".into()));
        match self.example {
            Some(ExampleName::Kodaira) => kodaira_data(n()?),
            Some(ExampleName::Threestep) => {
                threestep_data(&param(&self.a, "a")?, &param(&self.b, "b")?, &param(&self.c, "c")?)
            }
            Some(ExampleName::Affa) => {
                let base = kodaira_data(n()?)?;
                affa_data(base.nabla().clone(), base.omega().clone())
            }
            Some(ExampleName::Abelian) => {
                let m = self.m.ok_or_else(|| Error::Input("--m is required for this example".into()))?;
                let w = SymplecticForm::canonical(m)?;
                AffineSymplecticData::new(Connection::zero(m), Connection::zero(m), w)
            }
            None => Err(Error::Input("give a data file or --example".into())),
        }
    }
}

#[derive(Debug, Serialize)]
struct BuildReport {
    dim: usize,
    algebra_dim: usize,
    brackets: crate::lie::BracketTable,
    central_series_dims: Vec<usize>,
    step: Option<usize>,
    centre_dim: usize,
    centre_basis: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct CoframeReport {
    point: Vec<String>,
    coframe: Matrix,
    metric: Matrix,
}

fn parse_real(text: &str, what: &str) -> Result<f64> {
    rational::parse(text)
        .map(|q| rational::to_f64(&q))
        .or_else(|_| text.trim().parse::<f64>())
        .map_err(|_| Error::Input(format!("{what} is not a number: {text:?}")))
}

/// Computes the artifact of a command: JSON for everything except
/// `geodesic`, which yields CSV.
pub fn render(command: &Command) -> Result<String> {
    match command {
        Command::Validate { file, .. } => {
            let (nabla, nabla_prime, omega) = DataFile::read(file)?.parts()?;
            let report = validate_data(&nabla, &nabla_prime, &omega)?;
            if !report.hypotheses_hold() {
                return Err(Error::InvalidData(Box::new(report)));
            }
            if !report.internal_failures().is_empty() {
                return Err(Error::Internal(format!("derived conditions fail: {report}")));
            }
            Ok(to_json(&report))
        }
        Command::Build(t) => {
            let data = t.load()?;
            let l = LieAlgebra::from_data(&data);
            let series = l.lower_central_series();
            let centre = l.centre();
            Ok(to_json(&BuildReport {
                dim: data.dim(),
                algebra_dim: l.dim(),
                brackets: l.to_table(),
                central_series_dims: series.dims(),
                step: series.step,
                centre_dim: centre.dim(),
                centre_basis: centre.basis_strings(),
            }))
        }
        Command::VerifyAll(t) => Ok(to_json(&verify_all(&t.load()?)?)),
        Command::Curvature(t) => Ok(to_json(&curvature_report(&t.load()?)?)),
        Command::Geodesic {
            target,
            a0,
            b0,
            t_end,
            step,
        } => {
            let data = target.load()?;
            let (a0, b0) = (rational::parse_vector(a0)?, rational::parse_vector(b0)?);
            geodesic_closed_form(&data, &a0, &b0)?;
            let traj = geodesic_numeric(&data, &a0, &b0, parse_real(t_end, "--t-end")?, parse_real(step, "--step")?)?;
            Ok(traj.to_csv())
        }
        Command::Example(t) => {
            if t.file.is_some() {
                return Err(Error::Input("example takes --example, not a file".into()));
            }
            Ok(DataFile::from_data(&t.load()?).to_json())
        }
        Command::Coframe { target, point } => {
            let data = target.load()?;
            let coords = rational::parse_vector(point)?;
            if coords.len() != 2 * data.dim() {
                return Err(Error::DimensionMismatch {
                    expected: 2 * data.dim(),
                    found: coords.len(),
                });
            }
            let p = GroupElement::from_coords(&coords);
            Ok(to_json(&CoframeReport {
                point: coords.iter().map(rational::format).collect(),
                coframe: coframe_at_point(&data, &p)?,
                metric: metric_at_point(&data, &p)?,
            }))
        }
    }
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Validate { output, .. } => output.as_ref(),
        Command::Build(t) | Command::VerifyAll(t) | Command::Curvature(t) | Command::Example(t) => t.output.as_ref(),
        Command::Geodesic { target, .. } | Command::Coframe { target, .. } => target.output.as_ref(),
    }
}

/// Renders the command and writes it to `--output` or stdout.
pub fn execute(cli: &Cli) -> Result<()> {
    let text = render(&cli.command)?;
    match output_path(&cli.command) {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
