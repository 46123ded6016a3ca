//! Command-line front end.
//!
//! Every command is a pure function of its [`RunConfig`]: the same flags give
//! the same output bytes. Data goes to `--out`; stdout gets a single summary
//! line.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

use crate::bench::{power_of_two_dims, time_method_median, DEFAULT_RUNS};
use crate::error::{Error, Result};
use crate::io::{self, Format};
use crate::quantum::random_pure_state;
use crate::rng::{Mt19937, UniformSource, DEFAULT_SEED};
use crate::sampler::{sample, sample_unbiased};
use crate::stats::{
    simplex_point, total_variation, ComponentMeans, Histogram, TailCounter, DEFAULT_BINS,
};
use crate::vector::{Method, ProbabilityVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Write the generated vectors.
    Generate,
    /// Per-component means.
    Means,
    /// Marginal histogram of one component.
    Hist,
    /// Fraction of vectors whose largest component exceeds --threshold.
    Tail,
    /// First-component histograms of shuffled norm vs shuffled trig, with their distance.
    Compare,
    /// Ternary-plot coordinates of d=3 vectors.
    Simplex,
    /// Per-vector generation time against dimension.
    Bench,
    /// Random pure quantum states.
    Qstate,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Generate => "generate",
            Command::Means => "means",
            Command::Hist => "hist",
            Command::Tail => "tail",
            Command::Compare => "compare",
            Command::Simplex => "simplex",
            Command::Bench => "bench",
            Command::Qstate => "qstate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "prpv",
    version,
    about = "Pseudo-random probability vectors on the simplex"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Generation method. Defaults to norm; bench runs norm and trig when omitted.
    #[arg(long, value_enum)]
    pub method: Option<Method>,

    #[arg(long, default_value_t = 4)]
    pub dim: usize,

    /// Number of vectors (or states; starting repetitions for bench).
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u32,

    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,

    #[arg(long, default_value_t = 0.8)]
    pub threshold: f64,

    /// Shuffle components after the biased sample.
    #[arg(long)]
    pub shuffle: bool,

    /// One-based component index for hist.
    #[arg(long, default_value_t = 1)]
    pub component: usize,

    /// Output path; defaults to `<command>.<format>` in the working directory.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl RunConfig {
    /// Config with every flag at its default.
    pub fn new(command: Command) -> Self {
        RunConfig::parse_from(["prpv", command.as_str()])
    }

    pub fn method(&self) -> Method {
        self.method.unwrap_or(Method::Normalization)
    }

    pub fn output_path(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| {
            PathBuf::from(format!(
                "{}.{}",
                self.command.as_str(),
                self.format.extension()
            ))
        })
    }

    /// Checks ranges and flag combinations. Returns warnings for no-op flags.
    pub fn validate(&self) -> Result<Vec<String>> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.dim < 2 {
            return bad(format!("--dim must be at least 2, got {}", self.dim));
        }
        if self.samples < 1 {
            return bad("--samples must be at least 1".into());
        }
        if self.bins < 2 {
            return bad(format!("--bins must be at least 2, got {}", self.bins));
        }
        if !(self.threshold > 0.0 && self.threshold < 1.0) {
            return bad(format!(
                "--threshold must lie in (0, 1), got {}",
                self.threshold
            ));
        }
        if self.component < 1 || self.component > self.dim {
            return bad(format!("--component must lie in 1..={}", self.dim));
        }
        let mut warnings = Vec::new();
        match (self.method(), self.shuffle) {
            (Method::TrigExact, true) => return bad("trig-exact cannot be shuffled".into()),
            (Method::Iid, true) => warnings.push("--shuffle has no effect for iid".to_owned()),
            _ => {}
        }
        match self.command {
            Command::Simplex if self.dim != 3 => return bad("simplex requires --dim 3".into()),
            Command::Qstate | Command::Bench
                if matches!(self.method, Some(Method::Iid | Method::TrigExact)) =>
            {
                return bad(format!(
                    "{} supports norm and trig only",
                    self.command.as_str()
                ))
            }
            Command::Compare if self.method.is_some() || self.shuffle => {
                warnings.push("compare always uses shuffled norm and trig".to_owned())
            }
            _ => {}
        }
        Ok(warnings)
    }
}

/// One-line result of a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub command: Command,
    pub seed: u32,
    pub draws: u64,
    pub out: PathBuf,
    /// Command-specific `key=value` pairs.
    pub details: Vec<(String, String)>,
    pub warnings: Vec<String>,
}

impl Summary {
    pub fn detail(&self, key: &str) -> Option<&str> {
        self.details
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "command={} seed={} draws={} out={}",
            self.command.as_str(),
            self.seed,
            self.draws,
            self.out.display()
        )?;
        for (k, v) in &self.details {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Draws `config.samples` vectors, passing successes to `visit`.
/// Returns the number of trig-exact domain failures.
fn for_each_sample(
    config: &RunConfig,
    rng: &mut Mt19937,
    mut visit: impl FnMut(ProbabilityVector) -> Result<()>,
) -> Result<u64> {
    let mut failures = 0;
    for _ in 0..config.samples {
        match sample(config.method(), config.dim, config.shuffle, rng) {
            Ok(p) => visit(p)?,
            Err(Error::Domain { .. }) => failures += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(failures)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
}

fn finish(mut w: BufWriter<File>, path: &Path) -> Result<()> {
    w.flush().map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

/// Runs one command, writing its output file.
pub fn run(config: &RunConfig) -> Result<Summary> {
    let warnings = config.validate()?;
    let path = config.output_path();
    let mut rng = Mt19937::new(config.seed);
    let mut details: Vec<(String, String)> = Vec::new();
    let method = config.method();
    let mut out = create(&path)?;

    let failure_details = |details: &mut Vec<(String, String)>, failures: u64| {
        if method == Method::TrigExact {
            details.push(("failures".into(), failures.to_string()));
            details.push((
                "failure_rate".into(),
                (failures as f64 / config.samples as f64).to_string(),
            ));
        }
    };

    match config.command {
        Command::Generate => {
            let mut vectors = Vec::new();
            let failures = for_each_sample(config, &mut rng, |p| {
                vectors.push(p.into_components());
                Ok(())
            })?;
            match config.format {
                Format::Csv => io::write_vectors_csv(&mut out, config.dim, &vectors)?,
                Format::Json => io::write_json(
                    &mut out,
                    &io::VectorsDoc {
                        method,
                        dim: config.dim,
                        shuffled: config.shuffle && method != Method::Iid,
                        vectors,
                    },
                )?,
            }
            failure_details(&mut details, failures);
        }
        Command::Means => {
            let mut acc = ComponentMeans::new(config.dim);
            let failures = for_each_sample(config, &mut rng, |p| acc.accumulate(&p))?;
            let means = acc.means();
            match config.format {
                Format::Csv => io::write_means_csv(&mut out, &means)?,
                Format::Json => io::write_json(
                    &mut out,
                    &io::MeansDoc {
                        method,
                        dim: config.dim,
                        shuffled: config.shuffle && method != Method::Iid,
                        samples: acc.count(),
                        means,
                    },
                )?,
            }
            failure_details(&mut details, failures);
        }
        Command::Hist => {
            let mut h = Histogram::new(config.bins)?;
            let c = config.component - 1;
            let failures = for_each_sample(config, &mut rng, |p| h.push(p[c]))?;
            match config.format {
                Format::Csv => io::write_histogram_csv(&mut out, &h)?,
                Format::Json => io::write_json(
                    &mut out,
                    &io::HistogramDoc {
                        method,
                        dim: config.dim,
                        component: config.component,
                        histogram: h,
                    },
                )?,
            }
            failure_details(&mut details, failures);
        }
        Command::Tail => {
            let mut counter = TailCounter::new(config.threshold)?;
            let failures = for_each_sample(config, &mut rng, |p| {
                counter.observe(p.components());
                Ok(())
            })?;
            let report = io::TailReport {
                method,
                dim: config.dim,
                shuffled: config.shuffle && method != Method::Iid,
                samples: counter.total(),
                threshold: config.threshold,
                fraction: counter.fraction()?,
            };
            details.push(("fraction".into(), report.fraction.to_string()));
            match config.format {
                Format::Csv => io::write_tail_csv(&mut out, &report)?,
                Format::Json => io::write_json(&mut out, &report)?,
            }
            failure_details(&mut details, failures);
        }
        Command::Compare => {
            let mut hists = [Histogram::new(config.bins)?, Histogram::new(config.bins)?];
            for (h, m) in hists.iter_mut().zip([Method::Normalization, Method::Trig]) {
                for _ in 0..config.samples {
                    h.push(sample_unbiased(m, config.dim, &mut rng)?[0])?;
                }
            }
            let [norm, trig] = hists;
            let tv = total_variation(&norm, &trig)?;
            details.push(("tv".into(), tv.to_string()));
            match config.format {
                Format::Csv => io::write_compare_csv(&mut out, &norm, &trig)?,
                Format::Json => io::write_json(
                    &mut out,
                    &io::CompareDoc {
                        dim: config.dim,
                        samples: config.samples,
                        total_variation: tv,
                        norm,
                        trig,
                    },
                )?,
            }
        }
        Command::Simplex => {
            let mut points = Vec::new();
            let failures = for_each_sample(config, &mut rng, |p| {
                points.push(simplex_point(p.components())?);
                Ok(())
            })?;
            match config.format {
                Format::Csv => io::write_points_csv(&mut out, &points)?,
                Format::Json => io::write_json(
                    &mut out,
                    &io::PointsDoc {
                        method,
                        points: points.iter().map(|&(x, y)| [x, y]).collect(),
                    },
                )?,
            }
            failure_details(&mut details, failures);
        }
        Command::Bench => {
            let methods = match config.method {
                Some(m) => vec![m],
                None => vec![Method::Normalization, Method::Trig],
            };
            let mut records = Vec::new();
            for m in methods {
                for d in power_of_two_dims(config.dim) {
                    records.push(time_method_median(
                        m,
                        d,
                        config.samples,
                        config.seed,
                        DEFAULT_RUNS,
                    )?);
                }
            }
            match config.format {
                Format::Csv => io::write_bench_csv(&mut out, &records)?,
                Format::Json => io::write_json(&mut out, &records)?,
            }
            details.push(("records".into(), records.len().to_string()));
        }
        Command::Qstate => {
            let states = (0..config.samples)
                .map(|_| random_pure_state(config.dim, method, &mut rng))
                .collect::<Result<Vec<_>>>()?;
            match config.format {
                Format::Csv => io::write_states_csv(&mut out, &states)?,
                Format::Json => {
                    io::write_json(&mut out, &io::StatesDoc::new(method, config.dim, &states))?
                }
            }
        }
    }
    finish(out, &path)?;

    Ok(Summary {
        command: config.command,
        seed: config.seed,
        draws: rng.draw_count(),
        out: path,
        details,
        warnings,
    })
}
