//! CSV and JSON encodings of every output the CLI produces, with readers that
//! parse them back.
//!
//! CSV files are ASCII with a header row, `,` separators, `.` decimals and one
//! record per line. Vector components are written with 17 significant digits;
//! other reals use the shortest representation that round-trips.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bench::BenchRecord;
use crate::error::{Error, Result};
use crate::quantum::PureState;
use crate::stats::Histogram;
use crate::vector::Method;

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn parse_f64(field: &str) -> Result<f64> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("`{field}` is not a number")))
}

fn parse_usize(field: &str) -> Result<usize> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("`{field}` is not an index")))
}

// ---------------------------------------------------------------- vectors

/// 17 significant digits: enough to recover any f64 exactly.
pub fn format_component(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_vectors_csv<W: Write>(w: W, dim: usize, vectors: &[Vec<f64>]) -> Result<()> {
    let mut out = csv_writer(w);
    out.write_record((1..=dim).map(|j| format!("p{j}")))?;
    for v in vectors {
        out.write_record(v.iter().map(|&c| format_component(c)))?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_vectors_csv<R: Read>(r: R) -> Result<Vec<Vec<f64>>> {
    let mut rdr = csv::Reader::from_reader(r);
    rdr.records()
        .map(|rec| rec?.iter().map(parse_f64).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorsDoc {
    pub method: Method,
    pub dim: usize,
    pub shuffled: bool,
    pub vectors: Vec<Vec<f64>>,
}

// ---------------------------------------------------------------- means

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeansDoc {
    pub method: Method,
    pub dim: usize,
    pub shuffled: bool,
    pub samples: u64,
    pub means: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct MeanRow {
    component: usize,
    mean: f64,
}

pub fn write_means_csv<W: Write>(w: W, means: &[f64]) -> Result<()> {
    let mut out = csv_writer(w);
    for (i, &mean) in means.iter().enumerate() {
        out.serialize(MeanRow {
            component: i + 1,
            mean,
        })?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_means_csv<R: Read>(r: R) -> Result<Vec<f64>> {
    let mut means = Vec::new();
    for (i, row) in csv::Reader::from_reader(r)
        .deserialize::<MeanRow>()
        .enumerate()
    {
        let row = row?;
        if row.component != i + 1 {
            return Err(Error::Parse(format!(
                "component {} out of order",
                row.component
            )));
        }
        means.push(row.mean);
    }
    Ok(means)
}

// ---------------------------------------------------------------- histogram

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramDoc {
    pub method: Method,
    pub dim: usize,
    pub component: usize,
    pub histogram: Histogram,
}

#[derive(Serialize, Deserialize)]
struct BinRow {
    bin_low: f64,
    bin_high: f64,
    count: u64,
    density: f64,
}

pub fn write_histogram_csv<W: Write>(w: W, h: &Histogram) -> Result<()> {
    let mut out = csv_writer(w);
    for (i, (&count, density)) in h.counts().iter().zip(h.densities()).enumerate() {
        let (bin_low, bin_high) = h.bin_edges(i);
        out.serialize(BinRow {
            bin_low,
            bin_high,
            count,
            density,
        })?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_histogram_csv<R: Read>(r: R) -> Result<Histogram> {
    let counts = csv::Reader::from_reader(r)
        .deserialize::<BinRow>()
        .map(|row| Ok(row?.count))
        .collect::<Result<Vec<_>>>()?;
    Histogram::from_counts(counts)
}

// ---------------------------------------------------------------- tail

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailReport {
    pub method: Method,
    pub dim: usize,
    pub shuffled: bool,
    pub samples: u64,
    pub threshold: f64,
    pub fraction: f64,
}

pub fn write_tail_csv<W: Write>(w: W, report: &TailReport) -> Result<()> {
    let mut out = csv_writer(w);
    out.serialize(report)?;
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_tail_csv<R: Read>(r: R) -> Result<TailReport> {
    csv::Reader::from_reader(r)
        .deserialize()
        .next()
        .ok_or(Error::EmptyInput)?
        .map_err(Error::from)
}

// ---------------------------------------------------------------- compare

/// First-component histograms of the two shuffled methods.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareDoc {
    pub dim: usize,
    pub samples: u64,
    pub total_variation: f64,
    pub norm: Histogram,
    pub trig: Histogram,
}

#[derive(Serialize, Deserialize)]
struct CompareRow {
    bin_low: f64,
    bin_high: f64,
    norm_count: u64,
    trig_count: u64,
}

pub fn write_compare_csv<W: Write>(w: W, norm: &Histogram, trig: &Histogram) -> Result<()> {
    if norm.bins() != trig.bins() {
        return Err(Error::BinMismatch(norm.bins(), trig.bins()));
    }
    let mut out = csv_writer(w);
    for (i, (&a, &b)) in norm.counts().iter().zip(trig.counts()).enumerate() {
        let (bin_low, bin_high) = norm.bin_edges(i);
        out.serialize(CompareRow {
            bin_low,
            bin_high,
            norm_count: a,
            trig_count: b,
        })?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_compare_csv<R: Read>(r: R) -> Result<(Histogram, Histogram)> {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for row in csv::Reader::from_reader(r).deserialize::<CompareRow>() {
        let row = row?;
        a.push(row.norm_count);
        b.push(row.trig_count);
    }
    Ok((Histogram::from_counts(a)?, Histogram::from_counts(b)?))
}

// ---------------------------------------------------------------- simplex points

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointsDoc {
    pub method: Method,
    pub points: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct PointRow {
    x: f64,
    y: f64,
}

pub fn write_points_csv<W: Write>(w: W, points: &[(f64, f64)]) -> Result<()> {
    let mut out = csv_writer(w);
    for &(x, y) in points {
        out.serialize(PointRow { x, y })?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_points_csv<R: Read>(r: R) -> Result<Vec<(f64, f64)>> {
    csv::Reader::from_reader(r)
        .deserialize::<PointRow>()
        .map(|row| row.map(|p| (p.x, p.y)).map_err(Error::from))
        .collect()
}

// ---------------------------------------------------------------- states

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatesDoc {
    pub method: Method,
    pub dim: usize,
    /// One entry per state, each a list of `[re, im]` amplitudes.
    pub states: Vec<Vec<[f64; 2]>>,
}

impl StatesDoc {
    pub fn new(method: Method, dim: usize, states: &[PureState]) -> Self {
        StatesDoc {
            method,
            dim,
            states: states
                .iter()
                .map(|s| s.amplitudes().iter().map(|c| [c.re, c.im]).collect())
                .collect(),
        }
    }

    pub fn to_states(&self) -> Vec<PureState> {
        self.states
            .iter()
            .map(|s| {
                PureState::from_amplitudes(
                    s.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
                )
            })
            .collect()
    }
}

/// Rows `j,re,im` with one-based `j`; states follow each other in blocks of `d` rows.
pub fn write_states_csv<W: Write>(w: W, states: &[PureState]) -> Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["j", "re", "im"])?;
    for s in states {
        for (j, c) in s.amplitudes().iter().enumerate() {
            out.write_record([(j + 1).to_string(), c.re.to_string(), c.im.to_string()])?;
        }
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_states_csv<R: Read>(r: R) -> Result<Vec<PureState>> {
    let mut states = Vec::new();
    let mut current: Vec<Complex64> = Vec::new();
    for rec in csv::Reader::from_reader(r).records() {
        let rec = rec?;
        if rec.len() != 3 {
            return Err(Error::Parse(format!(
                "expected 3 fields, got {}",
                rec.len()
            )));
        }
        let j = parse_usize(&rec[0])?;
        if j == 1 && !current.is_empty() {
            states.push(PureState::from_amplitudes(std::mem::take(&mut current)));
        }
        if j != current.len() + 1 {
            return Err(Error::Parse(format!("amplitude index {j} out of order")));
        }
        current.push(Complex64::new(parse_f64(&rec[1])?, parse_f64(&rec[2])?));
    }
    if !current.is_empty() {
        states.push(PureState::from_amplitudes(current));
    }
    Ok(states)
}

// ---------------------------------------------------------------- bench

pub fn write_bench_csv<W: Write>(w: W, records: &[BenchRecord]) -> Result<()> {
    let mut out = csv_writer(w);
    for r in records {
        out.serialize(r)?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_bench_csv<R: Read>(r: R) -> Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(r)
        .deserialize()
        .map(|row| row.map_err(Error::from))
        .collect()
}

pub fn write_json<W: Write, T: Serialize>(w: W, doc: &T) -> Result<()> {
    let mut w = w;
    serde_json::to_writer_pretty(&mut w, doc)?;
    w.write_all(b"\n").map_err(|source| Error::Io {
        path: "<output>".into(),
        source,
    })?;
    Ok(())
}

pub fn read_json<R: Read, T: for<'de> Deserialize<'de>>(r: R) -> Result<T> {
    Ok(serde_json::from_reader(r)?)
}
