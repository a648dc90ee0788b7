//! Sweeps of the win probability over a grid of accelerations, emitted as
//! CSV or JSON.

use std::f64::consts::FRAC_PI_4;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rindler::{closed_form_p, simulated_p, AccelerationParameter, CLASSICAL_THRESHOLD};

/// CSV header, in column order.
pub const CSV_HEADER: [&str; 4] = ["r", "p_simulated", "p_closed_form", "classical_threshold"];

/// Significant digits written to CSV.
pub const CSV_SIGNIFICANT_DIGITS: usize = 12;

pub const DEFAULT_STEPS: usize = 101;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidSweep(format!(
                "unknown format {other:?}, expected csv or json"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    pub format: OutputFormat,
    pub include_closed_form: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            r_min: 0.0,
            r_max: FRAC_PI_4,
            steps: DEFAULT_STEPS,
            format: OutputFormat::Csv,
            include_closed_form: true,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let lo = AccelerationParameter::new(self.r_min).map_err(|_| {
            Error::InvalidSweep(format!("r_min = {} outside [0, pi/4]", self.r_min))
        })?;
        let hi = AccelerationParameter::new(self.r_max).map_err(|_| {
            Error::InvalidSweep(format!("r_max = {} outside [0, pi/4]", self.r_max))
        })?;
        if lo >= hi {
            return Err(Error::InvalidSweep(format!(
                "r_min ({}) must be below r_max ({})",
                self.r_min, self.r_max
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidSweep(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        Ok(())
    }

    /// Uniform grid including both endpoints, ascending.
    pub fn grid(&self) -> Result<Vec<AccelerationParameter>> {
        self.validate()?;
        let lo = AccelerationParameter::new(self.r_min)?.value();
        let hi = AccelerationParameter::new(self.r_max)?.value();
        let last = self.steps - 1;
        (0..self.steps)
            .map(|k| {
                let r = if k == last {
                    hi
                } else {
                    lo + (hi - lo) * k as f64 / last as f64
                };
                AccelerationParameter::new(r)
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub r: f64,
    pub p_simulated: f64,
    pub p_closed_form: Option<f64>,
    pub classical_threshold: f64,
}

impl SweepRecord {
    pub fn evaluate(r: AccelerationParameter, include_closed_form: bool) -> Self {
        Self {
            r: r.value(),
            p_simulated: simulated_p(r),
            p_closed_form: include_closed_form.then(|| closed_form_p(r)),
            classical_threshold: CLASSICAL_THRESHOLD,
        }
    }
}

/// Evaluates every grid point, in ascending `r`.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    Ok(config
        .grid()?
        .into_iter()
        .map(|r| SweepRecord::evaluate(r, config.include_closed_form))
        .collect())
}

/// Formats `x` with `digits` significant digits in plain decimal notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 {
            "0".to_owned()
        } else {
            x.to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let rendered = format!("{x:.decimals$}");
    // Rounding may carry into a new leading digit (9.99… → 10.0…).
    let rounded: f64 = rendered.parse().expect("formatted float");
    let new_magnitude = rounded.abs().log10().floor() as i64;
    if new_magnitude > magnitude && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        rendered
    }
}

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    let fmt = |x: f64| format_significant(x, CSV_SIGNIFICANT_DIGITS);
    for rec in records {
        writer.write_record([
            fmt(rec.r),
            fmt(rec.p_simulated),
            rec.p_closed_form.map(fmt).unwrap_or_default(),
            fmt(rec.classical_threshold),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(records: &[SweepRecord], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Runs the sweep and writes it in the configured format.
pub fn emit<W: Write>(config: &SweepConfig, out: W) -> Result<()> {
    let records = run_sweep(config)?;
    match config.format {
        OutputFormat::Csv => write_csv(&records, out),
        OutputFormat::Json => write_json(&records, out),
    }
}

/// Reads back CSV produced by [`write_csv`].
pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::InvalidSweep(format!(
            "unexpected CSV header {header:?}"
        )));
    }
    reader
        .deserialize()
        .map(|row| row.map_err(Error::from))
        .collect()
}
