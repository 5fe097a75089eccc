//! CSV and JSON writers.
//!
//! Both formats are UTF-8 with `\n` line endings. Floats are written with 17
//! significant digits in scientific notation, which round-trips every `f64`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::ser::{Formatter, Serializer};

use crate::batch::BatchReport;
use crate::config::Format;
use crate::error::{BenchError, Result};

/// `v` with 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(report: &BatchReport, mut w: W) -> io::Result<()> {
    let mut header = String::from("run,seed,final_error");
    for m in &report.config.milestones {
        header.push_str(&format!(",milestone_{m}"));
    }
    writeln!(w, "{header}")?;
    for run in &report.runs {
        write!(
            w,
            "{},{},{}",
            run.run,
            run.seed,
            format_float(run.final_error)
        )?;
        for &e in &run.milestone_errors {
            write!(w, ",{}", format_float(e))?;
        }
        writeln!(w)?;
    }
    let s = &report.stats;
    writeln!(w, "# stats")?;
    for (name, v) in [
        ("min", s.min),
        ("max", s.max),
        ("median", s.median),
        ("mean", s.mean),
        ("std", s.std),
    ] {
        writeln!(w, "# {name},{}", format_float(v))?;
    }
    writeln!(w, "# count,{}", s.count)?;
    if let Some(rate) = report.success_rate {
        writeln!(w, "# success_rate,{}", format_float(rate))?;
    }
    Ok(())
}

struct Precise;

impl Formatter for Precise {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_float(value).as_bytes())
    }
}

fn check_finite(report: &BatchReport) -> Result<()> {
    let s = &report.stats;
    let mut values = vec![s.min, s.max, s.median, s.mean, s.std];
    values.extend(report.reference_optimum);
    values.extend(report.success_rate);
    for run in &report.runs {
        values.extend([run.final_error, run.final_fitness, run.wall_clock_secs]);
        values.extend(&run.final_x);
        values.extend(&run.milestone_errors);
    }
    match values.iter().find(|v| !v.is_finite()) {
        Some(v) => Err(BenchError::Serialize(format!(
            "JSON cannot represent the non-finite value {v}; use --format csv"
        ))),
        None => Ok(()),
    }
}

pub fn write_json<W: Write>(report: &BatchReport, mut w: W) -> Result<()> {
    check_finite(report)?;
    let mut ser = Serializer::with_formatter(&mut w, Precise);
    serde::Serialize::serialize(report, &mut ser)
        .map_err(|e| BenchError::Serialize(e.to_string()))?;
    writeln!(w).map_err(|e| BenchError::Serialize(e.to_string()))
}

pub fn read_json<R: io::Read>(r: R) -> Result<BatchReport> {
    serde_json::from_reader(r).map_err(|e| BenchError::Serialize(e.to_string()))
}

/// Renders `report` in `format`.
pub fn render(report: &BatchReport, format: Format) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => write_csv(report, &mut buf).expect("writing to memory"),
        Format::Json => write_json(report, &mut buf)?,
    }
    Ok(buf)
}

/// Writes `report` to `path`, or to stdout when `path` is `None`.
pub fn export(report: &BatchReport, format: Format, path: Option<&Path>) -> Result<()> {
    let bytes = render(report, format)?;
    let written = match path {
        Some(p) => fs::write(p, &bytes),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(&bytes).and_then(|()| out.flush())
        }
    };
    written.map_err(|source| BenchError::Export {
        path: path.map_or_else(|| PathBuf::from("<stdout>"), Path::to_path_buf),
        source,
    })
}
