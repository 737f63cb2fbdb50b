//! Rendering result rows as JSON, CSV or a markdown table.

use serde::Serialize;
use thiserror::Error;

use crate::config::Format;
use crate::run::ResultRow;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("no results")]
    NoResults,
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Scientific notation with eight significant digits and a signed two-digit
/// exponent, e.g. `-3.0000000E+01`.
pub fn format_fv(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{v:.7E}");
    let (mantissa, exp) = s.split_once('E').expect("E format has an exponent");
    let e: i32 = exp.parse().expect("integer exponent");
    let sign = if e < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", e.abs())
}

fn fmt_coord(v: f64) -> String {
    // `{}` on f64 drops a trailing `.0`
    format!("{v}")
}

/// `(6,6)`; a constant vector longer than four entries shrinks to
/// `(10,…,10)`.
pub fn format_point(x: &[f64]) -> String {
    if x.len() > 4 && x.iter().all(|&v| v == x[0]) {
        return format!("({0},…,{0})", fmt_coord(x[0]));
    }
    let parts: Vec<String> = x.iter().map(|&v| fmt_coord(v)).collect();
    format!("({})", parts.join(","))
}

#[derive(Serialize)]
struct CsvRow<'a> {
    prob: &'a str,
    n: usize,
    m: usize,
    x0: String,
    nio: usize,
    nii: usize,
    ni: usize,
    nf0: u64,
    nf: u64,
    fv: f64,
    cpu_seconds: f64,
    n_cycle1: usize,
    n_cycle2: usize,
    status: String,
}

fn status_name(r: &ResultRow) -> String {
    format!("{:?}", r.status)
}

pub fn emit_table(rows: &[ResultRow], format: Format) -> Result<String, TableError> {
    if rows.is_empty() {
        return Err(TableError::NoResults);
    }
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                let xs: Vec<String> = r.x0.iter().map(|&v| fmt_coord(v)).collect();
                w.serialize(CsvRow {
                    prob: &r.prob,
                    n: r.n,
                    m: r.m,
                    x0: xs.join(";"),
                    nio: r.nio,
                    nii: r.nii,
                    ni: r.ni,
                    nf0: r.nf0,
                    nf: r.nf,
                    fv: r.fv,
                    cpu_seconds: r.cpu_seconds,
                    n_cycle1: r.n_cycle1,
                    n_cycle2: r.n_cycle2,
                    status: status_name(r),
                })?;
            }
            String::from_utf8(w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?).expect("csv output is utf-8")
        }
        Format::Markdown => {
            let mut s = String::from("| Prob | n/m | Initial point | NIO | NII | NF0 | NF | FV | CPU |\n");
            s.push_str("|---|---|---|---:|---:|---:|---:|---:|---:|\n");
            for r in rows {
                let fv = if r.status == ssfd::SolveStatus::KktPoint {
                    format_fv(r.fv)
                } else {
                    format!("{} ({})", format_fv(r.fv), status_name(r))
                };
                s.push_str(&format!(
                    "| {} | {}/{} | {} | {} | {} | {} | {} | {} | {:.6} |\n",
                    r.prob,
                    r.n,
                    r.m,
                    format_point(&r.x0),
                    r.nio,
                    r.nii,
                    r.nf0,
                    r.nf,
                    fv,
                    r.cpu_seconds
                ));
            }
            s
        }
    })
}
