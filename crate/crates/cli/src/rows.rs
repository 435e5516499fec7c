//! Tabular sample output. The column order x,t,rho,v,T is fixed so the
//! files drop straight into gnuplot or a spreadsheet; a field a family does
//! not define is left empty in CSV and null in JSON.

use serde::Serialize;
use std::io::{self, Write};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Row {
    pub x: f64,
    pub t: f64,
    pub rho: f64,
    pub v: Option<f64>,
    #[serde(rename = "T")]
    pub temperature: Option<f64>,
}

pub const CSV_HEADER: &str = "x,t,rho,v,T";

pub fn write_csv(out: &mut dyn Write, rows: &[Row]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        write!(out, "{},{},{},", r.x, r.t, r.rho)?;
        if let Some(v) = r.v {
            write!(out, "{v}")?;
        }
        match r.temperature {
            Some(temp) => writeln!(out, ",{temp}")?,
            None => writeln!(out, ",")?,
        }
    }
    Ok(())
}

pub fn write_json(out: &mut dyn Write, rows: &[Row]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)?;
    writeln!(out)
}
