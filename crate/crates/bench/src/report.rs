//! Benchmark rows and their CSV / Markdown renderings.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::error::BenchError;

pub const CSV_HEADER: &str = "example,n,p,theta,backend,iterations,rel_residual,rho,elapsed_ms";

/// One (problem, θ, backend) cell. A failed cell has no iteration count or
/// residual; the reason is kept in memory only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub example: String,
    pub n: usize,
    pub p: Option<f64>,
    pub theta: f64,
    pub backend: String,
    pub iterations: Option<usize>,
    pub rel_residual: Option<f64>,
    pub rho: Option<f64>,
    pub elapsed_ms: f64,
    #[serde(skip)]
    pub error: Option<String>,
}

impl BenchRow {
    pub fn failed(&self) -> bool {
        self.iterations.is_none()
    }

    /// The row without its timing column, for determinism checks.
    pub fn untimed(&self) -> BenchRow {
        BenchRow {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

pub fn write_csv<W: io::Write>(out: W, rows: &[BenchRow]) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| BenchError::Report(e.into()))?;
    Ok(())
}

pub fn to_csv(rows: &[BenchRow]) -> Result<String, BenchError> {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn read_csv<R: io::Read>(input: R) -> Result<Vec<BenchRow>, BenchError> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header.join(",") != CSV_HEADER {
        return Err(BenchError::Config(format!(
            "unexpected report header '{}'",
            header.join(",")
        )));
    }
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn to_markdown(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "| example | n | p | θ | backend | N | rel. residual | ρ | ms |"
    );
    let _ = writeln!(s, "|---|---:|---:|---:|---|---:|---:|---:|---:|");
    for r in rows {
        let n_col = match (&r.iterations, &r.error) {
            (Some(k), _) => k.to_string(),
            (None, Some(e)) => format!("failed: {e}"),
            (None, None) => "failed".into(),
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {:.1} |",
            r.example,
            r.n,
            opt(r.p),
            r.theta,
            r.backend,
            n_col,
            r.rel_residual
                .map_or_else(|| "-".into(), |v| format!("{v:.3e}")),
            r.rho.map_or_else(|| "-".into(), |v| format!("{v:.4}")),
            r.elapsed_ms
        );
    }
    s
}
