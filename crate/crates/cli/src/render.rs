//! Text, JSON and CSV renderings of computed results.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use lyubeznik::{BettiVector, ConeLocalDims, LyubeznikTable, VarietyExpr};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::Number;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn number(n: &BigUint) -> Number {
    Number::from_str(&n.to_string()).expect("decimal digits form a JSON number")
}

fn numbers(ns: &[BigUint]) -> Vec<Number> {
    ns.iter().map(number).collect()
}

/// Everything `compute` reports. Field order is the JSON key order.
#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub expr: String,
    pub dim: usize,
    pub betti: Vec<Number>,
    pub table: Vec<Vec<Number>>,
    pub nonzero: Vec<(usize, usize, Number)>,
    pub verified: bool,
}

impl OutputDocument {
    pub fn new(expr: &VarietyExpr, b: &BettiVector, t: &LyubeznikTable, verified: bool) -> Self {
        OutputDocument {
            expr: expr.to_string(),
            dim: b.dim(),
            betti: numbers(b.betti()),
            table: t.rows().map(numbers).collect(),
            nonzero: t.nonzero().map(|(i, j, v)| (i, j, number(v))).collect(),
            verified,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("i,j,lambda\n");
                for (i, j, v) in &self.nonzero {
                    writeln!(out, "{i},{j},{v}").unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                writeln!(out, "variety:  {}", self.expr).unwrap();
                writeln!(out, "dim:      {}", self.dim).unwrap();
                writeln!(out, "betti:    {}", join(&self.betti, " ")).unwrap();
                writeln!(
                    out,
                    "verified: {}",
                    if self.verified { "yes" } else { "skipped" }
                )
                .unwrap();
                out.push('\n');
                out.push_str(&grid(&self.table));
                out
            }
        }
    }
}

#[derive(Serialize)]
struct BettiDocument {
    expr: String,
    dim: usize,
    betti: Vec<Number>,
}

pub fn render_betti(expr: &VarietyExpr, b: &BettiVector, format: Format) -> String {
    match format {
        Format::Json => json(&BettiDocument {
            expr: expr.to_string(),
            dim: b.dim(),
            betti: numbers(b.betti()),
        }),
        Format::Csv => {
            let mut out = String::from("j,beta\n");
            for (j, v) in b.betti().iter().enumerate() {
                writeln!(out, "{j},{v}").unwrap();
            }
            out
        }
        Format::Text => format!("{}\n", join(&numbers(b.betti()), " ")),
    }
}

/// Side-by-side exact-sequence dimensions and closed-form `λ_{0,j}`.
pub fn render_oracle(dims: &ConeLocalDims, t: &LyubeznikTable) -> String {
    let rows: Vec<[String; 3]> = dims
        .dims()
        .iter()
        .zip(t.socle_column())
        .enumerate()
        .map(|(j, (d, l))| [j.to_string(), d.to_string(), l.to_string()])
        .collect();
    let header = ["j", "dim H^j_P(C)", "lambda_0j"];
    let widths: Vec<usize> = (0..3)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut out = String::new();
    let line = |cells: [&str; 3], out: &mut String| {
        let cells: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", cells.join("  ")).unwrap();
    };
    line(header, &mut out);
    for r in &rows {
        line([&r[0], &r[1], &r[2]], &mut out);
    }
    out
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn join(ns: &[Number], sep: &str) -> String {
    ns.iter()
        .map(Number::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Rows are `i`, columns are `j`, right-aligned.
fn grid(table: &[Vec<Number>]) -> String {
    let n = table.len();
    let corner = "i\\j";
    let cells: Vec<Vec<String>> = table
        .iter()
        .map(|row| row.iter().map(Number::to_string).collect())
        .collect();
    let label_width = corner.len().max((n - 1).to_string().len());
    let widths: Vec<usize> = (0..n)
        .map(|j| {
            cells
                .iter()
                .map(|row| row[j].len())
                .chain([j.to_string().len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut out = format!("{corner:>label_width$}");
    for (j, w) in widths.iter().enumerate() {
        write!(out, "  {j:>w$}").unwrap();
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        write!(out, "{i:>label_width$}").unwrap();
        for (v, w) in row.iter().zip(&widths) {
            write!(out, "  {v:>w$}").unwrap();
        }
        out.push('\n');
    }
    out
}
