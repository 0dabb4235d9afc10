//! `lyubeznik`: Betti vectors and Lyubeznik tables from the command line.
//!
//! Exit codes: 0 on success, 1 for user errors (bad expressions, bad graph
//! files, dimension over `--max-dim`), 2 when the exact-sequence oracle
//! disagrees with the closed forms or another internal invariant breaks.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lyubeznik::{
    betti, cone_local_derham_dims, corner_from_graph, dimension, lyubeznik_table, parse_variety,
    BettiVector, ComponentGraph, Error, LyubeznikTable, ParseError, VarietyExpr,
};

use render::{render_betti, render_oracle, Format, OutputDocument};

#[derive(Parser)]
#[command(
    name = "lyubeznik",
    version,
    about = "Lyubeznik numbers of cones over nonsingular projective varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti vector and full Lyubeznik table, cross-checked by the cone oracle.
    Compute {
        #[command(flatten)]
        input: ExprInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Skip the exact-sequence cross-check.
        #[arg(long)]
        no_verify: bool,
    },
    /// De Rham Betti vector only.
    Betti {
        #[command(flatten)]
        input: ExprInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Local de Rham cohomology of the cone next to the closed-form λ_{0,j}.
    Oracle {
        #[command(flatten)]
        input: ExprInput,
    },
    /// Top Lyubeznik number λ_{r+1,r+1} from a component graph JSON file.
    Graph { file: std::path::PathBuf },
}

#[derive(Args)]
struct ExprInput {
    /// Variety expression, e.g. "Curve(1) x P(1)" or "CI(5; 2,2)".
    expr: String,
    /// Reject varieties of larger dimension.
    #[arg(long, default_value_t = 64)]
    max_dim: usize,
}

enum Failure {
    User(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::User(e.to_string())
        }
    }
}

fn parse_failure(text: &str, e: &ParseError) -> Failure {
    let caret = " ".repeat(text[..e.position().min(text.len())].chars().count());
    Failure::User(format!("{e}\n  {text}\n  {caret}^"))
}

impl ExprInput {
    fn load(&self) -> Result<(VarietyExpr, BettiVector), Failure> {
        let expr = parse_variety(&self.expr).map_err(|e| parse_failure(&self.expr, &e))?;
        let dim = dimension(&expr);
        if dim > self.max_dim {
            return Err(Failure::User(format!(
                "dimension {dim} exceeds --max-dim {}",
                self.max_dim
            )));
        }
        let b = betti(&expr)?;
        Ok((expr, b))
    }
}

/// Compares the oracle column with the table's `λ_{0,j}`, `0 ≤ j ≤ r`.
fn verify(b: &BettiVector, t: &LyubeznikTable) -> Result<(), Failure> {
    let dims = cone_local_derham_dims(b)?;
    if dims.dims() != t.socle_column() {
        return Err(Failure::Internal(format!(
            "oracle mismatch for {b}: exact sequences give {:?}, closed forms give {:?}",
            dims.dims(),
            t.socle_column()
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute {
            input,
            format,
            no_verify,
        } => {
            let (expr, b) = input.load()?;
            let t = lyubeznik_table(&b)?;
            if !no_verify {
                verify(&b, &t)?;
            }
            Ok(OutputDocument::new(&expr, &b, &t, !no_verify).render(format))
        }
        Command::Betti { input, format } => {
            let (expr, b) = input.load()?;
            Ok(render_betti(&expr, &b, format))
        }
        Command::Oracle { input } => {
            let (_, b) = input.load()?;
            let t = lyubeznik_table(&b)?;
            let dims = cone_local_derham_dims(&b)?;
            let out = render_oracle(&dims, &t);
            if dims.dims() != t.socle_column() {
                return Err(Failure::Internal(format!("oracle mismatch\n{out}")));
            }
            Ok(out)
        }
        Command::Graph { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::User(format!("{}: {e}", file.display())))?;
            let g = ComponentGraph::from_json(&text)?;
            Ok(format!("{}\n", corner_from_graph(&g)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 2 for usage errors; here 2 means an internal failure.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error (this is a bug): {msg}");
            ExitCode::from(2)
        }
    }
}
