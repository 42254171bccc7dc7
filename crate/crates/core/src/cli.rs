//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 verification or construction failure, 2 invalid
//! input, 3 nonexistence, 4 search budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::construct::construct_with_route;
use crate::error::Error;
use crate::group::{abelian_groups_of_order, AbelianGroup};
use crate::io::{from_csv, from_json, serialize, Format};
use crate::kotzig::kotzig_gamma;
use crate::latin::ddmols_prime_power;
use crate::oracle::{
    backtrack_search, SearchConfig, SearchMode, SearchResult, DEFAULT_NODE_BUDGET,
};
use crate::verify::{verify, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NONEXISTENCE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Environment variable holding the default node budget for `search`.
pub const NODE_BUDGET_ENV: &str = "GMAGIC_NODE_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "abelian-magic",
    version,
    about = "Magic squares over finite Abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Latex,
    Pretty,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Latex => Format::Latex,
            OutputFormat::Pretty => Format::Pretty,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Auto,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    FindOne,
    CountAll,
    CountOrbits,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a magic square over a group given as comma-separated moduli.
    Construct {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
        /// Write the array here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-check a serialized array. Exits 1 if it is not a magic square.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        /// Group presentation, required for CSV input.
        #[arg(long)]
        group: Option<String>,
    },
    /// Backtracking search for small squares.
    Search {
        #[arg(long)]
        group: String,
        /// Defaults to the square root of the group order.
        #[arg(long)]
        side: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::FindOne)]
        mode: Mode,
        #[arg(long, env = NODE_BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Construct and verify every group of order n² for min-side <= n <= max-side.
    Catalog {
        #[arg(long)]
        max_side: u64,
        #[arg(long, default_value_t = 3)]
        min_side: u64,
        /// Write the table here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Doubly diagonal orthogonal Latin squares of prime-power order.
    Latin {
        #[arg(long)]
        ddmols: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Kotzig array with the given number of rows over a group.
    Kotzig {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Nonexistence(_) => EXIT_NONEXISTENCE,
        Error::BudgetExhausted { .. } => EXIT_BUDGET,
        Error::ConstructionFailure(_) => EXIT_FAILED,
        _ => EXIT_INVALID,
    }
}

/// Run with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Run with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = std::result::Result<i32, Error>;

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::invalid(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Error> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::invalid(format!("cannot write output: {e}")))
}

fn report_lines(r: &VerificationReport) -> String {
    let mut s = format!("classification: {}\n", r.classification.as_str());
    s += &format!("bijective: {}\n", r.bijective);
    if let Some(mu) = &r.magic_sum {
        s += &format!("magic sum: {mu}\n");
    }
    s
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Construct {
            group,
            format,
            output,
        } => {
            let g = AbelianGroup::parse(&group)?;
            let c = construct_with_route(&g)?;
            let report = verify(&c.square);
            let body = serialize(&c.square, format.into());
            let summary = format!("group: {g}\nroute: {}\n{}", c.route, report_lines(&report));
            match (output, format) {
                (Some(path), _) => {
                    fs::write(&path, body).map_err(|e| io_err(&path, e))?;
                    emit(out, &summary)?;
                }
                (None, OutputFormat::Pretty) => emit(out, &format!("{body}\n{summary}"))?,
                (None, _) => {
                    emit(out, &body)?;
                    emit(err, &summary)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            file,
            format,
            group,
        } => {
            let text = fs::read_to_string(&file).map_err(|e| io_err(&file, e))?;
            let is_json = match format {
                InputFormat::Json => true,
                InputFormat::Csv => false,
                InputFormat::Auto => text.trim_start().starts_with('{'),
            };
            let a = if is_json {
                let a = from_json(&text)?;
                if let Some(lit) = group {
                    let g = AbelianGroup::parse(&lit)?;
                    if g.moduli() != a.group().moduli() {
                        return Err(Error::PresentationMismatch {
                            left: g.moduli().to_vec(),
                            right: a.group().moduli().to_vec(),
                        });
                    }
                }
                a
            } else {
                let lit = group.ok_or_else(|| Error::invalid("CSV input needs --group"))?;
                from_csv(&text, &AbelianGroup::parse(&lit)?)?
            };
            let report = verify(&a);
            emit(
                out,
                &format!(
                    "group: {}\nshape: {}x{}\n{}",
                    a.group(),
                    a.rows(),
                    a.cols(),
                    report_lines(&report)
                ),
            )?;
            Ok(if report.is_magic_square() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Search {
            group,
            side,
            mode,
            budget,
            seed,
            format,
        } => {
            let g = AbelianGroup::parse(&group)?;
            let mode = match mode {
                Mode::FindOne => SearchMode::FindOne,
                Mode::CountAll => SearchMode::CountAll,
                Mode::CountOrbits => SearchMode::CountOrbits,
            };
            let mut cfg = SearchConfig::new(g, mode)?.with_budget(budget);
            if let Some(side) = side {
                cfg.side = side;
            }
            if let Some(seed) = seed {
                cfg = cfg.with_seed(seed);
            }
            let outcome = backtrack_search(&cfg)?;
            match outcome.result {
                SearchResult::Found(a) => {
                    let report = verify(&a);
                    emit(out, &serialize(&a, format.into()))?;
                    emit(
                        err,
                        &format!("nodes: {}\n{}", outcome.nodes, report_lines(&report)),
                    )?;
                    Ok(EXIT_OK)
                }
                SearchResult::NoSquare => {
                    emit(
                        out,
                        &format!("no magic square of side {} over {}\n", cfg.side, cfg.group),
                    )?;
                    Ok(EXIT_NONEXISTENCE)
                }
                SearchResult::Count(n) => {
                    emit(out, &format!("{n}\n"))?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Catalog {
            max_side,
            min_side,
            output,
        } => {
            let mut table = String::from("group\tside\troute\tmagic_sum\tmillis\tstatus\n");
            let mut failures = 0;
            for n in min_side.max(3)..=max_side {
                for g in abelian_groups_of_order(n * n) {
                    let start = Instant::now();
                    let result = construct_with_route(&g);
                    let millis = start.elapsed().as_millis();
                    let row = match result {
                        Ok(c) => {
                            let r = verify(&c.square);
                            let mu = r.magic_sum.as_ref().map_or("-".into(), |m| m.to_string());
                            let ok = r.is_magic_square() && c.square.group() == &g;
                            failures += usize::from(!ok);
                            format!(
                                "{g}\t{n}\t{}\t{mu}\t{millis}\t{}\n",
                                c.route,
                                if ok { "ok" } else { "FAILED" }
                            )
                        }
                        Err(e) => {
                            failures += 1;
                            format!("{g}\t{n}\t-\t-\t{millis}\terror: {e}\n")
                        }
                    };
                    table += &row;
                }
            }
            match output {
                Some(path) => fs::write(&path, &table).map_err(|e| io_err(&path, e))?,
                None => emit(out, &table)?,
            }
            emit(err, &format!("{failures} failures\n"))?;
            Ok(if failures == 0 { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Latin { ddmols, format } => {
            let pair = ddmols_prime_power(ddmols)?;
            let text = match format {
                OutputFormat::Csv => pair.to_csv(),
                OutputFormat::Json => {
                    let doc = serde_json::json!({ "order": ddmols, "a": pair.rows_a(), "b": pair.rows_b() });
                    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
                }
                _ => {
                    let grid = |rows: Vec<Vec<usize>>| {
                        rows.iter()
                            .map(|r| r.iter().map(|x| format!("{x:>3}")).collect::<String>() + "\n")
                            .collect::<String>()
                    };
                    format!("A\n{}\nB\n{}", grid(pair.rows_a()), grid(pair.rows_b()))
                }
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Kotzig {
            group,
            rows,
            format,
        } => {
            let g = AbelianGroup::parse(&group)?;
            let ka = kotzig_gamma(rows, &g)?;
            emit(out, &serialize(ka.as_array(), format.into()))?;
            Ok(EXIT_OK)
        }
    }
}
