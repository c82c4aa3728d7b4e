//! Command-line front end: construct matrices, verify trade certificates,
//! run the exhaustive searches, and convert between the file formats.
//!
//! Exit codes: 0 = success / verified, 1 = a check that ran and came back
//! negative (e.g. `TRADE no`), 2 = usage, parse, or size-limit errors.

use clap::{Parser, Subcommand};
use hadtrades::constructions;
use hadtrades::matrix::{MatrixKind, UnitMatrix};
use hadtrades::search;
use hadtrades::trades::{
    self, lemma1_first_violation, trade_profile, IndexBase, Trade, TradeCertificate,
};
use hadtrades::Error;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hadtrades",
    version,
    about = "Exact tools for trades in real and Butson-type complex Hadamard matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named matrix and write it in the matrix text format.
    Construct {
        /// One of: sylvester, fourier, paley1, example-paley8, petrescu7,
        /// w64, kronecker.
        name: String,
        /// Sylvester exponent (order 2^k).
        #[arg(long)]
        k: Option<usize>,
        /// Fourier order.
        #[arg(long)]
        n: Option<usize>,
        /// Paley prime (3, 7, 11, 19 or 23).
        #[arg(long)]
        q: Option<usize>,
        /// Left factor file for kronecker.
        #[arg(long)]
        a: Option<PathBuf>,
        /// Right factor file for kronecker.
        #[arg(long)]
        b: Option<PathBuf>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the +/-/0 shorthand instead of the exponent grid.
        #[arg(long)]
        shorthand: bool,
    },
    /// Verify a trade certificate against a matrix file.
    Verify {
        matrix: PathBuf,
        certificate: PathBuf,
        /// Treat certificate coordinates as 0-based.
        #[arg(long)]
        zero_index: bool,
    },
    /// Run an exhaustive search: min-trade, rank-one, min-support or
    /// trade-space.
    Search {
        kind: String,
        /// Host matrix file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Distance budget for min-trade (defaults to the order).
        #[arg(long)]
        budget: Option<usize>,
        /// Row count for rank-one blocks.
        #[arg(long)]
        a: Option<usize>,
        /// Column count for rank-one blocks.
        #[arg(long)]
        b: Option<usize>,
        /// Comma-separated column list for min-support.
        #[arg(long)]
        cols: Option<String>,
        /// Report file (full report goes to stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Include elapsed-time lines in the report (not reproducible).
        #[arg(long)]
        timings: bool,
        /// Treat column lists as 0-based.
        #[arg(long)]
        zero_index: bool,
    },
    /// Print the row/column profile of a trade certificate.
    Profile {
        certificate: PathBuf,
        /// Treat certificate coordinates as 0-based.
        #[arg(long)]
        zero_index: bool,
    },
    /// Dephase a Hadamard matrix file (all-ones first row and column).
    Dephase {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Kronecker product of two Hadamard matrix files.
    Kron {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn env_max_order() -> hadtrades::Result<Option<usize>> {
    match std::env::var("HADTRADES_MAX_N") {
        Ok(v) => v
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("HADTRADES_MAX_N = '{v}' is not a size"))),
        Err(_) => Ok(None),
    }
}

/// The environment variable may lower the order limits, never raise them.
fn check_order_env(n: usize) -> hadtrades::Result<()> {
    if let Some(max) = env_max_order()? {
        if n > max {
            return Err(Error::SizeLimit {
                what: "matrix order (HADTRADES_MAX_N)",
                got: n,
                limit: max,
            });
        }
    }
    Ok(())
}

fn read_to_string(path: &Path) -> hadtrades::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Parses a matrix file and verifies it: zero-free inputs must be complex
/// Hadamard, inputs with structural zeros must be weighing matrices.
fn load_verified(path: &Path) -> hadtrades::Result<UnitMatrix> {
    let mut m = UnitMatrix::parse(&read_to_string(path)?)?;
    check_order_env(m.order())?;
    if m.has_zeros() {
        let weight = (0..m.order())
            .filter(|&j| m.exponent(0, j).is_some())
            .count();
        if !m.is_weighing(weight)? {
            return Err(Error::InvalidKind(format!(
                "{} is not a weighing matrix",
                path.display()
            )));
        }
    } else if !m.is_complex_hadamard()? {
        return Err(Error::InvalidKind(format!(
            "{} is not a complex Hadamard matrix",
            path.display()
        )));
    }
    Ok(m)
}

fn write_output(text: &str, out: Option<&Path>) -> hadtrades::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn matrix_summary(m: &UnitMatrix) -> String {
    let verdict = match m.kind() {
        MatrixKind::VerifiedHadamard => "hadamard: yes".into(),
        MatrixKind::VerifiedWeighing(k) => format!("weighing({k}): yes"),
        MatrixKind::Plain => "verified: no".into(),
    };
    format!(
        "order: {}\nmodulus: {}\n{verdict}\n",
        m.order(),
        m.modulus()
    )
}

fn emit_matrix(m: &UnitMatrix, out: Option<&Path>, shorthand: bool) -> hadtrades::Result<()> {
    let text = if shorthand {
        m.to_sign_text()?
    } else {
        m.to_text()
    };
    write_output(&text, out)?;
    eprint!("{}", matrix_summary(m));
    Ok(())
}

fn run(command: Command) -> hadtrades::Result<u8> {
    match command {
        Command::Construct {
            name,
            k,
            n,
            q,
            a,
            b,
            out,
            shorthand,
        } => {
            let missing = |flag: &str| {
                Error::InvalidArgument(format!("construct {name} needs --{flag}"))
            };
            let matrix = match name.as_str() {
                "sylvester" => constructions::sylvester(k.ok_or_else(|| missing("k"))?)?,
                "fourier" => constructions::fourier(n.ok_or_else(|| missing("n"))?)?,
                "paley1" => constructions::paley_i(q.ok_or_else(|| missing("q"))?)?,
                "example-paley8" => constructions::example_paley8(),
                "petrescu7" => constructions::petrescu7(),
                "w64" => constructions::weave_w64(),
                "kronecker" => {
                    let a = load_verified(&a.ok_or_else(|| missing("a"))?)?;
                    let b = load_verified(&b.ok_or_else(|| missing("b"))?)?;
                    UnitMatrix::kronecker(&a, &b)?
                }
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown construction '{other}'"
                    )))
                }
            };
            check_order_env(matrix.order())?;
            emit_matrix(&matrix, out.as_deref(), shorthand)?;
            Ok(0)
        }

        Command::Verify {
            matrix,
            certificate,
            zero_index,
        } => {
            let base = if zero_index {
                IndexBase::Zero
            } else {
                IndexBase::One
            };
            let host = load_verified(&matrix)?;
            let cert = TradeCertificate::from_json(&read_to_string(&certificate)?)?;
            if cert.order != host.order() {
                return Err(Error::InvalidArgument(format!(
                    "certificate order {} does not match the matrix order {}",
                    cert.order,
                    host.order()
                )));
            }
            let trade = cert.to_trade(base)?;
            let ok = trades::is_trade(&host, &trade)?;
            println!("TRADE {}", if ok { "yes" } else { "no" });
            print_profile(&trade, base);
            if trade.scalar().is_some() {
                match lemma1_first_violation(&host, &trade)? {
                    None => println!("lemma1: ok"),
                    Some((i, j)) => {
                        let (i, j) = match base {
                            IndexBase::One => (i + 1, j + 1),
                            IndexBase::Zero => (i, j),
                        };
                        println!("lemma1: violated for rows {i},{j}");
                    }
                }
            } else {
                println!("lemma1: n/a (explicit assignment)");
            }
            Ok(if ok { 0 } else { 1 })
        }

        Command::Search {
            kind,
            input,
            budget,
            a,
            b,
            cols,
            out,
            timings,
            zero_index,
        } => {
            let base = if zero_index {
                IndexBase::Zero
            } else {
                IndexBase::One
            };
            let host = load_verified(&input)?;
            let report = match kind.as_str() {
                "min-trade" => {
                    let budget = budget.unwrap_or(host.order());
                    search::min_trade_search_real(&host, budget)?
                }
                "rank-one" => {
                    let a = a.ok_or_else(|| {
                        Error::InvalidArgument("search rank-one needs --a and --b".into())
                    })?;
                    let b = b.ok_or_else(|| {
                        Error::InvalidArgument("search rank-one needs --a and --b".into())
                    })?;
                    search::rank_one_block_search(&host, a, b)?
                }
                "min-support" => {
                    let spec = cols.ok_or_else(|| {
                        Error::InvalidArgument("search min-support needs --cols".into())
                    })?;
                    let columns = parse_columns(&spec, base)?;
                    search::min_support_column_span(&host, &columns)?.report
                }
                "trade-space" => search::trade_space_search(&host)?,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown search kind '{other}'"
                    )))
                }
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, report.to_text(timings))?;
                    println!("{}", report.certificate);
                }
                None => print!("{}", report.to_text(timings)),
            }
            Ok(0)
        }

        Command::Profile {
            certificate,
            zero_index,
        } => {
            let base = if zero_index {
                IndexBase::Zero
            } else {
                IndexBase::One
            };
            let cert = TradeCertificate::from_json(&read_to_string(&certificate)?)?;
            let trade = cert.to_trade(base)?;
            println!("order: {}", trade.order());
            print_profile(&trade, base);
            Ok(0)
        }

        Command::Dephase { input, out } => {
            let host = load_verified(&input)?;
            if host.kind() != MatrixKind::VerifiedHadamard {
                return Err(Error::InvalidKind(
                    "dephasing needs a Hadamard matrix".into(),
                ));
            }
            let dephased = host.dephase()?;
            emit_matrix(&dephased, out.as_deref(), false)?;
            Ok(0)
        }

        Command::Kron { a, b, out } => {
            let a = load_verified(&a)?;
            let b = load_verified(&b)?;
            check_order_env(a.order() * b.order())?;
            let product = UnitMatrix::kronecker(&a, &b)?;
            emit_matrix(&product, out.as_deref(), false)?;
            Ok(0)
        }
    }
}

fn parse_columns(spec: &str, base: IndexBase) -> hadtrades::Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in spec.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad column index '{tok}'")))?;
        let v = match base {
            IndexBase::Zero => v,
            IndexBase::One => v.checked_sub(1).ok_or_else(|| {
                Error::Parse("column index 0 in a 1-based list (use --zero-index)".into())
            })?,
        };
        out.push(v);
    }
    Ok(out)
}

fn print_profile(trade: &Trade, _base: IndexBase) {
    let p = trade_profile(trade);
    println!("size: {}", trade.size());
    let fmt_counts = |counts: &[usize]| {
        counts
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("row-counts: {}", fmt_counts(&p.row_counts));
    println!("col-counts: {}", fmt_counts(&p.col_counts));
    let show = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    println!("d: {}", show(p.d));
    println!("e: {}", show(p.e));
    let flag = |v: Option<bool>| match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    };
    println!("d-even-or-one: {}", flag(p.d_even_or_one()));
    println!("e-even-or-one: {}", flag(p.e_even_or_one()));
}
