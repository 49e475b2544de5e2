use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use twistcert::{
    render_csv, render_report_table, render_table_row, summary_line, sweep, Format, EXIT_INCONSISTENT, EXIT_OK,
    EXIT_USAGE, TABLE_HEADER,
};
use twistknot::numroots::DEFAULT_TOL;
use twistknot::{certify, CertifyOptions, OutputRecord};

#[derive(Parser)]
#[command(name = "twistcert", version, about = "Twisted Alexander polynomials of twist knots J(2,2q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a single twist knot J(2,2q).
    #[command(allow_negative_numbers = true)]
    Analyze {
        #[arg(long)]
        q: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Certify every q in [q-min, q-max], skipping q = 0.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        q_min: i64,
        #[arg(long)]
        q_max: i64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Recompute Δ from Fox calculus over Q[u]/(φ_q).
    #[arg(long)]
    fox_check: bool,
    /// Evaluate Δ at the complex roots of φ_q (default).
    #[arg(long, overrides_with = "no_numeric")]
    numeric: bool,
    #[arg(long, overrides_with = "numeric")]
    no_numeric: bool,
    /// Root-finder update tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

impl Common {
    fn options(&self) -> CertifyOptions {
        CertifyOptions { run_fox: self.fox_check, run_numeric: !self.no_numeric, tol: self.tol }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE as u8)
}

fn code(ok: bool) -> ExitCode {
    ExitCode::from(if ok { EXIT_OK } else { EXIT_INCONSISTENT } as u8)
}

fn analyze(q: i64, common: &Common) -> ExitCode {
    if q == 0 {
        return usage_error("q must be nonzero (J(2,0) is the unknot)");
    }
    if common.tol.is_nan() || common.tol <= 0.0 {
        return usage_error("--tol must be positive");
    }
    let report = match certify(q, common.options()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("q = {q}: {e}");
            return code(false);
        }
    };
    match common.format {
        Format::Table => print!("{}", render_report_table(&report)),
        Format::Json => println!("{}", OutputRecord::from(&report).to_json_pretty()),
        Format::Csv => print!("{}", render_csv(&[&report])),
    }
    code(report.all_checks_pass())
}

fn run_sweep(q_min: i64, q_max: i64, common: &Common) -> ExitCode {
    if q_min > q_max {
        return usage_error("empty range: --q-min must not exceed --q-max");
    }
    if common.tol.is_nan() || common.tol <= 0.0 {
        return usage_error("--tol must be positive");
    }
    let results = sweep(q_min, q_max, common.options());
    let mut reports = Vec::new();
    let mut failures = 0usize;
    for (q, r) in &results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => {
                failures += 1;
                eprintln!("q = {q}: {e}");
            }
        }
    }
    let consistent = reports.iter().filter(|r| r.all_checks_pass()).count();
    let total = results.len();
    match common.format {
        Format::Table => {
            println!("{TABLE_HEADER}");
            for r in &reports {
                println!("{}", render_table_row(r));
            }
            println!("{}", summary_line(consistent, total));
        }
        Format::Json => {
            for r in &reports {
                println!("{}", OutputRecord::from(*r).to_json());
            }
            eprintln!("{}", summary_line(consistent, total));
        }
        Format::Csv => {
            print!("{}", render_csv(&reports));
            eprintln!("{}", summary_line(consistent, total));
        }
    }
    code(failures == 0 && consistent == total)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Analyze { q, common } => analyze(*q, common),
        Command::Sweep { q_min, q_max, common } => run_sweep(*q_min, *q_max, common),
    }
}
