use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use okounkov_core::cli::{execute, JobConfig, Mode};
use okounkov_core::ErrorKind;

#[derive(Parser)]
#[command(name = "okounkov", version, about = "Exact multipoint Okounkov bodies and Seshadri constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bodies, subdivision and Seshadri constant of a smooth lattice polytope.
    Toric(Common),
    /// Zariski decompositions and bodies on a blown-up plane.
    Surface(Common),
    /// Splits and hulls of graded valuation data.
    Semigroup(Common),
    /// The simplex-fit constant for a toric or surface input.
    Seshadri(Common),
    /// Every available consistency check for an input.
    Check(Common),
}

#[derive(Args)]
struct Common {
    /// Input JSON file.
    #[arg(long, visible_alias = "from", value_name = "FILE")]
    input: PathBuf,
    /// Output directory; the report goes to stdout when omitted.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Highest level for lattice enumeration.
    #[arg(long)]
    k_max: Option<u32>,
    /// Also write SVG plots of planar bodies.
    #[arg(long)]
    svg: bool,
    /// Point indices, comma separated (vertex indices for toric inputs).
    #[arg(long, value_delimiter = ',')]
    points: Option<Vec<usize>>,
    /// `delpezzo` or a JSON file with curve classes.
    #[arg(long)]
    curves: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mode, c) = match cli.command {
        Command::Toric(c) => (Mode::Toric, c),
        Command::Surface(c) => (Mode::Surface, c),
        Command::Semigroup(c) => (Mode::Semigroup, c),
        Command::Seshadri(c) => (Mode::Seshadri, c),
        Command::Check(c) => (Mode::Check, c),
    };
    let cfg = JobConfig {
        mode,
        input_path: c.input,
        output_dir: c.out,
        k_max: c.k_max,
        emit_svg: c.svg,
        points: c.points,
        curves: c.curves,
    };
    match execute(&cfg) {
        Ok(out) => {
            if cfg.output_dir.is_none() {
                match out.report_json() {
                    Ok(s) => print!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(4);
                    }
                }
            }
            let failed = out.report.failed_checks();
            if failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                for c in failed {
                    eprintln!("{c}");
                }
                ExitCode::from(4)
            }
        }
        Err(e) => {
            let (code, what) = match e.kind() {
                ErrorKind::Schema => (2, "invalid input"),
                ErrorKind::Precondition => (3, "precondition failed"),
                ErrorKind::Internal => (4, "internal error"),
            };
            eprintln!("{what}: {e}");
            ExitCode::from(code)
        }
    }
}
