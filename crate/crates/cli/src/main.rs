use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rankone::report::{self, Format, ModeSel, ReportConfig, Target, EXIT_IO, EXIT_USAGE};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Genuine,
    Hamiltonian,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Table,
    AsciiDiagram,
}

/// Enumerate rank-one momentum polytopes.
///
/// Genuine quasi-Hamiltonian polytopes are computed for affine systems,
/// Hamiltonian ones for finite systems.
#[derive(Debug, Parser)]
#[command(name = "rankone", version, after_help = SELECTOR_HELP)]
struct Cli {
    /// System selector `<Family><rank>[~<twist>]`, or `all`.
    #[arg(long, short)]
    system: String,

    /// With `--system all`: largest rank to include.
    #[arg(long, default_value_t = 8)]
    max_rank: usize,

    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    mode: ModeArg,

    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Keep one record per diagram-automorphism orbit.
    #[arg(long)]
    dedupe: bool,

    /// Check every invariant; exit with status 1 on any violation.
    #[arg(long)]
    check: bool,

    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

const SELECTOR_HELP: &str = "\
Selectors:
  A1..A10, B2..B10, C2..C10, D4..D10, E6, E7, E8, F4, G2   finite
  A1~1..A10~1, B3~1.., C2~1.., D4~1.., E6~1, E7~1, E8~1,
  F4~1, G2~1                                               untwisted affine
  A2~2, A4~2.., A5~2.., D3~2.., E6~2, D4~3                 twisted affine
  all                                                      every system up to --max-rank

Exit status: 0 ok, 1 invariant violations, 2 usage error, 3 i/o error.";

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let target = if cli.system.eq_ignore_ascii_case("all") {
        Target::All {
            max_rank: cli.max_rank,
        }
    } else {
        Target::System(cli.system.clone())
    };
    let cfg = ReportConfig {
        target,
        mode: match cli.mode {
            ModeArg::Genuine => ModeSel::Genuine,
            ModeArg::Hamiltonian => ModeSel::Hamiltonian,
            ModeArg::Both => ModeSel::Both,
        },
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
            FormatArg::AsciiDiagram => Format::AsciiDiagram,
        },
        dedupe: cli.dedupe,
        check: cli.check,
        output: cli.output.clone(),
    };
    let (code, text) = report::run(&cfg);
    if code == EXIT_USAGE || code == EXIT_IO {
        eprint!("rankone: {text}");
    } else if cfg.output.is_none() && std::io::stdout().write_all(text.as_bytes()).is_err() {
        return ExitCode::from(EXIT_IO as u8);
    }
    ExitCode::from(code as u8)
}
