use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

mod commands;
mod report;

use report::{Failure, Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "hnlab",
    version,
    about = "Numerical semigroups and Herzog-Northcott ideals"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical semigroup queries.
    #[command(subcommand)]
    Sgp(SgpCommand),
    /// Search for triples without a symmetric cover.
    #[command(subcommand)]
    Delta(DeltaCommand),
    /// Build and solve exponent matrices.
    #[command(subcommand)]
    Hn(HnCommand),
    /// Worked decomposition examples.
    #[command(subcommand)]
    Catalogue(CatalogueCommand),
    /// Decomposition shapes with sum(sigma * length) = e.
    Cases {
        #[arg(long)]
        e: u64,
        /// Also report the multiplicity bookkeeping for this m1.
        #[arg(long)]
        m1: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct Gens {
    /// Generators, space separated.
    #[arg(required = true, num_args = 1..)]
    pub gens: Vec<u64>,
}

#[derive(Subcommand, Debug)]
enum SgpCommand {
    /// Full invariant profile.
    Analyze(Gens),
    /// Membership test.
    Contains {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        n: u64,
    },
    /// Apéry set with respect to an element.
    Apery {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        n: u64,
    },
    /// Every oversemigroup with the given multiplicity.
    Oversemigroups {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        mult: Option<u64>,
    },
    /// Is the semigroup inside a symmetric one of the same multiplicity?
    SymCover {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        mult: Option<u64>,
    },
    /// The four symmetric covering families for a multiplicity m1 >= 5.
    Families {
        #[arg(long)]
        m1: u64,
    },
}

#[derive(Subcommand, Debug)]
enum DeltaCommand {
    /// Flag every triple up to the bound that no symmetric semigroup covers.
    Verify {
        #[arg(long)]
        bound: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
        jobs: u64,
    },
}

#[derive(Subcommand, Debug)]
enum HnCommand {
    /// Generators, multipliers and value semigroup of an exponent pair.
    Build {
        #[arg(long, value_parser = commands::parse_triple)]
        a: [u64; 3],
        #[arg(long, value_parser = commands::parse_triple)]
        b: [u64; 3],
        /// Ring multiplicity for the theorem verdict.
        #[arg(long)]
        e: Option<u64>,
    },
    /// Exponent pairs with a given multiplier triple (m1 in {3, 4}).
    Solve {
        #[arg(long, value_parser = commands::parse_triple)]
        m: [u64; 3],
    },
    /// Reorder variables so that m1 <= m2 <= m3.
    Normalize {
        #[arg(long, value_parser = commands::parse_triple)]
        a: [u64; 3],
        #[arg(long, value_parser = commands::parse_triple)]
        b: [u64; 3],
    },
}

#[derive(Subcommand, Debug)]
enum CatalogueCommand {
    /// Check one catalogued example.
    Check {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = commands::parse_triple)]
        m: [u64; 3],
    },
    /// Families and their admissible (n, m).
    List,
    /// Check every example of the shipped catalogue, or of a catalogue file.
    Sweep {
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Render the built-in families as a catalogue file.
    Dump {
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

fn dispatch(command: Command) -> Report {
    use commands as c;
    match command {
        Command::Sgp(cmd) => match cmd {
            SgpCommand::Analyze(g) => c::sgp_analyze(&g.gens),
            SgpCommand::Contains { gens, n } => c::sgp_contains(&gens.gens, n),
            SgpCommand::Apery { gens, n } => c::sgp_apery(&gens.gens, n),
            SgpCommand::Oversemigroups { gens, mult } => c::sgp_oversemigroups(&gens.gens, mult),
            SgpCommand::SymCover { gens, mult } => c::sgp_sym_cover(&gens.gens, mult),
            SgpCommand::Families { m1 } => c::sgp_families(m1),
        },
        Command::Delta(DeltaCommand::Verify { bound, jobs }) => {
            c::delta_verify(bound, jobs as usize)
        }
        Command::Hn(cmd) => match cmd {
            HnCommand::Build { a, b, e } => c::hn_build(a, b, e),
            HnCommand::Solve { m } => c::hn_solve(m),
            HnCommand::Normalize { a, b } => c::hn_normalize(a, b),
        },
        Command::Catalogue(cmd) => match cmd {
            CatalogueCommand::Check { id, n, m } => c::catalogue_check(&id, n, m),
            CatalogueCommand::List => c::catalogue_list(),
            CatalogueCommand::Sweep { file } => c::catalogue_sweep(file.as_deref()),
            CatalogueCommand::Dump { out } => c::catalogue_dump(out.as_deref()),
        },
        Command::Cases { e, m1 } => c::cases(e, m1),
    }
}

/// `--format` as far as it can be read from arguments clap rejected.
fn requested_format(args: &[String]) -> Format {
    let json = args
        .windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json");
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (report, format) = match Cli::try_parse_from(&args) {
        Ok(cli) => {
            let started = Instant::now();
            let report = dispatch(cli.command);
            eprintln!("elapsed: {:.3} s", started.elapsed().as_secs_f64());
            (report, cli.format)
        }
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let rendered = e.to_string();
            let message = rendered
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            let report = Report {
                command: "usage".into(),
                inputs: json!({ "argv": &args[1..] }),
                outcome: Err(Failure::usage("Usage", message)),
            };
            (report, requested_format(&args))
        }
    };
    print!("{}", report.render(format));
    ExitCode::from(report.exit_code())
}
