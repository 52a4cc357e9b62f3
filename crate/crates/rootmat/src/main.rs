use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rootmat::formats::{generators_text, write_dimacs, CircuitDump};
use rootmat::verify::{incidence_group, Budget};
use rootmat::{oracle_crosscheck, verify_table, verify_theorem, verify_wreath, VerificationReport};
use rootmat_core::{LinearMatroid, RootSystem};

/// Automorphism groups of root-system matroids.
///
/// System ids: A3, B5, D4, Dp4, E6..E8, F4, H3, H4, I2_7, and sums such as
/// A2+A2+B3. G2 is written I2_6.
#[derive(Parser)]
#[command(name = "rootmat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Node budget for graph search and circuit enumeration.
    #[arg(long)]
    budget: Option<u64>,
    /// Use the extended budget tier.
    #[arg(long, conflicts_with = "budget")]
    extended: bool,
}

impl BudgetArgs {
    fn get(self) -> Option<Budget> {
        match (self.budget, self.extended) {
            (Some(n), _) => Some(Budget::nodes(n)),
            (None, true) => Some(Budget::extended()),
            (None, false) => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that preserving order-3 circuits characterizes Aut(M(R)).
    Verify {
        #[arg(long)]
        system: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the check over a list of families.
    Table {
        /// e.g. A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12
        #[arg(long, default_value = "A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12")]
        families: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dump all circuits up to an order.
    Circuits {
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Automorphism group of the order-3 circuit incidence graph.
    Aut {
        #[arg(long)]
        system: String,
        /// Print generators on lines in cycle notation.
        #[arg(long)]
        emit_generators: bool,
        /// Write the incidence graph in DIMACS format.
        #[arg(long)]
        dimacs: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check the wreath-product formula on a direct sum.
    Wreath {
        /// e.g. "A2+A2"
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the order-3 group with the all-circuits group.
    Crosscheck {
        #[arg(long)]
        system: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn print_reports(reports: &[VerificationReport], format: Format) -> anyhow::Result<()> {
    match format {
        Format::Text => reports.iter().for_each(|r| println!("{r}")),
        Format::Csv => {
            println!("{}", VerificationReport::CSV_HEADER);
            reports.iter().for_each(|r| println!("{}", r.csv_row()));
        }
        Format::Json => {
            if let [single] = reports {
                println!("{}", serde_json::to_string_pretty(single)?);
            } else {
                println!("{}", serde_json::to_string_pretty(reports)?);
            }
        }
    }
    Ok(())
}

fn status(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let (reports, format) = match cli.command {
        Command::Verify {
            system,
            budget,
            format,
        } => (vec![verify_theorem(&system, budget.get())?], format),
        Command::Table {
            families,
            budget,
            format,
        } => (verify_table(&families, budget.get())?, format),
        Command::Wreath {
            spec,
            budget,
            format,
        } => (vec![verify_wreath(&spec, budget.get())?], format),
        Command::Crosscheck {
            system,
            max_order,
            budget,
            format,
        } => (
            vec![oracle_crosscheck(&system, max_order, budget.get())?],
            format,
        ),
        Command::Circuits {
            system,
            max_order,
            budget,
            format,
        } => {
            let sys: RootSystem = system.parse()?;
            let budget = budget.get().unwrap_or_default();
            let circuits = LinearMatroid::from_system(&sys)
                .all_circuits_upto(max_order, budget.circuit_nodes)?;
            let dump = CircuitDump::new(&sys.id(), max_order, &circuits);
            match format {
                Format::Json => println!("{}", serde_json::to_string(&dump)?),
                Format::Text => print!("{}", dump.to_text_table()),
                Format::Csv => bail!("circuits supports --format json or text"),
            }
            return Ok(ExitCode::SUCCESS);
        }
        Command::Aut {
            system,
            emit_generators,
            dimacs,
            budget,
        } => {
            let sys: RootSystem = system.parse()?;
            let budget = budget.get().unwrap_or_else(|| Budget::tier_for(&sys));
            let matroid = LinearMatroid::from_system(&sys);
            let c3 = matroid.circuits3();
            let aut = incidence_group(matroid.ground_size(), &c3, &budget)?;
            println!(
                "{}: {} lines, {} order-3 circuits, |Aut| = {}",
                sys.id(),
                matroid.ground_size(),
                c3.len(),
                aut.group.order()
            );
            if emit_generators {
                print!("{}", generators_text(&aut.generators));
            }
            if let Some(path) = dimacs {
                let file =
                    File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                write_dimacs(&aut.graph, BufWriter::new(file))?;
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    print_reports(&reports, format)?;
    Ok(status(&reports))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
