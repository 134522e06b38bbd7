use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quartet_sandwich::catalog::{render_status_table, status_table};
use quartet_sandwich::hardness::{
    chain_source, co_matched_sandwich, matching_chain_source, reduce_3col, reduce_one_in_three, wrap_gadget, ColoringVariant, GadgetKind,
    OneInThreeInstance, DEFAULT_SET_SIZE,
};
use quartet_sandwich::poly::Mode;
use quartet_sandwich::tooling::{
    bench, default_budget, default_suite, generate_instance, render_csv, run, Format, GenConfig, GraphDocument,
    InstanceDocument, PlantMode, Suite, BUDGET_ENV,
};
use quartet_sandwich::{verify_sandwich, Error, ForbiddenFamily, Quartet, SandwichInstance};
use serde_json::json;

#[derive(Parser)]
#[command(name = "sandwich", version, about = "Sandwich problems for pairs of forbidden 4-vertex graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a JSON run report.
    Solve {
        #[command(flatten)]
        io: Io,
        /// Forbidden pair, e.g. `paw,co-C4`; defaults to the family in the
        /// instance metadata.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value = "auto")]
        mode: Mode,
        #[arg(long, env = BUDGET_ENV)]
        budget_nodes: Option<u64>,
        /// Include elapsed time in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Check that a witness graph lies between the bounds and avoids the family.
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        family: String,
        /// Graph document or run report holding the witness.
        #[arg(long)]
        witness: PathBuf,
    },
    /// Emit a hardness reduction instance.
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Generate a random or planted instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "random")]
        mode: PlantMode,
        /// Family for planted mode.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        upper_density: Option<f64>,
        #[arg(long)]
        lower_density: Option<f64>,
        #[command(flatten)]
        out: Out,
    },
    /// Print the complexity status of all 30 pairs.
    Status {
        #[arg(long)]
        json: bool,
    },
    /// Run a benchmark suite against exact search.
    Bench {
        /// Suite file; the default suite covers every tractable pair.
        #[arg(long)]
        suite: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timings: bool,
        #[arg(long, env = BUDGET_ENV)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReduceKind {
    /// Co-matched bipartite sandwich from a One-in-Three formula.
    OneInThree {
        #[command(flatten)]
        io: Io,
    },
    /// Glue a gadget next to a source instance.
    Wrap {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        gadget: GadgetKind,
    },
    /// Sandwich instance from a graph to be 3-colored.
    ThreeColoring {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "paw-k4")]
        variant: ColoringVariant,
        #[arg(long, default_value_t = DEFAULT_SET_SIZE)]
        set_size: usize,
    },
    /// Random chain-sandwich source instance.
    ChainSource {
        #[arg(long)]
        n: usize,
        /// Mandatory edges form a perfect matching.
        #[arg(long)]
        matching: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args)]
struct Io {
    /// Input file, `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    /// Input and output format; detected from the input when omitted.
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Out {
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_pair(spec: &str) -> Result<[Quartet; 2], Error> {
    let names: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [a, b] = names.as_slice() else {
        return Err(Error::Precondition(format!("expected two comma-separated names, got `{spec}`")));
    };
    Ok([Quartet::from_name(a)?, Quartet::from_name(b)?])
}

const CO_MATCHED: &str = "co-matched-bipartite";

/// Reductions from One-in-Three target co-matched bipartite graphs, which are
/// decided by enumerating side assignments.
fn solve_co_matched(inst: &SandwichInstance, output: Option<&PathBuf>) -> Result<u8, Error> {
    let (verdict, witness, sides, note) = match co_matched_sandwich(inst) {
        Ok(Some((g, sides))) => ("feasible", Some(GraphDocument::new(&g)), Some(sides), None),
        Ok(None) => ("infeasible", None, None, None),
        Err(e @ Error::OracleLimit(_)) => ("unknown", None, None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let report = json!({ "target": CO_MATCHED, "verdict": verdict, "witness": witness, "sides": sides, "note": note });
    write_output(output, &(serde_json::to_string_pretty(&report)? + "\n"))?;
    Ok(match verdict {
        "feasible" => 0,
        "infeasible" => 1,
        _ => 2,
    })
}

fn emit(doc: &InstanceDocument, format: Option<Format>, output: Option<&PathBuf>) -> Result<(), Error> {
    write_output(output, &doc.render(format.unwrap_or(Format::Json)))
}

fn execute(command: Command) -> Result<u8, Error> {
    match command {
        Command::Solve {
            io,
            family,
            mode,
            budget_nodes,
            timings,
        } => {
            let doc = InstanceDocument::parse(&read_input(&io.input)?, io.format)?;
            let spec = family
                .or_else(|| doc.family_hint().map(str::to_string))
                .ok_or_else(|| Error::Precondition("no --family given and none recorded in the instance".into()))?;
            if spec == CO_MATCHED {
                return solve_co_matched(&doc.instance()?, io.output.as_ref());
            }
            let pair = parse_pair(&spec)?;
            let budget = budget_nodes.unwrap_or_else(default_budget);
            let report = run(&doc.instance()?, pair, mode, budget, timings)?;
            write_output(io.output.as_ref(), &report.to_json())?;
            Ok(report.verdict.exit_code() as u8)
        }
        Command::Verify { io, family, witness } => {
            let doc = InstanceDocument::parse(&read_input(&io.input)?, io.format)?;
            let fam = ForbiddenFamily::parse(&family)?;
            let g = GraphDocument::from_json(&fs::read_to_string(witness)?)?.graph()?;
            let valid = verify_sandwich(&doc.instance()?, &g, &fam)?;
            write_output(io.output.as_ref(), &format!("{valid}\n"))?;
            Ok(if valid { 0 } else { 1 })
        }
        Command::Reduce { kind } => {
            match kind {
                ReduceKind::OneInThree { io } => {
                    let text = read_input(&io.input)?;
                    let f = match Format::detect(&text) {
                        Format::Json => serde_json::from_str::<OneInThreeInstance>(&text)?,
                        Format::Text => OneInThreeInstance::parse(&text)?,
                    };
                    let f = OneInThreeInstance::new(f.num_vars(), f.clauses().to_vec())?;
                    let doc = InstanceDocument::from_reduction(&reduce_one_in_three(&f));
                    emit(&doc, io.format, io.output.as_ref())?;
                }
                ReduceKind::Wrap { io, gadget } => {
                    let src = InstanceDocument::parse(&read_input(&io.input)?, io.format)?;
                    let doc = InstanceDocument::from_reduction(&wrap_gadget(&src.instance()?, gadget)?);
                    emit(&doc, io.format, io.output.as_ref())?;
                }
                ReduceKind::ThreeColoring { io, variant, set_size } => {
                    let h = GraphDocument::from_json(&read_input(&io.input)?)?.graph()?;
                    let doc = InstanceDocument::from_reduction(&reduce_3col(&h, variant, set_size)?);
                    emit(&doc, io.format, io.output.as_ref())?;
                }
                ReduceKind::ChainSource { n, matching, seed, out } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let inst = if matching {
                        matching_chain_source(n, &mut rng)?
                    } else {
                        chain_source(n, &mut rng)
                    };
                    let mut doc = InstanceDocument::new(&inst);
                    doc.meta.insert("source".into(), "chain-sandwich".into());
                    doc.meta.insert("seed".into(), seed.into());
                    emit(&doc, out.format, out.output.as_ref())?;
                }
            }
            Ok(0)
        }
        Command::Gen {
            n,
            mode,
            family,
            seed,
            upper_density,
            lower_density,
            out,
        } => {
            let family = family.as_deref().map(ForbiddenFamily::parse).transpose()?;
            let mut config = match (mode, family) {
                (PlantMode::Planted, Some(f)) => GenConfig::planted(n, f),
                (PlantMode::Planted, None) => {
                    return Err(Error::Precondition("planted mode needs --family".into()));
                }
                (PlantMode::Random, f) => GenConfig { family: f, ..GenConfig::random(n) },
            };
            config.upper_density = upper_density.unwrap_or(config.upper_density);
            config.lower_density = lower_density.unwrap_or(config.lower_density);
            let generated = generate_instance(&config, seed)?;
            let mut doc = InstanceDocument::new(&generated.instance);
            doc.meta.insert("generator".into(), mode.to_string().into());
            doc.meta.insert("seed".into(), seed.into());
            if let Some(f) = &config.family {
                let names: Vec<&str> = f.members().iter().map(|q| q.name()).collect();
                doc.meta.insert("family".into(), names.join(",").into());
            }
            if let Some(h) = &generated.hidden {
                doc.meta.insert("hidden".into(), serde_json::to_value(GraphDocument::new(h))?);
            }
            emit(&doc, out.format, out.output.as_ref())?;
            Ok(0)
        }
        Command::Status { json } => {
            let entries = status_table();
            let text = if json {
                serde_json::to_string_pretty(&entries)? + "\n"
            } else {
                render_status_table(&entries)
            };
            write_output(None, &text)?;
            Ok(0)
        }
        Command::Bench {
            suite,
            json,
            timings,
            budget_nodes,
            output,
        } => {
            let suite = match suite {
                Some(path) => Suite::from_json(&fs::read_to_string(path)?)?,
                None => default_suite(),
            };
            let rows = bench(&suite, budget_nodes.unwrap_or_else(default_budget), timings)?;
            let text = if json {
                serde_json::to_string_pretty(&rows)? + "\n"
            } else {
                render_csv(&rows)
            };
            write_output(output.as_ref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Io(_) => 66,
                Error::UnknownName(_) | Error::IdenticalPair(_) => 64,
                _ => 65,
            })
        }
    }
}
