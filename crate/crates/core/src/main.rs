use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use clifford4::analysis::{self, enumerate_cached, Analysis, Report};
use clifford4::closure::{StateSet, DEFAULT_CAPACITY};
use clifford4::exact_state::ExactState;
use clifford4::gates::Mode;
use clifford4::ket::parse_state;
use clifford4::orbits::orbit_report;
use clifford4::populations::population_census;
use clifford4::Error;

#[derive(Parser)]
#[command(name = "clifford4", version, about = "Four-qubit Clifford state enumeration and orbit analysis")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Complex)]
    mode: ModeArg,
    /// Output file
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    /// Run the invariant checks for this command; exit 1 on failure
    #[arg(long, global = true)]
    verify: bool,
    /// Maximum number of states to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_CAPACITY)]
    capacity: usize,
    /// Directory for cached enumerations
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the enumeration cache
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Complex,
    Real,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Complex => Mode::Complex,
            ModeArg::Real => Mode::Real,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the closure of a seed state and write the state file
    Enumerate {
        /// Seed as four bits (e.g. 0000) or a ket sum
        #[arg(long, default_value = "0000")]
        seed: String,
    },
    /// Print the orbit table; --out writes the JSON-lines report
    Orbits,
    /// Print the diameter and table discrepancies; --out writes the census TSV
    Transitions,
    /// Find a circuit taking one state to another
    Connect { from: String, to: String },
    /// Count distinct measurement populations
    Census,
    /// Export the orbit graph (dot, json) or the census (tsv)
    Export,
}

struct Ctx {
    mode: Mode,
    out: Option<PathBuf>,
    format: Option<Format>,
    verify: bool,
    capacity: usize,
    cache_dir: Option<PathBuf>,
}

impl Ctx {
    fn states(&self) -> clifford4::Result<StateSet> {
        match &self.cache_dir {
            Some(dir) => enumerate_cached(self.mode, dir, self.capacity),
            None => analysis::enumerate(self.mode, ExactState::zero(), self.capacity),
        }
    }

    fn analysis(&self) -> clifford4::Result<Analysis> {
        Analysis::from_set(self.mode, self.states()?)
    }

    fn write(&self, text: &str) -> clifford4::Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn parse_seed(s: &str) -> clifford4::Result<ExactState> {
    if s.len() == 4 && s.chars().all(|c| c == '0' || c == '1') {
        parse_state(&format!("|{s}>"))
    } else {
        parse_state(s)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build_global()
            .expect("thread pool is configured once");
    }
    let cache_dir = if cli.no_cache {
        None
    } else {
        Some(cli.cache_dir.clone().unwrap_or_else(|| std::env::temp_dir().join("clifford4-cache")))
    };
    let ctx = Ctx {
        mode: cli.mode.into(),
        out: cli.out,
        format: cli.format,
        verify: cli.verify,
        capacity: cli.capacity,
        cache_dir,
    };
    match run(&ctx, &cli.command) {
        Ok(report) => {
            if report.checks.is_empty() {
                return ExitCode::SUCCESS;
            }
            eprint!("{report}");
            if report.has_failures() {
                eprintln!("verification failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. }
                | Error::InvalidGate(_)
                | Error::NotEnumerated(_)
                | Error::RealModeViolation(_)
                | Error::NormalizationViolation { .. }
                | Error::AmplitudeBound { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(ctx: &Ctx, cmd: &Command) -> clifford4::Result<Report> {
    let mut report = Report::default();
    match cmd {
        Command::Enumerate { seed } => {
            let seed = parse_seed(seed)?;
            let set = if seed == ExactState::zero() {
                ctx.states()?
            } else {
                analysis::enumerate(ctx.mode, seed, ctx.capacity)?
            };
            if let Some(p) = &ctx.out {
                set.write_to(BufWriter::new(fs::File::create(p)?))?;
            }
            println!("{}", set.len());
            if ctx.verify {
                report = analysis::verify_enumeration(&Analysis::from_set(ctx.mode, set)?);
            }
        }
        Command::Orbits => {
            let a = ctx.analysis()?;
            println!("{:<12} {:>6} {:>8}  representative", "orbit", "size", "entropy");
            for o in a.partition.orbits() {
                println!("{:<12} {:>6} {:>8}  {}", o.name(), o.size, o.entropy.to_string(), o.representative);
            }
            if let Some(p) = &ctx.out {
                fs::write(p, orbit_report(&a.partition))?;
            }
            if ctx.verify {
                report = analysis::verify_orbits(&a);
                let other = match ctx.mode {
                    Mode::Complex => Mode::Real,
                    Mode::Real => Mode::Complex,
                };
                let b = Ctx {
                    mode: other,
                    out: None,
                    format: None,
                    verify: false,
                    capacity: ctx.capacity,
                    cache_dir: ctx.cache_dir.clone(),
                }
                .analysis()?;
                let (c, r) = if ctx.mode == Mode::Complex { (&a, &b) } else { (&b, &a) };
                report.extend(analysis::verify_refinement(c, r));
            }
        }
        Command::Transitions => {
            let a = ctx.analysis()?;
            if let Some(p) = &ctx.out {
                fs::write(p, a.census.to_tsv(&a.partition))?;
            }
            println!("orbits: {}", a.partition.len());
            println!("edges: {}", a.graph.edge_count());
            println!("diameter: {}", a.graph.diameter()?);
            for row in a.compare_census() {
                if !row.matches {
                    println!("mismatch: {} under CZ{}: computed {}", row.source, row.pair, row.describe_computed());
                }
                for cell in row.misprints() {
                    let mp = cell.misprint.as_ref().expect("filtered");
                    eprintln!(
                        "warning: {} under CZ{}: published \"{}\", computed {} to {}",
                        row.source, row.pair, mp.printed, cell.count, cell.target
                    );
                }
            }
            if ctx.verify {
                report = analysis::verify_transitions(&a);
                report.extend(analysis::verify_connect(&a, 200));
            }
        }
        Command::Connect { from, to } => {
            let (x, y) = (parse_state(from)?, parse_state(to)?);
            let a = ctx.analysis()?;
            let conn = a.connector()?;
            let circuit = conn.connect(&x, &y)?;
            let ox = a.orbit_of_state(&x).expect("connect checked membership");
            let oy = a.orbit_of_state(&y).expect("connect checked membership");
            println!("from: {} ({})", x, a.label_of(ox));
            println!("to: {} ({})", y, a.label_of(oy));
            println!("circuit: {circuit}");
            println!("cnots: {}", circuit.cnot_count());
            let replay = circuit.apply(&x) == y;
            println!("replay: {}", if replay { "verified" } else { "FAILED" });
            if !replay {
                return Err(Error::NotInSet(format!("replay of {circuit} does not reach {y}")));
            }
            if ctx.verify {
                report = analysis::verify_connect(&a, 200);
            }
        }
        Command::Census => {
            let set = ctx.states()?;
            let pc = population_census(&set)?;
            if ctx.mode == Mode::Real {
                println!("# real states: supplementary, not tabulated in the paper");
            }
            match ctx.format {
                Some(Format::Json) => ctx.write(&pc.to_json())?,
                _ => ctx.write(&pc.to_table())?,
            }
            if ctx.verify {
                report = analysis::verify_populations(&Analysis::from_set(ctx.mode, set)?);
            }
        }
        Command::Export => {
            let a = ctx.analysis()?;
            let text = match ctx.format.unwrap_or(Format::Dot) {
                Format::Dot => a.graph.to_dot(),
                Format::Json => a.graph.to_json(),
                Format::Tsv => a.census.to_tsv(&a.partition),
            };
            ctx.write(&text)?;
            if ctx.verify {
                report = analysis::verify_transitions(&a);
            }
        }
    }
    Ok(report)
}
