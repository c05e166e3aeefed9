use std::fs::{self, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use teamenum::enumerate::{enumerate, merge_disjunction, BoxedStream};
use teamenum::families::chain_text;
use teamenum::{
    enumerate_orbit, model_check, parse_disjunction, parse_formula, reduce, seeds_for_level,
    Algorithm, EnumConfig, EnumError, Formula, Node, OrderKind, ReducedFormula, RunReport, Team,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "teamenum", version, about = "Enumerate satisfying teams of dependence formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the non-empty satisfying teams of a formula.
    Enum(EnumArgs),
    /// Print the orbit of a team under the flipping-bits action.
    Orbit(OrbitArgs),
    /// Print the zero-containing seed teams of one size.
    Seeds(SeedArgs),
    /// Print a benchmark formula.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Formula text.
    #[arg(long)]
    expr: Option<String>,
    /// File holding the formula text.
    #[arg(long)]
    formula: Option<PathBuf>,
}

impl Input {
    fn text(&self) -> Result<String, Failure> {
        match (&self.expr, &self.formula) {
            (Some(e), _) => Ok(e.clone()),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| Failure::new(EXIT_FAILURE, format!("{}: {e}", path.display()))),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = AlgoArg::Orbit)]
    algo: AlgoArg,
    /// Largest team size; defaults to 2^n.
    #[arg(long)]
    max_size: Option<usize>,
    /// `size-lex` buffers each level and sorts it, which gives up the
    /// delay guarantee.
    #[arg(long, value_enum, default_value_t = OrderArg::Emission)]
    order: OrderArg,
    /// Print the run report instead of the teams.
    #[arg(long)]
    count_only: bool,
    /// Append `index<TAB>level<TAB>steps` per emission to this file.
    #[arg(long)]
    profile: Option<PathBuf>,
    /// Print the seed teams of this size instead of enumerating.
    #[arg(long)]
    seed_level: Option<usize>,
}

#[derive(Args)]
struct OrbitArgs {
    /// Team in the `s1,s2,...` format.
    #[arg(long)]
    team: String,
    /// Optional formula the team must satisfy; the team is then read over
    /// the formula's full variable order.
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Args)]
struct SeedArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    level: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Orbit,
    Polyspace,
    Brute,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Orbit => Algorithm::Orbit,
            AlgoArg::Polyspace => Algorithm::Polyspace,
            AlgoArg::Brute => Algorithm::Brute,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Emission,
    SizeLex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Chain,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn parse(e: impl std::fmt::Display) -> Self {
        Self::new(EXIT_PARSE, e.to_string())
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        let code = match e {
            EnumError::TooLarge { .. } => EXIT_REFUSED,
            _ => EXIT_FAILURE,
        };
        Self::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::new(EXIT_FAILURE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enum(args) => cmd_enum(&args),
        Command::Orbit(args) => cmd_orbit(&args),
        Command::Seeds(args) => cmd_seeds(&args.input, args.level),
        Command::Family { kind: FamilyKind::Chain, k } => cmd_family(k),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // A closed pipe downstream is a normal way to stop reading.
        Err(f) if f.message.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("teamenum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn reduced(formula: &Formula) -> Result<ReducedFormula, Failure> {
    reduce(formula).map_err(Failure::parse)
}

fn cmd_enum(args: &EnumArgs) -> Result<(), Failure> {
    let text = args.input.text()?;
    if let Some(level) = args.seed_level {
        return cmd_seeds(&args.input, level);
    }
    let disjunction = parse_disjunction(&text).map_err(Failure::parse)?;
    let mut cfg = EnumConfig::new(args.algo.into());
    cfg.max_size = args.max_size;
    cfg.order = match args.order {
        OrderArg::Emission => OrderKind::Size,
        OrderArg::SizeLex => OrderKind::SizeThenLex,
    };

    let formulas = disjunction.formulas();
    let (rf, mut stream, single): (ReducedFormula, BoxedStream, bool) = if formulas.len() == 1 {
        let rf = reduced(&formulas[0])?;
        let stream = enumerate(&rf, &cfg)?;
        (rf, stream, true)
    } else {
        let parts = formulas.iter().map(reduced).collect::<Result<Vec<_>, _>>()?;
        // The report's reference formula is the trivial one over the
        // shared order, so teams are counted over every variable.
        let universe = Formula::new(Node::Const1, disjunction.variable_order().to_vec())
            .map_err(Failure::parse)?;
        let rf = reduced(&universe)?;
        cfg.max_size = Some(cfg.effective_max_size(rf.width()));
        (rf, Box::new(merge_disjunction(&parts, &cfg)?), false)
    };

    let mut profile = match &args.profile {
        Some(path) => Some(BufWriter::new(
            OpenOptions::new().create(true).append(true).open(path)?,
        )),
        None => None,
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut index = 0u64;
    let mut error: Option<io::Error> = None;
    let mut report = RunReport::collect(&rf, &mut stream, |team, delay| {
        if error.is_some() {
            return;
        }
        index += 1;
        let mut write = || -> io::Result<()> {
            if let Some(p) = profile.as_mut() {
                writeln!(p, "{index}\t{}\t{delay}", team.len())?;
            }
            if !args.count_only {
                writeln!(out, "{team}")?;
            }
            Ok(())
        };
        error = write().err();
    });
    if let Some(e) = error {
        return Err(e.into());
    }
    report.check_ratio = single;
    if args.count_only {
        writeln!(out, "{report}")?;
    }
    out.flush()?;
    if let Some(mut p) = profile {
        p.flush()?;
    }
    Ok(())
}

fn cmd_orbit(args: &OrbitArgs) -> Result<(), Failure> {
    let mut out = BufWriter::new(io::stdout().lock());
    match &args.expr {
        None => {
            let team = Team::parse(&args.team, 0).map_err(Failure::parse)?;
            let orbit = enumerate_orbit(&team).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
            for t in orbit {
                writeln!(out, "{t}")?;
            }
        }
        Some(expr) => {
            let rf = reduced(&parse_formula(expr).map_err(Failure::parse)?)?;
            let width = rf.original_order().len();
            let team = Team::parse(&args.team, width).map_err(Failure::parse)?;
            if team.width() != width {
                return Err(Failure::parse(format!(
                    "team has width {}, formula has {width} variables",
                    team.width()
                )));
            }
            let free = rf.restrict_team(&team).map_err(Failure::parse)?;
            if !rf.respects_forced(&team) || !model_check(&rf, &free).map_err(Failure::parse)? {
                return Err(Failure::new(EXIT_FAILURE, "the team does not satisfy the formula"));
            }
            let orbit = enumerate_orbit(&free).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
            for t in orbit {
                writeln!(out, "{}", rf.expand_team(&t).map_err(Failure::parse)?)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_seeds(input: &Input, level: usize) -> Result<(), Failure> {
    let formula = parse_formula(&input.text()?).map_err(Failure::parse)?;
    let rf = reduced(&formula)?;
    let seeds = seeds_for_level(&rf, level).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    for t in seeds {
        writeln!(out, "{t}")?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_family(k: usize) -> Result<(), Failure> {
    let text = chain_text(k).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
    println!("{text}");
    Ok(())
}
