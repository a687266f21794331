//! Command-line front end for the `singspace` library.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use singspace::duality::{dual_rank_spectrum, orthogonal};
use singspace::search::{
    verify_dimension_bound, verify_equality_classification, Execution, SearchError,
};
use singspace::structure::{
    classify_rank_one_space, classify_singular_space, complete_to_full_rank, exceptional_space,
    ClassifyError, OutcomeStatus, SubstitutionError,
};
use singspace::{
    random, AffineMatrixSpace, Elem, FieldCtx, LinearMatrixSpace, Matrix, SpaceError,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "singspace", version, about = "Exact linear algebra on spaces of singular matrices over prime fields")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Field size (a prime).
    #[arg(long, global = true, default_value_t = 2)]
    q: u32,
    /// Number of rows.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Number of columns.
    #[arg(long, global = true)]
    p: Option<usize>,
    /// Dimension of a randomly drawn space (with --n, --p, --seed).
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Worker threads for verification (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomly drawn inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on the number of enumerated elements.
    #[arg(long, global = true, default_value_t = singspace::DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args, Debug, Default)]
struct SpaceInput {
    /// Space file ("-" for stdin).
    #[arg(long)]
    space: Option<String>,
    /// Generator of a linear space, in matrix text format; repeatable.
    #[arg(long = "gen")]
    generators: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of one matrix, e.g. "1 0; 0 1".
    Rank { matrix: String },
    /// Classify a space of rank-at-most-one operators.
    Schur(SpaceInput),
    /// Complete a border to a full-rank matrix.
    Complete {
        /// First row, space separated.
        #[arg(long)]
        row: String,
        /// First column, space separated.
        #[arg(long)]
        col: String,
    },
    /// Canonical basis of the trace orthogonal complement.
    Dualize(SpaceInput),
    /// Ranks of the evaluation operators over all projective vectors.
    Spectrum(SpaceInput),
    /// Classify an affine space without full-rank elements.
    Classify(SpaceInput),
    /// Exhaustive verification over the supported parameters.
    Verify {
        #[arg(long, conflicts_with = "equality", required_unless_present = "equality")]
        bound: bool,
        #[arg(long)]
        equality: bool,
    },
    /// Print the upper-triangular trace-one space over F_2 and its classification.
    DemoExceptional,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Budget(String),
}

impl From<SpaceError> for CliError {
    fn from(e: SpaceError) -> Self {
        match e {
            SpaceError::CapExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Space(s) => s.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult = Result<u8, CliError>;

fn field(opts: &GlobalOpts) -> Result<FieldCtx, CliError> {
    FieldCtx::new(opts.q).map_err(|e| CliError::Usage(e.to_string()))
}

fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {path}: {e}")))
    }
}

/// Resolves the space from a file, from generators, or from a seeded random
/// draw with --n, --p and --dim.
fn load_space(opts: &GlobalOpts, input: &SpaceInput) -> Result<AffineMatrixSpace, CliError> {
    if let Some(path) = &input.space {
        return Ok(AffineMatrixSpace::parse(&read_text(path)?)?);
    }
    let f = field(opts)?;
    if !input.generators.is_empty() {
        let gens = input
            .generators
            .iter()
            .map(|g| Matrix::parse(f, g))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let (n, p) = gens[0].shape();
        return Ok(AffineMatrixSpace::linear(LinearMatrixSpace::span(f, n, p, &gens)?));
    }
    match (opts.n, opts.p, opts.dim) {
        (Some(n), Some(p), Some(dim)) if dim <= n * p => {
            let mut rng = random::rng(opts.seed);
            Ok(AffineMatrixSpace::linear(random::linear_space(
                &mut rng, f, n, p, dim,
            )))
        }
        _ => Err(CliError::Usage(
            "give --space FILE, one or more --gen MATRIX, or --n, --p and --dim".into(),
        )),
    }
}

fn parse_vector(f: FieldCtx, text: &str) -> Result<Vec<Elem>, CliError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map(|x| f.reduce(x))
                .map_err(|_| CliError::Usage(format!("bad entry {t:?}")))
        })
        .collect()
}

fn fmt_vec(v: &[Elem]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_rank(opts: &GlobalOpts, text: &str) -> CliResult {
    let m = Matrix::parse(field(opts)?, text).map_err(|e| CliError::Usage(e.to_string()))?;
    let rank = m.rank();
    if opts.json {
        print_json(&serde_json::json!({ "rank": rank }));
    } else {
        println!("{rank}");
    }
    Ok(0)
}

#[derive(Serialize)]
struct SchurJson {
    kind: singspace::structure::SchurKind,
    witness_f: Option<Vec<Elem>>,
    witness_y: Option<Vec<Elem>>,
    complement_basis: Option<Vec<Vec<Elem>>>,
    rank2_certificate: Option<String>,
}

fn cmd_schur(opts: &GlobalOpts, input: &SpaceInput) -> CliResult {
    let space = load_space(opts, input)?;
    let c = classify_rank_one_space(space.direction());
    let complement: Option<Vec<Vec<Elem>>> = c
        .complement_space
        .as_ref()
        .map(|s| s.basis().iter().map(|b| b.as_slice().to_vec()).collect());
    if opts.json {
        print_json(&SchurJson {
            kind: c.kind,
            witness_f: c.witness_f.clone(),
            witness_y: c.witness_y.clone(),
            complement_basis: complement,
            rank2_certificate: c.rank2_certificate.as_ref().map(Matrix::to_string),
        });
        return Ok(0);
    }
    println!("kind: {:?}", c.kind);
    if let Some(f) = &c.witness_f {
        println!("f: {}", fmt_vec(f));
    }
    if let Some(y) = &c.witness_y {
        println!("y: {}", fmt_vec(y));
    }
    if let Some(basis) = complement {
        println!("complement_basis:");
        for b in basis {
            println!("  {}", fmt_vec(&b));
        }
    }
    if let Some(cert) = &c.rank2_certificate {
        println!("rank2_certificate: {cert}");
    }
    Ok(0)
}

fn cmd_complete(opts: &GlobalOpts, row: &str, col: &str) -> CliResult {
    let f = field(opts)?;
    let row = parse_vector(f, row)?;
    let col = parse_vector(f, col)?;
    let (n, p) = (col.len(), row.len());
    match complete_to_full_rank(f, &row, &col, n, p) {
        Ok(m) => {
            if opts.json {
                print_json(&serde_json::json!({ "completion": m.to_string(), "rank": m.rank() }));
            } else {
                println!("{m}");
            }
            Ok(0)
        }
        Err(SubstitutionError::NoCompletion) => {
            if opts.json {
                print_json(&serde_json::json!({ "completion": null, "error": "NoCompletion" }));
            } else {
                println!("NoCompletion");
            }
            Ok(0)
        }
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

fn cmd_dualize(opts: &GlobalOpts, input: &SpaceInput) -> CliResult {
    let space = load_space(opts, input)?;
    let perp = AffineMatrixSpace::linear(orthogonal(space.direction()));
    if opts.json {
        let basis: Vec<String> = perp.direction().basis().iter().map(Matrix::to_string).collect();
        let (rows, cols) = perp.shape();
        print_json(&serde_json::json!({
            "n": rows, "p": cols, "q": perp.field().q(), "dim": perp.dim(), "basis": basis,
        }));
    } else {
        print!("{perp}");
    }
    Ok(0)
}

fn cmd_spectrum(opts: &GlobalOpts, input: &SpaceInput) -> CliResult {
    let space = load_space(opts, input)?;
    let spectrum = dual_rank_spectrum(space.direction(), opts.cap)?;
    if opts.json {
        print_json(&serde_json::json!({
            "p": spectrum.p,
            "entries": spectrum.entries,
            "ranks": spectrum.ranks(),
        }));
        return Ok(0);
    }
    println!("y | dim S_(y) | rank yhat");
    for e in &spectrum.entries {
        println!("{} | {} | {}", fmt_vec(&e.y), e.dim_s_sub_y, e.rank_yhat);
    }
    let ranks: Vec<String> = spectrum
        .ranks()
        .iter()
        .map(|(r, m)| format!("{r}x{m}"))
        .collect();
    println!("ranks: {}", ranks.join(" "));
    Ok(0)
}

fn print_outcome(opts: &GlobalOpts, outcome: &singspace::structure::DieudonneOutcome, prefix: &str) {
    if opts.json {
        print_json(outcome);
        return;
    }
    println!("{prefix}status: {:?}", outcome.status);
    println!("{prefix}dim: {}", outcome.dim);
    println!("{prefix}max_rank: {}", outcome.max_rank_found);
    println!("{prefix}witnesses:");
    for w in &outcome.witnesses {
        println!("{prefix}  {w}");
    }
}

fn cmd_classify(opts: &GlobalOpts, input: &SpaceInput) -> CliResult {
    let space = load_space(opts, input)?;
    let outcome = classify_singular_space(&space, opts.cap)?;
    print_outcome(opts, &outcome, "");
    Ok(if outcome.status == OutcomeStatus::TheoremViolation {
        EXIT_VIOLATION
    } else {
        0
    })
}

fn cmd_verify(opts: &GlobalOpts, bound: bool) -> CliResult {
    let (Some(n), Some(p)) = (opts.n, opts.p) else {
        return Err(CliError::Usage("verify needs --n and --p".into()));
    };
    let exec = Execution::with_jobs(opts.jobs);
    let report = if bound {
        verify_dimension_bound(n, p, opts.q, exec)?
    } else {
        verify_equality_classification(n, p, opts.q, exec)?
    };
    if opts.json {
        print_json(&report);
    } else {
        print!("{report}");
    }
    Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
}

fn cmd_demo(opts: &GlobalOpts) -> CliResult {
    let space = exceptional_space();
    let outcome = classify_singular_space(&space, opts.cap)?;
    if opts.json {
        print_json(&serde_json::json!({ "space": space.to_string(), "outcome": outcome }));
    } else {
        print!("{space}");
        print_outcome(opts, &outcome, "# ");
    }
    Ok(0)
}

fn run(cli: &Cli) -> CliResult {
    let opts = &cli.opts;
    match &cli.command {
        Command::Rank { matrix } => cmd_rank(opts, matrix),
        Command::Schur(input) => cmd_schur(opts, input),
        Command::Complete { row, col } => cmd_complete(opts, row, col),
        Command::Dualize(input) => cmd_dualize(opts, input),
        Command::Spectrum(input) => cmd_spectrum(opts, input),
        Command::Classify(input) => cmd_classify(opts, input),
        Command::Verify { bound, .. } => cmd_verify(opts, *bound),
        Command::DemoExceptional => cmd_demo(opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
