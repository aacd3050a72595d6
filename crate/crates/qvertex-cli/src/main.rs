mod bindings;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qvertex::expansions::{certify, expand, ExpansionError, SignLaw};
use qvertex::families::{degeneration_of_lattice, multivar_oracle_skew, Family, FamilyTag};
use qvertex::identities::{run_suite, NormConvention, Suite, SuiteParams, VerificationReport};
use qvertex::lattice::{skew_g, skew_g_dual, skew_j, skew_j_dual, ColumnParams, LatticeError};
use qvertex::partitions::Partition;
use qvertex::{AlgebraError, RingElem, Var};

use bindings::Bindings;

#[derive(Parser)]
#[command(name = "qvertex", version, about = "Exact computations with vertex-model symmetric functions")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for the verification suites (0 = all cores)
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a lattice function or a named family
    Compute(ComputeArgs),
    /// Expand a family member in another basis
    Expand(ExpandArgs),
    /// Run an identity suite
    Verify(VerifyArgs),
    /// Evaluate a family through its branching rule
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long, default_value = "0")]
    mu: String,
    /// number of variables
    #[arg(long)]
    n: usize,
    /// parameter binding, `u=0` or `u3=1/2`
    #[arg(long = "set")]
    set: Vec<String>,
}

#[derive(Args)]
struct ComputeArgs {
    /// J, G, J-dual, G-dual or a family name
    #[arg(long)]
    family: String,
    #[command(flatten)]
    shape: ShapeArgs,
    /// lattice width; defaults to the smallest admissible one
    #[arg(long)]
    width: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    family: String,
    #[command(flatten)]
    shape: ShapeArgs,
    /// also evaluate the lattice and fail on disagreement
    #[arg(long)]
    compare: bool,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    source: String,
    #[arg(long)]
    target: String,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    n: usize,
    /// shapes considered, `WxH`; defaults to `λ₁ x n`
    #[arg(long = "box")]
    shape_box: Option<String>,
    #[arg(long)]
    certify: Option<String>,
    #[arg(long = "set")]
    set: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long = "L")]
    l: Option<u32>,
    #[arg(long = "M")]
    m: Option<u32>,
    #[arg(long = "N")]
    n: Option<u32>,
    #[arg(long)]
    max_label: Option<u32>,
    #[arg(long)]
    degree: Option<u32>,
    /// Cauchy shapes, `WxH`
    #[arg(long = "box")]
    shape_box: Option<String>,
    #[arg(long)]
    variables: Option<usize>,
    #[arg(long)]
    max_size: Option<u32>,
    /// per-column or uniform
    #[arg(long)]
    convention: Option<String>,
}

enum Failure {
    Parse(String),
    Eval(String),
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Failure {
        Failure::Eval(e.to_string())
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Failure {
        match e {
            AlgebraError::Parse(s) => Failure::Parse(s),
            e => Failure::Eval(e.to_string()),
        }
    }
}

impl From<ExpansionError> for Failure {
    fn from(e: ExpansionError) -> Failure {
        Failure::Eval(e.to_string())
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e| Failure::Parse(format!("partition `{s}`: {e}")))
}

fn parse_box(s: &str) -> Result<(u32, usize), Failure> {
    let bad = || Failure::Parse(format!("box `{s}` is not of the form WxH"));
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((w.trim().parse().map_err(|_| bad())?, h.trim().parse().map_err(|_| bad())?))
}

fn parse_tag(s: &str) -> Result<FamilyTag, Failure> {
    s.parse().map_err(|e: String| Failure::Parse(e))
}

#[derive(Clone, Copy)]
enum LatticeFn {
    J,
    G,
    JDual,
    GDual,
}

fn lattice_fn(s: &str) -> Option<LatticeFn> {
    Some(match s {
        "J" | "j-lattice" => LatticeFn::J,
        "G" | "g-lattice" => LatticeFn::G,
        "J-dual" => LatticeFn::JDual,
        "G-dual" => LatticeFn::GDual,
        _ => return None,
    })
}

fn xs(n: usize) -> Vec<RingElem> {
    (1..=n as u32).map(|i| RingElem::var(Var::x(i))).collect()
}

fn columns(width: usize, b: &Bindings) -> ColumnParams {
    ColumnParams::new(
        (1..=width as u32).map(|i| (b.value_or_symbol(Var::u(i)), b.value_or_symbol(Var::v(i)))).collect(),
    )
}

fn family_with(tag: FamilyTag, b: &Bindings, len: usize, default_one: bool) -> Family {
    let kind = if tag == FamilyTag::DualInhomG { Var::v } else { Var::u };
    let seq = (1..=len as u32)
        .map(|i| match b.get(kind(i)) {
            Some(v) => v,
            None if default_one => RingElem::one(),
            None => RingElem::var(kind(i)),
        })
        .collect();
    Family::new(tag).with_sequence(seq)
}

fn eval_lattice(f: LatticeFn, lam: &Partition, mu: &Partition, n: usize, width: usize, b: &Bindings) -> Result<RingElem, LatticeError> {
    let cols = columns(width, b);
    let x = xs(n);
    match f {
        LatticeFn::J => skew_j(lam, mu, &x, &cols),
        LatticeFn::G => skew_g(lam, mu, &x, &cols),
        LatticeFn::JDual => skew_j_dual(mu, lam, &x, &cols),
        LatticeFn::GDual => skew_g_dual(mu, lam, &x, &cols),
    }
}

/// Evaluates with bound columns; on a pole, redoes the computation
/// symbolically to name the binding responsible.
fn compute_value(args: &ComputeArgs) -> Result<RingElem, Failure> {
    let s = &args.shape;
    let b = Bindings::parse(&s.set).map_err(Failure::Parse)?;
    let lam = parse_partition(&s.lambda)?;
    let mu = parse_partition(&s.mu)?;
    let run = |b: &Bindings| -> Result<RingElem, LatticeError> {
        if let Some(f) = lattice_fn(&args.family) {
            let need = match f {
                LatticeFn::J | LatticeFn::JDual => lam.largest().max(mu.largest()) as usize,
                LatticeFn::G | LatticeFn::GDual => lam.length().max(mu.length()),
            };
            eval_lattice(f, &lam, &mu, s.n, args.width.unwrap_or(need), b)
        } else {
            let tag = args.family.parse::<FamilyTag>().map_err(AlgebraError::Parse)?;
            let len = (lam.largest() as usize).max(lam.length()).max(1);
            degeneration_of_lattice(&family_with(tag, b, len, false), &lam, &mu, &xs(s.n))
        }
    };
    if lattice_fn(&args.family).is_none() {
        parse_tag(&args.family)?;
    }
    match run(&b).and_then(|r| Ok(b.apply(&r)?)) {
        Ok(r) => Ok(r),
        Err(LatticeError::Algebra(AlgebraError::ZeroDenominator)) => {
            let symbolic = run(&Bindings::default())?;
            b.apply_stepwise(&symbolic).map_err(Failure::Eval)?;
            Err(Failure::Eval(format!("zero denominator under bindings {b}")))
        }
        Err(e) => Err(e.into()),
    }
}

fn print_elem(r: &RingElem, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(r).expect("serialisable")),
        Format::Text => println!("{r}"),
    }
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("serialisable")),
        Format::Text => {
            let status = if report.passed { "pass" } else { "FAIL" };
            println!("{}: {status} ({} instances)", report.identity_id, report.instances_checked);
            for f in &report.failures {
                println!("  {}: {} != {}", f.instance, f.lhs, f.rhs);
            }
            for n in &report.notes {
                println!("  {n}");
            }
        }
    }
}

fn run_oracle(args: &OracleArgs, format: Format) -> Result<bool, Failure> {
    let s = &args.shape;
    let b = Bindings::parse(&s.set).map_err(Failure::Parse)?;
    let tag = parse_tag(&args.family)?;
    let lam = parse_partition(&s.lambda)?;
    let mu = parse_partition(&s.mu)?;
    let len = (lam.largest() as usize).max(lam.length()).max(1);
    let family = family_with(tag, &b, len, false);
    let value = b.apply(&multivar_oracle_skew(&family, &lam, &mu, &xs(s.n))?)?;
    print_elem(&value, format);
    if args.compare {
        let lattice = b.apply(&degeneration_of_lattice(&family, &lam, &mu, &xs(s.n))?)?;
        if lattice != value {
            eprintln!("lattice value differs: {lattice}");
            return Ok(false);
        }
    }
    Ok(true)
}

fn run_expand(args: &ExpandArgs, format: Format) -> Result<bool, Failure> {
    let b = Bindings::parse(&args.set).map_err(Failure::Parse)?;
    let lam = parse_partition(&args.lambda)?;
    let src_tag = parse_tag(&args.source)?;
    let tgt_tag = parse_tag(&args.target)?;
    let law = args.certify.as_deref().map(|s| s.parse::<SignLaw>().map_err(Failure::Parse)).transpose()?;
    let shape_box = match &args.shape_box {
        Some(s) => parse_box(s)?,
        None => (lam.largest(), args.n),
    };
    let len = args.n.max(shape_box.0 as usize).max(lam.largest() as usize).max(1);
    let source = family_with(src_tag, &b, len, true);
    let target = family_with(tgt_tag, &b, len, true);
    let mut table = expand(&source, &target, &lam, args.n, shape_box)?;
    for c in table.entries.values_mut() {
        *c = b.apply(c)?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&table).expect("serialisable")),
        Format::Text => {
            for (mu, c) in &table.entries {
                println!("{mu}: {c}");
            }
        }
    }
    let Some(law) = law else { return Ok(true) };
    let report = certify(&table, law);
    if !report.passed || matches!(format, Format::Text) {
        eprintln!("{}: {}", report.identity_id, if report.passed { "pass" } else { "FAIL" });
        for n in &report.notes {
            eprintln!("  {n}");
        }
    }
    Ok(report.passed)
}

fn run_verify(args: &VerifyArgs, format: Format) -> Result<bool, Failure> {
    let suite: Suite = args.suite.parse().map_err(Failure::Parse)?;
    let mut p = SuiteParams::default();
    if let Some(v) = args.l {
        p.l = v;
    }
    if let Some(v) = args.m {
        p.m = v;
    }
    if let Some(v) = args.n {
        p.n = v;
    }
    if let Some(v) = args.max_label {
        p.max_label = v;
    }
    if let Some(v) = args.degree {
        p.degree = v;
    }
    if let Some(s) = &args.shape_box {
        p.cauchy_box = parse_box(s)?;
    }
    if let Some(v) = args.variables {
        p.variables = v;
    }
    if let Some(v) = args.max_size {
        p.max_size = v;
    }
    if let Some(s) = &args.convention {
        p.convention = s.parse::<NormConvention>().map_err(Failure::Parse)?;
    }
    let report = run_suite(suite, &p);
    print_report(&report, format);
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match &cli.command {
        Command::Compute(a) => compute_value(a).map(|r| {
            print_elem(&r, cli.format);
            true
        }),
        Command::Expand(a) => run_expand(a, cli.format),
        Command::Verify(a) => run_verify(a, cli.format),
        Command::Oracle(a) => run_oracle(a, cli.format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Eval(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
