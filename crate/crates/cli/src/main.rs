//! Command-line front end: render Young diagrams, apply the four diagram
//! surgeries, print chart templates and vanishing patterns, and drive the
//! finite-field verification harness.
//!
//! Exit codes: 0 success / all verified, 1 usage error, 2 verification
//! counterexample, 3 enumeration budget exceeded.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use schubert::verify::{self, Claim, Status, VerificationReport, VerifyError, DEFAULT_BUDGET};
use schubert::{
    insertion_walk, ma_template, zero_pattern, BoxShape, CycleClass, Embedding, EmbeddingKind,
    Partition,
};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Young-diagram Schubert calculus for Grassmannian embeddings",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render the Young diagram of a partition in a box.
    Diagram(DiagramArgs),
    /// Apply a pushforward or pullback surgery to a class expression.
    Map(MapArgs),
    /// Print the chart data of a partition: insertion walk, matrix
    /// template, vanishing pattern.
    Chart(ChartArgs),
    /// Run the brute-force verification harness.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DiagramArgs {
    /// Box as `dxc`, e.g. `4x7`.
    #[arg(long = "box")]
    box_: String,
    /// Partition as comma-separated parts, e.g. `5,2,1`.
    #[arg(long)]
    p: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    /// Pushforward along `P -> P + 0`: add `s` full columns on the left.
    HstarPush,
    /// Pullback along `P -> P + 0`: delete the last `s` columns or kill.
    HstarPull,
    /// Pushforward along `P -> P + S`: add `s` full rows on top.
    VstarPush,
    /// Pullback along `P -> P + S`: delete the last `s` rows or kill.
    VstarPull,
}

#[derive(Args)]
struct MapArgs {
    /// Which surgery to apply.
    #[arg(long, value_enum)]
    kind: MapKind,
    /// Box of the input expression, `dxc`.
    #[arg(long = "box")]
    box_: String,
    /// Dimension of the extra summand.
    #[arg(long)]
    s: usize,
    /// Class expression, e.g. `sigma[5,2,1]` or
    /// `2*sigma[1,0] + 3*sigma[1,1]`.
    expression: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ChartArgs {
    #[arg(long = "box")]
    box_: String,
    #[arg(long)]
    p: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable output.
    Text,
    /// Machine-readable records only.
    Machine,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim to check, or `all`.
    #[arg(long, default_value = "all")]
    claim: String,
    /// Diagram rows of the source box.
    #[arg(long)]
    d: Option<usize>,
    /// Diagram columns of the source box.
    #[arg(long)]
    c: Option<usize>,
    /// Dimension of the extra summand.
    #[arg(long)]
    s: Option<usize>,
    /// Field order (a small prime).
    #[arg(long)]
    q: Option<u64>,
    /// Enumeration budget in subspaces.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Write machine-readable records to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Budget(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => match run(cli.command) {
            Ok(code) => code,
            Err(err) => {
                eprintln!("error: {}", err.message());
                err.exit_code()
            }
        },
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            0
        }
        Err(e) => {
            eprint!("{e}");
            1
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Diagram(args) => cmd_diagram(args),
        Command::Map(args) => cmd_map(args),
        Command::Chart(args) => cmd_chart(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_partition(box_: &str, p: &str) -> Result<Partition, CliError> {
    let bx: BoxShape = box_.parse().map_err(usage)?;
    Partition::parse_parts(bx, p).map_err(usage)
}

fn cmd_diagram(args: DiagramArgs) -> Result<i32, CliError> {
    let lambda = parse_partition(&args.box_, &args.p)?;
    println!("{}", lambda.render());
    Ok(0)
}

fn class_diagrams(class: &CycleClass) -> String {
    if class.is_zero() {
        return "(zero class)\n".into();
    }
    let mut out = String::new();
    for (p, k) in class.terms() {
        if k == 1 {
            let _ = writeln!(out, "sigma[{p}]");
        } else {
            let _ = writeln!(out, "{k}*sigma[{p}]");
        }
        let _ = writeln!(out, "{}", p.render());
    }
    out
}

fn cmd_map(args: MapArgs) -> Result<i32, CliError> {
    let bx: BoxShape = args.box_.parse().map_err(usage)?;
    let input = CycleClass::parse(&args.expression, Some(bx)).map_err(usage)?;
    let (kind, push) = match args.kind {
        MapKind::HstarPush => (EmbeddingKind::H, true),
        MapKind::HstarPull => (EmbeddingKind::H, false),
        MapKind::VstarPush => (EmbeddingKind::V, true),
        MapKind::VstarPull => (EmbeddingKind::V, false),
    };
    let (embedding, output) = if push {
        let e = Embedding::new(kind, bx, args.s).map_err(usage)?;
        let out = e.push_class(&input).map_err(usage)?;
        (e, out)
    } else {
        let e = Embedding::with_target(kind, bx, args.s).map_err(usage)?;
        let out = e.pull_class(&input).map_err(usage)?;
        (e, out)
    };
    println!("{output}");
    if args.format == Format::Text {
        let (from, to) = if push {
            (embedding.source_box(), embedding.target_box())
        } else {
            (embedding.target_box(), embedding.source_box())
        };
        println!();
        println!("before @ {from}:");
        print!("{}", class_diagrams(&input));
        println!();
        println!("after @ {to}:");
        print!("{}", class_diagrams(&output));
    }
    Ok(0)
}

fn cmd_chart(args: ChartArgs) -> Result<i32, CliError> {
    let lambda = parse_partition(&args.box_, &args.p)?;
    let walk = insertion_walk(&lambda);
    let positions = walk
        .positions()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    println!("walk: {positions}");
    println!("template:");
    println!("{}", ma_template(&lambda));
    println!("pattern:");
    println!("{}", zero_pattern(&lambda).to_grid());
    Ok(0)
}

fn requested_claims(name: &str) -> Result<Vec<Claim>, CliError> {
    if name == "all" {
        return Ok(Claim::ALL.to_vec());
    }
    Ok(vec![name.parse::<Claim>().map_err(usage)?])
}

fn needed_params(claim: Claim) -> (bool, bool) {
    // (needs s, needs q)
    match claim {
        Claim::Prop1 | Claim::Prop2 | Claim::Prop3 | Claim::Prop4 => (true, true),
        Claim::TransvH | Claim::TransvV => (true, false),
        Claim::Counts => (false, true),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let claims = requested_claims(&args.claim)?;
    let explicit = args.d.is_some() || args.c.is_some() || args.s.is_some() || args.q.is_some();

    let mut reports: Vec<VerificationReport> = Vec::new();
    if explicit {
        let d = args
            .d
            .ok_or_else(|| CliError::Usage("--d is required with explicit parameters".into()))?;
        let c = args
            .c
            .ok_or_else(|| CliError::Usage("--c is required with explicit parameters".into()))?;
        for claim in &claims {
            let (needs_s, needs_q) = needed_params(*claim);
            let s = match (needs_s, args.s) {
                (true, None) => {
                    return Err(CliError::Usage(format!("--s is required for {claim}")))
                }
                (_, s) => s.unwrap_or(1),
            };
            let q = match (needs_q, args.q) {
                (true, None) => {
                    return Err(CliError::Usage(format!("--q is required for {claim}")))
                }
                (_, q) => q.unwrap_or(2),
            };
            reports.extend(verify::sweep_claim(*claim, d, c, s, q, args.budget)?);
        }
    } else {
        for claim in &claims {
            for (d, c, s, q) in verify::default_ranges(*claim) {
                reports.extend(verify::sweep_claim(*claim, d, c, s, q, args.budget)?);
            }
        }
    }

    if let Some(path) = &args.out {
        let mut file = std::fs::File::create(path)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        for r in &reports {
            writeln!(file, "{}", r.record())
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }

    match args.format {
        Format::Machine => {
            for r in &reports {
                println!("{}", r.record());
            }
        }
        Format::Text => print_report_table(&reports),
    }

    let failed = reports.iter().filter(|r| !r.verified()).count();
    if failed > 0 {
        Ok(2)
    } else {
        Ok(0)
    }
}

fn print_report_table(reports: &[VerificationReport]) {
    let rows: Vec<[String; 4]> = reports
        .iter()
        .map(|r| {
            [
                r.claim.to_string(),
                r.params.to_string(),
                match r.status {
                    Status::Verified => "verified".to_string(),
                    Status::Counterexample(_) => "COUNTEREXAMPLE".to_string(),
                },
                format!(
                    "examined={} lhs={} rhs={}",
                    r.counts.examined, r.counts.lhs, r.counts.rhs
                ),
            ]
        })
        .collect();
    let mut widths = [5usize, 6, 8, 6];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    println!(
        "{:<w0$}  {:<w1$}  {:<w2$}  counts",
        "claim",
        "params",
        "status",
        w0 = widths[0],
        w1 = widths[1],
        w2 = widths[2]
    );
    for (row, report) in rows.iter().zip(reports) {
        println!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {}",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        );
        if let Status::Counterexample(witness) = &report.status {
            println!("  witness: {witness}");
        }
    }
    let failed = reports.iter().filter(|r| !r.verified()).count();
    if failed == 0 {
        println!("all {} checks verified", reports.len());
    } else {
        println!("{failed} of {} checks FAILED", reports.len());
    }
}
