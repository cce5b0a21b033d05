use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sphdual::classify::{self, DEFAULT_RANK_BOUND};
use sphdual::dualize::{self, DualReport};
use sphdual::folding::Folding;
use sphdual::input::{self, InputDocument, InputError};
use sphdual::lgroup::{self, ConstraintOptions};
use sphdual::par::Execution;
use sphdual::wss::{self, WeakSphericalSystem};
use sphdual::{BasedRootDatum, LatticeFlavor};

#[derive(Parser)]
#[command(name = "sphdual", version, about = "Dual groups of weak spherical systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Rank1,
    Rank2,
}

#[derive(Subcommand)]
enum Command {
    /// Check a system against the axioms.
    Validate { path: PathBuf },
    /// Compute the dual group and the associated data.
    Dualize {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the systems of rank one or two on an ambient type.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        rank: u8,
        #[arg(long)]
        ambient: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_RANK_BOUND)]
        bound: usize,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Regenerate a table by enumeration and compare it with the golden file.
    Tables {
        #[arg(long, value_enum)]
        which: Which,
        /// Golden file to compare with instead of the shipped one.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Write the regenerated table here.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Fold a root datum along an involution of its diagram.
    Fold {
        /// Ambient type, e.g. `A5` or `B3xA1`.
        #[arg(long = "type")]
        type_label: String,
        #[arg(long, default_value = "simply_connected")]
        lattice: String,
        /// 1-based images of the simple roots, e.g. `3,2,1`.
        #[arg(long, value_delimiter = ',')]
        involution: Vec<usize>,
    },
    /// Character constraints for the outer action in the `[action]` table.
    Lgroup {
        path: PathBuf,
        #[arg(long)]
        conjectural_d2: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the dual-group fixture table.
    Fixtures {
        /// Fixture file to run instead of the shipped one.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

/// Exit status 1: the input was understood but the answer is negative.
struct Domain(String);
/// Exit status 2: the input could not be read.
struct Input(String);

enum Failure {
    Domain(Domain),
    Input(Input),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(Input(e.to_string()))
    }
}

fn domain(e: impl ToString) -> Failure {
    Failure::Domain(Domain(e.to_string()))
}

fn bad_input(e: impl ToString) -> Failure {
    Failure::Input(Input(e.to_string()))
}

fn exec(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

/// Pretty JSON with keys sorted, so output is stable and diffable.
fn structured<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(InputDocument, WeakSphericalSystem), Failure> {
    let doc = InputDocument::parse(&read(path)?)?;
    let w = doc.build()?;
    Ok((doc, w))
}

fn violations(w: &WeakSphericalSystem) -> Option<String> {
    let v = w.validate();
    if v.is_empty() {
        return None;
    }
    Some(v.iter().map(|x| format!("{x}\n")).collect())
}

fn validate(path: &Path) -> Result<String, Failure> {
    let (_, w) = load(path)?;
    match violations(&w) {
        None => Ok("valid\n".into()),
        Some(v) => Err(domain(v.trim_end())),
    }
}

fn dualize_cmd(path: &Path, format: Format) -> Result<String, Failure> {
    let (_, w) = load(path)?;
    if let Some(v) = violations(&w) {
        return Err(domain(v.trim_end()));
    }
    let r: DualReport = dualize::full_report(&w).map_err(domain)?;
    Ok(match format {
        Format::Text => r.to_text(),
        Format::Structured => structured(&r),
    })
}

fn enumerate(
    rank: u8,
    ambient: &str,
    format: Format,
    bound: usize,
    ex: Execution,
) -> Result<String, Failure> {
    let res = match rank {
        1 => classify::enumerate_rank1(ambient, bound),
        _ => classify::enumerate_rank2(ambient, bound, ex),
    };
    let res = res.map_err(|e| match e {
        sphdual::ClassifyError::RankBoundExceeded(..) => domain(e),
        _ => bad_input(e),
    })?;
    if let Format::Structured = format {
        return Ok(structured(&res));
    }
    let mut s = format!("{} systems of rank {rank} on {ambient}\n", res.entries.len());
    for e in &res.entries {
        let roots: Vec<String> = e.sigma.iter().map(|v| wss::format_root(v)).collect();
        let sp: Vec<String> = e.sp.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(
            s,
            "{} | Sp = {{{}}} | {} | {}",
            roots.join("; "),
            sp.join(","),
            e.patterns.join(", "),
            e.summary
        );
    }
    Ok(s)
}

fn tables(
    which: Which,
    golden: Option<&Path>,
    output: Option<&Path>,
    ex: Execution,
) -> Result<String, Failure> {
    let rank = match which {
        Which::Rank1 => 1,
        Which::Rank2 => 2,
    };
    let expected = match golden {
        Some(p) => read(p)?,
        None if rank == 1 => classify::RANK1_GOLDEN.to_string(),
        None => classify::RANK2_GOLDEN.to_string(),
    };
    let got = classify::enumerate_all(rank, DEFAULT_RANK_BOUND, ex).map_err(domain)?;
    if let Some(p) = output {
        std::fs::write(p, &got).map_err(|e| bad_input(format!("{}: {e}", p.display())))?;
    }
    let rows = |s: &str| -> Vec<String> {
        s.lines()
            .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
            .map(|l| l.trim().to_string())
            .collect()
    };
    let (want, have) = (rows(&expected), rows(&got));
    let missing: Vec<&String> = want.iter().filter(|l| !have.contains(l)).collect();
    let extra: Vec<&String> = have.iter().filter(|l| !want.contains(l)).collect();
    if missing.is_empty() && extra.is_empty() {
        return Ok(format!("rank {rank}: {} systems, golden file matches\n", have.len()));
    }
    let mut s = format!("rank {rank}: golden file mismatch\n");
    for l in missing {
        let _ = writeln!(s, "- {l}");
    }
    for l in extra {
        let _ = writeln!(s, "+ {l}");
    }
    Err(domain(s.trim_end()))
}

fn fold(type_label: &str, lattice: &str, involution: &[usize]) -> Result<String, Failure> {
    let flavor = match lattice {
        "simply_connected" | "sc" => LatticeFlavor::SimplyConnected,
        "adjoint" | "ad" => LatticeFlavor::Adjoint,
        other => return Err(bad_input(format!("unknown lattice `{other}`"))),
    };
    let datum = BasedRootDatum::build(type_label, &flavor).map_err(bad_input)?;
    let r = datum.num_simple();
    let s: Vec<usize> = if involution.is_empty() {
        (0..r).collect()
    } else {
        if involution.len() != r || involution.iter().any(|&i| !(1..=r).contains(&i)) {
            return Err(bad_input(format!("involution must map 1..={r} to itself")));
        }
        involution.iter().map(|i| i - 1).collect()
    };
    let f = Folding::new(datum, s).map_err(|e| match e {
        sphdual::FoldingError::NotInvolution => bad_input(e),
        _ => domain(e),
    })?;
    let mut out = String::new();
    for factor in f.classify().map_err(domain)? {
        let support: Vec<String> = factor.support.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(
            out,
            "{{{}}}: {:?} {} -> {}",
            support.join(","),
            factor.kind,
            factor.source,
            factor.target
        );
    }
    let folded = f.fold_quotient().map_err(domain)?;
    let _ = writeln!(out, "folded: {}", folded.cartan_type());
    Ok(out)
}

fn lgroup_cmd(path: &Path, conjectural_d2: bool, format: Format) -> Result<String, Failure> {
    let (doc, w) = load(path)?;
    let gens = doc.action_generators(w.ambient().num_simple())?;
    let r = lgroup::report(&w, gens, ConstraintOptions { conjectural_d2 }).map_err(domain)?;
    if let Format::Structured = format {
        return Ok(structured(&r));
    }
    let mut s = format!("group order: {}\n", r.group_order);
    let values = |v: &[i64]| -> String {
        v.iter().map(|x| format!("{x:+}")).collect::<Vec<_>>().join("/")
    };
    for (title, rows) in [("adapted", &r.adapted), ("very adapted", &r.very_adapted)] {
        let _ = writeln!(s, "{title}:");
        for c in rows {
            let u: Vec<String> = c.u.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                s,
                "  {} ({}) u = [{}]: {}",
                wss::format_root(&w.sigma()[c.sigma - 1]),
                c.pattern,
                u.join(","),
                values(&c.allowed)
            );
        }
    }
    let _ = writeln!(s, "standard: {}", r.standard);
    Ok(s)
}

fn fixtures(file: Option<&Path>) -> Result<String, Failure> {
    let src = match file {
        Some(p) => read(p)?,
        None => input::TABLE3.to_string(),
    };
    let rows = input::parse_fixtures(&src)?;
    let mut s = String::new();
    let mut failed = 0;
    for row in &rows {
        let o = input::check_fixture(row);
        let status = match (o.passed(), o.quarantined) {
            (true, _) => "pass",
            (false, true) => "quarantined",
            (false, false) => {
                failed += 1;
                "FAIL"
            }
        };
        let detail = match &o.error {
            Some(e) => e.clone(),
            None => o.computed.join(" | "),
        };
        let _ = writeln!(s, "{status:<11} {}: {detail}", row.name);
    }
    let _ = writeln!(s, "{} rows, {failed} failed", rows.len());
    if failed > 0 {
        return Err(domain(s.trim_end()));
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Validate { path } => validate(&path),
        Command::Dualize { path, format } => dualize_cmd(&path, format),
        Command::Enumerate {
            rank,
            ambient,
            format,
            bound,
            sequential,
        } => enumerate(rank, &ambient, format, bound, exec(sequential)),
        Command::Tables {
            which,
            golden,
            output,
            sequential,
        } => tables(which, golden.as_deref(), output.as_deref(), exec(sequential)),
        Command::Fold {
            type_label,
            lattice,
            involution,
        } => fold(&type_label, &lattice, &involution),
        Command::Lgroup {
            path,
            conjectural_d2,
            format,
        } => lgroup_cmd(&path, conjectural_d2, format),
        Command::Fixtures { file } => fixtures(file.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(Domain(msg))) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
