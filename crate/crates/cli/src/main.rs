use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};

use concavity_core::crflag::Check;
use concavity_core::golden::GoldenTable;
use concavity_core::realform::{build_real_form, parse_form, satake, RealForm, CATALOG_JSON};
use concavity_core::report::{all_phis, compare_golden, emit, enumerate, Format, Report};

/// Root systems above this many roots need --allow-large.
const LARGE_ROOTS: usize = 200;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckArg {
    Mot,
    Span,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

/// Decide higher Levi form concavity for minimal orbits, for every Φ or a
/// chosen one, and compare with the golden table.
#[derive(Debug, Parser)]
#[command(name = "classify", version)]
struct Args {
    /// Real form: a Satake label (AIIIa, EIII, ...) or a name such as
    /// su(2,3), sp(1,2), so*(8), e6(-14), sl(3,C), compact-G2. Repeatable.
    #[arg(long = "form", required_unless_present = "dump_catalog")]
    forms: Vec<String>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Comma-separated 1-based simple roots; all subsets when omitted.
    #[arg(long, value_delimiter = ',')]
    phi: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "all")]
    check: CheckArg,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Golden table JSON; the built-in table is used otherwise.
    #[arg(long)]
    golden: Option<std::path::PathBuf>,
    /// Randomize Chevalley and conjugation sign gauges.
    #[arg(long)]
    gauge_seed: Option<u64>,
    #[arg(long)]
    allow_large: bool,
    /// Print the Satake catalog as JSON and exit.
    #[arg(long)]
    dump_catalog: bool,
}

fn load_form(args: &Args, name: &str) -> Result<RealForm> {
    let diag = if args.p.is_some() || args.q.is_some() || args.l.is_some() {
        satake(name, args.p, args.q, args.l)?
    } else {
        parse_form(name)?
    };
    Ok(build_real_form(&diag, args.gauge_seed)?)
}

fn run(args: Args) -> Result<bool> {
    let mut out = std::io::stdout().lock();
    if args.dump_catalog {
        out.write_all(CATALOG_JSON.as_bytes())?;
        return Ok(true);
    }
    if let Ok(n) = std::env::var("CONCAVITY_THREADS") {
        let n: usize = n.parse().context("CONCAVITY_THREADS must be a positive integer")?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    let golden = match &args.golden {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            GoldenTable::parse(&text)?
        }
        None => GoldenTable::shipped(),
    };
    let check = match args.check {
        CheckArg::Mot => Check::Mot,
        CheckArg::Span => Check::Span,
        CheckArg::All => Check::All,
    };

    let mut forms = Vec::new();
    for name in &args.forms {
        let f = load_form(&args, name)?;
        if f.rs.len() > LARGE_ROOTS && !args.allow_large {
            bail!("{} has {} roots; pass --allow-large to run it", f.diagram.name, f.rs.len());
        }
        forms.push(f);
    }

    let mut report = Report::default();
    for f in &forms {
        let phis = match &args.phi {
            Some(phi) => vec![phi.clone()],
            None => all_phis(f.rs.rank()),
        };
        let total = phis.len();
        let name = f.diagram.name.clone();
        let large = f.rs.len() > LARGE_ROOTS;
        let step = (total / 20).max(1);
        let progress = move |done: usize| {
            if large && (done.is_multiple_of(step) || done == total) {
                eprintln!("{name}: {done}/{total} rows");
            }
        };
        let r = enumerate(f, &phis, check, Some(&progress))?;
        report.rows.extend(r.rows);
    }
    let refs: Vec<&RealForm> = forms.iter().collect();
    let diff = compare_golden(&mut report, &golden, &refs)?;

    let format = match args.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Table => Format::Table,
    };
    out.write_all(emit(&report, format)?.as_bytes())?;
    for (form, readings) in &diff.consistent_readings {
        if readings.is_empty() {
            eprintln!("{form}: no golden reading agrees");
        }
    }
    for m in &diff.mismatches {
        eprintln!("mismatch {} phi={:?} verdict={} expected={:?}", m.form, m.phi, m.verdict, m.expected);
    }
    Ok(diff.passed())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
