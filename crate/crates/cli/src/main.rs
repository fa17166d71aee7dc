//! `hyperq`: generate hypergraphs, compute tensor spectral radii, test Fano
//! containment and 2-colorability, and run the verification harness.
//!
//! Exit codes: 0 ok, 1 negative verdict, 2 usage or input format error,
//! 3 I/O error, 4 power iteration hit the iteration limit, 5 a verification
//! record failed.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperq::hypergraph::{build, io};
use hyperq::random::random_connected;
use hyperq::report::{self, Record};
use hyperq::spectral::spectral_radius;
use hyperq::split::split_upper_bound;
use hyperq::turan::{check_condition1, check_condition2, fano_extremal_q};
use hyperq::verify::{check_deletion_lemma_with, verify_extremality};
use hyperq::{
    bn_q_bounds, contains_subgraph, fano_turan_number, scan_splits, two_coloring, CriterionParams, Hypergraph,
    Operator, SpectralOptions64,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hyperq", version, about = "Spectral toolkit for uniform hypergraphs")]
struct Cli {
    /// Relative bracket tolerance for power iteration.
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = positive_f64)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_iter: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Output file (hypergraph for `gen`, report otherwise).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a hypergraph and write it in the text format.
    Gen {
        #[command(subcommand)]
        construction: Construction,
    },
    /// Spectral radius of the adjacency or signless Laplacian tensor.
    Spectral {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = OperatorArg::Q)]
        operator: OperatorArg,
        /// Diagonal shift for the iteration (default 1 for `a`, 0 for `q`).
        #[arg(long)]
        shift: Option<f64>,
        /// Also print the eigenvector.
        #[arg(long)]
        eigenvector: bool,
    },
    /// Fano containment or 2-colorability; exit 0 if Fano-free/colorable, 1 if not.
    Check { input: PathBuf, check: CheckKind },
    /// Run a family of numeric checks over a range of n; exit 5 if any fails.
    Verify {
        what: VerifyKind,
        /// Inclusive range `N1:N2` (or a single `N`).
        #[arg(value_parser = parse_range)]
        range: RangeInclusive<u64>,
        #[arg(long, default_value_t = 0.05, value_parser = positive_f64)]
        sigma: f64,
        /// Random samples per n for `deletion` and `extremal`.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Balanced complete 2-colorable 3-graph on n vertices.
    Bn {
        n: usize,
    },
    /// Complete 2-colorable 3-graph with parts of sizes a and b.
    TwoPart {
        a: usize,
        b: usize,
    },
    /// Complete r-graph on n vertices.
    Complete {
        n: usize,
        r: usize,
    },
    Fano,
    /// r-uniform expansion of the graph in a 2-uniform hypergraph file.
    Expansion {
        base: PathBuf,
        r: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorArg {
    A,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Fano,
    TwoColor,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Bounds,
    Splits,
    Criterion,
    Deletion,
    Extremal,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = s.split_once(':').unwrap_or((s, s));
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start in `{s}`"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end in `{s}`"))?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<hyperq::Error> for Failure {
    fn from(e: hyperq::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<Outcome, Failure>;

/// What a successful command prints and how it exits.
struct Outcome {
    output: String,
    code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: 0 }
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn options(cli: &Cli, shift: Option<f64>) -> SpectralOptions64 {
    SpectralOptions64 {
        tol: cli.tol,
        max_iter: cli.max_iter as usize,
        shift,
    }
}

fn to_usize(n: u64) -> Result<usize, Failure> {
    usize::try_from(n).map_err(|_| Failure::Usage(format!("n = {n} is too large")))
}

fn json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_gen(cli: &Cli, construction: &Construction) -> CmdResult {
    let h = match construction {
        Construction::Bn { n } => build::balanced_complete_bipartite(*n)?.0,
        Construction::TwoPart { a, b } => build::two_part_complete(*a, *b)?.0,
        Construction::Complete { n, r } => build::complete(*n, *r)?,
        Construction::Fano => build::fano(),
        Construction::Expansion { base, r } => {
            let g = read_hypergraph(base)?;
            if g.uniformity() != 2 {
                return Err(Failure::Usage(format!(
                    "{}: expansion needs a 2-uniform base, found r = {}",
                    base.display(),
                    g.uniformity()
                )));
            }
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|e| [e[0], e[1]]).collect();
            build::expansion(&edges, g.vertex_count(), *r)?
        }
    };
    let text = io::serialize(&h);
    let Some(out) = &cli.out else {
        return Ok(Outcome::ok(text));
    };
    write_file(out, &text)?;
    let (r, n, m) = (h.uniformity(), h.vertex_count(), h.edge_count());
    let output = match cli.format {
        Format::Text => format!("{r} {n} {m}\n"),
        Format::Json => json_text(&json!({ "r": r, "n": n, "m": m, "out": out.display().to_string() })),
        Format::Csv => format!("r,n,m\n{r},{n},{m}\n"),
    };
    Ok(Outcome::ok(output))
}

fn cmd_spectral(cli: &Cli, input: &Path, op: OperatorArg, shift: Option<f64>, eigenvector: bool) -> CmdResult {
    let h = read_hypergraph(input)?;
    let op = match op {
        OperatorArg::A => Operator::Adjacency,
        OperatorArg::Q => Operator::SignlessLaplacian,
    };
    let res = spectral_radius(&h, op, &options(cli, shift))?;
    let x = res.eigenvector.values();
    let output = match cli.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "operator    {}", op.name());
            let _ = writeln!(s, "rho         {}", res.rho);
            let _ = writeln!(s, "lower       {}", res.lower);
            let _ = writeln!(s, "upper       {}", res.upper);
            let _ = writeln!(s, "iterations  {}", res.iterations);
            let _ = writeln!(s, "residual    {:e}", res.residual);
            let _ = writeln!(s, "converged   {}", res.converged);
            if eigenvector {
                let entries: Vec<String> = x.iter().map(f64::to_string).collect();
                let _ = writeln!(s, "eigenvector {}", entries.join(" "));
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "operator": op.name(),
                "rho": res.rho,
                "lower": res.lower,
                "upper": res.upper,
                "iterations": res.iterations,
                "residual": res.residual,
                "converged": res.converged,
            });
            if eigenvector {
                v["eigenvector"] = json!(x);
            }
            json_text(&v)
        }
        Format::Csv => {
            let mut header = String::from("operator,rho,lower,upper,iterations,residual,converged");
            let mut row = format!(
                "{},{},{},{},{},{},{}",
                op.name(),
                res.rho,
                res.lower,
                res.upper,
                res.iterations,
                res.residual,
                res.converged
            );
            if eigenvector {
                header.push_str(",eigenvector");
                let entries: Vec<String> = x.iter().map(f64::to_string).collect();
                let _ = write!(row, ",{}", entries.join(" "));
            }
            format!("{header}\n{row}\n")
        }
    };
    Ok(Outcome {
        output,
        code: if res.converged { 0 } else { 4 },
    })
}

fn cmd_check(cli: &Cli, input: &Path, check: CheckKind) -> CmdResult {
    let h = read_hypergraph(input)?;
    let (name, holds, verdict, witness) = match check {
        CheckKind::Fano => {
            let embedding = contains_subgraph(&h, &build::fano())?;
            let verdict = if embedding.is_some() { "contains" } else { "fano-free" };
            (
                "fano",
                embedding.is_none(),
                verdict,
                embedding.map(|e| e.map().to_vec()),
            )
        }
        CheckKind::TwoColor => {
            let coloring = two_coloring(&h);
            let verdict = if coloring.is_some() {
                "2-colorable"
            } else {
                "not 2-colorable"
            };
            (
                "two-color",
                coloring.is_some(),
                verdict,
                coloring.map(|c| c.assignment().iter().map(|&k| usize::from(k)).collect()),
            )
        }
    };
    let joined = |w: &[usize]| w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let output = match cli.format {
        Format::Text => {
            let mut s = format!("{verdict}\n");
            if let Some(w) = &witness {
                let label = if name == "fano" { "embedding" } else { "coloring" };
                let _ = writeln!(s, "{label} {}", joined(w));
            }
            s
        }
        Format::Json => json_text(&json!({
            "check": name,
            "verdict": verdict,
            "holds": holds,
            "witness": witness,
        })),
        Format::Csv => format!(
            "check,verdict,holds,witness\n{name},{verdict},{holds},{}\n",
            witness.as_deref().map(joined).unwrap_or_default()
        ),
    };
    Ok(Outcome {
        output,
        code: if holds { 0 } else { 1 },
    })
}

fn q_converged(h: &Hypergraph, opts: &SpectralOptions64) -> Result<f64, Failure> {
    let res = spectral_radius(h, Operator::SignlessLaplacian, opts)?;
    Ok(res.into_converged()?.rho)
}

fn verify_bounds(range: RangeInclusive<u64>, opts: &SpectralOptions64) -> Result<Vec<Record>, Failure> {
    range
        .map(|n| {
            let n = to_usize(n)?;
            let (lo, hi) = bn_q_bounds::<f64>(n)?;
            let (bn, _) = build::balanced_complete_bipartite(n)?;
            let rho = q_converged(&bn, opts)?;
            let pass = lo - 1e-9 * lo.max(1.0) <= rho && rho <= hi + 1e-6;
            Ok(Record::new("bounds", n as u64, rho, hi, pass).with_input("lower", lo))
        })
        .collect()
}

fn verify_splits(range: RangeInclusive<u64>) -> Result<Vec<Record>, Failure> {
    range
        .map(|n| {
            let n = to_usize(n)?;
            let scan = scan_splits::<f64>(n)?;
            let best = scan.best();
            Ok(Record::new(
                "splits",
                n as u64,
                best.q_value,
                split_upper_bound::<f64>(n, best.a),
                scan.is_balanced(),
            )
            .with_input("best_a", best.a))
        })
        .collect()
}

fn verify_criterion(range: RangeInclusive<u64>, sigma: f64) -> Result<Vec<Record>, Failure> {
    let params = CriterionParams::fano(sigma, range)?;
    let ex = |n: u64| fano_turan_number(n);
    let rows1 = check_condition1(&params, ex)?;
    let rows2 = check_condition2(&params, fano_extremal_q, ex)?;
    let tag = |op: &str, row: &hyperq::CriterionRow| {
        Record::new(op, row.n, row.slack, row.bound, row.pass).with_input("sigma", sigma)
    };
    let mut records: Vec<Record> = rows1.iter().map(|r| tag("condition1", r)).collect();
    records.extend(rows2.iter().map(|r| tag("condition2", r)));
    Ok(records)
}

const DELETION_TOL: f64 = 1e-6;

fn verify_deletion(
    range: RangeInclusive<u64>,
    samples: usize,
    seed: u64,
    opts: &SpectralOptions64,
) -> Result<Vec<Record>, Failure> {
    let mut records = Vec::new();
    for n in range {
        let nu = to_usize(n)?;
        let (bn, _) = build::balanced_complete_bipartite(nu)?;
        let check = check_deletion_lemma_with(&bn, DELETION_TOL, opts)?;
        records.push(
            Record::new("deletion_bn", n, check.lhs, check.rhs, check.pass)
                .with_input("w", check.w)
                .with_input("q", check.q),
        );
        if samples == 0 {
            continue;
        }
        // One ChaCha stream per n keeps each n's corpus independent of the range.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(n);
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for _ in 0..samples {
            let p = (rng.next_u32() as f64 / u32::MAX as f64) * 0.5 + 0.05;
            let h = random_connected(nu, 3, p, &mut rng)?;
            if h.edge_count() < 2 {
                continue;
            }
            let check = check_deletion_lemma_with(&h, DELETION_TOL, opts)?;
            worst = worst.min(check.lhs - check.rhs);
            pass &= check.pass;
        }
        records.push(
            Record::new("deletion_random", n, worst, -DELETION_TOL, pass)
                .with_input("samples", samples)
                .with_input("seed", seed),
        );
    }
    Ok(records)
}

fn verify_extremal(range: RangeInclusive<u64>, samples: usize, seed: u64) -> Result<Vec<Record>, Failure> {
    range
        .map(|n| {
            let report = verify_extremality::<f64>(to_usize(n)?, samples, seed)?;
            let top = report.max_competitor().map_or(f64::NEG_INFINITY, |c| c.q);
            Ok(Record::new("extremal", n, top, report.q_bn, report.passes(1e-6, 1e-9))
                .with_input("competitors", report.competitors.len())
                .with_input("min_margin", report.min_margin())
                .with_input("self_gap", report.self_gap())
                .with_input("seed", seed))
        })
        .collect()
}

fn cmd_verify(cli: &Cli, what: VerifyKind, range: RangeInclusive<u64>, sigma: f64, samples: usize) -> CmdResult {
    let opts = options(cli, None);
    let records = match what {
        VerifyKind::Bounds => verify_bounds(range, &opts)?,
        VerifyKind::Splits => verify_splits(range)?,
        VerifyKind::Criterion => verify_criterion(range, sigma)?,
        VerifyKind::Deletion => verify_deletion(range, samples, cli.seed, &opts)?,
        VerifyKind::Extremal => verify_extremal(range, samples, cli.seed)?,
    };
    let failed = records.iter().filter(|r| !r.pass).count();
    let output = match cli.format {
        Format::Text => {
            let mut s = report::to_table(&records);
            if failed == 0 {
                let _ = writeln!(s, "all {} checks passed", records.len());
            } else {
                let _ = writeln!(s, "{failed} of {} checks failed", records.len());
            }
            s
        }
        Format::Json => {
            let mut s = report::to_json(&records);
            s.push('\n');
            s
        }
        Format::Csv => report::to_csv(&records),
    };
    Ok(Outcome {
        output,
        code: if report::all_pass(&records) { 0 } else { 5 },
    })
}

fn run(cli: &Cli) -> CmdResult {
    let outcome = match &cli.command {
        Command::Gen { construction } => return cmd_gen(cli, construction),
        Command::Spectral {
            input,
            operator,
            shift,
            eigenvector,
        } => cmd_spectral(cli, input, *operator, *shift, *eigenvector)?,
        Command::Check { input, check } => cmd_check(cli, input, *check)?,
        Command::Verify {
            what,
            range,
            sigma,
            samples,
        } => cmd_verify(cli, *what, range.clone(), *sigma, *samples)?,
    };
    // Reports go to --out when given; the exit code is unchanged.
    if let Some(out) = &cli.out {
        write_file(out, &outcome.output)?;
        return Ok(Outcome {
            output: String::new(),
            code: outcome.code,
        });
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
