use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oddnil::combinat::{Partition, Permutation};
use oddnil::cyclotomic::{default_dmax, grassmann_matrix, quotient_report};
use oddnil::oddsym::{complete, dual_schur, elementary, pieri_expected, schubert, schur};
use oddnil::skewpoly::SkewPolynomial;
use oddnil::verify::{self, CheckReport, Params, Status, DEFAULT_SEED};
use oddnil::Error;

#[derive(Parser)]
#[command(name = "oddnil", version, about = "Odd nilHecke algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single object and print it.
    Compute(ComputeArgs),
    /// Run registered identity checks (`all`, `sentinels`, or check ids).
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Schur,
    DualSchur,
    Elementary,
    Complete,
    Schubert,
    Product,
    Pieri,
    GrassmannMatrix,
    OhRank,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Polynomials to multiply (for `product`).
    factors: Vec<String>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long)]
    vars: Option<usize>,
    /// Comma-separated parts, e.g. `2,1`.
    #[arg(long)]
    partition: Option<String>,
    /// One-line notation, e.g. `"2 1"`.
    #[arg(long)]
    perm: Option<String>,
    /// Degree for `elementary`, `complete` and `pieri`.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "list")]
    checks: Vec<String>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long)]
    max_rank: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    json: bool,
    /// Worker threads (default: logical cores).
    #[arg(long)]
    parallel: Option<usize>,
    /// Report zero wall time so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
    /// List the registry and exit.
    #[arg(long)]
    list: bool,
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn partition(args: &ComputeArgs) -> Result<Partition, Failure> {
    Ok(need(args.partition.as_deref(), "partition")?.parse()?)
}

fn emit(args: &ComputeArgs, kind: &str, text: String, extra: Value) {
    if args.json {
        let mut v = json!({ "object": kind, "result": text });
        if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
            m.extend(e);
        }
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{text}");
    }
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let vars = || need(args.vars.or(args.a), "vars");
    match args.kind {
        Kind::Schur => emit(args, "schur", schur(&partition(args)?, vars()?)?.to_string(), json!({})),
        Kind::DualSchur => {
            emit(args, "dual-schur", dual_schur(&partition(args)?, vars()?)?.to_string(), json!({}))
        }
        Kind::Elementary => {
            let k = need(args.k, "k")? as i64;
            emit(args, "elementary", elementary(k, vars()?).to_string(), json!({}))
        }
        Kind::Complete => {
            let k = need(args.k, "k")? as i64;
            emit(args, "complete", complete(k, vars()?).to_string(), json!({}))
        }
        Kind::Schubert => {
            let w: Permutation = need(args.perm.as_deref(), "perm")?.parse()?;
            if let Some(v) = args.vars {
                if v != w.n() {
                    return Err(Failure::Usage(format!("--vars {v} does not match a permutation of {}", w.n())));
                }
            }
            emit(args, "schubert", schubert(&w).to_string(), json!({ "perm": w.to_string() }))
        }
        Kind::Product => {
            let a = vars()?;
            if args.factors.is_empty() {
                return Err(Failure::Usage("product needs at least one polynomial".into()));
            }
            let mut p = SkewPolynomial::one(a);
            for f in &args.factors {
                p = &p * &SkewPolynomial::parse(f, a)?;
            }
            emit(args, "product", p.to_string(), json!({}))
        }
        Kind::Pieri => {
            let (alpha, a, k) = (partition(args)?, vars()?, need(args.k, "k")?);
            let terms: Vec<String> = pieri_expected(&alpha, k, a)
                .into_iter()
                .map(|(mu, s)| format!("{} s_({mu})", if s < 0 { "-" } else { "+" }))
                .collect();
            let text = if terms.is_empty() { "0".to_string() } else { terms.join(" ") };
            emit(args, "pieri", text, json!({ "partition": alpha.to_string(), "k": k }))
        }
        Kind::GrassmannMatrix => {
            let a = need(args.a.or(args.vars), "a")?;
            let m = grassmann_matrix(a);
            let mut text = m.to_string();
            let mut extra = json!({});
            if let Some(n) = args.n {
                if n < a {
                    return Err(Failure::Usage(format!("need N >= a, got N={n} a={a}")));
                }
                let col: Vec<String> = m.power_first_column(n - a + 1).iter().map(|p| p.to_string()).collect();
                text.push_str(&format!("\nM^{} v = [{}]", n - a + 1, col.join(", ")));
                extra = json!({ "first_column": col });
            }
            emit(args, "grassmann-matrix", text, extra)
        }
        Kind::OhRank => {
            let (a, n) = (need(args.a, "a")?, need(args.n, "N")?);
            let d = args.dmax.unwrap_or_else(|| default_dmax(a, n));
            let r = quotient_report(a, n, d)?;
            let total: i64 = r.graded_rank.at_one().try_into().unwrap_or(i64::MAX);
            let text = if args.json {
                r.graded_rank.to_string()
            } else {
                let balanced = r.graded_rank.shift(-((a * n.saturating_sub(a)) as i64));
                format!("{}\nbalanced {}\ntotal {}\ntorsion-free {}", r.graded_rank, balanced, total, r.torsion_free())
            };
            emit(
                args,
                "oh-rank",
                text,
                json!({ "a": a, "N": n, "total": total, "torsion_free": r.torsion_free(), "slices": r.slices }),
            )
        }
    }
    Ok(())
}

fn print_text(reports: &[CheckReport]) {
    for r in reports {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!("{tag} {:<24} {:>8.3}s  {} details", r.check, r.wall_time_s, r.details.len());
        if r.status != Status::Pass {
            for d in &r.details {
                println!("    {}: expected {}, got {}", d.input, d.expected, d.actual);
            }
        }
    }
    let t = verify::tally(reports);
    println!(
        "{} passed, {} failed, {} skipped",
        t.get("pass").unwrap_or(&0),
        t.get("fail").unwrap_or(&0),
        t.get("skipped").unwrap_or(&0)
    );
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    if args.list {
        for c in verify::registry() {
            println!("{:<24} {}{}", c.id, c.summary, if c.sentinel { " [sentinel]" } else { "" });
        }
        return Ok(());
    }
    if let Some(t) = args.parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let ids = verify::resolve_ids(&args.checks)?;
    let params = Params { a: args.a, b: args.b, n: args.n, dmax: args.dmax, max_rank: args.max_rank };
    let mut reports = verify::run_many(&ids, &params, args.seed)?;
    if args.no_timing {
        for r in &mut reports {
            r.wall_time_s = 0.0;
        }
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        print_text(&reports);
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => run_verify(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
