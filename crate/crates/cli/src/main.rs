use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use degedit::cdbe::{solve_cdbe, solve_dbe};
use degedit::cdpe::{solve_cdpe, solve_dpe};
use degedit::generate::{random_balance_instance, random_parity_instance, rng_from_seed};
use degedit::oracle::{oracle_cdbe, oracle_cdpe, oracle_dbe, oracle_dpe, OracleBudget};
use degedit::verify::{verify_balance, verify_parity, Failure};
use degedit::{DirectedEditSolution, EditSolution, OperationSet, ParityInstance, Verdict};
use degedit_cli::format::{self, Instance, InstanceFile, Kind};
use degedit_cli::record::{ResultRecord, SolutionFile};

/// Exact solvers for connected degree-parity and degree-balance editing.
#[derive(Parser)]
#[command(name = "degedit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print a JSON result record.
    Solve(SolveArgs),
    /// Check a solution file against an instance.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        sol: PathBuf,
    },
    /// Brute-force optimum of a small instance.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Largest edit size to try (default n + n/2 + 4 for graphs,
        /// unlimited for digraphs).
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Print a random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "cdpe")]
        kind: Kind,
        #[arg(long, default_value = "ea")]
        opset: OperationSet,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
    /// Time the solver on random instances of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "75,150,300")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "cdpe")]
        kind: Kind,
        #[arg(long, default_value = "ea")]
        opset: OperationSet,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long = "in")]
    input: PathBuf,
    /// Override the operation set named in the file.
    #[arg(long)]
    opset: Option<OperationSet>,
    /// Drop the connectivity requirement.
    #[arg(long)]
    no_connectivity: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    common: Common,
}

fn load(common: &Common) -> Result<InstanceFile> {
    let mut file = read_instance(&common.input)?;
    if let Some(s) = common.opset {
        file.opset = s;
    }
    if common.no_connectivity {
        file.kind = file.kind.without_connectivity();
    }
    Ok(file)
}

fn read_instance(path: &Path) -> Result<InstanceFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    format::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn solve(file: &InstanceFile) -> ResultRecord {
    let start = Instant::now();
    match &file.instance {
        Instance::Parity(inst) => {
            let out = if file.kind.connected() {
                solve_cdpe(inst, file.opset)
            } else {
                solve_dpe(inst, file.opset)
            };
            ResultRecord::from_outcome(file.kind, file.opset, &out, millis(start.elapsed()))
        }
        Instance::Balance(inst) => {
            let out = if file.kind.connected() {
                solve_cdbe(inst, file.opset)
            } else {
                solve_dbe(inst, file.opset)
            };
            ResultRecord::from_outcome(file.kind, file.opset, &out, millis(start.elapsed()))
        }
    }
}

fn run_solve(args: &SolveArgs) -> Result<ExitCode> {
    let file = load(&args.common)?;
    let record = solve(&file);
    println!("{}", serde_json::to_string(&record)?);
    match record.opt {
        Some(opt) => eprintln!(
            "{} {}: optimum {opt} ({} additions, {} deletions) in {:.2} ms",
            file.kind,
            file.opset,
            record.additions.as_ref().map_or(0, Vec::len),
            record.deletions.as_ref().map_or(0, Vec::len),
            record.millis
        ),
        None => eprintln!("{} {}: no solution exists", file.kind, file.opset),
    }
    Ok(if record.verdict == Verdict::Solved { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn run_verify(input: &Path, sol: &Path) -> Result<ExitCode> {
    let file = read_instance(input)?;
    let text = std::fs::read_to_string(sol).with_context(|| format!("reading {}", sol.display()))?;
    let sol: SolutionFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", sol.display()))?;
    let forbidden_deletions = !file.opset.allows_deletion() && !sol.deletions.is_empty();
    if sol.verdict == Some(Verdict::NoInstance) {
        eprintln!("solution file records no solution; nothing to verify");
        return Ok(ExitCode::from(2));
    }
    let mut report = match &file.instance {
        Instance::Parity(inst) => {
            verify_parity(inst, &EditSolution::new(sol.additions, sol.deletions), sol.opt)
        }
        Instance::Balance(inst) => {
            verify_balance(inst, &DirectedEditSolution::new(sol.additions, sol.deletions), sol.opt)
        }
    };
    if !file.kind.connected() {
        report.failures.retain(|f| !matches!(f, Failure::Disconnected { .. }));
    }
    let mut failures = serde_json::to_value(&report.failures)?;
    if forbidden_deletions {
        failures
            .as_array_mut()
            .expect("failures serialize as a list")
            .push(serde_json::json!({ "kind": "deletion-not-allowed" }));
    }
    let valid = report.valid() && !forbidden_deletions;
    println!("{}", serde_json::json!({ "valid": valid, "failures": failures }));
    eprintln!("{}", if valid { "valid" } else { "invalid" });
    Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn run_oracle(common: &Common, kmax: Option<usize>) -> Result<ExitCode> {
    let file = load(common)?;
    let n = file.instance.n();
    let limit = if file.kind.directed() { 8 } else { 11 };
    if n > limit {
        bail!("brute force is limited to {limit} vertices for {} instances", file.kind);
    }
    let default = if file.kind.directed() {
        OracleBudget::unbounded()
    } else {
        OracleBudget::for_vertices(n)
    };
    let budget = kmax.map_or(default, |kmax| OracleBudget { kmax });
    let start = Instant::now();
    let opt = match (&file.instance, file.kind.connected()) {
        (Instance::Parity(i), true) => oracle_cdpe(i, file.opset, budget),
        (Instance::Parity(i), false) => oracle_dpe(i, file.opset, budget),
        (Instance::Balance(i), true) => oracle_cdbe(i, file.opset, budget),
        (Instance::Balance(i), false) => oracle_dbe(i, file.opset, budget),
    };
    let record = serde_json::json!({
        "kind": file.kind.to_string(),
        "opset": file.opset.to_string(),
        "opt": opt,
        "kmax": budget.kmax,
        "millis": millis(start.elapsed()),
    });
    println!("{record}");
    match opt {
        Some(k) => eprintln!("brute-force optimum {k}"),
        None => eprintln!("no solution with at most {} edits", budget.kmax),
    }
    Ok(if opt.is_some() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn generate(seed: u64, n: usize, kind: Kind, opset: OperationSet, density: f64) -> Result<InstanceFile> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if !(0.0..=1.0).contains(&density) {
        bail!("--density must lie in [0, 1]");
    }
    let mut rng = rng_from_seed(seed);
    let instance = if kind.directed() {
        Instance::Balance(random_balance_instance(&mut rng, n, density))
    } else {
        Instance::Parity(random_parity_instance(&mut rng, n, density))
    };
    Ok(InstanceFile { kind, opset, instance })
}

fn run_bench(sizes: &[usize], seed: u64, kind: Kind, opset: OperationSet, density: f64, repeats: usize) -> Result<ExitCode> {
    if repeats == 0 {
        bail!("--repeats must be at least 1");
    }
    println!("n\tm\tverdict\topt\tmedian_ms");
    for &n in sizes {
        let mut file = generate(seed.wrapping_add(n as u64), n, kind, opset, density)?;
        // an odd deficient set is rejected before any real work, so time
        // the instance with one target flipped instead
        if let Instance::Parity(inst) = &file.instance {
            if inst.deficient().len() % 2 == 1 {
                let mut delta = inst.delta().to_vec();
                delta[0] ^= 1;
                file.instance = Instance::Parity(ParityInstance::new(inst.graph().clone(), delta)?);
            }
        }
        let m = match &file.instance {
            Instance::Parity(i) => i.graph().m(),
            Instance::Balance(i) => i.digraph().m(),
        };
        let mut records: Vec<ResultRecord> = (0..repeats).map(|_| solve(&file)).collect();
        records.sort_by(|a, b| a.millis.total_cmp(&b.millis));
        let mid = &records[records.len() / 2];
        let opt = mid.opt.map_or("-".to_string(), |k| k.to_string());
        println!("{n}\t{m}\t{:?}\t{opt}\t{:.3}", mid.verdict, mid.millis);
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve(args) => run_solve(&args),
        Command::Verify { input, sol } => run_verify(&input, &sol),
        Command::Oracle { common, kmax } => run_oracle(&common, kmax),
        Command::Gen { seed, n, kind, opset, density } => {
            print!("{}", format::print(&generate(seed, n, kind, opset, density)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { sizes, seed, kind, opset, density, repeats } => {
            run_bench(&sizes, seed, kind, opset, density, repeats)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
