use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dipsat::gen::{self, ChargeScheme};
use dipsat::{
    check_proof, parse_dimacs, write_dimacs, CnfFormula, DipChoice, DipClauses, DipConfig, DipFilter, ProofLog,
    SolveResult, Solver, SolverConfig, Status,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "dipsat",
    version,
    about = "CDCL solver with DIP-based extended resolution learning"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a DIMACS CNF file.
    Solve(SolveArgs),
    /// Generate a benchmark formula in DIMACS format.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file; stdout when omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a quick end-to-end consistency check.
    SelfCheck {
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OnOff {
    Off,
    On,
}

#[derive(Clone, Copy, ValueEnum)]
enum Choice {
    Closest,
    Middle,
    Random,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    Occ,
    Glue,
    Act,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Baseline,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = OnOff::On)]
    dip: OnOff,
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    #[arg(long, value_enum)]
    dip_choice: Option<Choice>,
    #[arg(long)]
    dip_min_occ: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    dip_clauses: Option<u8>,
    #[arg(long, value_enum)]
    dip_filter: Option<Filter>,
    #[arg(long)]
    ext_del_interval: Option<u64>,
    /// Percentage of deletable extension variables removed per round.
    #[arg(long)]
    ext_del_frac: Option<u32>,
    #[arg(long)]
    disable_window: Option<u64>,
    #[arg(long)]
    disable_threshold: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    conflict_limit: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Write a DRAT proof to this file.
    #[arg(long)]
    proof: Option<PathBuf>,
    /// Print statistics as JSON to stderr, or to the given file.
    #[arg(long, num_args = 0..=1, default_missing_value = "-")]
    stats: Option<String>,
}

#[derive(Subcommand)]
enum Family {
    /// Tseitin formula on a rows x cols grid with one charged vertex.
    TseitinGrid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Row-major index of the charged vertex.
        #[arg(long, default_value_t = 0)]
        charge: usize,
    },
    /// Tseitin formula on a random d-regular graph.
    TseitinRegular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Make the total charge even (satisfiable).
        #[arg(long)]
        even: bool,
        /// Random charges with the requested parity instead of one charged vertex.
        #[arg(long)]
        random_charges: bool,
    },
    /// Random k-XOR constraints with xorified variables.
    Kxor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Number of constraints; defaults to n.
        #[arg(long)]
        clauses: Option<usize>,
        #[arg(long, default_value_t = 1)]
        xorify: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn dip_config(a: &SolveArgs) -> DipConfig {
    let mut d = match (a.preset, a.dip) {
        (Some(Preset::Baseline), _) | (None, OnOff::On) => DipConfig::baseline(),
        (None, OnOff::Off) => DipConfig::off(),
    };
    if matches!(a.dip, OnOff::Off) {
        d.enabled = false;
    }
    if let Some(c) = a.dip_choice {
        d.choice = match c {
            Choice::Closest => DipChoice::Closest,
            Choice::Middle => DipChoice::Middle,
            Choice::Random => DipChoice::Random,
            Choice::Heuristic => DipChoice::Heuristic,
        };
    }
    if let Some(f) = a.dip_filter {
        d.filter = match f {
            Filter::Occ => DipFilter::Occ,
            Filter::Glue => DipFilter::Glue,
            Filter::Act => DipFilter::Act,
        };
    }
    if let Some(n) = a.dip_min_occ {
        d.min_occ = n;
    }
    if let Some(n) = a.dip_clauses {
        d.clauses = if n == 1 { DipClauses::One } else { DipClauses::Two };
    }
    if let Some(n) = a.ext_del_interval {
        d.ext_delete_interval = n;
    }
    if let Some(n) = a.ext_del_frac {
        d.ext_delete_fraction = n;
    }
    if let Some(n) = a.disable_window {
        d.disable_window = n;
    }
    if let Some(t) = a.disable_threshold {
        d.disable_threshold = t;
    }
    if let Some(s) = a.seed {
        d.seed = s;
    }
    d
}

fn print_result(r: &SolveResult) -> io::Result<()> {
    let mut out = BufWriter::new(io::stdout().lock());
    match r.status {
        Status::Sat => {
            writeln!(out, "s SATISFIABLE")?;
            let model = r.model.as_deref().unwrap_or(&[]);
            let mut line = String::from("v");
            for (i, &b) in model.iter().enumerate() {
                let lit = if b { (i + 1) as i64 } else { -((i + 1) as i64) };
                let tok = format!(" {lit}");
                if line.len() + tok.len() > 78 {
                    writeln!(out, "{line}")?;
                    line = String::from("v");
                }
                line.push_str(&tok);
            }
            writeln!(out, "{line} 0")?;
        }
        Status::Unsat => writeln!(out, "s UNSATISFIABLE")?,
        Status::Unknown => writeln!(out, "s UNKNOWN")?,
    }
    out.flush()
}

fn cmd_solve(a: &SolveArgs) -> Result<u8> {
    let file = File::open(&a.input).with_context(|| format!("cannot open {}", a.input.display()))?;
    let formula = parse_dimacs(BufReader::new(file)).with_context(|| format!("cannot parse {}", a.input.display()))?;
    let config = SolverConfig {
        conflict_limit: a.conflict_limit,
        time_limit: a.time_limit.map(Duration::from_secs_f64),
        ..SolverConfig::with_dip(dip_config(a))
    };
    let mut solver = Solver::new(&formula, config)?;
    if let Some(p) = &a.proof {
        solver.set_proof(ProofLog::to_file(p).with_context(|| format!("cannot create {}", p.display()))?);
    }
    let r = solver.solve()?;
    log::info!("{} conflicts, {} decisions", r.stats.conflicts, r.stats.decisions);
    print_result(&r)?;
    match a.stats.as_deref() {
        None => {}
        Some("-") => eprintln!("{}", serde_json::to_string_pretty(&r.stats)?),
        Some(path) => std::fs::write(path, serde_json::to_string_pretty(&r.stats)?)?,
    }
    Ok(match r.status {
        Status::Sat => 10,
        Status::Unsat => 20,
        Status::Unknown => 0,
    })
}

fn cmd_gen(family: &Family, out: Option<&PathBuf>) -> Result<u8> {
    let f: CnfFormula = match *family {
        Family::TseitinGrid { rows, cols, charge } => gen::gen_tseitin_grid(rows, cols, charge)?,
        Family::TseitinRegular {
            n,
            d,
            seed,
            even,
            random_charges,
        } => {
            let scheme = if random_charges {
                ChargeScheme::Random
            } else {
                ChargeScheme::SingleVertex
            };
            gen::gen_tseitin_regular(n, d, seed, !even, scheme)?
        }
        Family::Kxor {
            n,
            k,
            clauses,
            xorify,
            seed,
        } => gen::gen_xorified_kxor(n, clauses.unwrap_or(n), k, xorify, seed)?,
    };
    match out {
        Some(p) => write_dimacs(&f, BufWriter::new(File::create(p)?))?,
        None => write_dimacs(&f, BufWriter::new(io::stdout().lock()))?,
    }
    Ok(0)
}

fn brute_force_sat(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u64..1 << n).any(|bits| {
        let m: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        f.is_satisfied_by(&m)
    })
}

fn checked_run(f: &CnfFormula, dip: DipConfig) -> Result<Status> {
    let mut s = Solver::new(f, SolverConfig::with_dip(dip))?;
    s.set_proof(ProofLog::in_memory());
    let r = s.solve()?;
    if r.status == Status::Unsat {
        let events = s.take_proof().and_then(ProofLog::into_events).unwrap_or_default();
        check_proof(f, &events)?;
    }
    s.audit().map_err(anyhow::Error::msg)?;
    Ok(r.status)
}

fn cmd_self_check(instances: usize, seed: u64) -> Result<u8> {
    let mut eager = DipConfig::baseline();
    eager.min_occ = 1;
    let configs = [
        ("dip-off", DipConfig::off()),
        ("baseline", DipConfig::baseline()),
        ("eager", eager.clone()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for i in 0..instances {
        let n = rng.gen_range(5..=12);
        let m = (n as f64 * rng.gen_range(2.0..6.0)) as usize;
        let mut f = CnfFormula::new(n);
        for _ in 0..m {
            let vars = rand::seq::index::sample(&mut rng, n, 3);
            let c: Vec<i32> = vars
                .iter()
                .map(|v| if rng.gen() { v as i32 + 1 } else { -(v as i32 + 1) })
                .collect();
            f.add_clause(dipsat::Clause::from_dimacs(&c)?);
        }
        let expected = if brute_force_sat(&f) {
            Status::Sat
        } else {
            Status::Unsat
        };
        for (name, dip) in &configs {
            match checked_run(&f, dip.clone()) {
                Ok(s) if s == expected => {}
                Ok(s) => {
                    failures += 1;
                    eprintln!("instance {i} ({name}): got {s:?}, expected {expected:?}");
                }
                Err(e) => {
                    failures += 1;
                    eprintln!("instance {i} ({name}): {e}");
                }
            }
        }
    }
    for rows in 2..=3 {
        let f = gen::gen_tseitin_grid(rows, 3, 0)?;
        if checked_run(&f, eager.clone())? != Status::Unsat {
            failures += 1;
            eprintln!("grid {rows}x3 not refuted");
        }
    }
    if failures == 0 {
        println!(
            "self-check PASS ({instances} random instances, {} configurations)",
            configs.len()
        );
        Ok(0)
    } else {
        println!("self-check FAIL ({failures} failures)");
        Ok(1)
    }
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Gen { family, out } => cmd_gen(family, out.as_ref()),
        Cmd::SelfCheck { instances, seed } => cmd_self_check(*instances, *seed),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
