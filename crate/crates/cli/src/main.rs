//! `sylow`: enumeration, Ω classification, LR calculators and oracle checks.

mod tables;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use sylow_core::lr::{lr_coeff, lr_multi, mixed_set, star_explicit, star_symbolic};
use sylow_core::omega::{capital_m, gap_report, is_punctured, little_m, omega_member, omega_shape};
use sylow_core::oracle::verify::verify_sweep;
use sylow_core::oracle::Oracle;
use sylow_core::trees::{enumerate_chars, enumerate_irr_guarded, tree_stats, CharDescriptor, DEFAULT_GUARD};
use sylow_core::{Error, Partition, SymbolicPartitionSet};

#[derive(Parser)]
#[command(name = "sylow", version, about = "Sylow branching coefficients of symmetric groups")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Irreducible characters of P_{p^k} as tree orbits.
    Irr {
        #[command(subcommand)]
        cmd: IrrCmd,
    },
    /// Descriptions of Ω(θ).
    Omega {
        #[command(subcommand)]
        cmd: OmegaCmd,
    },
    /// Littlewood–Richardson coefficient; repeat --nu for several factors.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, required = true)]
        nu: Vec<Partition>,
    },
    /// A ★ B for sets such as `box:4:3`, `pbox:25:20`, `pfull:5`, `full:2`, `{[3,1],[2,2]}`.
    Star {
        #[arg(long)]
        a: SymbolicPartitionSet,
        #[arg(long)]
        b: SymbolicPartitionSet,
        /// Use the closed-form rules instead of enumerating.
        #[arg(long)]
        symbolic: bool,
    },
    /// M(q, A): support over not-all-equal q-tuples from A.
    Mixed {
        #[arg(short)]
        q: usize,
        #[arg(long)]
        set: SymbolicPartitionSet,
    },
    /// Compare computed Ω(θ) with its description.
    Verify {
        #[arg(short, default_value_t = 5)]
        p: u32,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        theta: Option<String>,
        /// Check only this many characters, chosen with --seed.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Reproduce the classification tables for n = 5, 25 or 125.
    Tables {
        #[arg(value_parser = ["5", "25", "125"])]
        n: String,
    },
}

#[derive(Subcommand)]
enum IrrCmd {
    List {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
    },
}

#[derive(Args)]
struct ThetaArgs {
    #[arg(short, default_value_t = 5)]
    p: u32,
    /// Defaults to the sum of p^levels over the given trees.
    #[arg(short)]
    n: Option<u32>,
    /// Trees in `(T1|...|Tp;e)` or `X(a;b;...)` notation, joined by `*`.
    #[arg(long)]
    theta: String,
}

impl ThetaArgs {
    fn descriptor(&self) -> Result<CharDescriptor, Error> {
        CharDescriptor::parse(&self.theta, self.p, self.n)
    }
}

#[derive(Subcommand)]
enum OmegaCmd {
    Describe(ThetaArgs),
    Member {
        #[command(flatten)]
        theta: ThetaArgs,
        #[arg(long)]
        lambda: Partition,
    },
    Gap(ThetaArgs),
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("json"));
}

fn set_json(v: &[Partition]) -> serde_json::Value {
    json!({ "set": v })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Irr { cmd: IrrCmd::List { p, k, guard } } => {
            let orbits = enumerate_irr_guarded(p, k, guard)?;
            let rows: Vec<Vec<String>> = orbits
                .iter()
                .map(|o| {
                    let st = tree_stats(o.tree());
                    vec![
                        o.to_string(),
                        st.eta.to_string(),
                        st.gamma(0).to_string(),
                        st.gamma(1).to_string(),
                        st.value.to_string(),
                        (p as u64).pow(st.degree_exponent).to_string(),
                    ]
                })
                .collect();
            if cli.json {
                let items: Vec<_> = orbits
                    .iter()
                    .map(|o| json!({ "tree": o.to_string(), "nested": o, "stats": tree_stats(o.tree()) }))
                    .collect();
                print_json(&json!(items));
            } else {
                print!("{}", tables::render(&["tree", "η", "γ0", "γ1", "V", "degree"], &rows));
            }
        }
        Cmd::Omega { cmd } => omega(cmd, cli.json)?,
        Cmd::Lr { lambda, mu, nu } => {
            let k = if nu.len() == 1 {
                lr_coeff(&lambda, &mu, &nu[0])?
            } else {
                let mut fs = vec![mu];
                fs.extend(nu);
                lr_multi(&lambda, &fs)?
            };
            if cli.json {
                print_json(&json!({ "coefficient": k }));
            } else {
                println!("{k}");
            }
        }
        Cmd::Star { a, b, symbolic } => {
            if symbolic {
                let s = star_symbolic(&a, &b)?;
                if cli.json {
                    print_json(&serde_json::to_value(&s).expect("json"));
                } else {
                    println!("{s}");
                }
            } else {
                let v = star_explicit(&a.materialize()?, &b.materialize()?)?;
                emit_set(&v, cli.json);
            }
        }
        Cmd::Mixed { q, set } => {
            let v = mixed_set(q, &set.materialize()?)?;
            emit_set(&v, cli.json);
        }
        Cmd::Verify { p, n, theta, sample, seed, threads } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let oracle = Oracle::new(p, n)?;
            let (thetas, complete) = match theta {
                Some(t) => (vec![CharDescriptor::parse(&t, p, Some(n))?], false),
                None => {
                    let mut all = enumerate_chars(p, n, DEFAULT_GUARD)?;
                    match sample {
                        Some(k) if k < all.len() => {
                            let mut rng = ChaCha8Rng::seed_from_u64(seed);
                            all.shuffle(&mut rng);
                            all.truncate(k);
                            (all, false)
                        }
                        _ => (all, true),
                    }
                }
            };
            let start = std::time::Instant::now();
            let report = pool.install(|| verify_sweep(&oracle, &thetas, complete))?;
            // timing goes to stderr so stdout stays byte-stable
            eprintln!("elapsed {:.2} s", start.elapsed().as_secs_f64());
            if cli.json {
                print_json(&serde_json::to_value(&report).expect("json"));
            } else {
                let rows: Vec<Vec<String>> = report
                    .reports
                    .iter()
                    .filter(|r| !r.passed || thetas.len() <= 50)
                    .map(|r| {
                        vec![
                            r.theta.clone(),
                            r.shape.clone(),
                            if r.passed { "ok".into() } else { r.mismatches.join("; ") },
                        ]
                    })
                    .collect();
                if !rows.is_empty() {
                    print!("{}", tables::render(&["θ", "Ω", "status"], &rows));
                }
                println!(
                    "checked {} characters at p={p}, n={n}: {} mismatches{}",
                    report.characters,
                    report.failures,
                    match (complete, report.completeness_failures.len()) {
                        (false, _) => String::new(),
                        (true, 0) => ", degree identity holds for every λ".to_string(),
                        (true, k) => format!(", degree identity fails at {k} partitions"),
                    }
                );
            }
            if report.failures > 0 || !report.completeness_failures.is_empty() {
                return Err(Failure::Mismatch(format!("{} characters disagree", report.failures)));
            }
        }
        Cmd::Tables { n } => {
            let out = match n.as_str() {
                "5" => tables::table_5(cli.json)?,
                "25" => tables::table_25(cli.json)?,
                _ => tables::table_125(cli.json)?,
            };
            print!("{out}");
        }
    }
    Ok(())
}

fn emit_set(v: &[Partition], json: bool) {
    if json {
        print_json(&set_json(v));
    } else {
        for l in v {
            println!("{l}");
        }
    }
}

fn omega(cmd: OmegaCmd, json: bool) -> Result<(), Failure> {
    match cmd {
        OmegaCmd::Describe(a) => {
            let t = a.descriptor()?;
            let shape = omega_shape(&t)?;
            let st = t.stats();
            let punctured = if st.value == 1 { Some(is_punctured(&t)?) } else { None };
            if json {
                print_json(&json!({
                    "theta": t.to_string(),
                    "p": t.p,
                    "n": t.n,
                    "stats": st,
                    "shape": shape,
                    "m": little_m(&t)?,
                    "M": capital_m(&t)?,
                    "punctured": punctured,
                }));
            } else {
                println!("θ      {t}");
                println!("n      {}", t.n);
                println!("η      {}", st.eta);
                println!("γ      {:?}", st.gamma);
                println!("V      {}", st.value);
                println!("degree {}", t.degree());
                println!("Ω      {shape}");
                println!("m      {}", little_m(&t)?);
                println!("M      {}", capital_m(&t)?);
            }
        }
        OmegaCmd::Member { theta, lambda } => {
            let t = theta.descriptor()?;
            let m = omega_member(&t, &lambda)?;
            if json {
                print_json(&json!({ "membership": m.to_string() }));
            } else {
                println!("{m}");
            }
        }
        OmegaCmd::Gap(a) => {
            let g = gap_report(&a.descriptor()?)?;
            if json {
                print_json(&serde_json::to_value(&g).expect("json"));
            } else {
                println!("M - m = {} = γ1 + c with γ1 = {}, c = {}", g.gap, g.gamma1, g.c);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `sylow --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
