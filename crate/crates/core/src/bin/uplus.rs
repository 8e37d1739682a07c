//! Batch driver over the library: every computation as a reproducible command.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 a mathematical check
//! failed, 4 resource limit.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use uplus_fusion::fingen::{
    build_graph_with_budget, degree_generated_with_budget, finite_generation_scan_with_budget,
    hypercube_invariants, verify_hypercube_iso, Budget, FingenError, GenerationReport,
};
use uplus_fusion::orbit::{compact_action_check, orbit, IrrPermutation, DEFAULT_CAP, DEFAULT_MAX_LEN};
use uplus_fusion::verify::{run_all, VerifyConfig};
use uplus_fusion::{check_surjectivity_onto_invariants, fuse, DimensionTable, Word};

const EXIT_CONTRADICTION: u8 = 3;
const EXIT_RESOURCE: u8 = 4;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct RunConfig {
    /// Matrix size n of U_n^+ (used for dimensions).
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    n: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Orbit size cap.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    cap: usize,
    /// Largest degree k + 1 the generation test may touch.
    #[arg(long, global = true, default_value_t = 11, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=40))]
    max_degree: usize,
    /// Seed for randomized property sampling.
    #[arg(long, global = true, default_value_t = 0)]
    rng_seed: u64,
}

impl RunConfig {
    fn budget(&self) -> Budget {
        Budget {
            max_component_dim: 1usize << (self.max_degree - 1),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "uplus", version, about = "Fusion rules of U_n^+ and the non-finite-generation of its swap invariants")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose r_x ⊗ r_y (words over a/b, "e" for the empty word).
    Fuse {
        x: Word,
        y: Word,
        /// Also check dim(x)·dim(y) against the decomposition at --n.
        #[arg(long)]
        check_dim: bool,
    },
    /// Test whether degree k+1 invariants are generated in degrees <= k.
    CheckFingen {
        #[arg(long, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
        k: usize,
    },
    /// Run the generation test for every k = 1..=kmax.
    Scan {
        #[arg(long, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
        kmax: usize,
    },
    /// Build the product graph on degree k+1 star classes.
    Graph {
        #[arg(long, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
        k: usize,
        /// Print Graphviz DOT instead of a report.
        #[arg(long)]
        dot: bool,
    },
    /// Orbit of a word under permutations (identity, gamma, dual, reverse).
    Orbit {
        #[arg(long)]
        seed: Word,
        #[arg(long, value_delimiter = ',', default_value = "gamma")]
        gens: Vec<IrrPermutation>,
        /// Also check that every word up to this length has a finite orbit.
        #[arg(long)]
        compact_up_to: Option<usize>,
    },
    /// Check that forgotten equivariant classes span the invariants up to a degree.
    Surjectivity {
        #[arg(long)]
        degree: usize,
    },
    /// Run every property check.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn report_text(r: &GenerationReport) -> String {
    let mut s = format!(
        "k={} degree={} dim={} rank={} generated={}",
        r.k,
        r.k + 1,
        r.component_dim,
        r.span_rank,
        r.generated
    );
    if let (Some(w), Some(v)) = (&r.witness, &r.witness_invariant) {
        s.push_str(&format!(" witness=({w})* bw={v}"));
    }
    s.push('\n');
    s
}

fn fingen_failure(e: &FingenError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        FingenError::ResourceLimit { .. } => ExitCode::from(EXIT_RESOURCE),
        FingenError::NotBipartite(..) => ExitCode::from(EXIT_CONTRADICTION),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CONTRADICTION)
    }
}

fn run(cli: Cli) -> ExitCode {
    let cfg = &cli.cfg;
    match cli.command {
        Command::Fuse { x, y, check_dim } => {
            let product = fuse(&x, &y);
            if !check_dim {
                emit(cfg.format, &product, || format!("{product}\n"));
                return ExitCode::SUCCESS;
            }
            let table = DimensionTable::new(cfg.n).expect("n >= 2 enforced by parser");
            let lhs = table.dim(&x) * table.dim(&y);
            let rhs = table.dim_element(&product);
            let holds = lhs == rhs;
            let value = json!({
                "product": product,
                "n": cfg.n,
                "dim_product": lhs.to_string(),
                "dim_decomposition": rhs.to_string(),
                "holds": holds,
            });
            emit(cfg.format, &value, || {
                format!("{product}\nn={}: {lhs} = {rhs} ({})\n", cfg.n, if holds { "ok" } else { "MISMATCH" })
            });
            verdict(holds)
        }
        Command::CheckFingen { k } => match degree_generated_with_budget(k, &cfg.budget()) {
            Ok(r) => {
                emit(cfg.format, &r, || report_text(&r));
                verdict(!r.generated)
            }
            Err(e) => fingen_failure(&e),
        },
        Command::Scan { kmax } => match finite_generation_scan_with_budget(kmax, &cfg.budget()) {
            Ok(reports) => {
                emit(cfg.format, &reports, || reports.iter().map(report_text).collect());
                verdict(reports.iter().all(|r| !r.generated))
            }
            Err(e) => fingen_failure(&e),
        },
        Command::Graph { k, dot } => match build_graph_with_budget(k, &cfg.budget()) {
            Ok(g) => {
                let inv = hypercube_invariants(&g);
                let hypercube = if k <= 5 {
                    verify_hypercube_iso(&g)
                } else {
                    inv.matches_hypercube(k)
                };
                if dot {
                    print!("{}", g.to_dot());
                } else {
                    let value = json!({
                        "k": k,
                        "vertex_count": inv.vertex_count,
                        "edge_count": g.edge_count(),
                        "regular_degree": inv.regular_degree,
                        "diameter": inv.diameter,
                        "bipartite": inv.bipartite,
                        "hypercube": hypercube,
                        "graph": g,
                    });
                    emit(cfg.format, &value, || {
                        let mut s = format!(
                            "k={k} vertices={} edges={} bipartite={} hypercube={hypercube}\n",
                            inv.vertex_count,
                            g.edge_count(),
                            inv.bipartite
                        );
                        for (u, v) in g.edge_list() {
                            s.push_str(&format!("{u} -- {v}\n"));
                        }
                        s
                    });
                }
                verdict(hypercube && inv.bipartite)
            }
            Err(e) => fingen_failure(&e),
        },
        Command::Orbit {
            seed,
            gens,
            compact_up_to,
        } => {
            let report = match orbit(&seed, &gens, cfg.cap) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let compact = match compact_up_to {
                None => None,
                Some(max_len) => match compact_action_check(&gens, &seed, max_len, cfg.cap) {
                    Ok(c) => Some(c),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_RESOURCE);
                    }
                },
            };
            let ok = compact.as_ref().is_none_or(|c| c.compact);
            match &compact {
                None => emit(cfg.format, &report, || orbit_text(&report)),
                Some(c) => emit(cfg.format, &json!({ "orbit": report, "compactness": c }), || {
                    format!(
                        "{}compact={} max_orbit_size={} words_checked={}\n",
                        orbit_text(&report),
                        c.compact,
                        c.max_orbit_size,
                        c.words_checked
                    )
                }),
            }
            verdict(ok)
        }
        Command::Surjectivity { degree } => {
            let surjective = check_surjectivity_onto_invariants(degree);
            emit(
                cfg.format,
                &json!({ "degree": degree, "surjective": surjective }),
                || format!("degree={degree} surjective={surjective}\n"),
            );
            verdict(surjective)
        }
        Command::Verify {
            max_len,
            kmax,
            samples,
        } => {
            let vcfg = VerifyConfig {
                max_word_len: max_len,
                kmax: kmax.min(cfg.max_degree.saturating_sub(1)).max(1),
                samples,
                seed: cfg.rng_seed,
                dimension_ns: if [2, 3, 5].contains(&cfg.n) {
                    vec![2, 3, 5]
                } else {
                    vec![2, 3, 5, cfg.n]
                },
            };
            let outcomes = run_all(&vcfg);
            let ok = outcomes.iter().all(|o| o.passed);
            emit(cfg.format, &json!({ "config": vcfg, "checks": outcomes, "passed": ok }), || {
                outcomes
                    .iter()
                    .map(|o| format!("[{}] {}: {}\n", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail))
                    .collect()
            });
            verdict(ok)
        }
    }
}

fn orbit_text(r: &uplus_fusion::OrbitReport) -> String {
    let words: Vec<String> = r.orbit.iter().map(ToString::to_string).collect();
    format!(
        "seed={} size={} truncated={} orbit={{{}}}\n",
        r.seed,
        r.size,
        r.truncated,
        words.join(", ")
    )
}

fn main() -> ExitCode {
    run(Cli::parse())
}
