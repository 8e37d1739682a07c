//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so the PASS/FAIL lines are always shown.
//! Exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uplus_fusion::fingen::{hypercube_invariants, product_rows};
use uplus_fusion::invariant::star_product_many;
use uplus_fusion::orbit::DEFAULT_CAP;
use uplus_fusion::{
    build_graph, bw_invariant, character_product, check_surjectivity_onto_invariants,
    compact_action_check, fuse, graded_component, leading_part, orbit, star_product,
    verify_hypercube_iso, verify_pair_reduction, DimensionTable, FusionElement, IrrPermutation,
    StarClass, StarVector, Word,
};

const BIN: &str = env!("CARGO_BIN_EXE_uplus");

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    Word::from_bits(rng.gen_range(0..=max_len), rng.gen::<u128>()).unwrap()
}

/// Words as plain letter strings, for oracles independent of the packed encoding.
fn letters(w: &Word) -> Vec<char> {
    if w.is_empty() {
        Vec::new()
    } else {
        w.to_string().chars().collect()
    }
}

/// Rank over Q by ordinary Gaussian elimination on rationals.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if !m[i][col].is_zero() {
                let f = &m[i][col] / &m[rank][col];
                let pivot = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn hypercube_petgraph(k: usize) -> UnGraph<(), ()> {
    let n = 1u32 << k;
    let mut edges = Vec::new();
    for a in 0..n {
        for bit in 0..k {
            let b = a ^ (1 << bit);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    UnGraph::from_edges(edges)
}

fn criterion_1_non_generation() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    for k in 1..=7 {
        let run = Command::new(BIN)
            .args(["check-fingen", "--k", &k.to_string(), "--format", "json"])
            .output()
            .expect("run uplus");
        out.check(run.status.code() == Some(0), || format!("k={k}: exit {:?}", run.status.code()));
        let report: serde_json::Value = match serde_json::from_slice(&run.stdout) {
            Ok(v) => v,
            Err(e) => {
                out.failures.push(format!("k={k}: bad JSON ({e})"));
                continue;
            }
        };
        out.check(report["generated"] == false, || format!("k={k}: generated"));
        out.check(report["component_dim"] == 1u64 << k, || format!("k={k}: dim"));
        let bw = report["witness_invariant"].as_str().unwrap_or("");
        out.check(bw == "1" || bw == "-1", || format!("k={k}: witness invariant {bw:?}"));
        out.check(report["witness"].is_string(), || format!("k={k}: no witness"));

        // Independent rank oracle for the smaller components.
        if k <= 4 {
            let rank = rational_rank(&product_rows(k));
            out.check(report["span_rank"] == rank as u64, || format!("k={k}: rank oracle {rank}"));
        }
    }
    let elapsed = start.elapsed();
    out.check(elapsed <= Duration::from_secs(60), || format!("runtime {elapsed:?}"));
    out.summary = format!("k=1..7 not generated, |bw|=1, {:.2}s", elapsed.as_secs_f64());
    out
}

fn criterion_2_hypercube() -> Outcome {
    let mut out = Outcome::new();
    for k in 1..=7 {
        let g = build_graph(k).expect("graph");
        out.check(g.vertex_count() == 1 << k, || format!("k={k}: vertex count"));
        out.check(
            g.edges().all(|(u, v)| g.coloring()[u] != g.coloring()[v]),
            || format!("k={k}: coloring not proper"),
        );
        if k <= 5 {
            out.check(verify_hypercube_iso(&g), || format!("k={k}: isomorphism search failed"));
            let pg = UnGraph::<(), ()>::from_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
            out.check(is_isomorphic(&pg, &hypercube_petgraph(k)), || format!("k={k}: VF2 disagrees"));
        } else {
            let inv = hypercube_invariants(&g);
            out.check(inv.regular_degree == Some(k), || format!("k={k}: not {k}-regular"));
            out.check(inv.diameter == Some(k), || format!("k={k}: diameter {:?}", inv.diameter));
        }
    }
    out.summary = "Q_k for k=1..5 (search + VF2), invariants for k=6,7".into();
    out
}

fn criterion_3_bw_vanishing() -> Outcome {
    let mut out = Outcome::new();
    let mut products = 0;
    for k in 1..=6 {
        let g = build_graph(k).unwrap();
        for c in g.vertices() {
            let v = bw_invariant(&StarVector::basis(*c), &g).unwrap();
            out.check(v.is_one() || (-&v).is_one(), || format!("k={k}: bw({c:?}) = {v}"));
        }
        for d1 in 1..=k {
            for c1 in graded_component(d1) {
                for c2 in graded_component(k + 1 - d1) {
                    products += 1;
                    let (u, v) = star_product(&c1, &c2);
                    let vec = StarVector::from_coeffs(
                        k + 1,
                        [(u, BigRational::one()), (v, BigRational::one())],
                    )
                    .unwrap();
                    let val = bw_invariant(&vec, &g).unwrap();
                    out.check(val.is_zero(), || format!("k={k}: bw({c1:?}·{c2:?}) = {val}"));
                }
            }
        }
    }
    out.summary = format!("{products} two-factor products vanish, single classes are ±1 (k<=6)");
    out
}

fn criterion_4_pair_reduction() -> Outcome {
    let mut out = Outcome::new();
    let mut cases = 0;
    for k in 2..=5 {
        for t in 3..=k + 1 {
            cases += 1;
            out.check(verify_pair_reduction(k, t) == Ok(true), || format!("k={k}, t={t}"));
        }
    }
    // Oracle: for k <= 4, adding a t-factor product to the two-factor rows never raises the rank.
    for k in 2..=4 {
        let rows = product_rows(k);
        let base = rational_rank(&rows);
        let classes = graded_component(k + 1);
        for t in 3..=k + 1 {
            // all factor-degree sequences of length t summing to k+1
            let mut seqs = vec![vec![]];
            for _ in 0..t {
                seqs = seqs
                    .into_iter()
                    .flat_map(|s: Vec<usize>| (1..=k).map(move |d| [s.clone(), vec![d]].concat()))
                    .collect();
            }
            for degs in seqs.into_iter().filter(|s| s.iter().sum::<usize>() == k + 1) {
                let mut tuples: Vec<Vec<StarClass>> = vec![vec![]];
                for d in degs {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|p| graded_component(d).into_iter().map(move |c| [p.clone(), vec![c]].concat()))
                        .collect();
                }
                for tuple in tuples {
                    let v = star_product_many(&tuple);
                    let row: Vec<i64> = classes
                        .iter()
                        .map(|c| {
                            let x = v.coeff(c);
                            assert!(x.is_integer());
                            i64::try_from(x.to_integer()).unwrap()
                        })
                        .collect();
                    let mut extended = rows.clone();
                    extended.push(row);
                    out.check(rational_rank(&extended) == base, || format!("oracle k={k}: {tuple:?}"));
                }
            }
        }
    }
    out.summary = format!("{cases} (k, t) cases in the two-factor span; rational oracle agrees for k<=4");
    out
}

/// The fusion rule on plain strings.
fn fuse_oracle(x: &[char], y: &[char]) -> BTreeSet<String> {
    let dual = |g: &[char]| -> Vec<char> {
        g.iter().rev().map(|&c| if c == 'a' { 'b' } else { 'a' }).collect()
    };
    let mut out = BTreeSet::new();
    for m in 0..=x.len().min(y.len()) {
        let (a, g) = x.split_at(x.len() - m);
        let (h, b) = y.split_at(m);
        if dual(g) == h {
            let s: String = a.iter().chain(b).collect();
            out.insert(if s.is_empty() { "e".into() } else { s });
        }
    }
    out
}

fn criterion_5_fusion_soundness() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(20260101);

    let mut triples = 0;
    while triples < 500 {
        let (x, y, z) = (random_word(&mut rng, 12), random_word(&mut rng, 12), random_word(&mut rng, 12));
        if x.degree() + y.degree() + z.degree() > 12 {
            continue;
        }
        triples += 1;
        let (fx, fy, fz) = (
            FusionElement::irreducible(x),
            FusionElement::irreducible(y),
            FusionElement::irreducible(z),
        );
        let lhs = character_product(&character_product(&fx, &fy), &fz);
        let rhs = character_product(&fx, &character_product(&fy, &fz));
        out.check(lhs == rhs, || format!("associativity ({x}{y}){z}"));
    }

    let words: Vec<Word> = Word::all_up_to_degree(8).collect();
    let mut dim_violations = 0;
    for n in [2u32, 3, 5] {
        let table = DimensionTable::new(n).unwrap();
        let dims: HashMap<Word, BigInt> = Word::all_up_to_degree(16).map(|w| (w, table.dim(&w))).collect();
        for x in &words {
            for y in &words {
                let rhs: BigInt = fuse(x, y).terms().map(|(z, &c)| &dims[z] * c).sum();
                if &dims[x] * &dims[y] != rhs {
                    dim_violations += 1;
                    out.failures.push(format!("n={n}: dim({x})·dim({y})"));
                }
            }
        }
    }

    let short: Vec<Word> = Word::all_up_to_degree(6).collect();
    for x in &short {
        for y in &short {
            let f = fuse(x, y);
            let expected = i64::from(*y == x.dual());
            out.check(f.coeff(&Word::EMPTY) == expected, || format!("unit rule {x}⊗{y}"));
            let oracle = fuse_oracle(&letters(x), &letters(y));
            let got: BTreeSet<String> = f.words().map(ToString::to_string).collect();
            out.check(oracle == got && f.terms().all(|(_, &c)| c == 1), || format!("oracle {x}⊗{y}"));
        }
    }
    out.summary = format!(
        "{triples} associative triples, {dim_violations} dimension violations over n=2,3,5, unit rule on {} pairs",
        short.len() * short.len()
    );
    out
}

fn criterion_6_graded_freeness() -> Outcome {
    let mut out = Outcome::new();
    let mut exhaustive = 0;
    for total in 0..=10 {
        for lx in 0..=total {
            for x in Word::all_of_degree(lx) {
                for y in Word::all_of_degree(total - lx) {
                    exhaustive += 1;
                    let lead = leading_part(&fuse(&x, &y)).unwrap();
                    out.check(lead == FusionElement::irreducible(x.concat(&y)), || format!("{x}⊗{y}"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut sampled = 0;
    while sampled < 5000 {
        let (x, y) = (random_word(&mut rng, 12), random_word(&mut rng, 12));
        let total = x.degree() + y.degree();
        if !(11..=12).contains(&total) {
            continue;
        }
        sampled += 1;
        let lead = leading_part(&fuse(&x, &y)).unwrap();
        out.check(lead == FusionElement::irreducible(x.concat(&y)), || format!("{x}⊗{y}"));
    }
    out.summary = format!("{exhaustive} pairs exhaustive (total<=10), {sampled} sampled (11..12)");
    out
}

fn criterion_7_surjectivity() -> Outcome {
    let mut out = Outcome::new();
    for d in 0..=8 {
        out.check(check_surjectivity_onto_invariants(d), || format!("degree {d}"));
    }
    out.summary = "d=0..8".into();
    out
}

fn criterion_8_orbits() -> Outcome {
    let mut out = Outcome::new();
    let gamma_only = [IrrPermutation::gamma()];
    let gamma_dual = [IrrPermutation::gamma(), IrrPermutation::dual()];
    let mut sizes_seen = BTreeSet::new();
    for w in Word::all_up_to_degree(10) {
        let r = orbit(&w, &gamma_only, DEFAULT_CAP).unwrap();
        let ok = !r.truncated && (r.size == 2 || (r.size == 1 && w.is_empty()));
        out.check(ok, || format!("gamma orbit of {w}: size {}", r.size));

        let r = orbit(&w, &gamma_dual, DEFAULT_CAP).unwrap();
        sizes_seen.insert(r.size);
        out.check(!r.truncated && [1, 2, 4].contains(&r.size), || format!("gamma,dual orbit of {w}: size {}", r.size));
    }
    for gens in [&gamma_only[..], &gamma_dual[..]] {
        let c = compact_action_check(gens, &"a".parse().unwrap(), 10, DEFAULT_CAP);
        out.check(matches!(c, Ok(ref r) if r.compact), || format!("compact check {c:?}"));
    }
    out.summary = format!("len<=10; gamma,dual orbit sizes seen {sizes_seen:?}");
    out
}

fn criterion_9_determinism() -> Outcome {
    let mut out = Outcome::new();
    let run = || {
        Command::new(BIN)
            .args(["scan", "--kmax", "6", "--format", "json"])
            .output()
            .expect("run uplus")
    };
    let (a, b) = (run(), run());
    out.check(a.status.success() && b.status.success(), || "scan failed".into());
    out.check(a.stdout == b.stdout && !a.stdout.is_empty(), || "outputs differ".into());
    out.summary = format!("{} identical bytes", a.stdout.len());
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 non-finite-generation", criterion_1_non_generation),
        ("2 hypercube structure", criterion_2_hypercube),
        ("3 invariant vanishing", criterion_3_bw_vanishing),
        ("4 pair reduction", criterion_4_pair_reduction),
        ("5 fusion-ring soundness", criterion_5_fusion_soundness),
        ("6 graded freeness", criterion_6_graded_freeness),
        ("7 surjectivity", criterion_7_surjectivity),
        ("8 orbit criterion", criterion_8_orbits),
        ("9 determinism", criterion_9_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        if outcome.failures.is_empty() {
            println!("[PASS] criterion {name}: {} ({secs:.2}s)", outcome.summary);
        } else {
            failed += 1;
            println!(
                "[FAIL] criterion {name}: {} failures, first: {} ({secs:.2}s)",
                outcome.failures.len(),
                outcome.failures[0]
            );
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
