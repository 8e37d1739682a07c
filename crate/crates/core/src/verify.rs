//! Batch property checks over every module, at configurable sizes.
//!
//! Randomized checks draw from a ChaCha stream seeded by
//! [`VerifyConfig::seed`], so a run is reproducible from its configuration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::equivariant::{check_surjectivity_onto_invariants, forget, induce};
use crate::fingen::{
    build_graph, bw_invariant, degree_generated, find_hypercube_iso, hypercube_invariants,
    is_unit_invariant, product_rows, verify_pair_reduction,
};
use crate::fusion::{character_product, fuse, leading_part, DimensionTable, FusionElement};
use crate::invariant::{
    express_in_star_basis, graded_component, star_element, star_product, StarVector,
};
use crate::linalg::RowSpace;
use crate::orbit::{compact_action_check, fusion_compatibility, orbit, Compatibility, IrrPermutation};
use crate::poly::{free_multiply, FreePoly};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Bound on total word length for exhaustive fusion checks.
    pub max_word_len: usize,
    /// Largest `k` for graph and generation checks.
    pub kmax: usize,
    /// Number of random samples for associativity-style checks.
    pub samples: usize,
    pub seed: u64,
    pub dimension_ns: Vec<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_word_len: 10,
            kmax: 6,
            samples: 500,
            seed: 0,
            dimension_ns: vec![2, 3, 5],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, failures: Vec<String>, checked: usize) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: failures.is_empty(),
            detail: match failures.first() {
                None => format!("{checked} cases"),
                Some(first) => format!("{} of {checked} failed; first: {first}", failures.len()),
            },
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_bits(len, rng.gen::<u128>()).expect("short word")
}

fn random_poly(rng: &mut ChaCha8Rng) -> FreePoly {
    let terms = rng.gen_range(0..=8);
    FreePoly::from_terms((0..terms).map(|_| {
        let w = random_word(rng, 6);
        let c = BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        (w, c)
    }))
}

fn word_pairs(max_total: usize) -> impl Iterator<Item = (Word, Word)> {
    (0..=max_total).flat_map(move |lx| {
        (0..=max_total - lx).flat_map(move |ly| {
            Word::all_of_degree(lx).flat_map(move |x| Word::all_of_degree(ly).map(move |y| (x, y)))
        })
    })
}

pub fn check_word_involutions(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for w in Word::all_up_to_degree(cfg.max_word_len.min(16)) {
        n += 1;
        if w.gamma().gamma() != w || (!w.is_empty() && w.gamma() == w) {
            failures.push(format!("gamma at {w}"));
        }
        if w.dual().dual() != w || w.dual().gamma() != w.gamma().dual() {
            failures.push(format!("dual at {w}"));
        }
    }
    CheckOutcome::new("word involutions", failures, n)
}

pub fn check_free_ring(cfg: &VerifyConfig) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for i in 0..cfg.samples {
        let (p, q, r) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        if free_multiply(&free_multiply(&p, &q), &r) != free_multiply(&p, &free_multiply(&q, &r)) {
            failures.push(format!("associativity, sample {i}"));
        }
        if free_multiply(&p, &FreePoly::one()) != p || free_multiply(&FreePoly::one(), &p) != p {
            failures.push(format!("unit, sample {i}"));
        }
        if free_multiply(&p, &q).gamma() != free_multiply(&p.gamma(), &q.gamma()) {
            failures.push(format!("gamma multiplicativity, sample {i}"));
        }
    }
    CheckOutcome::new("free ring axioms", failures, cfg.samples)
}

pub fn check_fusion_associativity(cfg: &VerifyConfig) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut failures = Vec::new();
    let mut n = 0;
    while n < cfg.samples {
        let (x, y, z) = (random_word(&mut rng, 12), random_word(&mut rng, 12), random_word(&mut rng, 12));
        if x.degree() + y.degree() + z.degree() > 12 {
            continue;
        }
        n += 1;
        let (fx, fy, fz) = (
            FusionElement::irreducible(x),
            FusionElement::irreducible(y),
            FusionElement::irreducible(z),
        );
        let lhs = character_product(&character_product(&fx, &fy), &fz);
        let rhs = character_product(&fx, &character_product(&fy, &fz));
        if lhs != rhs {
            failures.push(format!("({x}·{y})·{z}"));
        }
    }
    CheckOutcome::new("fusion associativity", failures, n)
}

pub fn check_fusion_structure(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for (x, y) in word_pairs(cfg.max_word_len) {
        n += 1;
        let f = fuse(&x, &y);
        if f.terms().any(|(_, &c)| c != 1) {
            failures.push(format!("multiplicity in {x}⊗{y}"));
        }
        let has_unit = f.coeff(&Word::EMPTY) != 0;
        if has_unit != (y == x.dual()) {
            failures.push(format!("unit rule at {x}⊗{y}"));
        }
        if leading_part(&f).ok() != Some(FusionElement::irreducible(x.concat(&y))) {
            failures.push(format!("leading part of {x}⊗{y}"));
        }
        if fuse(&x.gamma(), &y.gamma()) != f.gamma() {
            failures.push(format!("gamma equivariance at {x}⊗{y}"));
        }
    }
    CheckOutcome::new("fusion structure", failures, n)
}

pub fn check_dimensions(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    let max = cfg.max_word_len.min(8);
    for &dim_n in &cfg.dimension_ns {
        let Ok(table) = DimensionTable::new(dim_n) else {
            failures.push(format!("invalid n = {dim_n}"));
            continue;
        };
        let dims: HashMap<Word, BigInt> = Word::all_up_to_degree(2 * max)
            .map(|w| (w, table.dim(&w)))
            .collect();
        for (x, y) in word_pairs(max) {
            n += 1;
            let rhs: BigInt = fuse(&x, &y)
                .terms()
                .map(|(z, &c)| &dims[z] * c)
                .sum();
            if &dims[&x] * &dims[&y] != rhs {
                failures.push(format!("n={dim_n}: dim {x}·{y}"));
            }
        }
        for x in Word::all_up_to_degree(max) {
            if dims[&x] != dims[&x.gamma()] || dims[&x] != dims[&x.dual()] {
                failures.push(format!("n={dim_n}: dim symmetry at {x}"));
            }
        }
    }
    CheckOutcome::new("dimension homomorphism", failures, n)
}

pub fn check_star_basis(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    let max = cfg.max_word_len.min(8);
    for d in 1..=max {
        if graded_component(d).len() != 1 << (d - 1) {
            failures.push(format!("component size in degree {d}"));
        }
    }
    for total in 2..=max {
        for d1 in 1..total {
            for c1 in graded_component(d1) {
                for c2 in graded_component(total - d1) {
                    n += 1;
                    let (u, v) = star_product(&c1, &c2);
                    if u == v {
                        failures.push(format!("{c1:?}·{c2:?} collapses"));
                    }
                    let lhs = free_multiply(
                        &star_element(&c1.rep()).unwrap(),
                        &star_element(&c2.rep()).unwrap(),
                    );
                    let rhs = &star_element(&u.rep()).unwrap() + &star_element(&v.rep()).unwrap();
                    if lhs != rhs {
                        failures.push(format!("{c1:?}·{c2:?} expansion"));
                    }
                    match express_in_star_basis(&lhs) {
                        Ok(dec) if dec.expand() == lhs => {}
                        _ => failures.push(format!("{c1:?}·{c2:?} basis roundtrip")),
                    }
                }
            }
        }
    }
    CheckOutcome::new("star basis", failures, n)
}

pub fn check_hypercube(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    for k in 1..=cfg.kmax {
        let g = match build_graph(k) {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("k={k}: {e}"));
                continue;
            }
        };
        let inv = hypercube_invariants(&g);
        if !inv.matches_hypercube(k) {
            failures.push(format!("k={k}: invariants {inv:?}"));
        }
        if k <= 5 && find_hypercube_iso(&g).is_none() {
            failures.push(format!("k={k}: no isomorphism to Q_{k}"));
        }
    }
    CheckOutcome::new("hypercube structure", failures, cfg.kmax)
}

pub fn check_bw_invariant(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for k in 1..=cfg.kmax {
        let Ok(g) = build_graph(k) else {
            failures.push(format!("k={k}: graph"));
            continue;
        };
        for c in g.vertices() {
            n += 1;
            match bw_invariant(&StarVector::basis(*c), &g) {
                Ok(v) if is_unit_invariant(&v) => {}
                _ => failures.push(format!("k={k}: single class {c:?}")),
            }
        }
        for row in product_rows(k) {
            n += 1;
            let classes = graded_component(k + 1);
            let v = StarVector::from_coeffs(
                k + 1,
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| (classes[i], BigRational::from_integer(x.into()))),
            )
            .unwrap();
            if bw_invariant(&v, &g).map(|x| x.is_zero()) != Ok(true) {
                failures.push(format!("k={k}: product row does not vanish"));
            }
        }
    }
    CheckOutcome::new("black/white invariant", failures, n)
}

pub fn check_generation(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    for k in 1..=cfg.kmax {
        match degree_generated(k) {
            Ok(r) => {
                if r.generated || r.span_rank >= r.component_dim {
                    failures.push(format!("k={k}: reported generated"));
                }
                if !r.witness_invariant.as_ref().is_some_and(is_unit_invariant) {
                    failures.push(format!("k={k}: witness invariant not ±1"));
                }
                let mut rs = RowSpace::new(r.component_dim);
                for row in product_rows(k) {
                    rs.insert(row.into_iter().map(BigInt::from).collect());
                }
                if rs.rank() != r.span_rank {
                    failures.push(format!("k={k}: rank {} vs {}", rs.rank(), r.span_rank));
                }
            }
            Err(e) => failures.push(format!("k={k}: {e}")),
        }
    }
    CheckOutcome::new("non-generation", failures, cfg.kmax)
}

pub fn check_pair_reduction(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for k in 2..=cfg.kmax.min(5) {
        for t in 3..=k + 1 {
            n += 1;
            if verify_pair_reduction(k, t) != Ok(true) {
                failures.push(format!("k={k}, t={t}"));
            }
        }
    }
    CheckOutcome::new("pair reduction", failures, n)
}

pub fn check_equivariantization(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let max = cfg.max_word_len.min(8);
    for w in Word::all_up_to_degree(max) {
        let total = induce(&w)
            .iter()
            .fold(FusionElement::zero(), |acc, e| acc.add(&forget(e)));
        if total != FusionElement::irreducible(w).add(&FusionElement::irreducible(w.gamma())) {
            failures.push(format!("forget∘induce at {w}"));
        }
    }
    for d in 0..=max {
        if !check_surjectivity_onto_invariants(d) {
            failures.push(format!("surjectivity in degree {d}"));
        }
    }
    CheckOutcome::new("equivariantization", failures, max + 1)
}

pub fn check_orbits(cfg: &VerifyConfig) -> CheckOutcome {
    let mut failures = Vec::new();
    let builtins = [
        IrrPermutation::identity(),
        IrrPermutation::gamma(),
        IrrPermutation::dual(),
        IrrPermutation::dual_gamma(),
    ];
    for p in &builtins {
        let expected = if p.is_anti() {
            Compatibility::AntiAutomorphism
        } else {
            Compatibility::Automorphism
        };
        if fusion_compatibility(p, cfg.max_word_len.min(8)) != expected {
            failures.push(format!("{p} not fusion compatible"));
        }
    }
    let families: [(&[IrrPermutation], &[usize]); 2] = [
        (&builtins[1..2], &[1, 2]),
        (&builtins[1..3], &[1, 2, 4]),
    ];
    let mut n = 0;
    for (gens, allowed) in families {
        for w in Word::all_up_to_degree(cfg.max_word_len) {
            n += 1;
            match orbit(&w, gens, crate::orbit::DEFAULT_CAP) {
                Ok(r) if !r.truncated && allowed.contains(&r.size) => {
                    if r.orbit.iter().any(|x| gens.iter().any(|g| !r.orbit.contains(&g.apply(x)))) {
                        failures.push(format!("orbit of {w} not closed"));
                    }
                    if gens.len() == 1 && (r.size == 1) != w.is_empty() {
                        failures.push(format!("orbit of {w} has size {}", r.size));
                    }
                }
                _ => failures.push(format!("orbit of {w}")),
            }
        }
        match compact_action_check(gens, &Word::letter(crate::word::Letter::A), cfg.max_word_len, crate::orbit::DEFAULT_CAP) {
            Ok(r) if r.compact => {}
            _ => failures.push("compact action check".to_string()),
        }
    }
    CheckOutcome::new("orbit criterion", failures, n)
}

/// Runs every check in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let checks: [fn(&VerifyConfig) -> CheckOutcome; 13] = [
        check_word_involutions,
        check_free_ring,
        check_fusion_associativity,
        check_fusion_structure,
        check_dimensions,
        check_star_basis,
        check_hypercube,
        check_bw_invariant,
        check_generation,
        check_pair_reduction,
        check_equivariantization,
        check_orbits,
        check_determinism,
    ];
    checks.iter().map(|c| c(cfg)).collect()
}

pub fn check_determinism(cfg: &VerifyConfig) -> CheckOutcome {
    let first = crate::fingen::finite_generation_scan(cfg.kmax.min(6));
    let second = crate::fingen::finite_generation_scan(cfg.kmax.min(6));
    let failures = if first == second {
        Vec::new()
    } else {
        vec!["scan reports differ between runs".to_string()]
    };
    CheckOutcome::new("determinism", failures, 2)
}
