//! Degree-by-degree generation test for the swap-invariant subalgebra.
//!
//! In degree `k + 1` the invariants have the star basis indexed by the
//! `2^k` star classes. Products of two lower-degree star elements are
//! pairs `u* + v*`; joining `u` and `v` by an edge gives a graph on the
//! classes. The graph is bipartite, so the functional
//! `(black coefficient sum) - (white coefficient sum)` vanishes on every
//! product yet takes the value `±1` on each single class. No degree is
//! ever generated by lower degrees.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::invariant::{graded_component, star_product, star_product_many, StarVector};
use crate::linalg::{bareiss_rank_i64, RowSpace};
use crate::word::StarClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FingenError {
    #[error("k = {0} is out of range (need k >= 1)")]
    InvalidK(usize),
    #[error("factor count t = {t} is out of range for k = {k} (need k >= 2 and 3 <= t <= k + 1)")]
    InvalidFactorCount { k: usize, t: usize },
    #[error("degree {degree} component has {dim} classes, over the budget of {budget}")]
    ResourceLimit { degree: usize, dim: usize, budget: usize },
    #[error("graph is not bipartite: edge {0} -- {1} joins vertices of the same color")]
    NotBipartite(String, String),
    #[error("vector has degree {found}, graph vertices have degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("edge ({0}, {1}) is out of range or a loop")]
    BadEdge(usize, usize),
}

/// Limit on the size of the degree-`(k+1)` component, `2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_component_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_component_dim: 1 << 10,
        }
    }
}

impl Budget {
    pub fn check(&self, k: usize) -> Result<(), FingenError> {
        if k == 0 {
            return Err(FingenError::InvalidK(k));
        }
        let dim = 1usize.checked_shl(k as u32).filter(|_| k < 63);
        match dim {
            Some(dim) if dim <= self.max_component_dim => Ok(()),
            _ => Err(FingenError::ResourceLimit {
                degree: k + 1,
                dim: dim.unwrap_or(usize::MAX),
                budget: self.max_component_dim,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// The graph on degree-`(k+1)` star classes with one edge per two-factor product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeGraph {
    k: usize,
    vertices: Vec<StarClass>,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    coloring: Vec<Color>,
}

impl HypercubeGraph {
    /// A graph on the degree-`(k+1)` classes with arbitrary edges given by
    /// vertex position. Colors by breadth-first search.
    pub fn from_edges<I>(k: usize, edges: I) -> Result<HypercubeGraph, FingenError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if k == 0 {
            return Err(FingenError::InvalidK(k));
        }
        let vertices = graded_component(k + 1);
        let n = vertices.len();
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(FingenError::BadEdge(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let coloring = two_color(&vertices, &adjacency)?;
        Ok(HypercubeGraph {
            k,
            vertices,
            edges: set,
            adjacency,
            coloring,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[StarClass] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn color(&self, class: &StarClass) -> Option<Color> {
        (class.degree() == self.k + 1).then(|| self.coloring[class.index()])
    }

    pub fn coloring(&self) -> &[Color] {
        &self.coloring
    }

    pub fn is_properly_colored(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.coloring[u] != self.coloring[v])
    }

    /// Common degree of all vertices, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|a| a.len() == d).then_some(d)
    }

    fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Largest shortest-path distance; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for s in 0..self.vertex_count() {
            for d in self.distances_from(s) {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }

    pub fn edge_list(&self) -> Vec<(StarClass, StarClass)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.vertices[u], self.vertices[v]))
            .collect()
    }

    /// Graphviz rendering; black vertices are filled.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph gamma_{} {{", self.k + 1).unwrap();
        writeln!(out, "  node [shape=circle, style=filled];").unwrap();
        for (v, class) in self.vertices.iter().enumerate() {
            let (fill, font) = match self.coloring[v] {
                Color::Black => ("black", "white"),
                Color::White => ("white", "black"),
            };
            writeln!(out, "  \"{class}\" [fillcolor={fill}, fontcolor={font}];").unwrap();
        }
        for (u, v) in self.edge_list() {
            writeln!(out, "  \"{u}\" -- \"{v}\";").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for HypercubeGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HypercubeGraph", 4)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("vertices", &self.vertices)?;
        s.serialize_field("coloring", &self.coloring)?;
        s.serialize_field("edges", &self.edge_list())?;
        s.end()
    }
}

fn two_color(vertices: &[StarClass], adjacency: &[Vec<usize>]) -> Result<Vec<Color>, FingenError> {
    let mut color: Vec<Option<Color>> = vec![None; vertices.len()];
    for start in 0..vertices.len() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Color::Black);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in &adjacency[u] {
                match color[v] {
                    None => {
                        color[v] = Some(cu.other());
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(FingenError::NotBipartite(
                            vertices[u].to_string(),
                            vertices[v].to_string(),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(Option::unwrap).collect())
}

/// Every ordered pair of classes with positive degrees summing to `total`.
fn factor_pairs(total: usize) -> Vec<(StarClass, StarClass)> {
    (1..total)
        .flat_map(|d1| {
            let left = graded_component(d1);
            let right = graded_component(total - d1);
            left.into_iter()
                .flat_map(move |c1| right.clone().into_iter().map(move |c2| (c1, c2)))
        })
        .collect()
}

/// Builds the product graph on degree-`(k+1)` classes.
pub fn build_graph(k: usize) -> Result<HypercubeGraph, FingenError> {
    build_graph_with_budget(k, &Budget::default())
}

pub fn build_graph_with_budget(k: usize, budget: &Budget) -> Result<HypercubeGraph, FingenError> {
    budget.check(k)?;
    let edges = factor_pairs(k + 1)
        .into_iter()
        .map(|(c1, c2)| {
            let (u, v) = star_product(&c1, &c2);
            (u.index(), v.index())
        });
    HypercubeGraph::from_edges(k, edges)
}

/// Structural summary used for large `k` where a full search is not wanted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypercubeInvariants {
    pub vertex_count: usize,
    pub regular_degree: Option<usize>,
    pub diameter: Option<usize>,
    pub bipartite: bool,
}

impl HypercubeInvariants {
    pub fn matches_hypercube(&self, k: usize) -> bool {
        self.vertex_count == 1 << k
            && self.regular_degree == Some(k)
            && self.diameter == Some(k)
            && self.bipartite
    }
}

pub fn hypercube_invariants(g: &HypercubeGraph) -> HypercubeInvariants {
    HypercubeInvariants {
        vertex_count: g.vertex_count(),
        regular_degree: g.regular_degree(),
        diameter: g.diameter(),
        bipartite: g.is_properly_colored(),
    }
}

/// Whether `g` is isomorphic to the `k`-cube `Q_k` on `{0,1}^k`.
///
/// Backtracking search: vertices of `g` are placed in breadth-first order,
/// the first one at `0` (the cube is vertex-transitive), and each candidate
/// image must reproduce the distances to every vertex already placed.
/// Preserving all distances makes the bijection an isomorphism.
pub fn verify_hypercube_iso(g: &HypercubeGraph) -> bool {
    find_hypercube_iso(g).is_some()
}

/// The isomorphism found by [`verify_hypercube_iso`], as the cube label of each vertex.
pub fn find_hypercube_iso(g: &HypercubeGraph) -> Option<Vec<usize>> {
    let k = g.k();
    let n = g.vertex_count();
    if n != 1 << k || g.regular_degree() != Some(k) || g.edge_count() != k << (k - 1) {
        return None;
    }
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|s| g.distances_from(s).into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;

    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&v| (dist[0][v], v));
        idx
    };
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[order[0]] = 0;
    used[0] = true;

    fn extend(
        pos: usize,
        order: &[usize],
        dist: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for t in 0..used.len() {
            if used[t] {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&u| (image[u] ^ t).count_ones() as usize == dist[v][u]);
            if !consistent {
                continue;
            }
            image[v] = t;
            used[t] = true;
            if extend(pos + 1, order, dist, image, used) {
                return true;
            }
            used[t] = false;
            image[v] = usize::MAX;
        }
        false
    }

    extend(1, &order, &dist, &mut image, &mut used).then_some(image)
}

/// Black coefficient sum minus white coefficient sum.
pub fn bw_invariant(v: &StarVector, g: &HypercubeGraph) -> Result<BigRational, FingenError> {
    if v.degree() != g.k() + 1 {
        return Err(FingenError::DegreeMismatch {
            expected: g.k() + 1,
            found: v.degree(),
        });
    }
    let mut total = BigRational::zero();
    for (class, c) in v.coeffs() {
        match g.coloring[class.index()] {
            Color::Black => total += c,
            Color::White => total -= c,
        }
    }
    Ok(total)
}

/// Outcome of testing whether degree `k + 1` is generated by degrees `<= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationReport {
    pub k: usize,
    pub component_dim: usize,
    pub span_rank: usize,
    pub generated: bool,
    pub witness: Option<StarClass>,
    pub witness_invariant: Option<BigRational>,
}

impl Serialize for GenerationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GenerationReport", 6)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("component_dim", &self.component_dim)?;
        s.serialize_field("span_rank", &self.span_rank)?;
        s.serialize_field("generated", &self.generated)?;
        s.serialize_field("witness", &self.witness)?;
        s.serialize_field(
            "witness_invariant",
            &self.witness_invariant.as_ref().map(ToString::to_string),
        )?;
        s.end()
    }
}

/// Star-basis rows of all two-factor products landing in degree `k + 1`,
/// in a fixed order (by left degree, then left class, then right class).
pub fn product_rows(k: usize) -> Vec<Vec<i64>> {
    let dim = 1usize << k;
    factor_pairs(k + 1)
        .into_par_iter()
        .map(|(c1, c2)| {
            let (u, v) = star_product(&c1, &c2);
            let mut row = vec![0i64; dim];
            row[u.index()] += 1;
            row[v.index()] += 1;
            assert!(
                row.iter().all(|&x| x == 0 || x == 1),
                "product {c1:?}·{c2:?} hit one class twice"
            );
            row
        })
        .collect()
}

pub fn degree_generated(k: usize) -> Result<GenerationReport, FingenError> {
    degree_generated_with_budget(k, &Budget::default())
}

pub fn degree_generated_with_budget(
    k: usize,
    budget: &Budget,
) -> Result<GenerationReport, FingenError> {
    budget.check(k)?;
    let component_dim = 1usize << k;
    let span_rank = bareiss_rank_i64(&product_rows(k));
    let generated = span_rank == component_dim;
    let (witness, witness_invariant) = if generated {
        (None, None)
    } else {
        let graph = build_graph_with_budget(k, budget)?;
        let w = graph.vertices()[0];
        let value = bw_invariant(&StarVector::basis(w), &graph)?;
        (Some(w), Some(value))
    };
    Ok(GenerationReport {
        k,
        component_dim,
        span_rank,
        generated,
        witness,
        witness_invariant,
    })
}

/// All compositions of `total` into `parts` positive summands, lexicographically.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return if total >= 1 { vec![vec![total]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Checks that every `t`-factor product of star elements of total degree
/// `k + 1` lies in the span of the two-factor products.
pub fn verify_pair_reduction(k: usize, t: usize) -> Result<bool, FingenError> {
    if k < 2 || t < 3 || t > k + 1 {
        return Err(FingenError::InvalidFactorCount { k, t });
    }
    Budget::default().check(k)?;
    let dim = 1usize << k;
    let mut span = RowSpace::new(dim);
    for row in product_rows(k) {
        span.insert(row.into_iter().map(BigInt::from).collect());
    }
    for degrees in compositions(k + 1, t) {
        let mut tuples: Vec<Vec<StarClass>> = vec![Vec::new()];
        for &d in &degrees {
            let comp = graded_component(d);
            tuples = tuples
                .into_iter()
                .flat_map(|prefix| {
                    comp.iter().map(move |c| {
                        let mut next = prefix.clone();
                        next.push(*c);
                        next
                    })
                })
                .collect();
        }
        for classes in tuples {
            let v = star_product_many(&classes);
            let dense: Vec<BigInt> = v
                .to_dense()
                .into_iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect();
            if !span.contains(dense) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn finite_generation_scan(kmax: usize) -> Result<Vec<GenerationReport>, FingenError> {
    finite_generation_scan_with_budget(kmax, &Budget::default())
}

pub fn finite_generation_scan_with_budget(
    kmax: usize,
    budget: &Budget,
) -> Result<Vec<GenerationReport>, FingenError> {
    budget.check(kmax)?;
    (1..=kmax)
        .map(|k| degree_generated_with_budget(k, budget))
        .collect()
}

/// Whether `value` is `+1` or `-1`.
pub fn is_unit_invariant(value: &BigRational) -> bool {
    value.is_one() || (-value).is_one()
}
