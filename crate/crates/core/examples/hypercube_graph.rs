//! The product graph on star classes of degree k+1, its coloring and DOT output.
//!
//! cargo run --example hypercube_graph -- 3 > gamma4.dot

use uplus_fusion::fingen::{find_hypercube_iso, hypercube_invariants};
use uplus_fusion::{build_graph, bw_invariant, StarVector};

fn main() {
    let k: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse()).expect("integer k");
    let g = build_graph(k).expect("k within budget");
    let inv = hypercube_invariants(&g);
    eprintln!(
        "k={k}: {} vertices, {} edges, regular degree {:?}, diameter {:?}",
        inv.vertex_count,
        g.edge_count(),
        inv.regular_degree,
        inv.diameter
    );
    if let Some(map) = find_hypercube_iso(&g) {
        for (v, bits) in g.vertices().iter().zip(&map) {
            let bw = bw_invariant(&StarVector::basis(*v), &g).unwrap();
            eprintln!("  ({v})*  ->  {bits:0k$b}   bw = {bw}");
        }
    }
    print!("{}", g.to_dot());
}
