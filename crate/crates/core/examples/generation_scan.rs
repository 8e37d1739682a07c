//! Degree-by-degree generation test for the swap-invariant subalgebra.
//!
//! cargo run --release --example generation_scan -- 8

use uplus_fusion::fingen::{finite_generation_scan_with_budget, Budget};

fn main() {
    let kmax: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("integer kmax");
    let budget = Budget {
        max_component_dim: 1 << kmax.max(10),
    };
    let reports = finite_generation_scan_with_budget(kmax, &budget).expect("within budget");
    println!("{:>3} {:>6} {:>6} {:>10}  witness", "k", "dim", "rank", "generated");
    for r in &reports {
        let witness = match (&r.witness, &r.witness_invariant) {
            (Some(w), Some(v)) => format!("({w})*, bw = {v}"),
            _ => "-".into(),
        };
        println!("{:>3} {:>6} {:>6} {:>10}  {witness}", r.k, r.component_dim, r.span_rank, r.generated);
    }
    let missing = reports.iter().filter(|r| !r.generated).count();
    println!("{missing} of {} degrees need a new generator", reports.len());
}
