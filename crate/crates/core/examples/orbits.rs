//! Orbits of irreducibles under the swap and conjugation, and a custom permutation.

use uplus_fusion::orbit::{compact_action_check, fusion_compatibility, orbit, DEFAULT_CAP};
use uplus_fusion::{IrrPermutation, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn main() {
    let gens = [IrrPermutation::gamma(), IrrPermutation::dual()];
    for seed in ["e", "ab", "aab", "abba"] {
        let r = orbit(&w(seed), &gens, DEFAULT_CAP).unwrap();
        let members: Vec<String> = r.orbit.iter().map(ToString::to_string).collect();
        println!("orbit of {seed}: {{{}}}", members.join(", "));
    }
    let report = compact_action_check(&gens, &w("a"), 10, DEFAULT_CAP).unwrap();
    println!(
        "words up to length 10: compact = {}, largest orbit {}, group order {:?}",
        report.compact, report.max_orbit_size, report.group_order
    );

    for p in [IrrPermutation::gamma(), IrrPermutation::dual(), IrrPermutation::dual_gamma()] {
        println!("{p}: {:?}", fusion_compatibility(&p, 6));
    }

    // Exchanging aa and bb alone does not respect the fusion rules.
    let swap = IrrPermutation::custom("swap-aa-bb", [(w("aa"), w("bb")), (w("bb"), w("aa"))], 4);
    println!("swap-aa-bb: {:?}", swap.err());
}
