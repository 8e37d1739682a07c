//! Simple objects of the equivariantization and what they forget to.

use uplus_fusion::equivariant::classes_up_to;
use uplus_fusion::{check_surjectivity_onto_invariants, forget, induce, Word};

fn main() {
    for e in classes_up_to(3) {
        println!("{:<40} -> {}", serde_json::to_string(&e).unwrap(), forget(&e));
    }
    let w: Word = "ab".parse().unwrap();
    println!("induced from {w}: {:?}", induce(&w));
    println!("induced from e: {:?}", induce(&Word::EMPTY));
    for d in 0..=8 {
        println!("degree <= {d}: surjective = {}", check_surjectivity_onto_invariants(d));
    }
}
