//! Tensor products of irreducibles and their dimensions.
//!
//! cargo run --example fusion_rules -- aab ab 3

use uplus_fusion::{fuse, leading_part, DimensionTable, Word};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let x: Word = args.first().map_or("aab", String::as_str).parse().expect("word over a/b");
    let y: Word = args.get(1).map_or("ab", String::as_str).parse().expect("word over a/b");
    let n: u32 = args.get(2).map_or(Ok(2), |s| s.parse()).expect("integer n");

    let product = fuse(&x, &y);
    println!("r_{x} ⊗ r_{y} = {product}");
    println!("leading part: {}", leading_part(&product).unwrap());

    let table = DimensionTable::new(n).expect("n >= 2");
    let lhs = table.dim(&x) * table.dim(&y);
    println!("n = {n}: dim {x} · dim {y} = {lhs}");
    for (w, c) in product.terms() {
        println!("  {c} × dim {w} = {}", table.dim(w));
    }
    assert_eq!(lhs, table.dim_element(&product));
    println!("conjugate of {x} is {}", x.dual());
}
