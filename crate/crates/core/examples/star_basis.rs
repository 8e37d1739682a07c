//! The free ring, the letter swap, and invariants written in the star basis.

use num_rational::BigRational;
use uplus_fusion::invariant::star_product_many;
use uplus_fusion::{
    express_in_star_basis, graded_component, star_element, star_product, FreePoly, StarClass, Word,
};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn main() {
    let p = &FreePoly::monomial(w("a")) + &FreePoly::term(w("ab"), BigRational::new(1.into(), 2.into()));
    let q = &p + &p.gamma();
    println!("p       = {p}");
    println!("p + γp  = {q}");
    let decomposition = express_in_star_basis(&q).unwrap();
    for v in &decomposition.components {
        let parts: Vec<String> = v.coeffs().map(|(c, x)| format!("{x}·({c})*")).collect();
        println!("  degree {}: {}", v.degree(), parts.join(" + "));
    }
    assert_eq!(decomposition.expand(), q);

    // (x)*(y)* = (xy)* + (xγy)*
    let (x, y) = (StarClass::of(&w("ab")).unwrap(), StarClass::of(&w("a")).unwrap());
    let (u, v) = star_product(&x, &y);
    println!("({x})* · ({y})* = ({u})* + ({v})*");
    assert_eq!(
        &star_element(&x.rep()).unwrap() * &star_element(&y.rep()).unwrap(),
        &star_element(&u.rep()).unwrap() + &star_element(&v.rep()).unwrap()
    );

    let classes = graded_component(3);
    println!("degree 3 star classes: {classes:?}");
    let square = star_product_many(&[classes[0], classes[0]]);
    println!("({})*^2 = {}", classes[0], square.expand());
}
