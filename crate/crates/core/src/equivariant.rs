//! Grothendieck-level model of the `Z/2`-equivariantization of the
//! comodule category of `U_n^+`.
//!
//! Simple equivariant objects come in two kinds. A free orbit `{W, γ*W}`
//! with `γ*W ≇ W` carries one simple object, induced from either member.
//! The only swap-fixed irreducible is the trivial one, which carries two
//! simple objects, one per character of `Z/2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::fusion::FusionElement;
use crate::invariant::graded_component;
use crate::linalg::Lattice;
use crate::word::{StarClass, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquivariantClass {
    FixedPoint(Sign),
    FreeOrbit(StarClass),
}

impl EquivariantClass {
    pub fn degree(&self) -> usize {
        match self {
            EquivariantClass::FixedPoint(_) => 0,
            EquivariantClass::FreeOrbit(c) => c.degree(),
        }
    }

    pub fn rep(&self) -> Word {
        match self {
            EquivariantClass::FixedPoint(_) => Word::EMPTY,
            EquivariantClass::FreeOrbit(c) => c.rep(),
        }
    }
}

impl Serialize for EquivariantClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            EquivariantClass::FreeOrbit(c) => {
                let mut s = serializer.serialize_struct("EquivariantClass", 2)?;
                s.serialize_field("kind", "free_orbit")?;
                s.serialize_field("rep", c)?;
                s.end()
            }
            EquivariantClass::FixedPoint(sign) => {
                let mut s = serializer.serialize_struct("EquivariantClass", 3)?;
                s.serialize_field("kind", "fixed_point")?;
                s.serialize_field("rep", &Word::EMPTY)?;
                s.serialize_field("sign", &sign.as_i8())?;
                s.end()
            }
        }
    }
}

/// Underlying `A`-comodule class of an equivariant object.
pub fn forget(e: &EquivariantClass) -> FusionElement {
    match e {
        EquivariantClass::FixedPoint(_) => FusionElement::unit(),
        EquivariantClass::FreeOrbit(c) => FusionElement::from_terms(c.members().map(|w| (w, 1))),
    }
}

/// Simple equivariant objects whose underlying comodule is `W ⊕ γ*W`
/// for `W = r_w`: one free orbit class, or both signed trivial classes.
pub fn induce(w: &Word) -> Vec<EquivariantClass> {
    match StarClass::of(w) {
        Ok(c) => vec![EquivariantClass::FreeOrbit(c)],
        Err(_) => vec![
            EquivariantClass::FixedPoint(Sign::Plus),
            EquivariantClass::FixedPoint(Sign::Minus),
        ],
    }
}

/// Every simple equivariant class of degree at most `d`.
pub fn classes_up_to(d: usize) -> Vec<EquivariantClass> {
    let mut out = vec![
        EquivariantClass::FixedPoint(Sign::Plus),
        EquivariantClass::FixedPoint(Sign::Minus),
    ];
    for degree in 1..=d {
        out.extend(graded_component(degree).into_iter().map(EquivariantClass::FreeOrbit));
    }
    out
}

fn to_sparse(f: &FusionElement) -> BTreeMap<Word, BigInt> {
    f.terms().map(|(w, &c)| (*w, BigInt::from(c))).collect()
}

/// Whether the integer span of forgotten classes of degree `<= d` contains
/// the trivial class and every star element `r_w + r_{γ(w)}` of degree `<= d`.
pub fn check_surjectivity_onto_invariants(d: usize) -> bool {
    let mut image = Lattice::new();
    for e in classes_up_to(d) {
        let f = forget(&e);
        if !f.gamma().eq(&f) {
            return false;
        }
        image.insert(to_sparse(&f));
    }
    let mut targets = vec![FusionElement::unit()];
    for degree in 1..=d {
        for c in graded_component(degree) {
            targets.push(FusionElement::from_terms(c.members().map(|w| (w, 1))));
        }
    }
    targets.iter().all(|t| image.contains(&to_sparse(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn el(pairs: &[(&str, i64)]) -> FusionElement {
        FusionElement::from_terms(pairs.iter().map(|(s, c)| (w(s), *c)))
    }

    #[test]
    fn forget_examples() {
        let ab = EquivariantClass::FreeOrbit(StarClass::of(&w("ab")).unwrap());
        assert_eq!(forget(&ab), el(&[("ab", 1), ("ba", 1)]));
        assert_eq!(forget(&EquivariantClass::FixedPoint(Sign::Plus)), el(&[("e", 1)]));
        assert_eq!(forget(&EquivariantClass::FixedPoint(Sign::Minus)), el(&[("e", 1)]));
    }

    #[test]
    fn induce_examples() {
        let ab = EquivariantClass::FreeOrbit(StarClass::of(&w("ab")).unwrap());
        assert_eq!(induce(&w("ab")), vec![ab]);
        assert_eq!(induce(&w("ba")), vec![ab]);
        assert_eq!(
            induce(&Word::EMPTY),
            vec![
                EquivariantClass::FixedPoint(Sign::Plus),
                EquivariantClass::FixedPoint(Sign::Minus)
            ]
        );
    }

    #[test]
    fn forget_after_induce() {
        for x in Word::all_up_to_degree(8) {
            let total = induce(&x)
                .iter()
                .fold(FusionElement::zero(), |acc, e| acc.add(&forget(e)));
            let expected = FusionElement::irreducible(x).add(&FusionElement::irreducible(x.gamma()));
            assert_eq!(total, expected, "{x}");
        }
    }

    #[test]
    fn surjectivity() {
        for d in [0, 2, 6] {
            assert!(check_surjectivity_onto_invariants(d));
        }
        assert_eq!(classes_up_to(3).len(), 2 + 1 + 2 + 4);
    }

    #[test]
    fn json_format() {
        let ab = EquivariantClass::FreeOrbit(StarClass::of(&w("ba")).unwrap());
        assert_eq!(
            serde_json::to_string(&ab).unwrap(),
            r#"{"kind":"free_orbit","rep":"ab"}"#
        );
        assert_eq!(
            serde_json::to_string(&EquivariantClass::FixedPoint(Sign::Minus)).unwrap(),
            r#"{"kind":"fixed_point","rep":"e","sign":-1}"#
        );
    }
}
