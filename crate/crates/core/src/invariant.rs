//! The subalgebra of the free ring fixed by the letter swap.
//!
//! As a vector space it has the basis `1` together with the star elements
//! `w* = w + gamma(w)`, one per star class. Every homogeneous invariant of
//! positive degree is a [`StarVector`].

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::poly::{parse_rational, FreePoly};
use crate::word::{StarClass, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("polynomial is not fixed by the letter swap")]
    NotInvariant,
    #[error("class {class} has degree {found}, expected {expected}")]
    DegreeMismatch {
        class: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A homogeneous invariant of positive degree in star-basis coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct StarVector {
    degree: usize,
    coeffs: BTreeMap<StarClass, BigRational>,
}

impl StarVector {
    pub fn zero(degree: usize) -> StarVector {
        assert!(degree >= 1, "star vectors live in positive degree");
        StarVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(class: StarClass) -> StarVector {
        let mut v = StarVector::zero(class.degree());
        v.coeffs.insert(class, BigRational::one());
        v
    }

    pub fn from_coeffs<I, C>(degree: usize, coeffs: I) -> Result<StarVector, InvariantError>
    where
        I: IntoIterator<Item = (StarClass, C)>,
        C: Into<BigRational>,
    {
        let mut v = StarVector::zero(degree);
        for (class, c) in coeffs {
            v.add_term(class, c.into())?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, class: StarClass, c: BigRational) -> Result<(), InvariantError> {
        if class.degree() != self.degree {
            return Err(InvariantError::DegreeMismatch {
                class: class.to_string(),
                expected: self.degree,
                found: class.degree(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(class).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&class);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, class: &StarClass) -> BigRational {
        self.coeffs.get(class).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&StarClass, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ c · (rep + gamma(rep))` as an element of the free ring.
    pub fn expand(&self) -> FreePoly {
        let mut p = FreePoly::zero();
        for (class, c) in &self.coeffs {
            for w in class.members() {
                p.add_term(w, c.clone());
            }
        }
        p
    }

    /// Dense coordinates indexed by [`StarClass::index`].
    pub fn to_dense(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); 1usize << (self.degree - 1)];
        for (class, c) in &self.coeffs {
            out[class.index()] = c.clone();
        }
        out
    }
}

impl fmt::Debug for StarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarVector(deg {}; ", self.degree)?;
        f.debug_map()
            .entries(self.coeffs.iter().map(|(k, v)| (k, v.to_string())))
            .finish()?;
        f.write_str(")")
    }
}

impl Serialize for StarVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len() + 1))?;
        map.serialize_entry("degree", &self.degree)?;
        for (class, c) in &self.coeffs {
            map.serialize_entry(&class.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for StarVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<StarVector, D::Error> {
        use serde::de::Error;
        let mut raw = BTreeMap::<String, serde_json::Value>::deserialize(deserializer)?;
        let degree = raw
            .remove("degree")
            .and_then(|d| d.as_u64())
            .filter(|&d| d >= 1)
            .ok_or_else(|| D::Error::custom("missing or invalid \"degree\""))?;
        let mut v = StarVector::zero(degree as usize);
        for (k, c) in raw {
            let w: Word = k.parse().map_err(D::Error::custom)?;
            let class = StarClass::of(&w).map_err(D::Error::custom)?;
            let c = c
                .as_str()
                .ok_or_else(|| D::Error::custom("coefficients must be strings"))
                .and_then(|s| parse_rational(s).map_err(D::Error::custom))?;
            v.add_term(class, c).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}

/// `w + gamma(w)`.
pub fn star_element(w: &Word) -> Result<FreePoly, WordError> {
    let class = StarClass::of(w)?;
    Ok(FreePoly::from_terms(
        class.members().map(|m| (m, BigRational::one())),
    ))
}

/// The `2^(d-1)` star classes of degree `d`, ordered by representative.
pub fn graded_component(d: usize) -> Vec<StarClass> {
    assert!((1..64).contains(&d), "graded component degree {d} out of range");
    (0..1usize << (d - 1))
        .map(|i| StarClass::from_index(d, i))
        .collect()
}

/// `w1* · w2* = (w1·w2)* + (w1·gamma(w2))*`.
///
/// The two classes are always distinct: equality would need either
/// `w2 = gamma(w2)` or `w1 = gamma(w1)`, and neither holds for nonempty words.
pub fn star_product(c1: &StarClass, c2: &StarClass) -> (StarClass, StarClass) {
    let (w1, w2) = (c1.rep(), c2.rep());
    let straight = StarClass::of(&w1.concat(&w2)).expect("nonempty");
    let twisted = StarClass::of(&w1.concat(&w2.gamma())).expect("nonempty");
    (straight, twisted)
}

/// Star-basis coordinates of an arbitrary product `c_1* ⋯ c_t*`.
///
/// Computed by iterating [`star_product`]; each partial product is a sum
/// of star elements, so the result has `2^(t-1)` unit contributions.
pub fn star_product_many(classes: &[StarClass]) -> StarVector {
    assert!(!classes.is_empty());
    let degree = classes.iter().map(StarClass::degree).sum();
    let mut acc: BTreeMap<StarClass, BigRational> = BTreeMap::new();
    acc.insert(classes[0], BigRational::one());
    for c in &classes[1..] {
        let mut next: BTreeMap<StarClass, BigRational> = BTreeMap::new();
        for (partial, coeff) in acc {
            let (u, v) = star_product(&partial, c);
            *next.entry(u).or_insert_with(BigRational::zero) += &coeff;
            *next.entry(v).or_insert_with(BigRational::zero) += &coeff;
        }
        acc = next;
    }
    StarVector::from_coeffs(degree, acc).expect("homogeneous by construction")
}

pub fn is_invariant(p: &FreePoly) -> bool {
    p.gamma() == *p
}

/// A γ-fixed polynomial split into its constant term and homogeneous star vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    pub constant: BigRational,
    pub components: Vec<StarVector>,
}

impl StarDecomposition {
    pub fn expand(&self) -> FreePoly {
        let mut p = FreePoly::constant(self.constant.clone());
        for v in &self.components {
            p = &p + &v.expand();
        }
        p
    }
}

pub fn express_in_star_basis(p: &FreePoly) -> Result<StarDecomposition, InvariantError> {
    if !is_invariant(p) {
        return Err(InvariantError::NotInvariant);
    }
    let mut out = StarDecomposition {
        constant: p.coeff(&Word::EMPTY),
        components: Vec::new(),
    };
    for (degree, part) in p.homogeneous_parts() {
        if degree == 0 {
            continue;
        }
        let mut v = StarVector::zero(degree);
        for (w, c) in part.terms() {
            let class = StarClass::of(w)?;
            if class.rep() == *w {
                v.add_term(class, c.clone())?;
            }
        }
        out.components.push(v);
    }
    Ok(out)
}
