//! Fusion rules of `U_n^+`.
//!
//! Irreducibles are labelled by words; the tensor product of `r_x` and `r_y`
//! decomposes as the multiplicity-free sum of `r_{a·b}` over all
//! factorizations `x = a·g`, `y = dual(g)·b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("the zero element has no leading part")]
    ZeroElement,
    #[error("matrix size n = {0} is invalid (need n >= 2)")]
    InvalidN(u32),
}

/// An element of the fusion ring `R(A)`: integer multiplicities on irreducibles.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FusionElement {
    terms: BTreeMap<Word, i64>,
}

impl FusionElement {
    pub fn zero() -> FusionElement {
        FusionElement::default()
    }

    /// The class of the trivial representation.
    pub fn unit() -> FusionElement {
        FusionElement::irreducible(Word::EMPTY)
    }

    pub fn irreducible(w: Word) -> FusionElement {
        FusionElement::from_terms([(w, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, i64)>>(terms: I) -> FusionElement {
        let mut f = FusionElement::zero();
        for (w, c) in terms {
            f.add_term(w, c);
        }
        f
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry = entry
            .checked_add(c)
            .expect("fusion multiplicity overflowed i64");
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &i64)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the element lies in the fusion semiring `R_+(A)`.
    pub fn is_semiring_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    /// Relabels every irreducible through `f`, summing collisions.
    pub fn map_words<F: Fn(&Word) -> Word>(&self, f: F) -> FusionElement {
        FusionElement::from_terms(self.terms.iter().map(|(w, &c)| (f(w), c)))
    }

    pub fn gamma(&self) -> FusionElement {
        self.map_words(Word::gamma)
    }

    pub fn add(&self, other: &FusionElement) -> FusionElement {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(*w, c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> FusionElement {
        FusionElement::from_terms(self.terms.iter().map(|(w, &a)| {
            (*w, a.checked_mul(c).expect("fusion multiplicity overflowed i64"))
        }))
    }
}

/// Decomposes `r_x ⊗ r_y` into irreducibles.
pub fn fuse(x: &Word, y: &Word) -> FusionElement {
    let mut out = FusionElement::zero();
    let (lx, ly) = (x.degree(), y.degree());
    for m in 0..=lx.min(ly) {
        let g = x.suffix(m);
        if y.starts_with(&g.dual()) {
            out.add_term(x.prefix(lx - m).concat(&y.suffix(ly - m)), 1);
        }
    }
    out
}

/// Ring product on `R(A)`: the bilinear extension of [`fuse`].
pub fn character_product(f: &FusionElement, g: &FusionElement) -> FusionElement {
    let mut out = FusionElement::zero();
    for (x, &a) in &f.terms {
        for (y, &b) in &g.terms {
            let c = a.checked_mul(b).expect("fusion multiplicity overflowed i64");
            for (z, &m) in &fuse(x, y).terms {
                out.add_term(*z, c * m);
            }
        }
    }
    out
}

/// Multiplicity of the trivial representation in `r_x ⊗ r_y*`: 1 iff `x = y`.
pub fn haar_pairing(x: &Word, y: &Word) -> i64 {
    i64::from(x == y)
}

/// Bilinear extension of [`haar_pairing`]: counts common irreducibles with multiplicity.
pub fn multiplicity_pairing(f: &FusionElement, g: &FusionElement) -> i64 {
    f.terms
        .iter()
        .map(|(w, &a)| a * g.coeff(w))
        .sum()
}

/// Restriction to the words of maximal degree.
pub fn leading_part(f: &FusionElement) -> Result<FusionElement, FusionError> {
    let top = f.degree().ok_or(FusionError::ZeroElement)?;
    Ok(FusionElement {
        terms: f
            .terms
            .iter()
            .filter(|(w, _)| w.degree() == top)
            .map(|(w, &c)| (*w, c))
            .collect(),
    })
}

/// Dimensions of the irreducibles of `U_n^+` for a fixed `n`, memoized.
#[derive(Debug)]
pub struct DimensionTable {
    n: u32,
    memo: Mutex<HashMap<Word, BigInt>>,
}

impl DimensionTable {
    pub fn new(n: u32) -> Result<DimensionTable, FusionError> {
        if n < 2 {
            return Err(FusionError::InvalidN(n));
        }
        Ok(DimensionTable {
            n,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension of `r_w`.
    ///
    /// Appending a letter `l` to `w'` multiplies by `n`, except that when `w'`
    /// ends in the swapped letter the tensor product also contains `r_{w''}`
    /// (where `w' = w''·swap(l)`), whose dimension is subtracted.
    pub fn dim(&self, w: &Word) -> BigInt {
        if let Some(d) = self.memo.lock().unwrap().get(w) {
            return d.clone();
        }
        let n = BigInt::from(self.n);
        let mut before = BigInt::zero();
        let mut current = BigInt::one();
        let mut prev_letter = None;
        for l in w.letters() {
            let next = if prev_letter == Some(l.swapped()) {
                &n * &current - &before
            } else {
                &n * &current
            };
            before = std::mem::replace(&mut current, next);
            prev_letter = Some(l);
        }
        self.memo.lock().unwrap().insert(*w, current.clone());
        current
    }

    /// Dimension of a virtual representation.
    pub fn dim_element(&self, f: &FusionElement) -> BigInt {
        f.terms
            .iter()
            .map(|(w, &c)| self.dim(w) * BigInt::from(c))
            .sum()
    }
}

pub fn dim(w: &Word, table: &DimensionTable) -> BigInt {
    table.dim(w)
}

impl fmt::Display for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c == 1 {
                write!(f, "r[{w}]")?;
            } else {
                write!(f, "{c}·r[{w}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FusionElement[{self}]")
    }
}

impl Serialize for FusionElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.terms.iter().map(|(w, c)| (w.to_string(), *c)))
    }
}

impl<'de> Deserialize<'de> for FusionElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FusionElement, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(deserializer)?;
        let mut out = FusionElement::zero();
        for (w, c) in raw {
            out.add_term(w.parse().map_err(D::Error::custom)?, c);
        }
        Ok(out)
    }
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
    fn fuse_examples() {
        assert_eq!(fuse(&w("a"), &w("b")), el(&[("ab", 1), ("e", 1)]));
        assert_eq!(fuse(&w("a"), &w("a")), el(&[("aa", 1)]));
        for s in ["e", "a", "abba", "bbb"] {
            assert_eq!(fuse(&Word::EMPTY, &w(s)), el(&[(s, 1)]));
            assert_eq!(fuse(&w(s), &Word::EMPTY), el(&[(s, 1)]));
        }
        // x = ab, y = ab: g = b has dual a, a prefix of y; g = ab has dual ab.
        assert_eq!(fuse(&w("ab"), &w("ab")), el(&[("abab", 1), ("ab", 1), ("e", 1)]));
    }

    #[test]
    fn dual_contains_unit() {
        assert!(fuse(&w("ab"), &w("ab").dual()).coeff(&Word::EMPTY) == 1);
        assert_eq!(fuse(&w("aab"), &w("abb")).coeff(&Word::EMPTY), 1);
    }

    #[test]
    fn product_examples() {
        let a = el(&[("a", 1)]);
        let b = el(&[("b", 1)]);
        assert_eq!(character_product(&a, &b), el(&[("ab", 1), ("e", 1)]));
        let f = el(&[("ab", 2), ("b", -1)]);
        assert_eq!(character_product(&FusionElement::unit(), &f), f);
        assert_eq!(
            character_product(&character_product(&a, &a), &b),
            character_product(&a, &character_product(&a, &b))
        );
    }

    #[test]
    fn dimensions() {
        let t2 = DimensionTable::new(2).unwrap();
        assert_eq!(t2.dim(&Word::EMPTY), BigInt::from(1));
        assert_eq!(t2.dim(&w("a")), BigInt::from(2));
        assert_eq!(t2.dim(&w("b")), BigInt::from(2));
        assert_eq!(t2.dim(&w("ab")), BigInt::from(3));
        assert_eq!(t2.dim(&w("aa")), BigInt::from(4));
        // aba: 2·dim(ab) − dim(a) = 4
        assert_eq!(t2.dim(&w("aba")), BigInt::from(4));
        assert!(matches!(DimensionTable::new(1), Err(FusionError::InvalidN(1))));
    }

    #[test]
    fn pairing_and_leading_part() {
        assert_eq!(haar_pairing(&w("ab"), &w("ab")), 1);
        assert_eq!(haar_pairing(&w("ab"), &w("ba")), 0);
        assert_eq!(haar_pairing(&Word::EMPTY, &w("a")), 0);
        assert_eq!(
            multiplicity_pairing(&el(&[("ab", 2), ("e", 1)]), &el(&[("ab", 3), ("a", 1)])),
            6
        );

        assert_eq!(leading_part(&el(&[("ab", 1), ("e", 1)])).unwrap(), el(&[("ab", 1)]));
        assert_eq!(leading_part(&el(&[("a", 1)])).unwrap(), el(&[("a", 1)]));
        assert_eq!(
            leading_part(&fuse(&w("ab"), &w("aa"))).unwrap(),
            el(&[("abaa", 1)])
        );
        assert_eq!(
            leading_part(&FusionElement::zero()),
            Err(FusionError::ZeroElement)
        );
    }

    #[test]
    fn json_format() {
        let f = fuse(&w("a"), &w("b"));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"e":1,"ab":1}"#);
        let back: FusionElement = serde_json::from_str(r#"{"ab":1,"e":1}"#).unwrap();
        assert_eq!(back, f);
    }
}
