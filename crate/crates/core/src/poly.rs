//! The free ring `Q<A, B>` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::word::Word;

/// A noncommutative polynomial: a finite map from words to nonzero rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, BigRational>,
}

impl FreePoly {
    pub fn zero() -> FreePoly {
        FreePoly::default()
    }

    pub fn one() -> FreePoly {
        FreePoly::monomial(Word::EMPTY)
    }

    pub fn constant<C: Into<BigRational>>(c: C) -> FreePoly {
        FreePoly::term(Word::EMPTY, c)
    }

    pub fn monomial(w: Word) -> FreePoly {
        FreePoly::term(w, BigRational::one())
    }

    pub fn term<C: Into<BigRational>>(w: Word, c: C) -> FreePoly {
        let mut p = FreePoly::zero();
        p.add_term(w, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> FreePoly
    where
        I: IntoIterator<Item = (Word, C)>,
        C: Into<BigRational>,
    {
        let mut p = FreePoly::zero();
        for (w, c) in terms {
            p.add_term(w, c.into());
        }
        p
    }

    /// Adds `c·w` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a stored word; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Word::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, FreePoly> {
        let mut parts: BTreeMap<usize, FreePoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry(w.degree())
                .or_default()
                .terms
                .insert(*w, c.clone());
        }
        parts
    }

    pub fn scale(&self, c: &BigRational) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero();
        }
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (*w, a * c))
                .collect(),
        }
    }

    /// Applies the letter swap to every word; coefficients are unchanged.
    pub fn gamma(&self) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.gamma(), c.clone()))
                .collect(),
        }
    }
}

/// Concatenation product extended bilinearly.
pub fn free_multiply(p: &FreePoly, q: &FreePoly) -> FreePoly {
    let mut out = FreePoly::zero();
    for (u, a) in &p.terms {
        for (v, b) in &q.terms {
            out.add_term(u.concat(v), a * b);
        }
    }
    out
}

pub fn gamma_poly(p: &FreePoly) -> FreePoly {
    p.gamma()
}

impl Add for &FreePoly {
    type Output = FreePoly;

    fn add(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;

    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self + &(-rhs)
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;

    fn neg(self) -> FreePoly {
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;

    fn mul(self, rhs: &FreePoly) -> FreePoly {
        free_multiply(self, rhs)
    }
}

impl From<Word> for FreePoly {
    fn from(w: Word) -> FreePoly {
        FreePoly::monomial(w)
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})·{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreePoly[{self}]")
    }
}

impl Serialize for FreePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.terms.iter().map(|(w, c)| (w.to_string(), c.to_string())))
    }
}

impl<'de> Deserialize<'de> for FreePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FreePoly, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut p = FreePoly::zero();
        for (w, c) in raw {
            let w: Word = w.parse().map_err(D::Error::custom)?;
            let c: BigRational = parse_rational(&c).map_err(D::Error::custom)?;
            p.add_term(w, c);
        }
        Ok(p)
    }
}

/// Parses `"p"` or `"p/q"` with integer `p`, nonzero `q`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("invalid rational {s:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("invalid rational {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}
