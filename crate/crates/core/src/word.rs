//! Words over the two-letter alphabet `{A, B}`.
//!
//! A word labels an irreducible representation of `U_n^+`: the letter `A`
//! stands for the fundamental comodule `V` and `B` for its conjugate `V*`.
//! Words are bit-packed, one bit per letter with `A = 0` and `B = 1`, the
//! first letter in the most significant position. With that layout the
//! letter swap is a masked complement and lexicographic order on words of
//! equal length is numeric order on the packed bits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Longest representable word.
pub const MAX_DEGREE: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {letter:?} at position {position} (expected 'a' or 'b', or \"e\" for the empty word)")]
    InvalidLetter { letter: char, position: usize },
    #[error("word of length {0} exceeds the maximum of {MAX_DEGREE} letters")]
    TooLong(usize),
    #[error("the empty word has no star class")]
    EmptyWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    /// The letter exchanged with this one by the swap.
    pub fn swapped(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    fn bit(self) -> u128 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }
}

/// A finite word over `{A, B}`.
///
/// Ordering is shortlex: shorter words first, then lexicographic with `A < B`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u8,
    bits: u128,
}

fn mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn empty() -> Word {
        Word::EMPTY
    }

    /// Builds a word from its packed representation. Bits above `len` are ignored.
    pub fn from_bits(len: usize, bits: u128) -> Result<Word, WordError> {
        if len > MAX_DEGREE {
            return Err(WordError::TooLong(len));
        }
        Ok(Word {
            len: len as u8,
            bits: bits & mask(len),
        })
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word, WordError> {
        let mut len = 0usize;
        let mut bits = 0u128;
        for letter in letters {
            len += 1;
            if len > MAX_DEGREE {
                return Err(WordError::TooLong(len));
            }
            bits = (bits << 1) | letter.bit();
        }
        Ok(Word {
            len: len as u8,
            bits,
        })
    }

    pub fn letter(letter: Letter) -> Word {
        Word {
            len: 1,
            bits: letter.bit(),
        }
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Letter at position `i`, counted from the left.
    pub fn letter_at(&self, i: usize) -> Letter {
        assert!(i < self.degree(), "letter index {i} out of range");
        if (self.bits >> (self.degree() - 1 - i)) & 1 == 0 {
            Letter::A
        } else {
            Letter::B
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.degree()).map(move |i| self.letter_at(i))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter_at(self.degree() - 1))
    }

    /// Letterwise swap `A <-> B`; positions are preserved.
    pub fn gamma(&self) -> Word {
        Word {
            len: self.len,
            bits: !self.bits & mask(self.degree()),
        }
    }

    pub fn reverse(&self) -> Word {
        if self.is_empty() {
            return *self;
        }
        Word {
            len: self.len,
            bits: self.bits.reverse_bits() >> (128 - self.degree()),
        }
    }

    /// Label of the conjugate representation: reversal composed with the swap.
    pub fn dual(&self) -> Word {
        self.gamma().reverse()
    }

    pub fn checked_concat(&self, other: &Word) -> Option<Word> {
        let len = self.degree() + other.degree();
        if len > MAX_DEGREE {
            return None;
        }
        let head = if other.len == 0 {
            self.bits
        } else if other.degree() >= 128 {
            0
        } else {
            self.bits << other.len
        };
        Some(Word {
            len: len as u8,
            bits: head | other.bits,
        })
    }

    /// Concatenation `self · other`.
    ///
    /// # Panics
    ///
    /// If the result would be longer than [`MAX_DEGREE`].
    pub fn concat(&self, other: &Word) -> Word {
        self.checked_concat(other)
            .unwrap_or_else(|| panic!("concatenation exceeds {MAX_DEGREE} letters"))
    }

    /// The first `m` letters.
    pub fn prefix(&self, m: usize) -> Word {
        assert!(m <= self.degree());
        let rest = self.degree() - m;
        Word {
            len: m as u8,
            bits: if rest >= 128 { 0 } else { self.bits >> rest },
        }
    }

    /// The last `m` letters.
    pub fn suffix(&self, m: usize) -> Word {
        assert!(m <= self.degree());
        Word {
            len: m as u8,
            bits: self.bits & mask(m),
        }
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        other.degree() <= self.degree() && self.prefix(other.degree()) == *other
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        other.degree() <= self.degree() && self.suffix(other.degree()) == *other
    }

    /// All `2^d` words of degree `d` in lexicographic order.
    ///
    /// # Panics
    ///
    /// If `d >= 64`; such an enumeration is not tractable anyway.
    pub fn all_of_degree(d: usize) -> impl Iterator<Item = Word> {
        assert!(d < 64, "refusing to enumerate words of degree {d}");
        (0..(1u64 << d)).map(move |b| Word {
            len: d as u8,
            bits: b as u128,
        })
    }

    /// All words of degree at most `d`, in shortlex order.
    pub fn all_up_to_degree(d: usize) -> impl Iterator<Item = Word> {
        (0..=d).flat_map(Word::all_of_degree)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for l in self.letters() {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Word, WordError> {
        if s == "e" {
            return Ok(Word::EMPTY);
        }
        let letters = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                'a' | 'A' => Ok(Letter::A),
                'b' | 'B' => Ok(Letter::B),
                letter => Err(WordError::InvalidLetter { letter, position }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::from_letters(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The unordered pair `{w, gamma(w)}` of a nonempty word, named by its
/// lexicographically smaller member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarClass {
    rep: Word,
}

impl StarClass {
    pub fn of(w: &Word) -> Result<StarClass, WordError> {
        if w.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok(StarClass {
            rep: (*w).min(w.gamma()),
        })
    }

    /// The class at position `index` of the lexicographically ordered
    /// degree-`d` component. Representatives are exactly the words that
    /// start with `A`, so the index is the packed value of the representative.
    pub fn from_index(d: usize, index: usize) -> StarClass {
        assert!((1..=MAX_DEGREE).contains(&d));
        assert!(
            (index as u128) < (1u128 << (d - 1)),
            "class index {index} out of range for degree {d}"
        );
        StarClass {
            rep: Word {
                len: d as u8,
                bits: index as u128,
            },
        }
    }

    pub fn rep(&self) -> Word {
        self.rep
    }

    pub fn degree(&self) -> usize {
        self.rep.degree()
    }

    pub fn members(&self) -> [Word; 2] {
        [self.rep, self.rep.gamma()]
    }

    /// Position within its graded component.
    pub fn index(&self) -> usize {
        self.rep.bits() as usize
    }
}

impl fmt::Display for StarClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep, f)
    }
}

impl fmt::Debug for StarClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*", self.rep)
    }
}

impl Serialize for StarClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rep.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StarClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<StarClass, D::Error> {
        let w = Word::deserialize(deserializer)?;
        StarClass::of(&w).map_err(serde::de::Error::custom)
    }
}

pub fn gamma(w: &Word) -> Word {
    w.gamma()
}

pub fn dual(w: &Word) -> Word {
    w.dual()
}

pub fn star_class(w: &Word) -> Result<StarClass, WordError> {
    StarClass::of(w)
}
