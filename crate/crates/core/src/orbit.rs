//! Group actions on the irreducibles of `U_n^+` by fusion-compatible
//! permutations of word labels, and orbit finiteness.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::fusion::{fuse, FusionElement};
use crate::word::Word;

pub const DEFAULT_CAP: usize = 64;
pub const DEFAULT_MAX_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("orbit cap must be at least 1")]
    InvalidCap,
    #[error("orbit of generating word {seed} exceeds the cap of {cap}")]
    GeneratorOrbitInfinite { seed: Word, cap: usize },
    #[error("map {0} -> {1} changes word length")]
    NotDegreePreserving(Word, Word),
    #[error("map is not a bijection on its support (word {0} is hit twice or leaves the support)")]
    NotBijective(Word),
    #[error("map {name} is not compatible with fusion up to total length {max_len}")]
    NotFusionCompatible { name: String, max_len: usize },
    #[error("unknown permutation {0:?} (expected identity, gamma, dual or reverse)")]
    UnknownPermutation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Action {
    /// `swap` then optionally reverse; the four combinations form `Z/2 × Z/2`.
    Builtin { swap: bool, reverse: bool },
    /// Identity outside a finite support.
    Custom(BTreeMap<Word, Word>),
}

/// A permutation of the irreducible labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrPermutation {
    name: String,
    action: Action,
}

/// How a permutation interacts with tensor products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Compatibility {
    /// `p(x ⊗ y) = p(x) ⊗ p(y)`.
    Automorphism,
    /// `p(x ⊗ y) = p(y) ⊗ p(x)`.
    AntiAutomorphism,
    Incompatible,
}

impl IrrPermutation {
    fn builtin(name: &str, swap: bool, reverse: bool) -> IrrPermutation {
        IrrPermutation {
            name: name.to_string(),
            action: Action::Builtin { swap, reverse },
        }
    }

    pub fn identity() -> IrrPermutation {
        IrrPermutation::builtin("identity", false, false)
    }

    pub fn gamma() -> IrrPermutation {
        IrrPermutation::builtin("gamma", true, false)
    }

    /// Conjugation `w -> reverse(gamma(w))`.
    pub fn dual() -> IrrPermutation {
        IrrPermutation::builtin("dual", true, true)
    }

    /// `dual ∘ gamma`, i.e. plain reversal.
    pub fn dual_gamma() -> IrrPermutation {
        IrrPermutation::builtin("dual∘gamma", false, true)
    }

    /// A finitely supported permutation, without any fusion check.
    pub fn custom_unchecked<I>(name: &str, pairs: I) -> Result<IrrPermutation, OrbitError>
    where
        I: IntoIterator<Item = (Word, Word)>,
    {
        let map: BTreeMap<Word, Word> = pairs.into_iter().filter(|(a, b)| a != b).collect();
        let mut images = BTreeSet::new();
        for (a, b) in &map {
            if a.degree() != b.degree() {
                return Err(OrbitError::NotDegreePreserving(*a, *b));
            }
            if !map.contains_key(b) || !images.insert(*b) {
                return Err(OrbitError::NotBijective(*b));
            }
        }
        Ok(IrrPermutation {
            name: name.to_string(),
            action: Action::Custom(map),
        })
    }

    /// A finitely supported permutation, accepted only if it is a fusion
    /// automorphism on all pairs of total length `<= check_len`.
    pub fn custom<I>(name: &str, pairs: I, check_len: usize) -> Result<IrrPermutation, OrbitError>
    where
        I: IntoIterator<Item = (Word, Word)>,
    {
        let p = IrrPermutation::custom_unchecked(name, pairs)?;
        if fusion_compatibility(&p, check_len) != Compatibility::Automorphism {
            return Err(OrbitError::NotFusionCompatible {
                name: name.to_string(),
                max_len: check_len,
            });
        }
        Ok(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, w: &Word) -> Word {
        match &self.action {
            Action::Builtin { swap, reverse } => {
                let s = if *swap { w.gamma() } else { *w };
                if *reverse {
                    s.reverse()
                } else {
                    s
                }
            }
            Action::Custom(map) => map.get(w).copied().unwrap_or(*w),
        }
    }

    /// Whether the permutation reverses the order of tensor factors.
    pub fn is_anti(&self) -> bool {
        matches!(self.action, Action::Builtin { reverse: true, .. })
    }

    fn klein_element(&self) -> Option<(bool, bool)> {
        match self.action {
            Action::Builtin { swap, reverse } => Some((swap, reverse)),
            Action::Custom(_) => None,
        }
    }
}

impl fmt::Display for IrrPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for IrrPermutation {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<IrrPermutation, OrbitError> {
        match s {
            "identity" | "id" => Ok(IrrPermutation::identity()),
            "gamma" => Ok(IrrPermutation::gamma()),
            "dual" => Ok(IrrPermutation::dual()),
            "reverse" | "dual-gamma" | "dual_gamma" => Ok(IrrPermutation::dual_gamma()),
            other => Err(OrbitError::UnknownPermutation(other.to_string())),
        }
    }
}

/// Order of the group generated by built-in permutations; `None` if any
/// generator is a custom map.
pub fn generated_group_order(gens: &[IrrPermutation]) -> Option<usize> {
    let elems: Vec<(bool, bool)> = gens
        .iter()
        .map(IrrPermutation::klein_element)
        .collect::<Option<_>>()?;
    let mut group = BTreeSet::from([(false, false)]);
    loop {
        let before = group.len();
        let current: Vec<_> = group.iter().copied().collect();
        for a in &current {
            for b in &elems {
                group.insert((a.0 ^ b.0, a.1 ^ b.1));
            }
        }
        if group.len() == before {
            return Some(group.len());
        }
    }
}

/// Pairs `(x, y)` of words with `|x| + |y| <= max_len`.
fn word_pairs(max_len: usize) -> impl Iterator<Item = (Word, Word)> {
    (0..=max_len).flat_map(move |lx| {
        (0..=max_len - lx).flat_map(move |ly| {
            Word::all_of_degree(lx).flat_map(move |x| Word::all_of_degree(ly).map(move |y| (x, y)))
        })
    })
}

fn image(p: &IrrPermutation, f: &FusionElement) -> FusionElement {
    f.map_words(|w| p.apply(w))
}

pub fn fusion_compatibility(p: &IrrPermutation, max_len: usize) -> Compatibility {
    let holds = |anti: bool| {
        word_pairs(max_len).all(|(x, y)| {
            let (px, py) = (p.apply(&x), p.apply(&y));
            let rhs = if anti { fuse(&py, &px) } else { fuse(&px, &py) };
            image(p, &fuse(&x, &y)) == rhs
        })
    };
    if holds(p.is_anti()) {
        if p.is_anti() {
            Compatibility::AntiAutomorphism
        } else {
            Compatibility::Automorphism
        }
    } else {
        Compatibility::Incompatible
    }
}

/// Whether `p` commutes with fusion (in its own tensor-order sense) on all
/// pairs of total length `<= max_len`.
pub fn verify_fusion_compatible(p: &IrrPermutation, max_len: usize) -> bool {
    fusion_compatibility(p, max_len) != Compatibility::Incompatible
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub seed: Word,
    pub orbit: BTreeSet<Word>,
    pub size: usize,
    pub truncated: bool,
}

/// Closure of `{seed}` under `gens`, giving up once it would exceed `cap` words.
pub fn orbit(seed: &Word, gens: &[IrrPermutation], cap: usize) -> Result<OrbitReport, OrbitError> {
    if cap == 0 {
        return Err(OrbitError::InvalidCap);
    }
    let mut seen = BTreeSet::from([*seed]);
    let mut queue = VecDeque::from([*seed]);
    let mut truncated = false;
    'search: while let Some(w) = queue.pop_front() {
        for g in gens {
            let next = g.apply(&w);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() == cap {
                truncated = true;
                break 'search;
            }
            seen.insert(next);
            queue.push_back(next);
        }
    }
    Ok(OrbitReport {
        seed: *seed,
        size: seen.len(),
        orbit: seen,
        truncated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompactnessReport {
    pub compact: bool,
    pub generator_orbit_size: usize,
    pub words_checked: usize,
    pub max_orbit_size: usize,
    pub group_order: Option<usize>,
}

/// Starting from a finite orbit of the generating word, checks that every
/// word of length `<= max_len` has a finite orbit and records the largest.
pub fn compact_action_check(
    gens: &[IrrPermutation],
    generator_word: &Word,
    max_len: usize,
    cap: usize,
) -> Result<CompactnessReport, OrbitError> {
    let seed = orbit(generator_word, gens, cap)?;
    if seed.truncated {
        return Err(OrbitError::GeneratorOrbitInfinite {
            seed: *generator_word,
            cap,
        });
    }
    let words: Vec<Word> = Word::all_up_to_degree(max_len).collect();
    let reports = words
        .par_iter()
        .map(|w| orbit(w, gens, cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CompactnessReport {
        compact: reports.iter().all(|r| !r.truncated),
        generator_orbit_size: seed.size,
        words_checked: reports.len(),
        max_orbit_size: reports.iter().map(|r| r.size).max().unwrap_or(0),
        group_order: generated_group_order(gens),
    })
}
