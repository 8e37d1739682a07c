//! Fusion rules and dimensions against hand computations and a string-level oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use uplus_fusion::{fuse, DimensionTable, FusionElement, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Tensor product decomposition computed on strings.
fn string_fuse(x: &str, y: &str) -> BTreeMap<String, i64> {
    let x = if x == "e" { "" } else { x };
    let y = if y == "e" { "" } else { y };
    let conj = |s: &str| -> String {
        s.chars().rev().map(|c| if c == 'a' { 'b' } else { 'a' }).collect()
    };
    let mut out = BTreeMap::new();
    for m in 0..=x.len().min(y.len()) {
        if conj(&x[x.len() - m..]) == y[..m] {
            let z = format!("{}{}", &x[..x.len() - m], &y[m..]);
            *out.entry(if z.is_empty() { "e".to_string() } else { z }).or_insert(0) += 1;
        }
    }
    out
}

fn as_strings(f: &FusionElement) -> BTreeMap<String, i64> {
    f.terms().map(|(w, &c)| (w.to_string(), c)).collect()
}

#[test]
fn fundamental_times_conjugate() {
    let f = fuse(&w("a"), &w("b"));
    assert_eq!(as_strings(&f), BTreeMap::from([("e".into(), 1), ("ab".into(), 1)]));
    assert_eq!(as_strings(&fuse(&w("a"), &w("a"))), BTreeMap::from([("aa".into(), 1)]));
}

#[test]
fn self_conjugate_word() {
    // ab is its own conjugate, so both the suffix b and the whole word cancel.
    assert_eq!(w("ab").dual(), w("ab"));
    let f = fuse(&w("ab"), &w("ab"));
    let expected = BTreeMap::from([("e".into(), 1), ("ab".into(), 1), ("abab".into(), 1)]);
    assert_eq!(as_strings(&f), expected);
    assert_eq!(fuse(&w("aab"), &w("aab").dual()).coeff(&Word::EMPTY), 1);
}

#[test]
fn hand_computed_dimensions() {
    let two = DimensionTable::new(2).unwrap();
    let three = DimensionTable::new(3).unwrap();
    for (s, d) in [("e", 1), ("a", 2), ("ab", 3), ("aba", 4), ("abab", 5), ("aa", 4)] {
        assert_eq!(two.dim(&w(s)), BigInt::from(d), "n=2, {s}");
    }
    for (s, d) in [("a", 3), ("ab", 8), ("aa", 9), ("aba", 21)] {
        assert_eq!(three.dim(&w(s)), BigInt::from(d), "n=3, {s}");
    }
}

#[test]
fn dimension_table_rejects_small_n() {
    assert!(DimensionTable::new(1).is_err());
    assert!(DimensionTable::new(0).is_err());
}

fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
    (0..=max, any::<u128>()).prop_map(|(len, bits)| Word::from_bits(len, bits).unwrap())
}

proptest! {
    #[test]
    fn fuse_matches_string_oracle(x in word_strategy(14), y in word_strategy(14)) {
        prop_assert_eq!(as_strings(&fuse(&x, &y)), string_fuse(&x.to_string(), &y.to_string()));
    }

    #[test]
    fn dimension_is_multiplicative(x in word_strategy(10), y in word_strategy(10), n in 2u32..7) {
        let t = DimensionTable::new(n).unwrap();
        prop_assert_eq!(t.dim(&x) * t.dim(&y), t.dim_element(&fuse(&x, &y)));
    }
}
