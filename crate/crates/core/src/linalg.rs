//! Exact linear algebra over the integers.
//!
//! Three tools, all free of floating point:
//! - [`bareiss_rank`]: rank of a dense integer matrix by fraction-free
//!   (Bareiss) elimination.
//! - [`RowSpace`]: an incrementally built echelon basis of a rational row
//!   space, kept integral by content reduction, for repeated membership tests.
//! - [`Lattice`]: the integer span of sparse vectors, for membership over `Z`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over `Q` of an integer matrix given as rows.
///
/// Every intermediate entry is a minor of the input, so each division by
/// the previous pivot is exact.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    assert!(rows.iter().all(|r| r.len() == width), "ragged matrix");
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        let Some(pivot_row) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_vec = &top[rank];
        let pivot = &pivot_vec[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..width {
                let num = pivot * &row[j] - &factor * &pivot_vec[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division was not exact");
                row[j] = q;
            }
        }
        prev = top[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Bareiss on machine integers; `None` as soon as an entry would overflow.
fn bareiss_rank_checked(rows: &[Vec<i64>]) -> Option<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        let Some(pivot_row) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_vec = &top[rank];
        let pivot = pivot_vec[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..width {
                let num = pivot
                    .checked_mul(row[j])?
                    .checked_sub(factor.checked_mul(pivot_vec[j])?)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division was not exact");
                row[j] = num / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Rank of a small-integer matrix: machine arithmetic first, falling back
/// to arbitrary precision on overflow.
pub fn bareiss_rank_i64(rows: &[Vec<i64>]) -> usize {
    assert!(
        rows.windows(2).all(|w| w[0].len() == w[1].len()),
        "ragged matrix"
    );
    if let Some(rank) = bareiss_rank_checked(rows) {
        return rank;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(&big)
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Echelon basis of a row space over `Q` with integral, primitive rows.
#[derive(Debug, Clone)]
pub struct RowSpace {
    width: usize,
    // pivot column -> row; the row is zero left of its pivot
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl RowSpace {
    pub fn new(width: usize) -> RowSpace {
        RowSpace {
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        for (&p, row) in &self.rows {
            if v[p].is_zero() {
                continue;
            }
            let a = row[p].clone();
            let b = v[p].clone();
            for j in 0..self.width {
                v[j] = &a * &v[j] - &b * &row[j];
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.insert(p, v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: Vec<BigInt>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Sparse integer vector keyed by an ordered index.
pub type SparseVec<K> = BTreeMap<K, BigInt>;

/// A sublattice of `Z^K` held in echelon form (distinct leading keys).
#[derive(Debug, Clone)]
pub struct Lattice<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Lattice<K> {
    fn default() -> Self {
        Lattice {
            rows: BTreeMap::new(),
        }
    }
}

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, q: &BigInt, row: &SparseVec<K>) {
    // v -= q * row
    for (k, x) in row {
        let entry = v.entry(k.clone()).or_insert_with(BigInt::zero);
        *entry -= q * x;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

impl<K: Ord + Clone> Lattice<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: SparseVec<K>) {
        v.retain(|_, x| !x.is_zero());
        while let Some(lead) = v.keys().next().cloned() {
            let Some(mut row) = self.rows.remove(&lead) else {
                if v[&lead].is_negative() {
                    v.values_mut().for_each(|x| *x = -&*x);
                }
                self.rows.insert(lead, v);
                return;
            };
            // Euclid on the leading coefficients; afterwards `row` holds the gcd.
            while !v[&lead].is_zero() {
                let q = row[&lead].div_floor(&v[&lead]);
                axpy(&mut row, &q, &v);
                std::mem::swap(&mut row, &mut v);
                if !v.contains_key(&lead) {
                    break;
                }
            }
            if row[&lead].is_negative() {
                row.values_mut().for_each(|x| *x = -&*x);
            }
            self.rows.insert(lead, row);
        }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        let mut v: SparseVec<K> = v.iter().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k.clone(), x.clone())).collect();
        while let Some(lead) = v.keys().next().cloned() {
            let Some(row) = self.rows.get(&lead) else {
                return false;
            };
            let (q, r) = v[&lead].div_rem(&row[&lead]);
            if !r.is_zero() {
                return false;
            }
            axpy(&mut v, &q, row);
        }
        true
    }
}
