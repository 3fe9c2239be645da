//! Bit-packed vectors and matrices over GF(2).
//!
//! Coordinates are 0-indexed. The text form of a [`BitVector`] is a plain
//! `0`/`1` string with coordinate 0 leftmost.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector in GF(2)^N, packed into 64-bit words.
///
/// Bits past `len - 1` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// The standard basis vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    /// Build from raw words; bits past `len` are masked off.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { len, words };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of coordinates where both vectors are 1.
    pub fn and_weight(&self, other: &Self) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn not(&self) -> Self {
        let mut out = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_padding();
        out
    }

    /// True if every set coordinate of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        self.and_weight(other) % 2 == 1
    }

    /// Indices of set coordinates, ascending.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + t)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones_iter().next()
    }

    /// Concatenate `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in self.ones_iter() {
            out.set(i, true);
        }
        for i in other.ones_iter() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Embed into a longer vector of length `len` starting at `offset`.
    pub fn embed(&self, len: usize, offset: usize) -> Self {
        assert!(offset + self.len <= len);
        Self::from_indices(len, self.ones_iter().map(|i| i + offset))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid character {other:?} in bit string"
                    )))
                }
            }
        }
        Ok(v)
    }
}

impl Serialize for BitVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered list of equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn new(ncols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Self { ncols, rows })
    }

    pub fn empty(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            ncols: n,
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn push(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![BitVector::zeros(self.rows.len()); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_iter() {
                cols[c].set(r, true);
            }
        }
        Self {
            ncols: self.rows.len(),
            rows: cols,
        }
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        (
            BitMatrix {
                ncols: self.ncols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        // forward elimination only
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Membership of `v` in the row space. `self` must be in RREF.
    pub fn in_span(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        Ok(self.reduce(v).is_zero())
    }

    /// Reduce `v` against the pivots of an RREF matrix.
    pub(crate) fn reduce(&self, v: &BitVector) -> BitVector {
        let mut w = v.clone();
        for row in &self.rows {
            let pivot = row.first_one().expect("rref rows are nonzero");
            if w.get(pivot) {
                w.xor_assign(row);
            }
        }
        w
    }

    /// RREF basis of `{v : M v^T = 0}`.
    pub fn null_space(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::unit(self.ncols, free);
            for (row, &p) in r.rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix {
            ncols: self.ncols,
            rows: basis,
        }
        .rref()
        .0
    }

    /// Row vector times matrix: `sum_i coeffs[i] * row_i`.
    pub fn combine(&self, coeffs: &BitVector) -> BitVector {
        let mut acc = BitVector::zeros(self.ncols);
        for i in coeffs.ones_iter() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&str]) -> BitMatrix {
        let rows: Vec<BitVector> = rows.iter().map(|r| r.parse().unwrap()).collect();
        BitMatrix::new(rows[0].len(), rows).unwrap()
    }

    #[test]
    fn text_form_round_trip() {
        let v: BitVector = "1011000".parse().unwrap();
        assert_eq!(v.len(), 7);
        assert!(v.get(0) && !v.get(1) && v.get(2) && v.get(3));
        assert_eq!(v.to_string(), "1011000");
        assert!("10a1".parse::<BitVector>().is_err());
    }

    #[test]
    fn padding_stays_clear() {
        let v = BitVector::ones(70);
        assert_eq!(v.weight(), 70);
        assert_eq!(v.not().weight(), 0);
        let w = BitVector::from_words(3, vec![u64::MAX]);
        assert_eq!(w.weight(), 3);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = BitMatrix::identity(3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_drops_dependent_row() {
        let (r, p) = m(&["110", "011", "101"]).rref();
        assert_eq!(r, m(&["101", "011"]));
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r.nrows(), 2);
    }

    #[test]
    fn rank_edge_cases() {
        assert_eq!(
            BitMatrix::new(5, vec![BitVector::zeros(5); 3])
                .unwrap()
                .rank(),
            0
        );
        assert_eq!(BitMatrix::identity(9).rank(), 9);
        assert_eq!(BitMatrix::empty(4).rank(), 0);
    }

    #[test]
    fn in_span_basics() {
        let (e2, _) = m(&["110", "011"]).rref();
        for row in e2.rows() {
            assert!(e2.in_span(row).unwrap());
        }
        assert!(e2.in_span(&BitVector::zeros(3)).unwrap());
        assert!(!e2.in_span(&BitVector::unit(3, 0)).unwrap());
        assert!(e2.in_span(&BitVector::unit(4, 0)).is_err());
    }

    #[test]
    fn null_space_examples() {
        assert_eq!(BitMatrix::identity(5).null_space().nrows(), 0);
        let ns = m(&["1111"]).null_space();
        assert_eq!(ns.nrows(), 3);
        for row in ns.rows() {
            assert_eq!(row.weight() % 2, 0);
        }
        // Hamming [7,4] generator; its null space is the simplex code.
        let ham = m(&["1101000", "0110100", "0011010", "0001101"]);
        let ns = ham.null_space();
        assert_eq!(ns.nrows(), 3);
        for mask in 1u32..8 {
            let coeffs = BitVector::from_indices(3, (0..3).filter(|i| mask >> i & 1 == 1));
            assert_eq!(ns.combine(&coeffs).weight(), 4);
        }
    }

    #[test]
    fn mismatched_rows_rejected() {
        let r = BitMatrix::new(3, vec![BitVector::zeros(3), BitVector::zeros(4)]);
        assert!(r.is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..=64, 0usize..=20).prop_flat_map(|(ncols, nrows)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), ncols), nrows)
                .prop_map(move |rows| {
                    BitMatrix::new(
                        ncols,
                        rows.iter().map(|r| BitVector::from_bools(r)).collect(),
                    )
                    .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn rref_idempotent(mat in arb_matrix()) {
            let (r, p) = mat.rref();
            let (rr, pp) = r.rref();
            prop_assert_eq!(&r, &rr);
            prop_assert_eq!(p, pp);
        }

        #[test]
        fn rank_nullity(mat in arb_matrix()) {
            let ns = mat.null_space();
            prop_assert_eq!(mat.rank() + ns.nrows(), mat.ncols());
            for v in ns.rows() {
                for row in mat.rows() {
                    prop_assert!(!row.dot(v));
                }
            }
        }

        #[test]
        fn in_span_matches_subset_sums(
            mat in (1usize..=16, 1usize..=8).prop_flat_map(|(c, r)| {
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
            }),
            probe in proptest::collection::vec(any::<bool>(), 16),
        ) {
            let ncols = mat[0].len();
            let rows: Vec<BitVector> = mat.iter().map(|r| BitVector::from_bools(r)).collect();
            let v = BitVector::from_bools(&probe[..ncols]);
            let mut brute = false;
            for mask in 0u32..(1 << rows.len()) {
                let mut acc = BitVector::zeros(ncols);
                for (i, row) in rows.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc.xor_assign(row);
                    }
                }
                if acc == v {
                    brute = true;
                    break;
                }
            }
            let (r, _) = BitMatrix::new(ncols, rows).unwrap().rref();
            prop_assert_eq!(r.in_span(&v).unwrap(), brute);
        }
    }
}
