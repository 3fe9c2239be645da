//! Binary linear codes and their basic metrics.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::perm::Permutation;

/// Default bound on `2^k` for anything that walks every codeword.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 26;

/// A binary linear code, identified by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    basis: BitMatrix,
}

/// The set of weights achieved by codewords (always contains 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpectrum {
    pub weights: BTreeSet<usize>,
}

impl WeightSpectrum {
    pub fn contains(&self, w: usize) -> bool {
        self.weights.contains(&w)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.weights.iter().copied().collect()
    }
}

impl LinearCode {
    /// The span of `generators` (any spanning set; dependent rows are fine).
    pub fn span(length: usize, generators: Vec<BitVector>) -> Result<Self> {
        let m = BitMatrix::new(length, generators)?;
        Ok(Self { basis: m.rref().0 })
    }

    pub fn from_matrix(m: &BitMatrix) -> Self {
        Self { basis: m.rref().0 }
    }

    pub fn zero(length: usize) -> Self {
        Self {
            basis: BitMatrix::empty(length),
        }
    }

    pub fn full(length: usize) -> Self {
        Self {
            basis: BitMatrix::identity(length),
        }
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.basis.ncols()
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.basis.nrows()
    }

    #[inline]
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        self.basis.in_span(v)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.length() == other.length()
            && self
                .basis
                .rows()
                .iter()
                .all(|r| other.basis.in_span(r).unwrap_or(false))
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        let k = self.dimension();
        if k >= 64 || (1u64 << k) > cap {
            return Err(Error::EnumerationInfeasible(format!(
                "2^{k} codewords exceed the cap of {cap}"
            )));
        }
        Ok(())
    }

    /// Visit every codeword once, in Gray-code order starting from zero.
    pub fn for_each_codeword(&self, cap: u64, mut f: impl FnMut(&BitVector)) -> Result<()> {
        self.check_cap(cap)?;
        let k = self.dimension();
        let rows = self.basis.rows();
        let mut cur = BitVector::zeros(self.length());
        f(&cur);
        for i in 1u64..(1u64 << k) {
            cur.xor_assign(&rows[i.trailing_zeros() as usize]);
            f(&cur);
        }
        Ok(())
    }

    /// Number of codewords of each weight `0..=N`.
    ///
    /// Enumerates whichever of the code and its dual is smaller; the dual's
    /// distribution is carried over with the MacWilliams identity. Fails when
    /// both exceed `cap`.
    pub fn weight_distribution(&self, cap: u64) -> Result<Vec<u64>> {
        let n = self.length();
        let k = self.dimension();
        if n - k < k && self.check_cap(cap).is_err() && n - k < 64 && (1u64 << (n - k)) <= cap {
            return macwilliams_transform(&self.dual().weight_distribution_enumerated(cap)?, n);
        }
        self.weight_distribution_enumerated(cap)
    }

    /// Weight distribution by visiting every codeword.
    pub fn weight_distribution_enumerated(&self, cap: u64) -> Result<Vec<u64>> {
        self.check_cap(cap)?;
        let n = self.length();
        let k = self.dimension();
        let mut counts = vec![0u64; n + 1];
        let rows = self.basis.rows();
        if rows.first().is_some_and(|r| r.words().len() == 1) || k == 0 {
            // single-word fast path
            let words: Vec<u64> = rows.iter().map(|r| r.words()[0]).collect();
            let mut cur = 0u64;
            counts[0] += 1;
            for i in 1u64..(1u64 << k) {
                cur ^= words[i.trailing_zeros() as usize];
                counts[cur.count_ones() as usize] += 1;
            }
        } else {
            self.for_each_codeword(cap, |v| counts[v.weight()] += 1)?;
        }
        Ok(counts)
    }

    pub fn weight_spectrum(&self) -> Result<WeightSpectrum> {
        self.weight_spectrum_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn weight_spectrum_capped(&self, cap: u64) -> Result<WeightSpectrum> {
        let dist = self.weight_distribution(cap)?;
        Ok(WeightSpectrum {
            weights: dist
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(w, _)| w)
                .collect(),
        })
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_distance_capped(&self, cap: u64) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::Empty("the zero code has no nonzero codeword".into()));
        }
        let dist = self.weight_distribution(cap)?;
        dist.iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
            .ok_or_else(|| Error::Internal("nonzero code without nonzero weight".into()))
    }

    /// Minimum over codewords of `N - weight`; `N` for the zero code.
    pub fn min_codistance(&self) -> Result<usize> {
        self.min_codistance_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_codistance_capped(&self, cap: u64) -> Result<usize> {
        let n = self.length();
        let dist = self.weight_distribution(cap)?;
        let max_weight = dist.iter().rposition(|&c| c > 0).unwrap_or(0);
        Ok(n - max_weight)
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            basis: self.basis.null_space(),
        }
    }

    /// The subcode of codewords supported inside `support`.
    pub fn shortened_dimension(&self, support: &BitVector) -> usize {
        // x·B restricted to the complement of `support` must vanish.
        let outside = support.not();
        let cols: Vec<usize> = outside.ones_iter().collect();
        let restricted: Vec<BitVector> = self
            .basis
            .rows()
            .iter()
            .map(|r| {
                BitVector::from_indices(
                    cols.len(),
                    cols.iter()
                        .enumerate()
                        .filter(|(_, &c)| r.get(c))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        let m = BitMatrix::new(cols.len(), restricted).expect("uniform lengths");
        self.dimension() - m.rank()
    }

    /// Whether the nonzero codeword `v` cannot be split into two nonzero
    /// codewords with disjoint supports.
    ///
    /// Over GF(2) such a split exists iff some codeword other than 0 and `v`
    /// lies inside `supp(v)`, so this is a rank computation on the
    /// shortened code.
    pub fn is_indecomposable(&self, v: &BitVector) -> Result<bool> {
        if v.is_zero() {
            return Err(Error::InvalidArgument(
                "the zero vector is never indecomposable".into(),
            ));
        }
        if !self.contains(v)? {
            return Err(Error::NotInCode(v.to_string()));
        }
        Ok(self.shortened_dimension(v) == 1)
    }

    pub fn is_invariant(&self, p: &Permutation) -> bool {
        p.degree() == self.length()
            && self
                .basis
                .rows()
                .iter()
                .all(|r| self.basis.reduce(&apply_permutation(r, p)).is_zero())
    }

    /// Relabel coordinates: the image code `{v^p : v in C}`.
    pub fn permuted(&self, p: &Permutation) -> LinearCode {
        assert_eq!(p.degree(), self.length());
        LinearCode::from_matrix(
            &BitMatrix::new(
                self.length(),
                self.basis
                    .rows()
                    .iter()
                    .map(|r| apply_permutation(r, p))
                    .collect(),
            )
            .expect("uniform lengths"),
        )
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            n: self.length(),
            k: self.dimension(),
            basis: self.basis.rows().to_vec(),
        }
    }

    pub fn from_json(json: &CodeJson) -> Result<Self> {
        let code = LinearCode::span(json.n, json.basis.clone())?;
        if code.dimension() != json.k {
            return Err(Error::Parse(format!(
                "declared k = {} but basis has rank {}",
                json.k,
                code.dimension()
            )));
        }
        Ok(code)
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}]", self.length(), self.dimension())
    }
}

/// Interchange form: `{"n": .., "k": .., "basis": ["0101..", ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub n: usize,
    pub k: usize,
    pub basis: Vec<BitVector>,
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let json = CodeJson::deserialize(deserializer)?;
        LinearCode::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// Weight distribution of a code from that of its dual, by the MacWilliams
/// identity `A_j = |D|^-1 * sum_i B_i K_j(i)` with Krawtchouk polynomials `K_j`.
pub fn macwilliams_transform(dual: &[u64], n: usize) -> Result<Vec<u64>> {
    if dual.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            found: dual.len(),
        });
    }
    let size: u64 = dual.iter().sum();
    if !size.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "{size} codewords is not a power of two"
        )));
    }
    let mut binom = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for r in 0..=n {
        binom[r][0] = BigInt::one();
        for c in 1..=r {
            binom[r][c] = &binom[r - 1][c - 1] + &binom[r - 1][c];
        }
    }
    let size = BigInt::from(size);
    (0..=n)
        .map(|j| {
            let mut total = BigInt::zero();
            for (i, &b) in dual.iter().enumerate().filter(|(_, &b)| b > 0) {
                let mut kraw = BigInt::zero();
                for s in j.saturating_sub(n - i)..=j.min(i) {
                    let term = &binom[i][s] * &binom[n - i][j - s];
                    if s % 2 == 0 {
                        kraw += term;
                    } else {
                        kraw -= term;
                    }
                }
                total += kraw * b;
            }
            let (q, r) = total.div_rem(&size);
            if !r.is_zero() {
                return Err(Error::Internal(format!("weight {j} count is not integral")));
            }
            u64::try_from(q).map_err(|_| {
                Error::EnumerationInfeasible(format!("weight {j} count does not fit in 64 bits"))
            })
        })
        .collect()
}

pub fn weight(v: &BitVector) -> usize {
    v.weight()
}

pub fn support(v: &BitVector) -> Vec<usize> {
    v.ones_iter().collect()
}

pub fn common_weight(v: &BitVector, w: &BitVector) -> Result<usize> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: v.len(),
            found: w.len(),
        });
    }
    Ok(v.and_weight(w))
}

pub fn coweight(v: &BitVector) -> usize {
    v.len() - v.weight()
}

/// `result[p(i)] = v[i]`.
pub fn apply_permutation(v: &BitVector, p: &Permutation) -> BitVector {
    assert_eq!(
        v.len(),
        p.degree(),
        "permutation degree must match vector length"
    );
    BitVector::from_indices(v.len(), v.ones_iter().map(|i| p.image(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    fn brute_min_distance(c: &LinearCode) -> usize {
        let rows = c.basis().rows();
        let mut best = usize::MAX;
        for mask in 1u32..(1 << rows.len()) {
            let mut acc = BitVector::zeros(c.length());
            for (i, r) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(r);
                }
            }
            best = best.min(acc.weight());
        }
        best
    }

    #[test]
    fn weight_and_support() {
        assert_eq!(weight(&BitVector::zeros(5)), 0);
        assert_eq!(weight(&BitVector::ones(7)), 7);
        assert!(support(&BitVector::zeros(4)).is_empty());
        assert_eq!(support(&BitVector::unit(6, 3)), vec![3]);
        let v: BitVector = "0110".parse().unwrap();
        assert_eq!(common_weight(&v, &v).unwrap(), 2);
        assert_eq!(
            common_weight(&BitVector::unit(4, 0), &BitVector::unit(4, 1)).unwrap(),
            0
        );
        assert!(common_weight(&v, &BitVector::zeros(3)).is_err());
        assert_eq!(coweight(&BitVector::zeros(9)), 9);
        assert_eq!(coweight(&BitVector::ones(9)), 0);
    }

    #[test]
    fn even_weight_spectrum() {
        let e2 = families::elementary(2, 4).unwrap();
        assert_eq!(e2.weight_spectrum().unwrap().to_vec(), vec![0, 2, 4]);
        assert_eq!(
            families::elementary(3, 6)
                .unwrap()
                .min_codistance()
                .unwrap(),
            0
        );
    }

    #[test]
    fn zero_code_errors() {
        let z = LinearCode::zero(5);
        assert!(matches!(z.min_distance(), Err(Error::Empty(_))));
        assert_eq!(z.min_codistance().unwrap(), 5);
        assert_eq!(z.weight_spectrum().unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn cap_is_enforced() {
        let full = LinearCode::full(30);
        assert!(matches!(
            full.weight_distribution_enumerated(1 << 20),
            Err(Error::EnumerationInfeasible(_))
        ));
        assert!(full.weight_distribution_enumerated(1 << 30).is_ok());
        let half = families::c0(5, 6).unwrap();
        assert!(matches!(
            half.weight_spectrum_capped(1 << 9),
            Err(Error::EnumerationInfeasible(_))
        ));
        assert!(half.weight_spectrum_capped(1 << 10).is_ok());
    }

    #[test]
    fn dual_of_elementary_codes() {
        let n = 6;
        let e = |k| families::elementary(k, n).unwrap();
        assert_eq!(e(0).dual(), e(3));
        assert_eq!(e(2).dual(), e(1));
        assert_eq!(e(1).dual(), e(2));
        let c = families::c0(3, 4).unwrap();
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn multi_word_enumeration_matches_fast_path() {
        let c = families::k_code(&families::WreathShape::new(vec![3, 3, 3, 3]).unwrap()).unwrap();
        assert!(c.length() > 64);
        let mut counts = vec![0u64; c.length() + 1];
        // compare the generic walk against the distribution on a subcode
        let sub = LinearCode::span(c.length(), c.basis().rows()[..12].to_vec()).unwrap();
        sub.for_each_codeword(1 << 20, |v| counts[v.weight()] += 1)
            .unwrap();
        assert_eq!(counts, sub.weight_distribution(1 << 20).unwrap());
        assert_eq!(counts.iter().sum::<u64>(), 1 << 12);
    }

    #[test]
    fn indecomposable_examples() {
        let c = families::c0(3, 4).unwrap();
        let g = families::GridIndex::new(3, 4).unwrap();
        let r0 = families::row_matrix(&g, 0);
        let r1 = families::row_matrix(&g, 1);
        // minimum-weight words are indecomposable
        let col = families::column_matrix(&g, 2);
        assert!(c.is_indecomposable(&col).unwrap());
        assert!(!c.is_indecomposable(&r0.xor(&r1)).unwrap());
        assert!(c.is_indecomposable(&BitVector::zeros(12)).is_err());
        assert!(matches!(
            c.is_indecomposable(&BitVector::unit(12, 0)),
            Err(Error::NotInCode(_))
        ));
    }

    #[test]
    fn invariance_and_relabeling() {
        let c = families::c0(3, 4).unwrap();
        assert!(c.is_invariant(&Permutation::identity(12)));
        let shift = Permutation::shift(5);
        assert_eq!(
            apply_permutation(&BitVector::unit(5, 0), &shift),
            BitVector::unit(5, 1)
        );
        let t = Permutation::transposition(5, 1, 3);
        let v: BitVector = "01100".parse().unwrap();
        assert_eq!(apply_permutation(&v, &t).weight(), 2);
    }

    fn arb_code() -> impl Strategy<Value = LinearCode> {
        (1usize..=12, 0usize..=10).prop_flat_map(|(n, k)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), k).prop_map(
                move |rows| {
                    LinearCode::span(n, rows.iter().map(|r| BitVector::from_bools(r)).collect())
                        .unwrap()
                },
            )
        })
    }

    #[test]
    fn large_codes_go_through_the_dual() {
        let full = families::c0(1, 36).unwrap();
        let dist = full.weight_distribution(1 << 10).unwrap();
        let mut binom = 1u64;
        for (j, &count) in dist.iter().enumerate() {
            assert_eq!(count, binom);
            binom = binom * (36 - j as u64) / (j as u64 + 1);
        }
        let even = families::c1(1, 35).unwrap();
        assert_eq!(even.min_distance_capped(1 << 10).unwrap(), 2);
        assert_eq!(
            even.weight_spectrum_capped(4).unwrap().to_vec(),
            (0..=34).step_by(2).collect::<Vec<_>>()
        );
        assert!(matches!(
            families::c0(6, 6).unwrap().weight_distribution(1 << 10),
            Err(Error::EnumerationInfeasible(_))
        ));
    }

    proptest! {
        #[test]
        fn weight_plus_coweight(bits in proptest::collection::vec(any::<bool>(), 1..100)) {
            let v = BitVector::from_bools(&bits);
            prop_assert_eq!(weight(&v) + coweight(&v), v.len());
        }

        #[test]
        fn dimension_plus_dual(c in arb_code()) {
            prop_assert_eq!(c.dimension() + c.dual().dimension(), c.length());
        }

        #[test]
        fn min_distance_matches_row_combinations(c in arb_code()) {
            prop_assume!(c.dimension() > 0);
            prop_assert_eq!(c.min_distance().unwrap(), brute_min_distance(&c));
        }

        #[test]
        fn macwilliams_matches_enumeration(c in arb_code()) {
            let direct = c.weight_distribution_enumerated(DEFAULT_ENUMERATION_CAP).unwrap();
            let dual = c.dual().weight_distribution_enumerated(DEFAULT_ENUMERATION_CAP).unwrap();
            prop_assert_eq!(macwilliams_transform(&dual, c.length()).unwrap(), direct);
        }

        #[test]
        fn invariance_agrees_with_dual(c in arb_code(), seed in any::<u64>()) {
            let p = Permutation::random(c.length(), seed);
            prop_assert_eq!(c.is_invariant(&p), c.dual().is_invariant(&p));
        }

        #[test]
        fn json_round_trip(c in arb_code()) {
            let s = serde_json::to_string(&c).unwrap();
            let back: LinearCode = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, c);
        }
    }
}
