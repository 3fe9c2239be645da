//! Cyclic codes of odd length via the cyclotomic factorization of `X^N - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::perm::Permutation;

/// Default bound on the number of irreducible factors for enumeration.
pub const DEFAULT_MAX_FACTORS: usize = 20;

/// Seed for the search for an element of order `N`.
pub const ALPHA_SEED: u64 = 0x5eed_a1fa;

/// A polynomial over GF(2); bit `i` of the packed words is the coefficient of `X^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = Self {
            words: vec![0; e / 64 + 1],
        };
        p.words[e / 64] |= 1 << (e % 64);
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.trim();
        p
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    /// Coefficient vector of length `len` (coefficient of `X^i` at position `i`).
    pub fn to_bitvector(&self, len: usize) -> BitVector {
        BitVector::from_indices(len, self.exponents().filter(|&e| e < len))
    }

    pub fn from_bitvector(v: &BitVector) -> Self {
        Self::from_exponents(v.ones_iter())
    }

    /// `X^n - 1` (= `X^n + 1` over GF(2)).
    pub fn x_pow_minus_one(n: usize) -> Self {
        Self::from_exponents([0, n])
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn toggle(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.words.len().max(other.words.len());
        let mut words = vec![0u64; len];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    fn shifted(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (s / 64, s % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for e in other.exponents() {
            acc = acc.add(&self.shifted(e));
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            quo.toggle(rd - dd);
            rem = rem.add(&divisor.shifted(rd - dd));
        }
        (quo, rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    /// `X^(2^k) mod modulus`.
    fn x_pow_two_pow(k: usize, modulus: &Self) -> Self {
        let mut acc = Self::x().rem(modulus);
        for _ in 0..k {
            acc = acc.mul_mod(&acc, modulus);
        }
        acc
    }

    /// Rabin's test: `X^(2^m) = X mod f` and `gcd(X^(2^(m/q)) - X, f) = 1`
    /// for every prime `q | m`.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else { return false };
        if m == 0 {
            return false;
        }
        let x = Self::x().rem(self);
        if Self::x_pow_two_pow(m, self) != x {
            return false;
        }
        prime_factors(m as u64).into_iter().all(|q| {
            let h = Self::x_pow_two_pow(m / q as usize, self).add(&x);
            self.gcd(&h).is_one()
        })
    }

    /// Coefficients as a `0`/`1` string, constant term first.
    pub fn coefficient_string(&self) -> String {
        match self.degree() {
            None => "0".into(),
            Some(d) => (0..=d)
                .map(|i| if self.coeff(i) { '1' } else { '0' })
                .collect(),
        }
    }

    /// Compare as binary numbers (leading coefficient most significant).
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Accepts `"1+x+x^3"` (either case of `x`, spaces ignored) or a raw
/// coefficient string such as `"1101"` (constant term first).
impl FromStr for Poly2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.chars().all(|c| c == '0' || c == '1') && (s.len() > 1 || s == "0" || s == "1") {
            return Ok(Self::from_exponents(
                s.chars()
                    .enumerate()
                    .filter(|(_, c)| *c == '1')
                    .map(|(i, _)| i),
            ));
        }
        let mut p = Self::zero();
        for term in s.split('+') {
            let t = term.to_ascii_lowercase();
            let e = if t == "1" {
                0
            } else if t == "x" {
                1
            } else if let Some(rest) = t.strip_prefix("x^") {
                rest.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad exponent in {term:?}: {e}")))?
            } else {
                return Err(Error::Parse(format!("bad polynomial term {term:?}")));
            };
            p.toggle(e);
        }
        Ok(p)
    }
}

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of 2 modulo odd `n` (1 for `n = 1`).
pub fn order_of_two(n: usize) -> usize {
    assert!(n % 2 == 1);
    if n == 1 {
        return 1;
    }
    let mut x = 2 % n;
    let mut k = 1;
    while x != 1 {
        x = x * 2 % n;
        k += 1;
    }
    k
}

/// Lexicographically least irreducible polynomial of degree `m` (compared
/// as binary numbers, so `X` for `m = 1` and `X^3+X+1` for `m = 3`).
pub fn find_irreducible(m: usize) -> Poly2 {
    assert!(m >= 1, "degree must be positive");
    let lead = Poly2::monomial(m);
    assert!(m < 64 + 1, "degrees above 64 are not supported");
    for low in 0u64.. {
        let cand = lead.add(&Poly2::from_u64(low));
        if cand.is_irreducible() {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial exists in every degree")
}

/// The field GF(2^m) for `1 <= m <= 63`, elements packed in `u64`.
#[derive(Clone, Debug)]
pub struct Gf2m {
    m: u32,
    modulus: u128,
}

/// An element of [`Gf2m`]: a polynomial of degree `< m` reduced modulo the
/// field's defining polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GF2mElement {
    pub value: u64,
}

impl Gf2m {
    pub fn new(m: usize) -> Result<Self> {
        if !(1..=63).contains(&m) {
            return Err(Error::InvalidArgument(format!(
                "extension degree {m} unsupported"
            )));
        }
        Self::with_modulus(&find_irreducible(m))
    }

    pub fn with_modulus(f: &Poly2) -> Result<Self> {
        let m = f.degree().unwrap_or(0);
        if !(1..=63).contains(&m) || !f.is_irreducible() {
            return Err(Error::InvalidArgument(format!(
                "{f} does not define a field"
            )));
        }
        let mut modulus = 0u128;
        for e in f.exponents() {
            modulus |= 1 << e;
        }
        Ok(Self {
            m: m as u32,
            modulus,
        })
    }

    pub fn degree(&self) -> usize {
        self.m as usize
    }

    pub fn size(&self) -> u64 {
        1u64 << self.m
    }

    pub fn zero(&self) -> GF2mElement {
        GF2mElement { value: 0 }
    }

    pub fn one(&self) -> GF2mElement {
        GF2mElement { value: 1 }
    }

    pub fn element(&self, value: u64) -> GF2mElement {
        assert!(value < self.size());
        GF2mElement { value }
    }

    pub fn add(&self, a: GF2mElement, b: GF2mElement) -> GF2mElement {
        GF2mElement {
            value: a.value ^ b.value,
        }
    }

    pub fn mul(&self, a: GF2mElement, b: GF2mElement) -> GF2mElement {
        let mut prod: u128 = 0;
        let mut x = a.value as u128;
        let mut y = b.value;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let m = self.m as usize;
        for bit in (m..2 * m).rev() {
            if (prod >> bit) & 1 == 1 {
                prod ^= self.modulus << (bit - m);
            }
        }
        GF2mElement { value: prod as u64 }
    }

    pub fn pow(&self, a: GF2mElement, mut e: u64) -> GF2mElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: GF2mElement) -> u64 {
        assert!(a.value != 0);
        let group = self.size() - 1;
        let mut ord = group;
        for q in prime_factors(group) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == self.one() {
                ord /= q;
            }
        }
        ord
    }

    /// An element of multiplicative order exactly `n` (requires `n | 2^m - 1`),
    /// found as `beta^((2^m-1)/n)` for seeded random `beta`.
    pub fn element_of_order(&self, n: u64, seed: u64) -> Result<GF2mElement> {
        let group = self.size() - 1;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::InvalidArgument(format!(
                "{n} does not divide {group}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10_000 {
            let beta = self.element(rng.gen_range(1..self.size()));
            let alpha = self.pow(beta, group / n);
            if self.order(alpha) == n {
                return Ok(alpha);
            }
        }
        Err(Error::Internal(format!("no element of order {n} found")))
    }
}

/// The 2-cyclotomic cosets `{i, 2i, 4i, ..}` modulo odd `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetSystem {
    pub modulus: usize,
    /// Sorted by least element; each coset listed as `i, 2i, 4i, ..`.
    pub cosets: Vec<Vec<usize>>,
}

pub fn cyclotomic_cosets(n: usize) -> Result<CosetSystem> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if n.is_multiple_of(2) {
        return Err(Error::NonSquarefree(n));
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut c = vec![i];
        seen[i] = true;
        let mut j = 2 * i % n;
        while j != i {
            seen[j] = true;
            c.push(j);
            j = 2 * j % n;
        }
        cosets.push(c);
    }
    Ok(CosetSystem { modulus: n, cosets })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub poly: Poly2,
    /// Exponents `i` such that `alpha^i` are the roots of `poly`.
    pub coset: Vec<usize>,
}

/// `X^N - 1` as a product of minimal polynomials, one per cyclotomic coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub modulus: usize,
    /// Sorted by degree, then by coefficient value.
    pub factors: Vec<Factor>,
    pub field_degree: usize,
}

impl Factorization {
    pub fn product(&self) -> Poly2 {
        self.factors
            .iter()
            .fold(Poly2::one(), |acc, f| acc.mul(&f.poly))
    }
}

pub fn factor_cyclotomic(n: usize) -> Result<Factorization> {
    factor_cyclotomic_seeded(n, ALPHA_SEED)
}

pub fn factor_cyclotomic_seeded(n: usize, seed: u64) -> Result<Factorization> {
    let cosets = cyclotomic_cosets(n)?;
    let m = order_of_two(n);
    let field = Gf2m::new(m)?;
    let alpha = field.element_of_order(n as u64, seed)?;
    let mut factors = Vec::with_capacity(cosets.cosets.len());
    for coset in &cosets.cosets {
        // prod over the coset of (X - alpha^i), coefficients in GF(2^m)
        let mut coeffs = vec![field.one()];
        for &i in coset {
            let root = field.pow(alpha, i as u64);
            let mut next = vec![field.zero(); coeffs.len() + 1];
            for (d, &c) in coeffs.iter().enumerate() {
                next[d + 1] = field.add(next[d + 1], c);
                next[d] = field.add(next[d], field.mul(c, root));
            }
            coeffs = next;
        }
        let mut poly = Poly2::zero();
        for (d, c) in coeffs.iter().enumerate() {
            match c.value {
                0 => {}
                1 => poly.toggle(d),
                _ => {
                    return Err(Error::Internal(format!(
                        "minimal polynomial of coset {coset:?} has a coefficient outside GF(2)"
                    )))
                }
            }
        }
        factors.push(Factor {
            poly,
            coset: coset.clone(),
        });
    }
    factors.sort_by(|a, b| {
        a.poly
            .degree()
            .cmp(&b.poly.degree())
            .then_with(|| a.poly.cmp_value(&b.poly))
    });
    let fac = Factorization {
        modulus: n,
        factors,
        field_degree: m,
    };
    if fac.product() != Poly2::x_pow_minus_one(n) {
        return Err(Error::Internal(format!(
            "factors of X^{n}-1 do not multiply back"
        )));
    }
    Ok(fac)
}

/// The cyclic code generated by `g`: span of `g, Xg, .., X^(N-deg g-1) g`.
pub fn cyclic_code_from_gen(n: usize, g: &Poly2) -> Result<LinearCode> {
    let not_divisor = || Error::NotADivisor {
        poly: g.to_string(),
        n,
    };
    let Some(deg) = g.degree() else {
        return Err(not_divisor());
    };
    if n == 0 || deg > n || !Poly2::x_pow_minus_one(n).rem(g).is_zero() {
        return Err(not_divisor());
    }
    let rows = (0..n - deg).map(|i| g.shifted(i).to_bitvector(n)).collect();
    LinearCode::span(n, rows)
}

/// A cyclic code together with the factor subset that generated it.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    pub length: usize,
    /// Bit `t` set means factor `t` divides the generator.
    pub subset: u64,
    pub generator: Poly2,
    pub code: LinearCode,
}

/// All `2^F` cyclic codes of odd length `N`, in binary subset order over the
/// sorted factor list.
pub fn enumerate_cyclic_codes(n: usize) -> Result<Vec<CyclicCode>> {
    enumerate_cyclic_codes_capped(n, DEFAULT_MAX_FACTORS)
}

pub fn enumerate_cyclic_codes_capped(n: usize, max_factors: usize) -> Result<Vec<CyclicCode>> {
    let fac = factor_cyclotomic(n)?;
    let f = fac.factors.len();
    if f > max_factors {
        return Err(Error::EnumerationInfeasible(format!(
            "{f} irreducible factors exceed the cap of {max_factors}"
        )));
    }
    (0..1u64 << f)
        .map(|subset| {
            let generator = (0..f)
                .filter(|t| subset >> t & 1 == 1)
                .fold(Poly2::one(), |acc, t| acc.mul(&fac.factors[t].poly));
            let code = cyclic_code_from_gen(n, &generator)?;
            Ok(CyclicCode {
                length: n,
                subset,
                generator,
                code,
            })
        })
        .collect()
}

/// Invariance under the standard shift `i -> i + 1 mod N`.
pub fn is_shift_invariant(code: &LinearCode) -> bool {
    let n = code.length();
    n > 0 && code.is_invariant(&Permutation::shift(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn poly_arithmetic() {
        assert_eq!(p("x^2+1").gcd(&p("x+1")), p("x+1"));
        assert_eq!(p("x+1").mul(&p("x+1")), p("x^2+1"));
        let prod = p("x^3+x+1").mul(&p("x^3+x^2+1")).mul(&p("x+1"));
        assert_eq!(prod, Poly2::x_pow_minus_one(7));
        let (q, r) = p("x^7+1").div_rem(&p("x^3+x+1"));
        assert!(r.is_zero());
        assert_eq!(q.mul(&p("x^3+x+1")), p("x^7+1"));
        // wide polynomials cross word boundaries
        let big = Poly2::x_pow_minus_one(130);
        assert_eq!(big.rem(&p("x+1")), Poly2::zero());
        assert_eq!(big.degree(), Some(130));
    }

    #[test]
    fn poly_text_forms() {
        assert_eq!(p("1+x+x^3"), p("1101"));
        assert_eq!(p("1 + X + X^3").to_string(), "1+x+x^3");
        assert_eq!(p("1101").coefficient_string(), "1101");
        assert!("1+y".parse::<Poly2>().is_err());
        assert!("".parse::<Poly2>().is_err());
    }

    #[test]
    fn irreducible_search() {
        assert_eq!(find_irreducible(1), p("x"));
        assert_eq!(find_irreducible(2), p("1+x+x^2"));
        assert_eq!(find_irreducible(3), p("1+x+x^3"));
        assert_eq!(find_irreducible(8).degree(), Some(8));
        assert_eq!(order_of_two(17), 8);
    }

    #[test]
    fn irreducible_search_matches_exhaustion() {
        // brute-force irreducibility: no factor of degree 1..=m/2
        fn brute(f: u64, m: u32) -> bool {
            (2u64..(1 << (m / 2 + 1))).all(|g| {
                let gd = 63 - g.leading_zeros();
                gd == 0 || gd > m / 2 || !Poly2::from_u64(f).rem(&Poly2::from_u64(g)).is_zero()
            })
        }
        for m in 1..=8u32 {
            let expected = ((1u64 << m)..(1 << (m + 1)))
                .find(|&f| brute(f, m))
                .unwrap();
            assert_eq!(
                find_irreducible(m as usize),
                Poly2::from_u64(expected),
                "m = {m}"
            );
        }
    }

    #[test]
    fn field_arithmetic() {
        let f = Gf2m::new(4).unwrap();
        let mut count = 0;
        for v in 1..16 {
            let a = f.element(v);
            assert_eq!(f.pow(a, 15), f.one());
            if f.order(a) == 15 {
                count += 1;
            }
        }
        assert_eq!(count, 8);
        let alpha = f.element_of_order(5, 1).unwrap();
        assert_eq!(f.order(alpha), 5);
        assert!(Gf2m::with_modulus(&p("x^2+1")).is_err());
    }

    #[test]
    fn coset_examples() {
        let c7 = cyclotomic_cosets(7).unwrap();
        assert_eq!(c7.cosets, vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
        let sizes: Vec<usize> = cyclotomic_cosets(15)
            .unwrap()
            .cosets
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![1, 4, 4, 2, 4]);
        let c17 = cyclotomic_cosets(17).unwrap();
        assert_eq!(c17.cosets.len(), 3);
        assert!(c17.cosets[1..].iter().all(|c| c.len() == 8));
        assert_eq!(cyclotomic_cosets(8), Err(Error::NonSquarefree(8)));
        assert!(cyclotomic_cosets(0).is_err());
    }

    #[test]
    fn factorizations() {
        let f7 = factor_cyclotomic(7).unwrap();
        let polys: Vec<Poly2> = f7.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![p("1+x"), p("1+x+x^3"), p("1+x^2+x^3")]);
        assert_eq!(factor_cyclotomic(1).unwrap().factors[0].poly, p("1+x"));
        let f23 = factor_cyclotomic(23).unwrap();
        let degs: Vec<usize> = f23
            .factors
            .iter()
            .map(|f| f.poly.degree().unwrap())
            .collect();
        assert_eq!(degs, vec![1, 11, 11]);
        assert!(matches!(
            factor_cyclotomic(10),
            Err(Error::NonSquarefree(10))
        ));
    }

    #[test]
    fn factorization_invariants_for_small_odd_lengths() {
        for n in (1..=63).step_by(2) {
            let fac = factor_cyclotomic(n).unwrap();
            assert_eq!(fac.product(), Poly2::x_pow_minus_one(n));
            for f in &fac.factors {
                assert_eq!(f.poly.degree(), Some(f.coset.len()));
                assert!(f.poly.is_irreducible());
            }
            for w in fac.factors.windows(2) {
                assert_ne!(w[0].poly, w[1].poly);
            }
            // a different seed picks another alpha but the same factor set
            let other = factor_cyclotomic_seeded(n, 99).unwrap();
            let mut a: Vec<String> = fac.factors.iter().map(|f| f.poly.to_string()).collect();
            let mut b: Vec<String> = other.factors.iter().map(|f| f.poly.to_string()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn code_from_generator() {
        assert_eq!(
            cyclic_code_from_gen(7, &Poly2::one()).unwrap(),
            families::elementary(3, 7).unwrap()
        );
        let all_ones_gen = Poly2::x_pow_minus_one(7).div_rem(&p("1+x")).0;
        assert_eq!(
            cyclic_code_from_gen(7, &all_ones_gen).unwrap(),
            families::elementary(1, 7).unwrap()
        );
        assert_eq!(
            cyclic_code_from_gen(7, &Poly2::x_pow_minus_one(7))
                .unwrap()
                .dimension(),
            0
        );
        assert!(matches!(
            cyclic_code_from_gen(7, &p("1+x+x^2")),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_cyclic_codes(7).unwrap().len(), 8);
        assert_eq!(enumerate_cyclic_codes(15).unwrap().len(), 32);
        let c17 = enumerate_cyclic_codes(17).unwrap();
        let mut dims: Vec<usize> = c17.iter().map(|c| c.code.dimension()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![0, 1, 8, 8, 9, 9, 16, 17]);
        assert!(matches!(
            enumerate_cyclic_codes_capped(15, 4),
            Err(Error::EnumerationInfeasible(_))
        ));
    }

    #[test]
    fn enumerated_codes_are_distinct_and_cyclic() {
        for n in (1..=31).step_by(2) {
            let codes = enumerate_cyclic_codes(n).unwrap();
            for (i, c) in codes.iter().enumerate() {
                assert!(is_shift_invariant(&c.code));
                assert!(is_shift_invariant(&c.code.dual()));
                assert_eq!(c.code.dimension(), n - c.generator.degree().unwrap());
                for d in &codes[..i] {
                    assert_ne!(d.code, c.code);
                }
            }
        }
    }

    #[test]
    fn single_factor_primes_give_elementary_codes() {
        for prime in [3, 5, 11, 13, 19, 29] {
            let codes = enumerate_cyclic_codes(prime).unwrap();
            assert_eq!(codes.len(), 4);
            for c in codes {
                assert!(families::elementary_kind(&c.code).is_some());
            }
        }
    }

    #[test]
    fn grid_code_in_grid_order_is_not_shift_invariant() {
        assert!(!is_shift_invariant(&families::c0(3, 4).unwrap()));
    }
}
