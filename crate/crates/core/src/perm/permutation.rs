use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, .., N-1}` acting on the right: `images[w] = w^p`.
///
/// Products follow the same convention: `p.then(q)` maps `w` to `(w^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Build from a point map `f`; panics if `f` is not a bijection.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::from_images((0..n).map(f).collect()).expect("map is a bijection")
    }

    /// The standard shift `i -> i + 1 mod n`.
    pub fn shift(n: usize) -> Self {
        Self::from_fn(n, |i| (i + 1) % n)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self { images }
    }

    /// The cycle `points[0] -> points[1] -> .. -> points[0]`.
    pub fn cycle(n: usize, points: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &p) in points.iter().enumerate() {
            images[p] = points[(i + 1) % points.len()];
        }
        Self::from_images(images).expect("cycle points are distinct")
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (i, &p) in c.iter().enumerate() {
                if p >= n || touched[p] {
                    return Err(Error::InvalidArgument(format!("bad cycle list {cycles:?}")));
                }
                touched[p] = true;
                images[p] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut rng);
        Self { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().then(self).then(g)
    }

    /// Disjoint cycles of length > 1, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    /// True iff this is a single `N`-cycle, i.e. generates a regular cyclic group.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        let mut x = self.images[0];
        let mut len = 1;
        while x != 0 {
            x = self.images[x];
            len += 1;
        }
        len == n
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i != j)
            .map(|(i, _)| i)
    }

    pub fn one_line(&self) -> String {
        self.images
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self.cycle_notation())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// Parses the one-line form `"p(0) p(1) .. p(N-1)"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }
}
