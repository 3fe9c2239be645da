//! Permutation groups stored as a base and strong generating set.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(n: usize, base: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Permutation::identity(n));
        Self {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    /// Extend the orbit with the current generators; returns true if it grew.
    fn close_orbit(&mut self) -> bool {
        let before = self.orbit.len();
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            let u = self.transversal[p]
                .clone()
                .expect("orbit point has a transversal");
            for g in &self.gens {
                let q = g.image(p);
                if self.transversal[q].is_none() {
                    self.transversal[q] = Some(u.then(g));
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
        self.orbit.len() > before
    }
}

/// A permutation group of degree `N` with a stabilizer chain.
///
/// Built by deterministic Schreier–Sims: each new level's base point is the
/// least point moved by the element that created it.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::LengthMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let mut group = Self::trivial(degree);
        for g in gens {
            group.add_generator(g.clone());
        }
        Ok(group)
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::transposition(n, 0, 1));
        }
        if n >= 3 {
            gens.push(Permutation::shift(n));
        }
        Self::from_generators(n, &gens).expect("degrees match")
    }

    /// Add a generator, keeping the chain complete.
    pub fn add_generator(&mut self, g: Permutation) {
        if g.is_identity() {
            return;
        }
        let is_new = !self.contains(&g);
        self.generators.push(g.clone());
        if is_new {
            self.insert(0, g);
        }
    }

    fn insert(&mut self, level: usize, g: Permutation) {
        if level == self.levels.len() {
            let base = g.moved_points().next().expect("non-identity element");
            self.levels.push(Level::new(self.degree, base));
        }
        self.levels[level].gens.push(g.clone());
        if g.image(self.levels[level].base) == self.levels[level].base {
            self.insert(level + 1, g);
        }
        self.levels[level].close_orbit();
        // Every Schreier generator of this level must lie in the next one.
        let mut i = 0;
        while i < self.levels[level].orbit.len() {
            let p = self.levels[level].orbit[i];
            let mut j = 0;
            while j < self.levels[level].gens.len() {
                let lv = &self.levels[level];
                let s = &lv.gens[j];
                let u = lv.transversal[p].as_ref().unwrap();
                let v = lv.transversal[s.image(p)].as_ref().unwrap();
                let schreier = u.then(s).then(&v.inverse());
                if !schreier.is_identity() {
                    let residue = self.sift_from(level + 1, schreier);
                    if !residue.is_identity() {
                        self.insert(level + 1, residue);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }

    /// Strip `g` through levels `start..`; identity iff `g` is a member.
    fn sift_from(&self, start: usize, mut g: Permutation) -> Permutation {
        for lv in &self.levels[start.min(self.levels.len())..] {
            let p = g.image(lv.base);
            match &lv.transversal[p] {
                Some(u) => g = g.then(&u.inverse()),
                None => return g,
            }
        }
        g
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift_from(0, p.clone()).is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .fold(BigUint::one(), |a, b| a * b)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Orbit of `point` under the whole group, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let q = g.image(out[i]);
                if !seen[q] {
                    seen[q] = true;
                    out.push(q);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Visit every element exactly once, stopping early if `f` returns false.
    /// Returns false if stopped early.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation) -> bool) -> bool {
        fn rec(
            levels: &[Level],
            depth: usize,
            acc: &Permutation,
            f: &mut dyn FnMut(&Permutation) -> bool,
        ) -> bool {
            if depth == levels.len() {
                return f(acc);
            }
            // elements are h * u with h in the deeper stabilizer
            let lv = &levels[levels.len() - 1 - depth];
            for &p in &lv.orbit {
                let u = lv.transversal[p].as_ref().unwrap();
                if !rec(levels, depth + 1, &acc.then(u), f) {
                    return false;
                }
            }
            true
        }
        rec(&self.levels, 0, &Permutation::identity(self.degree), &mut f)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            degree: self.degree,
            order: self.order().to_string(),
            generators: self
                .generators
                .iter()
                .map(|g| g.images().to_vec())
                .collect(),
        }
    }
}

/// `{"degree": N, "order": "decimal", "generators": [[images], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub order: String,
    pub generators: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::from_images(g.clone()))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::from_generators(self.degree, &gens)?;
        if group.order().to_string() != self.order {
            return Err(Error::Parse(format!(
                "declared order {} but generators give {}",
                self.order,
                group.order()
            )));
        }
        Ok(group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(n);
        let mut queue = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn small_orders() {
        let g = PermGroup::from_generators(
            3,
            &[Permutation::transposition(3, 0, 1), Permutation::shift(3)],
        )
        .unwrap();
        assert_eq!(g.order(), BigUint::from(6u32));
        assert_eq!(PermGroup::trivial(4).order(), BigUint::one());
        assert_eq!(PermGroup::symmetric(5).order(), BigUint::from(120u32));
    }

    #[test]
    fn alternating_membership() {
        let n = 5;
        let alt = PermGroup::from_generators(
            n,
            &[
                Permutation::cycle(n, &[0, 1, 2]),
                Permutation::cycle(n, &[0, 1, 2, 3, 4]),
            ],
        )
        .unwrap();
        assert_eq!(alt.order(), BigUint::from(60u32));
        assert!(!alt.contains(&Permutation::transposition(n, 0, 1)));
        assert!(alt.contains(&Permutation::cycle(n, &[1, 3, 4])));
    }

    #[test]
    fn affine_group_mod_17() {
        // x -> x + 1 and x -> 2x generate C8 ⋉ C17
        let shift = Permutation::shift(17);
        let mul = Permutation::from_fn(17, |x| 2 * x % 17);
        let g = PermGroup::from_generators(17, &[shift, mul]).unwrap();
        assert_eq!(g.order(), BigUint::from(136u32));
    }

    #[test]
    fn order_matches_closure_for_random_groups() {
        for seed in 0..30u64 {
            let n = 3 + (seed as usize % 5);
            let gens: Vec<Permutation> = (0..2)
                .map(|i| Permutation::random(n, seed * 7 + i))
                .collect();
            let g = PermGroup::from_generators(n, &gens).unwrap();
            let elems = closure(n, &gens);
            assert_eq!(g.order(), BigUint::from(elems.len()));
            let mut count = 0usize;
            g.for_each_element(|e| {
                assert!(elems.contains(e));
                count += 1;
                true
            });
            assert_eq!(count, elems.len());
            for e in &elems {
                assert!(g.contains(e));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = PermGroup::symmetric(6);
        let j = g.to_json();
        assert_eq!(j.order, "720");
        let back = j.to_group().unwrap();
        assert_eq!(back.order(), g.order());
    }
}
