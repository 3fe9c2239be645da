//! Automorphism groups of binary codes by partition backtracking.
//!
//! The group is computed as the setwise stabilizer of an invariant spanning
//! set `W` of codewords: the union of whole weight classes, taken smallest
//! class first, until `span(W)` is the code. Any coordinate permutation that
//! fixes `W` fixes its span, and every automorphism fixes every weight class,
//! so the stabilizer is exactly `Aut(C)`.
//!
//! The search runs on the bipartite incidence structure (coordinates versus
//! words of `W`). Cells are refined to an equitable partition using
//! incidence counts plus pairwise joint-containment counts per weight class.
//! Coordinates are individualized along a first path; for every level of
//! that path the remaining points of the target cell are tested, orbit by
//! orbit, for an automorphism extending the prefix. The generators found
//! this way form a strong generating set relative to the first-path base.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{PermGroup, Permutation};
use crate::code::{LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Sorted (relation, neighbour cell, count) triples seen from one vertex.
type Signature = Vec<(u32, u32, u32)>;

#[derive(Clone, Debug)]
pub struct AutConfig {
    /// Bound on `2^k` for the codeword walk that builds weight classes.
    pub enumeration_cap: u64,
    /// Bound on `|W|`.
    pub max_invariant_words: usize,
    /// Work on whichever of the code and its dual has smaller dimension.
    pub prefer_smaller_dual: bool,
    pub time_budget: Option<Duration>,
}

impl Default for AutConfig {
    fn default() -> Self {
        Self {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            max_invariant_words: 1 << 16,
            prefer_smaller_dual: true,
            time_budget: None,
        }
    }
}

/// Result of [`automorphism_group`].
#[derive(Clone, Debug)]
pub struct AutReport {
    pub group: PermGroup,
    pub invariant_set: InvariantSet,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvariantSet {
    /// True when `W` was taken from the dual code.
    pub from_dual: bool,
    pub weights: Vec<usize>,
    pub class_sizes: Vec<usize>,
}

pub fn automorphism_group(code: &LinearCode) -> Result<AutReport> {
    automorphism_group_with(code, &AutConfig::default())
}

pub fn automorphism_group_with(code: &LinearCode, cfg: &AutConfig) -> Result<AutReport> {
    let start = Instant::now();
    let n = code.length();
    let dual;
    let (work, from_dual) = if cfg.prefer_smaller_dual && code.dimension() * 2 > n {
        dual = code.dual();
        (&dual, true)
    } else {
        (code, false)
    };

    let (words, classes, invariant_set) = invariant_words(work, cfg, from_dual)?;
    let structure = Incidence::new(n, &words, &classes);
    let deadline = cfg.time_budget.map(|b| start + b);
    let mut search = Search {
        structure: &structure,
        code: work,
        nodes: 0,
        deadline,
    };
    let gens = search.run()?;
    for g in &gens {
        if !code.is_invariant(g) {
            return Err(Error::Internal(format!(
                "search produced a non-automorphism {g}"
            )));
        }
    }
    let group = PermGroup::from_generators(n, &gens)?;
    Ok(AutReport {
        group,
        invariant_set,
        nodes: search.nodes,
        elapsed: start.elapsed(),
    })
}

fn invariant_words(
    code: &LinearCode,
    cfg: &AutConfig,
    from_dual: bool,
) -> Result<(Vec<BitVector>, Vec<u32>, InvariantSet)> {
    let k = code.dimension();
    let dist = code.weight_distribution(cfg.enumeration_cap)?;
    let mut order: Vec<(u64, usize)> = dist
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c > 0)
        .map(|(w, &c)| (c, w))
        .collect();
    order.sort_unstable();

    let mut words = Vec::new();
    let mut classes = Vec::new();
    let mut set = InvariantSet {
        from_dual,
        weights: Vec::new(),
        class_sizes: Vec::new(),
    };
    let mut span = BitMatrix::empty(code.length());
    for (count, w) in order {
        if span.nrows() == k {
            break;
        }
        if words.len() + count as usize > cfg.max_invariant_words {
            return Err(Error::EnumerationInfeasible(format!(
                "no invariant spanning set within {} words",
                cfg.max_invariant_words
            )));
        }
        let class = set.weights.len() as u32;
        code.for_each_codeword(cfg.enumeration_cap, |v| {
            if v.weight() == w {
                words.push(v.clone());
                classes.push(class);
            }
        })?;
        set.weights.push(w);
        set.class_sizes.push(count as usize);
        let mut rows = span.into_rows();
        rows.extend(words.iter().filter(|v| v.weight() == w).cloned());
        span = BitMatrix::new(code.length(), rows)?.rref().0;
    }
    if span.nrows() != k {
        return Err(Error::Internal(
            "weight classes failed to span the code".into(),
        ));
    }
    Ok((words, classes, set))
}

/// Coordinates `0..n` and words `n..n+m` of the invariant set.
struct Incidence {
    n: usize,
    n_classes: usize,
    word_class: Vec<u32>,
    col_words: Vec<Vec<u32>>,
    word_cols: Vec<Vec<u32>>,
    /// `joint[c][x * n + y]`: words of class `c` containing both `x` and `y`.
    joint: Vec<Vec<u32>>,
}

impl Incidence {
    fn new(n: usize, words: &[BitVector], classes: &[u32]) -> Self {
        let n_classes = classes.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut col_words = vec![Vec::new(); n];
        let mut word_cols = Vec::with_capacity(words.len());
        let mut joint = vec![vec![0u32; n * n]; n_classes];
        for (wi, (w, &c)) in words.iter().zip(classes).enumerate() {
            let cols: Vec<u32> = w.ones_iter().map(|x| x as u32).collect();
            for &x in &cols {
                col_words[x as usize].push((n + wi) as u32);
                for &y in &cols {
                    joint[c as usize][x as usize * n + y as usize] += 1;
                }
            }
            word_cols.push(cols);
        }
        Self {
            n,
            n_classes,
            word_class: classes.to_vec(),
            col_words,
            word_cols,
            joint,
        }
    }

    fn vertex_count(&self) -> usize {
        self.n + self.word_cols.len()
    }

    fn signature(&self, v: usize, cell_of: &[u32], out: &mut Signature) {
        out.clear();
        if v < self.n {
            for &w in &self.col_words[v] {
                out.push((0, cell_of[w as usize], 0));
            }
            for c in 0..self.n_classes {
                let row = &self.joint[c][v * self.n..(v + 1) * self.n];
                for (y, &j) in row.iter().enumerate() {
                    if y != v && j > 0 {
                        out.push((1 + c as u32, cell_of[y], j));
                    }
                }
            }
        } else {
            for &x in &self.word_cols[v - self.n] {
                out.push((0, cell_of[x as usize], 0));
            }
        }
        out.sort_unstable();
    }
}

#[derive(Clone, Debug)]
struct Partition {
    cells: Vec<Vec<u32>>,
    cell_of: Vec<u32>,
}

impl Partition {
    fn initial(s: &Incidence) -> Self {
        let mut cells = vec![(0..s.n as u32).collect::<Vec<_>>()];
        let mut by_class = vec![Vec::new(); s.n_classes];
        for (i, &c) in s.word_class.iter().enumerate() {
            by_class[c as usize].push((s.n + i) as u32);
        }
        cells.extend(by_class.into_iter().filter(|c| !c.is_empty()));
        cells.retain(|c| !c.is_empty());
        let mut p = Self {
            cells,
            cell_of: vec![0; s.vertex_count()],
        };
        p.reindex();
        p
    }

    fn reindex(&mut self) {
        for (ci, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                self.cell_of[v as usize] = ci as u32;
            }
        }
    }

    fn individualize(&self, v: u32) -> Self {
        let ci = self.cell_of[v as usize] as usize;
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..ci]);
        cells.push(vec![v]);
        cells.push(self.cells[ci].iter().copied().filter(|&x| x != v).collect());
        cells.extend_from_slice(&self.cells[ci + 1..]);
        let mut p = Self {
            cells,
            cell_of: self.cell_of.clone(),
        };
        p.reindex();
        p
    }

    /// Refine to an equitable partition; returns an isomorphism-invariant
    /// certificate of the result.
    fn refine(&mut self, s: &Incidence) -> u64 {
        let mut sig = Vec::new();
        loop {
            let mut new_cells = Vec::with_capacity(self.cells.len());
            let mut split = false;
            for cell in &self.cells {
                if cell.len() == 1 {
                    new_cells.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Signature, u32)> = cell
                    .iter()
                    .map(|&v| {
                        s.signature(v as usize, &self.cell_of, &mut sig);
                        (sig.clone(), v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        new_cells.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
                if new_cells.last().map(|c| c.len()) != Some(cell.len()) {
                    split = true;
                }
            }
            self.cells = new_cells;
            self.reindex();
            if !split {
                break;
            }
        }
        let mut h = DefaultHasher::new();
        for cell in &self.cells {
            cell.len().hash(&mut h);
            s.signature(cell[0] as usize, &self.cell_of, &mut sig);
            sig.hash(&mut h);
        }
        h.finish()
    }

    /// Index of the first non-singleton cell of coordinates.
    fn target_cell(&self, n: usize) -> Option<usize> {
        self.cells
            .iter()
            .position(|c| c.len() > 1 && (c[0] as usize) < n)
    }
}

struct Search<'a> {
    structure: &'a Incidence,
    code: &'a LinearCode,
    nodes: u64,
    deadline: Option<Instant>,
}

struct FirstPath {
    partitions: Vec<Partition>,
    certificates: Vec<u64>,
    targets: Vec<usize>,
    base: Vec<u32>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(d) = self.deadline {
            if self.nodes.is_multiple_of(64) && Instant::now() > d {
                return Err(Error::Timeout(self.nodes));
            }
        }
        Ok(())
    }

    fn first_path(&mut self) -> Result<FirstPath> {
        let n = self.structure.n;
        let mut p = Partition::initial(self.structure);
        let cert = p.refine(self.structure);
        let mut path = FirstPath {
            partitions: vec![p],
            certificates: vec![cert],
            targets: Vec::new(),
            base: Vec::new(),
        };
        loop {
            self.tick()?;
            let cur = path.partitions.last().unwrap();
            let Some(t) = cur.target_cell(n) else { break };
            let v = *cur.cells[t].iter().min().unwrap();
            let mut next = cur.individualize(v);
            let cert = next.refine(self.structure);
            path.targets.push(t);
            path.base.push(v);
            path.partitions.push(next);
            path.certificates.push(cert);
        }
        Ok(path)
    }

    fn run(&mut self) -> Result<Vec<Permutation>> {
        let n = self.structure.n;
        let path = self.first_path()?;
        let depth = path.base.len();
        let mut gens: Vec<Permutation> = Vec::new();
        for level in (0..depth).rev() {
            let cell = path.partitions[level].cells[path.targets[level]].clone();
            let v = path.base[level] as usize;
            // points already reached (same orbit as v) or ruled out
            let mut settled = orbit_of(n, &gens, v);
            let mut candidates = cell.clone();
            candidates.sort_unstable();
            for &w in &candidates {
                let w = w as usize;
                if settled[w] {
                    continue;
                }
                match self.extend(&path, level, w as u32)? {
                    Some(g) => {
                        gens.push(g);
                        settled = orbit_of(n, &gens, v);
                    }
                    None => {
                        for x in orbit_points(n, &gens, w) {
                            settled[x] = true;
                        }
                    }
                }
            }
        }
        Ok(gens)
    }

    /// Search for an automorphism fixing `base[..level]` and sending
    /// `base[level]` to `w`.
    fn extend(&mut self, path: &FirstPath, level: usize, w: u32) -> Result<Option<Permutation>> {
        self.tick()?;
        let mut q = path.partitions[level].individualize(w);
        if q.refine(self.structure) != path.certificates[level + 1] {
            return Ok(None);
        }
        self.descend(path, level + 1, &q)
    }

    fn descend(
        &mut self,
        path: &FirstPath,
        level: usize,
        q: &Partition,
    ) -> Result<Option<Permutation>> {
        let n = self.structure.n;
        if level == path.base.len() {
            let leaf = &path.partitions[level];
            let mut images = vec![usize::MAX; n];
            for (a, b) in leaf.cells.iter().zip(&q.cells) {
                if (a[0] as usize) < n {
                    images[a[0] as usize] = b[0] as usize;
                }
            }
            let g = match Permutation::from_images(images) {
                Ok(g) => g,
                Err(_) => return Ok(None),
            };
            return Ok(self.code.is_invariant(&g).then_some(g));
        }
        let mut cell = q.cells[path.targets[level]].clone();
        cell.sort_unstable();
        for u in cell {
            self.tick()?;
            let mut next = q.individualize(u);
            if next.refine(self.structure) != path.certificates[level + 1] {
                continue;
            }
            if let Some(g) = self.descend(path, level + 1, &next)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

fn orbit_points(n: usize, gens: &[Permutation], start: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = g.image(out[i]);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

fn orbit_of(n: usize, gens: &[Permutation], start: usize) -> Vec<bool> {
    let mut mask = vec![false; n];
    for x in orbit_points(n, gens, start) {
        mask[x] = true;
    }
    mask
}
