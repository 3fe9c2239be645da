//! Explicit code constructions.
//!
//! Grid codes live on `a x b` coordinates flattened as `(i, j) -> i*b + j`.
//! Wreath codes live on `n_r x .. x n_1` coordinates flattened mixed-radix,
//! with the innermost factor `n_1` varying fastest.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::cyclic;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// An `a x b` grid with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridIndex {
    a: usize,
    b: usize,
    swapped: bool,
}

impl GridIndex {
    /// Normalizes to `a <= b`, recording whether the arguments were swapped.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidArgument(format!("grid {a}x{b} is empty")));
        }
        Ok(if a <= b {
            Self {
                a,
                b,
                swapped: false,
            }
        } else {
            Self {
                a: b,
                b: a,
                swapped: true,
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.a
    }

    pub fn cols(&self) -> usize {
        self.b
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn len(&self) -> usize {
        self.a * self.b
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn flat(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.a && j < self.b);
        i * self.b + j
    }

    pub fn unflat(&self, x: usize) -> (usize, usize) {
        (x / self.b, x % self.b)
    }
}

/// Level degrees `(n_1, .., n_r)`, innermost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathShape {
    degrees: Vec<usize>,
}

impl WreathShape {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidArgument("empty wreath shape".into()));
        }
        if let Some(d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidArgument(format!("degree {d} is below 2")));
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn levels(&self) -> usize {
        self.degrees.len()
    }

    /// `|Omega_i| = n_1 .. n_i`; `block_size(0) = 1`.
    pub fn block_size(&self, level: usize) -> usize {
        self.degrees[..level].iter().product()
    }

    pub fn length(&self) -> usize {
        self.block_size(self.degrees.len())
    }

    /// True when some degree is even or below 3, outside the range where the
    /// automorphism group is known to be the iterated wreath product.
    pub fn beyond_theorem(&self) -> bool {
        self.degrees.iter().any(|&d| d < 3 || d % 2 == 0)
    }

    /// Dimension by the alternating-sum formula.
    pub fn expected_dimension(&self) -> usize {
        let i = self.degrees.len();
        let terms = if i % 2 == 1 { i + 1 } else { i };
        let mut sum: i64 = 0;
        for j in 1..=terms {
            let prod: i64 = self.degrees[(j - 1).min(i)..]
                .iter()
                .map(|&d| d as i64)
                .product();
            let prod = if j > i { 1 } else { prod };
            sum += if j % 2 == 1 { prod } else { -prod };
        }
        sum as usize
    }

    /// Product of the even-position degrees `n_2 n_4 ..`.
    pub fn expected_codistance(&self) -> usize {
        self.degrees.iter().skip(1).step_by(2).product()
    }
}

impl fmt::Display for WreathShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// `E_0 = {0}`, `E_1 = <1..1>`, `E_2` = even weight, `E_3` = everything.
pub fn elementary(kind: u8, n: usize) -> Result<LinearCode> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "elementary codes need n >= 1".into(),
        ));
    }
    Ok(match kind {
        0 => LinearCode::zero(n),
        1 => LinearCode::span(n, vec![BitVector::ones(n)])?,
        2 => LinearCode::span(
            n,
            (1..n)
                .map(|i| BitVector::from_indices(n, [i - 1, i]))
                .collect(),
        )?,
        3 => LinearCode::full(n),
        k => return Err(Error::InvalidArgument(format!("no elementary code E_{k}"))),
    })
}

/// Which of `E_0..E_3` the code equals, if any.
pub fn elementary_kind(code: &LinearCode) -> Option<u8> {
    let n = code.length();
    (0..4u8).find(|&k| elementary(k, n).is_ok_and(|e| &e == code))
}

/// Ones exactly on row `i`.
pub fn row_matrix(g: &GridIndex, i: usize) -> BitVector {
    BitVector::from_indices(g.len(), (0..g.cols()).map(|j| g.flat(i, j)))
}

/// Ones exactly on column `j`.
pub fn column_matrix(g: &GridIndex, j: usize) -> BitVector {
    BitVector::from_indices(g.len(), (0..g.rows()).map(|i| g.flat(i, j)))
}

/// Span of all row and column matrices of the normalized `a x b` grid.
pub fn c0(a: usize, b: usize) -> Result<LinearCode> {
    let g = GridIndex::new(a, b)?;
    let mut gens: Vec<BitVector> = (0..g.rows()).map(|i| row_matrix(&g, i)).collect();
    gens.extend((0..g.cols()).map(|j| column_matrix(&g, j)));
    LinearCode::span(g.len(), gens)
}

/// Span of `r_i + c_j` over all grid positions.
pub fn c1(a: usize, b: usize) -> Result<LinearCode> {
    let g = GridIndex::new(a, b)?;
    let mut gens = Vec::with_capacity(g.len());
    for i in 0..g.rows() {
        let r = row_matrix(&g, i);
        for j in 0..g.cols() {
            gens.push(r.xor(&column_matrix(&g, j)));
        }
    }
    LinearCode::span(g.len(), gens)
}

/// Ones on blocks `k` and `l` of level `level` (1-based level, 0-based blocks).
pub fn a_generator(shape: &WreathShape, level: usize, k: usize, l: usize) -> Result<BitVector> {
    if level == 0 || level > shape.levels() {
        return Err(Error::InvalidArgument(format!(
            "level {level} out of range"
        )));
    }
    let n_i = shape.degrees()[level - 1];
    if k == l || k >= n_i || l >= n_i {
        return Err(Error::InvalidArgument(format!(
            "blocks ({k},{l}) must be distinct and below {n_i}"
        )));
    }
    let block = shape.block_size(level - 1);
    let len = block * n_i;
    Ok(BitVector::from_indices(
        len,
        (0..block).flat_map(|w| [k * block + w, l * block + w]),
    ))
}

/// The recursive wreath code `K(n_1, .., n_r)`.
///
/// Each level takes `n_i` shifted copies of the previous code; odd levels
/// also adjoin the span of the block-pair vectors.
pub fn k_code(shape: &WreathShape) -> Result<LinearCode> {
    let mut basis: Vec<BitVector> = Vec::new();
    let mut len = 1;
    for (idx, &n_i) in shape.degrees().iter().enumerate() {
        let level = idx + 1;
        let new_len = len * n_i;
        let mut next = Vec::with_capacity(basis.len() * n_i + n_i);
        for k in 0..n_i {
            for v in &basis {
                next.push(v.embed(new_len, k * len));
            }
        }
        if level % 2 == 1 {
            for k in 0..n_i - 1 {
                next.push(a_generator(shape, level, k, k + 1)?);
            }
        }
        basis = next;
        len = new_len;
    }
    LinearCode::span(len, basis)
}

/// The cyclic Hamming code of length `2^r - 1` (`r` in 3..=4 are the
/// instances exercised here, but any `r >= 2` works).
pub fn hamming(r: u32) -> Result<LinearCode> {
    if !(2..=10).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "hamming order {r} out of range"
        )));
    }
    let n = (1usize << r) - 1;
    let fac = cyclic::factor_cyclotomic(n)?;
    // a primitive factor: its roots have multiplicative order n
    let g = fac
        .factors
        .iter()
        .find(|f| f.poly.degree() == Some(r as usize) && num_integer::gcd(f.coset[0], n) == 1)
        .ok_or_else(|| Error::Internal(format!("no primitive factor of X^{n}-1")))?;
    cyclic::cyclic_code_from_gen(n, &g.poly)
}

/// The binary Golay code of length 23.
pub fn golay23() -> Result<LinearCode> {
    let fac = cyclic::factor_cyclotomic(23)?;
    let g = fac
        .factors
        .iter()
        .find(|f| f.poly.degree() == Some(11))
        .ok_or_else(|| Error::Internal("X^23-1 has no degree-11 factor".into()))?;
    cyclic::cyclic_code_from_gen(23, &g.poly)
}

/// A named code family with parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CodeFamily {
    Elementary { kind: u8, n: usize },
    C0 { a: usize, b: usize },
    C1 { a: usize, b: usize },
    K { degrees: Vec<usize> },
    Hamming { r: u32 },
    Golay,
    Cyclic { n: usize, generator: String },
}

impl CodeFamily {
    pub fn build(&self) -> Result<LinearCode> {
        match self {
            CodeFamily::Elementary { kind, n } => elementary(*kind, *n),
            CodeFamily::C0 { a, b } => c0(*a, *b),
            CodeFamily::C1 { a, b } => c1(*a, *b),
            CodeFamily::K { degrees } => k_code(&WreathShape::new(degrees.clone())?),
            CodeFamily::Hamming { r } => hamming(*r),
            CodeFamily::Golay => golay23(),
            CodeFamily::Cyclic { n, generator } => {
                cyclic::cyclic_code_from_gen(*n, &generator.parse()?)
            }
        }
    }

    /// Normalize grid parameters so `a <= b`.
    pub fn normalized(&self) -> Self {
        match self {
            CodeFamily::C0 { a, b } if a > b => CodeFamily::C0 { a: *b, b: *a },
            CodeFamily::C1 { a, b } if a > b => CodeFamily::C1 { a: *b, b: *a },
            other => other.clone(),
        }
    }
}

/// Parses the whitespace-separated form produced by `Display`, e.g.
/// `"c0 3 4"`, `"k 3,5"`, `"elementary 2 5"`, `"cyclic 7 1+x+x^3"`.
impl FromStr for CodeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        Self::from_args(&tokens)
    }
}

impl CodeFamily {
    pub fn from_args<S: AsRef<str>>(args: &[S]) -> Result<Self> {
        let args: Vec<&str> = args.iter().map(AsRef::as_ref).collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| Error::Parse(format!("expected a number, got {t:?}: {e}")))
        };
        let arity = |n: usize| {
            if args.len() == n + 1 {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "{} takes {n} argument(s), got {}",
                    args[0],
                    args.len() - 1
                )))
            }
        };
        let Some(&name) = args.first() else {
            return Err(Error::Parse("missing family name".into()));
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "elementary" => {
                arity(2)?;
                let kind = num(args[1])?;
                if kind > 3 {
                    return Err(Error::InvalidArgument(format!(
                        "no elementary code E_{kind}"
                    )));
                }
                CodeFamily::Elementary {
                    kind: kind as u8,
                    n: num(args[2])?,
                }
            }
            "c0" => {
                arity(2)?;
                CodeFamily::C0 {
                    a: num(args[1])?,
                    b: num(args[2])?,
                }
            }
            "c1" => {
                arity(2)?;
                CodeFamily::C1 {
                    a: num(args[1])?,
                    b: num(args[2])?,
                }
            }
            "k" => {
                arity(1)?;
                let degrees = args[1]
                    .split(',')
                    .filter(|t| !t.is_empty())
                    .map(num)
                    .collect::<Result<Vec<_>>>()?;
                CodeFamily::K { degrees }
            }
            "hamming" => {
                arity(1)?;
                CodeFamily::Hamming {
                    r: num(args[1])? as u32,
                }
            }
            "golay" => {
                arity(0)?;
                CodeFamily::Golay
            }
            "cyclic" => {
                if args.len() < 3 {
                    return Err(Error::Parse("cyclic takes a length and a generator".into()));
                }
                let generator: String = args[2..].concat();
                let poly: cyclic::Poly2 = generator.parse()?;
                CodeFamily::Cyclic {
                    n: num(args[1])?,
                    generator: poly.to_string(),
                }
            }
            other => return Err(Error::Parse(format!("unknown code family {other:?}"))),
        })
    }

    /// The wreath shape for `K` families.
    pub fn wreath_shape(&self) -> Option<WreathShape> {
        match self {
            CodeFamily::K { degrees } => WreathShape::new(degrees.clone()).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeFamily::Elementary { kind, n } => write!(f, "elementary {kind} {n}"),
            CodeFamily::C0 { a, b } => write!(f, "c0 {a} {b}"),
            CodeFamily::C1 { a, b } => write!(f, "c1 {a} {b}"),
            CodeFamily::K { degrees } => write!(
                f,
                "k {}",
                degrees
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            CodeFamily::Hamming { r } => write!(f, "hamming {r}"),
            CodeFamily::Golay => write!(f, "golay"),
            CodeFamily::Cyclic { n, generator } => write!(f, "cyclic {n} {generator}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::common_weight;
    use crate::perm::{self, Permutation};

    fn params(c: &LinearCode) -> (usize, usize, usize) {
        (c.length(), c.dimension(), c.min_distance().unwrap())
    }

    #[test]
    fn grid_normalization() {
        let g = GridIndex::new(5, 2).unwrap();
        assert_eq!((g.rows(), g.cols(), g.swapped()), (2, 5, true));
        assert!(GridIndex::new(0, 3).is_err());
        assert_eq!(c0(4, 3).unwrap(), c0(3, 4).unwrap());
    }

    #[test]
    fn rows_and_columns() {
        let g = GridIndex::new(3, 4).unwrap();
        let ones = BitVector::ones(12);
        let mut rsum = BitVector::zeros(12);
        let mut csum = BitVector::zeros(12);
        for i in 0..3 {
            assert_eq!(row_matrix(&g, i).weight(), 4);
            rsum.xor_assign(&row_matrix(&g, i));
            for j in 0..4 {
                assert_eq!(
                    common_weight(&row_matrix(&g, i), &column_matrix(&g, j)).unwrap(),
                    1
                );
            }
        }
        for j in 0..4 {
            assert_eq!(column_matrix(&g, j).weight(), 3);
            csum.xor_assign(&column_matrix(&g, j));
        }
        assert_eq!(rsum, ones);
        assert_eq!(csum, ones);
        // support of c_2: positions (0,2), (1,2), (2,2)
        assert_eq!(crate::code::support(&column_matrix(&g, 2)), vec![2, 6, 10]);
    }

    #[test]
    fn c0_examples() {
        assert_eq!(params(&c0(3, 4).unwrap()), (12, 6, 3));
        assert_eq!(c0(1, 5).unwrap(), elementary(3, 5).unwrap());
        assert_eq!(c0(2, 2).unwrap(), elementary(2, 4).unwrap());
        // the 7 row/column generators of C0(3,4) have rank 6
        let g = GridIndex::new(3, 4).unwrap();
        let mut rows: Vec<BitVector> = (0..3).map(|i| row_matrix(&g, i)).collect();
        rows.extend((0..4).map(|j| column_matrix(&g, j)));
        assert_eq!(crate::gf2::BitMatrix::new(12, rows).unwrap().rank(), 6);
    }

    #[test]
    fn c1_examples() {
        assert_eq!(c1(2, 3).unwrap(), c0(2, 3).unwrap());
        let listed: Vec<BitVector> = ["0000", "0110", "1001", "1111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(c1(2, 2).unwrap(), LinearCode::span(4, listed).unwrap());
        assert_eq!(c1(2, 2).unwrap().dimension(), 2);
        // C1(3,3) = even-weight subcode of C0(3,3)
        let c0_33 = c0(3, 3).unwrap();
        let mut even = Vec::new();
        c0_33
            .for_each_codeword(1 << 10, |v| {
                if v.weight() % 2 == 0 {
                    even.push(v.clone())
                }
            })
            .unwrap();
        assert_eq!(c1(3, 3).unwrap(), LinearCode::span(9, even).unwrap());
        assert_eq!(c1(1, 1).unwrap().dimension(), 0);
        assert_eq!(params(&c1(3, 5).unwrap()), (15, 6, 6));
    }

    #[test]
    fn elementary_edge_cases() {
        assert!(elementary(2, 0).is_err());
        assert!(elementary(4, 3).is_err());
        assert_eq!(elementary(1, 2).unwrap(), elementary(2, 2).unwrap());
        assert_eq!(elementary(2, 7).unwrap().dimension(), 6);
        assert_eq!(
            elementary(2, 3).unwrap(),
            k_code(&WreathShape::new(vec![3]).unwrap()).unwrap()
        );
        assert_eq!(elementary_kind(&elementary(1, 5).unwrap()), Some(1));
        assert_eq!(elementary_kind(&c0(3, 4).unwrap()), None);
    }

    #[test]
    fn k_code_parameters() {
        let k = |d: Vec<usize>| k_code(&WreathShape::new(d).unwrap()).unwrap();
        assert_eq!(params(&k(vec![3])), (3, 2, 2));
        assert_eq!(params(&k(vec![3, 3])), (9, 6, 2));
        let k333 = k(vec![3, 3, 3]);
        assert_eq!(params(&k333), (27, 20, 2));
        assert_eq!(k333.min_codistance().unwrap(), 3);
        assert!(WreathShape::new(vec![]).is_err());
        assert!(WreathShape::new(vec![3, 1]).is_err());
        assert!(WreathShape::new(vec![3, 4]).unwrap().beyond_theorem());
        assert!(!WreathShape::new(vec![3, 5, 7]).unwrap().beyond_theorem());
    }

    #[test]
    fn dimension_formula_and_directness() {
        // all shapes with product <= 27; the sum is direct for odd degrees
        let mut shapes = Vec::new();
        for a in 2..=27usize {
            shapes.push(vec![a]);
            for b in 2..=27 / a {
                shapes.push(vec![a, b]);
                for c in 2..=27 / (a * b) {
                    shapes.push(vec![a, b, c]);
                    for d in 2..=27 / (a * b * c) {
                        shapes.push(vec![a, b, c, d]);
                    }
                }
            }
        }
        for d in shapes {
            let shape = WreathShape::new(d.clone()).unwrap();
            let code = k_code(&shape).unwrap();
            // summand dimensions: n_i copies plus n_i - 1 at odd levels
            let mut dim = 0usize;
            for (idx, &n) in d.iter().enumerate() {
                dim = n * dim + if idx % 2 == 0 { n - 1 } else { 0 };
            }
            if d.iter().all(|n| n % 2 == 1) {
                assert_eq!(code.dimension(), dim, "shape {d:?}");
                assert_eq!(code.dimension(), shape.expected_dimension(), "shape {d:?}");
            } else {
                assert!(code.dimension() <= dim, "shape {d:?}");
            }
        }
    }

    #[test]
    fn odd_shapes_are_even_weight() {
        for d in [
            vec![3],
            vec![5],
            vec![3, 3],
            vec![3, 5],
            vec![5, 3],
            vec![3, 3, 3],
        ] {
            let shape = WreathShape::new(d).unwrap();
            let code = k_code(&shape).unwrap();
            let spectrum = code.weight_spectrum().unwrap();
            assert!(spectrum.weights.iter().all(|w| w % 2 == 0));
            assert_eq!(code.min_codistance().unwrap(), shape.expected_codistance());
        }
    }

    #[test]
    fn a_generators() {
        let s = WreathShape::new(vec![3, 3, 3]).unwrap();
        let a = a_generator(&s, 1, 0, 1).unwrap();
        assert_eq!(a.to_string(), "110");
        for level in 1..=3 {
            let g = a_generator(&s, level, 0, 2).unwrap();
            assert_eq!(g.weight(), 2 * s.block_size(level - 1));
        }
        let sum = a_generator(&s, 3, 0, 1)
            .unwrap()
            .xor(&a_generator(&s, 3, 1, 2).unwrap());
        assert_eq!(sum, a_generator(&s, 3, 0, 2).unwrap());
        assert!(a_generator(&s, 2, 1, 1).is_err());
        assert!(a_generator(&s, 4, 0, 1).is_err());
    }

    #[test]
    fn lemma_weight_bound_vector_is_indecomposable() {
        let s = WreathShape::new(vec![3, 3, 3]).unwrap();
        let code = k_code(&s).unwrap();
        let inner = WreathShape::new(vec![3, 3]).unwrap();
        let inner_len = inner.length();
        // a weight-6 word of K(3,3): one weight-2 word per sub-block
        let heavy = BitVector::from_indices(inner_len, [0, 1, 3, 4, 6, 7]);
        assert!(k_code(&inner).unwrap().contains(&heavy).unwrap());
        let v = a_generator(&s, 3, 0, 1)
            .unwrap()
            .xor(&heavy.embed(27, 0))
            .xor(&heavy.embed(27, inner_len));
        assert_eq!(v.weight(), 2 * inner.expected_codistance());
        assert!(code.is_indecomposable(&v).unwrap());
        // every minimum-weight word is indecomposable
        code.for_each_codeword(1 << 20, |w| {
            if w.weight() == 2 {
                assert!(code.is_indecomposable(w).unwrap());
            }
        })
        .unwrap();
    }

    #[test]
    fn named_cyclic_codes() {
        assert_eq!(params(&hamming(3).unwrap()), (7, 4, 3));
        assert_eq!(params(&hamming(4).unwrap()), (15, 11, 3));
        assert_eq!(params(&golay23().unwrap()), (23, 12, 7));
        assert!(cyclic::is_shift_invariant(&golay23().unwrap()));
    }

    #[test]
    fn family_generators_leave_codes_invariant() {
        for a in 1..=5usize {
            for b in a..=6 {
                let c0c = c0(a, b).unwrap();
                let c1c = c1(a, b).unwrap();
                assert!(c1c.is_subcode_of(&c0c));
                let idx = c0c.dimension() - c1c.dimension();
                let expected = if (a + b) % 2 == 1 { 0 } else { 1 };
                if a * b > 1 {
                    assert_eq!(idx, expected, "({a},{b})");
                }
                for g in perm::direct_product_generators(a, b) {
                    assert!(c0c.is_invariant(&g) && c1c.is_invariant(&g));
                }
            }
        }
        for d in [vec![3], vec![3, 3], vec![3, 5], vec![5, 3], vec![3, 3, 3]] {
            let shape = WreathShape::new(d).unwrap();
            let code = k_code(&shape).unwrap();
            for g in perm::wreath_generators(&shape) {
                assert!(code.is_invariant(&g));
            }
            assert!(
                !code.is_invariant(&Permutation::transposition(
                    shape.length(),
                    0,
                    shape.length() - 1
                )) || shape.levels() == 1
            );
        }
    }

    #[test]
    fn family_display_round_trip() {
        let f = CodeFamily::K {
            degrees: vec![3, 5],
        };
        assert_eq!(f.to_string(), "k 3,5");
        assert_eq!(
            CodeFamily::C0 { a: 4, b: 3 }.normalized(),
            CodeFamily::C0 { a: 3, b: 4 }
        );
        let json = serde_json::to_string(&f).unwrap();
        let back: CodeFamily = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        for text in [
            "c0 3 4",
            "c1 2 2",
            "k 3,3,3",
            "elementary 2 5",
            "hamming 3",
            "golay",
            "cyclic 7 1+x+x^3",
        ] {
            let fam: CodeFamily = text.parse().unwrap();
            assert_eq!(fam.to_string(), text);
        }
        assert_eq!(
            "cyclic 7 1101".parse::<CodeFamily>().unwrap().to_string(),
            "cyclic 7 1+x+x^3"
        );
        assert!("c0 3".parse::<CodeFamily>().is_err());
        assert!("elementary 5 3".parse::<CodeFamily>().is_err());
        assert!("torus 3 3".parse::<CodeFamily>().is_err());
    }
}
