//! Generators for the named groups acting on grid and wreath coordinates.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::{PermGroup, Permutation};
use crate::families::{CodeFamily, GridIndex, WreathShape};

/// Generators of `Sym(n)` acting on `n` points, lifted through `lift`.
fn symmetric_lifted(n: usize, lift: impl Fn(&Permutation) -> Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    if n >= 2 {
        out.push(lift(&Permutation::transposition(n, 0, 1)));
    }
    if n >= 3 {
        out.push(lift(&Permutation::shift(n)));
    }
    out
}

fn row_action(g: &GridIndex, sigma: &Permutation) -> Permutation {
    Permutation::from_fn(g.len(), |x| {
        let (i, j) = g.unflat(x);
        g.flat(sigma.image(i), j)
    })
}

fn column_action(g: &GridIndex, tau: &Permutation) -> Permutation {
    Permutation::from_fn(g.len(), |x| {
        let (i, j) = g.unflat(x);
        g.flat(i, tau.image(j))
    })
}

fn grid(a: usize, b: usize) -> GridIndex {
    GridIndex::new(a, b).expect("grid dimensions are positive")
}

/// `Sym(a) x Sym(b)` acting by `(i, j) -> (i^s, j^t)`.
pub fn direct_product_generators(a: usize, b: usize) -> Vec<Permutation> {
    let g = grid(a, b);
    let mut out = symmetric_lifted(g.rows(), |s| row_action(&g, s));
    out.extend(symmetric_lifted(g.cols(), |t| column_action(&g, t)));
    out
}

/// Swap the two entries of column `j` in a `2 x b` grid.
pub fn column_flip(b: usize, j: usize) -> Permutation {
    let g = grid(2, b);
    Permutation::transposition(g.len(), g.flat(0, j), g.flat(1, j))
}

/// The base-group element `(1, 0, .., 0)` of `C2 wr Sym(b)`.
pub fn base_flip(b: usize) -> Permutation {
    column_flip(b, 0)
}

/// `C2 wr Sym(b)` on a `2 x b` grid: columns permuted, entries flipped within a column.
pub fn c2_wreath_generators(b: usize) -> Vec<Permutation> {
    let g = grid(2, b);
    let mut out = symmetric_lifted(b, |t| column_action(&g, t));
    out.push(base_flip(b));
    out
}

/// The index-2 subgroup of `C2 wr Sym(b)` whose base part flips an even number of columns.
pub fn even_flip_generators(b: usize) -> Vec<Permutation> {
    let g = grid(2, b);
    let mut out = symmetric_lifted(b, |t| column_action(&g, t));
    if b >= 2 {
        out.push(column_flip(b, 0).then(&column_flip(b, 1)));
    }
    out
}

/// Matrix transposition `(i, j) -> (j, i)` on an `a x a` grid.
pub fn transpose_involution(a: usize) -> Permutation {
    let g = grid(a, a);
    Permutation::from_fn(g.len(), |x| {
        let (i, j) = g.unflat(x);
        g.flat(j, i)
    })
}

/// `Sym(a) wr C2` on an `a x a` grid.
pub fn symwr2_generators(a: usize) -> Vec<Permutation> {
    let mut out = direct_product_generators(a, a);
    out.push(transpose_involution(a));
    out
}

/// The dihedral group of order 8 preserving `{(0,0),(1,1)}` and `{(0,1),(1,0)}`.
pub fn dihedral8_generators() -> Vec<Permutation> {
    vec![
        Permutation::cycle(4, &[0, 1, 3, 2]),
        Permutation::transposition(4, 1, 2),
    ]
}

/// `Sym(n_1) wr .. wr Sym(n_r)` in its imprimitive action on the
/// mixed-radix coordinates. Level `i` contributes `Sym(n_i)` permuting the
/// sub-blocks of the first level-`i` block; conjugation by the higher
/// levels supplies every other copy.
pub fn wreath_generators(shape: &WreathShape) -> Vec<Permutation> {
    let n = shape.length();
    let mut out = Vec::new();
    for (idx, &n_i) in shape.degrees().iter().enumerate() {
        let sub = shape.block_size(idx);
        let block = sub * n_i;
        out.extend(symmetric_lifted(n_i, |s| {
            Permutation::from_fn(n, |x| {
                if x < block {
                    s.image(x / sub) * sub + x % sub
                } else {
                    x
                }
            })
        }));
    }
    out
}

/// The groups named by the automorphism results for the code families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupShape {
    Symmetric {
        n: usize,
    },
    DirectProduct {
        a: usize,
        b: usize,
    },
    /// `C2 wr Sym(b)`.
    C2Wreath {
        b: usize,
    },
    /// Index-2 subgroup of `C2 wr Sym(b)` with even base part.
    EvenFlip {
        b: usize,
    },
    /// `Sym(a) wr C2`.
    SymWreathC2 {
        a: usize,
    },
    Dihedral8,
    IteratedWreath {
        degrees: Vec<usize>,
    },
    /// `C_m ⋉ C_p`.
    Affine {
        m: usize,
        p: usize,
    },
    /// Known only by order (no generators supplied).
    Named {
        name: &'static str,
        order: u64,
    },
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

impl GroupShape {
    pub fn expected_order(&self) -> BigUint {
        match self {
            GroupShape::Symmetric { n } => factorial(*n),
            GroupShape::DirectProduct { a, b } => factorial(*a) * factorial(*b),
            GroupShape::C2Wreath { b } => (BigUint::one() << *b) * factorial(*b),
            GroupShape::EvenFlip { b } => (BigUint::one() << b.saturating_sub(1)) * factorial(*b),
            GroupShape::SymWreathC2 { a } => factorial(*a).pow(2) * BigUint::from(2u32),
            GroupShape::Dihedral8 => BigUint::from(8u32),
            GroupShape::IteratedWreath { degrees } => {
                let mut order = BigUint::one();
                for (i, &n_i) in degrees.iter().enumerate() {
                    let copies: u32 = degrees[i + 1..].iter().product::<usize>() as u32;
                    order *= factorial(n_i).pow(copies);
                }
                order
            }
            GroupShape::Affine { m, p } => BigUint::from(m * p),
            GroupShape::Named { order, .. } => BigUint::from(*order),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        Some(match self {
            GroupShape::Symmetric { n } => *n,
            GroupShape::DirectProduct { a, b } => a * b,
            GroupShape::C2Wreath { b } | GroupShape::EvenFlip { b } => 2 * b,
            GroupShape::SymWreathC2 { a } => a * a,
            GroupShape::Dihedral8 => 4,
            GroupShape::IteratedWreath { degrees } => degrees.iter().product(),
            GroupShape::Affine { p, .. } => *p,
            GroupShape::Named { .. } => return None,
        })
    }

    /// Explicit generators in the family's coordinates, if the shape has them.
    pub fn generators(&self) -> Option<Vec<Permutation>> {
        Some(match self {
            GroupShape::Symmetric { n } => PermGroup::symmetric(*n).generators().to_vec(),
            GroupShape::DirectProduct { a, b } => direct_product_generators(*a, *b),
            GroupShape::C2Wreath { b } => c2_wreath_generators(*b),
            GroupShape::EvenFlip { b } => even_flip_generators(*b),
            GroupShape::SymWreathC2 { a } => symwr2_generators(*a),
            GroupShape::Dihedral8 => dihedral8_generators(),
            GroupShape::IteratedWreath { degrees } => {
                wreath_generators(&WreathShape::new(degrees.clone()).ok()?)
            }
            GroupShape::Affine { m, p } => affine_generators(*m, *p)?,
            GroupShape::Named { .. } => return None,
        })
    }

    pub fn group(&self) -> Option<PermGroup> {
        let gens = self.generators()?;
        PermGroup::from_generators(self.degree()?, &gens).ok()
    }

    /// Classification tag used in records.
    pub fn tag(&self) -> &'static str {
        match self {
            GroupShape::Symmetric { .. } => "elementary",
            GroupShape::DirectProduct { .. } => "direct-product",
            GroupShape::C2Wreath { .. }
            | GroupShape::EvenFlip { .. }
            | GroupShape::SymWreathC2 { .. }
            | GroupShape::Dihedral8
            | GroupShape::IteratedWreath { .. } => "wreath",
            GroupShape::Affine { .. } => "affine-type",
            GroupShape::Named { .. } => "other",
        }
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupShape::Symmetric { n } => write!(f, "Sym({n})"),
            GroupShape::DirectProduct { a, b } => write!(f, "Sym({a}) x Sym({b})"),
            GroupShape::C2Wreath { b } => write!(f, "C2 wr Sym({b})"),
            GroupShape::EvenFlip { b } => write!(f, "Sym({b}) ⋉ C2^{}", b - 1),
            GroupShape::SymWreathC2 { a } => write!(f, "Sym({a}) wr C2"),
            GroupShape::Dihedral8 => write!(f, "D8"),
            GroupShape::IteratedWreath { degrees } => {
                let parts: Vec<String> = degrees.iter().map(|d| format!("Sym({d})")).collect();
                write!(f, "{}", parts.join(" wr "))
            }
            GroupShape::Affine { m, p } => write!(f, "C{m} ⋉ C{p}"),
            GroupShape::Named { name, .. } => write!(f, "{name}"),
        }
    }
}

/// Least primitive root modulo prime `p`.
pub fn primitive_root(p: usize) -> Option<usize> {
    if p < 2 {
        return None;
    }
    if p == 2 {
        return Some(1);
    }
    (2..p).find(|&g| {
        let mut x = 1;
        for k in 1..p {
            x = x * g % p;
            if x == 1 {
                return k == p - 1;
            }
        }
        false
    })
}

/// `x -> x + 1` and `x -> u x` with `u` of multiplicative order `m` mod `p`.
pub fn affine_generators(m: usize, p: usize) -> Option<Vec<Permutation>> {
    let g = primitive_root(p)?;
    if m == 0 || !(p - 1).is_multiple_of(m) {
        return None;
    }
    let mut u = 1;
    for _ in 0..(p - 1) / m {
        u = u * g % p;
    }
    let mut out = vec![Permutation::shift(p)];
    if m > 1 {
        out.push(Permutation::from_fn(p, |x| x * u % p));
    }
    Some(out)
}

/// The group the automorphism results assign to a family, in its coordinates.
pub fn expected_group_shape(family: &CodeFamily) -> Option<GroupShape> {
    let family = family.normalized();
    Some(match family {
        CodeFamily::Elementary { n, .. } => GroupShape::Symmetric { n },
        CodeFamily::C0 { a, b } => c0_shape(a, b),
        CodeFamily::C1 { a, b } => {
            if (a + b) % 2 == 1 || a % 2 == 1 {
                if a == 1 && b == 1 {
                    GroupShape::Symmetric { n: 1 }
                } else {
                    c0_shape(a, b)
                }
            } else if a == 2 && b == 2 {
                GroupShape::Dihedral8
            } else if a == 2 {
                GroupShape::EvenFlip { b }
            } else {
                c0_shape(a, b)
            }
        }
        CodeFamily::K { degrees } => GroupShape::IteratedWreath { degrees },
        CodeFamily::Hamming { r: 3 } => GroupShape::Named {
            name: "PSL(3,2)",
            order: 168,
        },
        CodeFamily::Hamming { r: 4 } => GroupShape::Named {
            name: "Alt(8)",
            order: 20160,
        },
        CodeFamily::Golay => GroupShape::Named {
            name: "M23",
            order: 10_200_960,
        },
        CodeFamily::Hamming { .. } | CodeFamily::Cyclic { .. } => return None,
    })
}

fn c0_shape(a: usize, b: usize) -> GroupShape {
    match (a, b) {
        (1, b) => GroupShape::Symmetric { n: b },
        (2, 2) => GroupShape::Symmetric { n: 4 },
        (2, b) => GroupShape::C2Wreath { b },
        (a, b) if a == b => GroupShape::SymWreathC2 { a },
        (a, b) => GroupShape::DirectProduct { a, b },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c0, c1, k_code};

    fn order_of(gens: &[Permutation], n: usize) -> BigUint {
        PermGroup::from_generators(n, gens).unwrap().order()
    }

    #[test]
    fn grid_group_orders() {
        assert_eq!(
            order_of(&direct_product_generators(3, 4), 12),
            BigUint::from(144u32)
        );
        assert_eq!(order_of(&c2_wreath_generators(3), 6), BigUint::from(48u32));
        assert_eq!(order_of(&symwr2_generators(3), 9), BigUint::from(72u32));
        assert_eq!(order_of(&even_flip_generators(4), 8), BigUint::from(192u32));
        assert_eq!(order_of(&dihedral8_generators(), 4), BigUint::from(8u32));
    }

    #[test]
    fn transpose_swaps_rows_and_columns() {
        let g = GridIndex::new(3, 3).unwrap();
        let t = transpose_involution(3);
        for i in 0..3 {
            let r = crate::families::row_matrix(&g, i);
            let c = crate::families::column_matrix(&g, i);
            assert_eq!(crate::code::apply_permutation(&r, &t), c);
        }
        assert!(t.then(&t).is_identity());
    }

    #[test]
    fn base_flip_breaks_c1() {
        for b in [4, 6] {
            let code = c1(2, b).unwrap();
            assert!(!code.is_invariant(&base_flip(b)));
            assert!(c0(2, b).unwrap().is_invariant(&base_flip(b)));
            for g in even_flip_generators(b) {
                assert!(code.is_invariant(&g));
            }
        }
    }

    #[test]
    fn wreath_orders() {
        let shape = |d: Vec<usize>| WreathShape::new(d).unwrap();
        for d in [vec![3], vec![3, 3], vec![3, 5], vec![2, 3], vec![3, 3, 3]] {
            let s = shape(d.clone());
            let expected = GroupShape::IteratedWreath { degrees: d }.expected_order();
            assert_eq!(order_of(&wreath_generators(&s), s.length()), expected);
            let code = k_code(&s).unwrap();
            assert!(wreath_generators(&s).iter().all(|g| code.is_invariant(g)));
        }
        assert_eq!(
            GroupShape::IteratedWreath {
                degrees: vec![3, 3, 3]
            }
            .expected_order(),
            BigUint::from(13_060_694_016u64)
        );
    }

    #[test]
    fn shape_orders() {
        assert_eq!(
            GroupShape::SymWreathC2 { a: 3 }.expected_order(),
            BigUint::from(72u32)
        );
        assert_eq!(
            GroupShape::C2Wreath { b: 3 }.expected_order(),
            BigUint::from(48u32)
        );
        assert_eq!(
            GroupShape::C2Wreath { b: 5 }.expected_order(),
            BigUint::from(3840u32)
        );
        assert_eq!(
            GroupShape::Affine { m: 8, p: 17 }.expected_order(),
            BigUint::from(136u32)
        );
        let aff = GroupShape::Affine { m: 8, p: 17 }.group().unwrap();
        assert_eq!(aff.order(), BigUint::from(136u32));
        assert!(GroupShape::Affine { m: 5, p: 17 }.generators().is_none());
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), Some(3));
        assert_eq!(primitive_root(17), Some(3));
        assert_eq!(primitive_root(23), Some(5));
    }

    #[test]
    fn family_shapes_act_on_their_codes() {
        for a in 1..=4usize {
            for b in a..=5 {
                for fam in [CodeFamily::C0 { a, b }, CodeFamily::C1 { a, b }] {
                    let code = fam.build().unwrap();
                    let shape = expected_group_shape(&fam).unwrap();
                    for g in shape.generators().unwrap() {
                        assert!(code.is_invariant(&g), "{fam} {shape}");
                    }
                }
            }
        }
    }
}
