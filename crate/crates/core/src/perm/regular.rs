//! Regular cyclic subgroups: explicit witnesses, exhaustive search, relabeling.

use num_bigint::BigUint;
use num_integer::gcd;

use super::{PermGroup, Permutation};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::families::{CodeFamily, GridIndex, WreathShape};

/// Default bound on `|G|` for exhaustive element enumeration.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

/// `(i, j) -> (i^s, j^t)` for full cycles on rows and columns.
fn product_of_cycles(g: &GridIndex) -> Permutation {
    Permutation::from_fn(g.len(), |x| {
        let (i, j) = g.unflat(x);
        g.flat((i + 1) % g.rows(), (j + 1) % g.cols())
    })
}

/// `(i, j) -> (i, j+1)`, wrapping `(i, b-1) -> (1-i, 0)`.
fn two_row_twist(b: usize) -> Permutation {
    let g = GridIndex::new(2, b).expect("positive");
    Permutation::from_fn(g.len(), |x| {
        let (i, j) = g.unflat(x);
        if j + 1 < b {
            g.flat(i, j + 1)
        } else {
            g.flat(1 - i, 0)
        }
    })
}

fn c0_witness(a: usize, b: usize) -> Result<Permutation> {
    let g = GridIndex::new(a, b)?;
    if g.rows() == 2 {
        Ok(two_row_twist(g.cols()))
    } else if gcd(g.rows(), g.cols()) == 1 {
        Ok(product_of_cycles(&g))
    } else {
        Err(Error::NoWitness(format!("c0 {a} {b}")))
    }
}

/// The recursive witness: cycle the top blocks, and on wrap-around apply the
/// previous level's witness inside the block.
pub fn wreath_witness(shape: &WreathShape) -> Permutation {
    let mut w = Permutation::identity(1);
    for (idx, &n_i) in shape.degrees().iter().enumerate() {
        let sub = shape.block_size(idx);
        let prev = w;
        w = Permutation::from_fn(sub * n_i, |x| {
            let (k, omega) = (x / sub, x % sub);
            if k + 1 < n_i {
                (k + 1) * sub + omega
            } else {
                prev.image(omega)
            }
        });
    }
    w
}

/// A regular cycle in the automorphism group of the family, when one is known.
/// The result is checked to be a full cycle that leaves the code invariant.
pub fn regular_cycle_witness(family: &CodeFamily) -> Result<Permutation> {
    let family = family.normalized();
    let w = match &family {
        CodeFamily::C0 { a, b } => c0_witness(*a, *b)?,
        CodeFamily::C1 { a, b } => {
            let (a, b) = (*a, *b);
            if (a, b) == (2, 2) {
                Permutation::cycle(4, &[0, 1, 3, 2])
            } else if (a + b) % 2 == 1 {
                c0_witness(a, b)?
            } else if a % 2 == 1 && gcd(a, b) == 1 {
                product_of_cycles(&GridIndex::new(a, b)?)
            } else {
                return Err(Error::NoWitness(family.to_string()));
            }
        }
        CodeFamily::K { degrees } => wreath_witness(&WreathShape::new(degrees.clone())?),
        CodeFamily::Elementary { n, .. } => Permutation::shift(*n),
        CodeFamily::Hamming { .. } | CodeFamily::Golay | CodeFamily::Cyclic { .. } => {
            let n = family.build()?.length();
            Permutation::shift(n)
        }
    };
    if !w.is_full_cycle() {
        return Err(Error::Internal(format!(
            "witness for {family} is not a full cycle"
        )));
    }
    if !family.build()?.is_invariant(&w) {
        return Err(Error::Internal(format!(
            "witness for {family} is not an automorphism"
        )));
    }
    Ok(w)
}

/// Search `group` for a full `N`-cycle.
///
/// `Ok(None)` is a certified negative: either the group is intransitive,
/// `N` does not divide the order, or every element was checked.
pub fn find_regular_cycle(group: &PermGroup, element_cap: u64) -> Result<Option<Permutation>> {
    find_regular_cycle_with(group, element_cap, &[])
}

/// As [`find_regular_cycle`], trying `candidates` first.
pub fn find_regular_cycle_with(
    group: &PermGroup,
    element_cap: u64,
    candidates: &[Permutation],
) -> Result<Option<Permutation>> {
    let n = group.degree();
    if let Some(c) = candidates
        .iter()
        .find(|c| c.is_full_cycle() && group.contains(c))
    {
        return Ok(Some(c.clone()));
    }
    if n == 0 {
        return Ok(None);
    }
    let order = group.order();
    if !group.is_transitive() || (&order % BigUint::from(n)) != BigUint::from(0u32) {
        return Ok(None);
    }
    if order > BigUint::from(element_cap) {
        return Err(Error::Undecided(format!(
            "group order {order} exceeds the element cap {element_cap}"
        )));
    }
    let mut found = None;
    group.for_each_element(|g| {
        if g.is_full_cycle() {
            found = Some(g.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// The relabeling `z^k(0) -> k`, which turns the full cycle `z` into the shift.
pub fn cycle_relabeling(z: &Permutation) -> Result<Permutation> {
    if !z.is_full_cycle() {
        return Err(Error::InvalidArgument(format!("{z} is not a full cycle")));
    }
    let n = z.degree();
    let mut images = vec![0; n];
    let mut x = 0;
    for (k, _) in (0..n).enumerate() {
        images[x] = k;
        x = z.image(x);
    }
    Permutation::from_images(images)
}

/// Relabel coordinates of `code` by `p`.
pub fn conjugate_code(code: &LinearCode, p: &Permutation) -> LinearCode {
    code.permuted(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::is_shift_invariant;
    use crate::perm::automorphism_group;

    fn fam_c0(a: usize, b: usize) -> CodeFamily {
        CodeFamily::C0 { a, b }
    }

    #[test]
    fn grid_witnesses() {
        let w = regular_cycle_witness(&fam_c0(2, 3)).unwrap();
        assert_eq!(w.order(), BigUint::from(6u32));
        let w = regular_cycle_witness(&fam_c0(3, 4)).unwrap();
        assert_eq!(w.order(), BigUint::from(12u32));
        assert!(matches!(
            regular_cycle_witness(&fam_c0(3, 3)),
            Err(Error::NoWitness(_))
        ));
        assert!(matches!(
            regular_cycle_witness(&CodeFamily::C1 { a: 2, b: 4 }),
            Err(Error::NoWitness(_))
        ));
        regular_cycle_witness(&CodeFamily::C1 { a: 2, b: 2 }).unwrap();
        regular_cycle_witness(&CodeFamily::C1 { a: 3, b: 5 }).unwrap();
        regular_cycle_witness(&CodeFamily::C1 { a: 2, b: 5 }).unwrap();
    }

    #[test]
    fn wreath_witnesses_are_regular() {
        for d in [
            vec![3],
            vec![3, 3],
            vec![3, 5],
            vec![5, 3],
            vec![2, 2, 2],
            vec![3, 3, 3],
        ] {
            let fam = CodeFamily::K { degrees: d.clone() };
            let w = regular_cycle_witness(&fam).unwrap();
            let n: usize = d.iter().product();
            assert_eq!(w.order(), BigUint::from(n));
            let relabeled = conjugate_code(&fam.build().unwrap(), &cycle_relabeling(&w).unwrap());
            assert!(is_shift_invariant(&relabeled));
        }
    }

    #[test]
    fn relabeling_maps_cycle_to_shift() {
        let z = Permutation::from_cycles(5, &[vec![0, 3, 1, 4, 2]]).unwrap();
        let rho = cycle_relabeling(&z).unwrap();
        assert_eq!(z.conjugate_by(&rho), Permutation::shift(5));
        assert!(cycle_relabeling(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn search_agrees_with_the_corollary() {
        let g34 = automorphism_group(&crate::families::c0(3, 4).unwrap())
            .unwrap()
            .group;
        let z = find_regular_cycle(&g34, DEFAULT_ELEMENT_CAP)
            .unwrap()
            .unwrap();
        let code = crate::families::c0(3, 4).unwrap();
        assert!(is_shift_invariant(&conjugate_code(
            &code,
            &cycle_relabeling(&z).unwrap()
        )));
        let g33 = automorphism_group(&crate::families::c0(3, 3).unwrap())
            .unwrap()
            .group;
        assert_eq!(find_regular_cycle(&g33, DEFAULT_ELEMENT_CAP).unwrap(), None);
        let shift = PermGroup::from_generators(7, &[Permutation::shift(7)]).unwrap();
        assert_eq!(
            find_regular_cycle(&shift, 10).unwrap(),
            Some(Permutation::shift(7))
        );
        assert!(matches!(
            find_regular_cycle(&PermGroup::symmetric(9), 100),
            Err(Error::Undecided(_))
        ));
    }

    #[test]
    fn relabeling_preserves_metrics() {
        let code = crate::families::c1(3, 5).unwrap();
        let p = Permutation::random(15, 11);
        let q = conjugate_code(&code, &p);
        assert_eq!(q.dimension(), code.dimension());
        assert_eq!(
            q.weight_spectrum().unwrap(),
            code.weight_spectrum().unwrap()
        );
        assert_eq!(conjugate_code(&code, &Permutation::identity(15)), code);
    }
}
