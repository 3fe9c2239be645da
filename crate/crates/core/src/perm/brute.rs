//! Exhaustive automorphism count over all `N!` permutations, for small `N`.

use super::Permutation;
use crate::code::LinearCode;
use crate::error::{Error, Result};

/// Largest length accepted by [`brute_force_automorphisms`].
pub const MAX_BRUTE_FORCE_LENGTH: usize = 9;

/// Visit every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    let mut images: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&Permutation::from_images(images.clone()).expect("bijection"));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            f(&Permutation::from_images(images.clone()).expect("bijection"));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Every permutation leaving `code` invariant.
pub fn brute_force_automorphisms(code: &LinearCode) -> Result<Vec<Permutation>> {
    let n = code.length();
    if n > MAX_BRUTE_FORCE_LENGTH {
        return Err(Error::EnumerationInfeasible(format!(
            "{n}! permutations exceed the brute-force limit"
        )));
    }
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        if code.is_invariant(p) {
            out.push(p.clone());
        }
    });
    Ok(out)
}

pub fn brute_force_order(code: &LinearCode) -> Result<u64> {
    Ok(brute_force_automorphisms(code)?.len() as u64)
}
