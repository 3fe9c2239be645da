//! Permutations, permutation groups, and code automorphism groups.

mod brute;
mod generators;
mod group;
mod permutation;
mod regular;
mod search;

pub use brute::{
    brute_force_automorphisms, brute_force_order, for_each_permutation, MAX_BRUTE_FORCE_LENGTH,
};
pub use generators::{
    affine_generators, base_flip, c2_wreath_generators, column_flip, dihedral8_generators,
    direct_product_generators, even_flip_generators, expected_group_shape, primitive_root,
    symwr2_generators, transpose_involution, wreath_generators, GroupShape,
};
pub use group::{GroupJson, PermGroup};
pub use permutation::Permutation;
pub use regular::{
    conjugate_code, cycle_relabeling, find_regular_cycle, find_regular_cycle_with,
    regular_cycle_witness, wreath_witness, DEFAULT_ELEMENT_CAP,
};
pub use search::{automorphism_group, automorphism_group_with, AutConfig, AutReport, InvariantSet};
