//! Regular cycles in Aut(C): when a grid code is equivalent to a cyclic code.

use codeaut::cyclic::is_shift_invariant;
use codeaut::families::CodeFamily;
use codeaut::perm::{
    automorphism_group, conjugate_code, cycle_relabeling, find_regular_cycle, regular_cycle_witness,
};

fn main() -> codeaut::Result<()> {
    for text in ["c0 3 4", "c0 2 5", "c0 3 3", "c1 2 2", "k 3,3"] {
        let family: CodeFamily = text.parse()?;
        let code = family.build()?;
        let z = match regular_cycle_witness(&family) {
            Ok(z) => Some(z),
            Err(_) => find_regular_cycle(&automorphism_group(&code)?.group, 10_000_000)?,
        };
        match z {
            Some(z) => {
                let relabeled = conjugate_code(&code, &cycle_relabeling(&z)?);
                println!(
                    "{text:<7} cyclic via {}; relabeled code is shift invariant: {}",
                    z.cycle_notation(),
                    is_shift_invariant(&relabeled)
                );
            }
            None => println!("{text:<7} no regular cycle in Aut"),
        }
    }
    Ok(())
}
