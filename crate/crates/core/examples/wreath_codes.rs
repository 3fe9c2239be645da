//! K codes built over iterated wreath products of symmetric groups.

use codeaut::families::{k_code, WreathShape};
use codeaut::perm::{automorphism_group, wreath_generators};

fn main() -> codeaut::Result<()> {
    for degrees in [vec![3, 3], vec![2, 3], vec![3, 3, 3], vec![3, 5]] {
        let shape = WreathShape::new(degrees)?;
        let code = k_code(&shape)?;
        println!(
            "K({shape}): [{},{}] co-distance {} expected dim {} beyond theorem {}",
            code.length(),
            code.dimension(),
            code.min_codistance()?,
            shape.expected_dimension(),
            shape.beyond_theorem()
        );
    }

    let shape = WreathShape::new(vec![3, 3])?;
    let code = k_code(&shape)?;
    let aut = automorphism_group(&code)?;
    let gens = wreath_generators(&shape);
    println!(
        "Aut(K(3,3)) has order {} and contains all {} wreath generators: {}",
        aut.group.order(),
        gens.len(),
        gens.iter().all(|g| aut.group.contains(g))
    );
    Ok(())
}
