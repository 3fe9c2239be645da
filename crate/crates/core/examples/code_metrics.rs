//! Dimension, distance, weight spectrum and distribution of a few codes.

use codeaut::families;

fn main() -> codeaut::Result<()> {
    let codes = [
        ("hamming 3", families::hamming(3)?),
        ("hamming 4", families::hamming(4)?),
        ("golay", families::golay23()?),
        ("c0 1 36", families::c0(1, 36)?),
    ];
    for (name, code) in &codes {
        let dist = code.weight_distribution(codeaut::code::DEFAULT_ENUMERATION_CAP)?;
        println!(
            "{name:<10} [{},{},{}] co-distance {} spectrum {:?}",
            code.length(),
            code.dimension(),
            code.min_distance()?,
            code.min_codistance()?,
            code.weight_spectrum()?.to_vec()
        );
        let nonzero: Vec<String> = dist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, c)| format!("{w}:{c}"))
            .collect();
        println!("           distribution {}", nonzero.join(" "));
    }

    let dual = codes[2].1.dual();
    println!(
        "golay dual [{},{},{}]",
        dual.length(),
        dual.dimension(),
        dual.min_distance()?
    );
    Ok(())
}
