//! Automorphism groups by partition backtracking, checked against the known shapes.

use codeaut::families::CodeFamily;
use codeaut::perm::{automorphism_group, expected_group_shape};

fn main() -> codeaut::Result<()> {
    for text in ["c0 3 4", "c0 3 3", "c1 3 5", "k 3,3", "hamming 3", "golay"] {
        let family: CodeFamily = text.parse()?;
        let code = family.build()?;
        let report = automorphism_group(&code)?;
        let shape = expected_group_shape(&family);
        println!(
            "{text:<10} |Aut| = {:<10} base {:?} nodes {:<6} shape {}",
            report.group.order().to_string(),
            report.group.base(),
            report.nodes,
            shape.map_or("-".to_string(), |s| s.to_string())
        );
    }
    Ok(())
}
