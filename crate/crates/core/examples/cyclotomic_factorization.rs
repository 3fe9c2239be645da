//! Cyclotomic cosets, the factorization of X^N - 1 and all cyclic codes of length N.

use codeaut::cyclic::{cyclotomic_cosets, enumerate_cyclic_codes, factor_cyclotomic, Poly2};

fn main() -> codeaut::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(15);

    let cosets = cyclotomic_cosets(n)?;
    println!("2-cyclotomic cosets mod {n}: {:?}", cosets.cosets);

    let fac = factor_cyclotomic(n)?;
    println!("X^{n} - 1 over GF(2), roots in GF(2^{}):", fac.field_degree);
    for f in &fac.factors {
        println!("  {:<24} coset {:?}", f.poly.to_string(), f.coset);
    }
    assert_eq!(fac.product(), Poly2::x_pow_minus_one(n));

    let codes = enumerate_cyclic_codes(n)?;
    println!("{} cyclic codes of length {n}", codes.len());
    for c in codes.iter().take(8) {
        println!(
            "  g = {:<30} k = {}",
            c.generator.to_string(),
            c.code.dimension()
        );
    }
    Ok(())
}
