//! Bit vectors, row reduction and null spaces over GF(2).

use codeaut::{BitMatrix, BitVector};

fn main() -> codeaut::Result<()> {
    let rows: Vec<BitVector> = ["1101000", "0110100", "0011010", "0001101"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let g = BitMatrix::new(7, rows)?;
    let (reduced, pivots) = g.rref();
    println!("rank {} pivots {pivots:?}", g.rank());
    for r in reduced.rows() {
        println!("  {r}");
    }

    let h = g.null_space();
    println!("null space has {} rows", h.nrows());
    for r in h.rows() {
        println!("  {r}  weight {}", r.weight());
    }

    let probe: BitVector = "1110010".parse()?;
    println!("{probe} in row space: {}", g.in_span(&probe)?);
    Ok(())
}
