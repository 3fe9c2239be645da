//! Row/column codes on an a x b grid and their parameters.

use codeaut::families::{c0, c1, GridIndex};

fn main() -> codeaut::Result<()> {
    let g = GridIndex::new(3, 4)?;
    println!("(2, 1) on the 3x4 grid is coordinate {}", g.flat(2, 1));

    println!("{:>6} {:>12} {:>12} {:>8}", "(a,b)", "c0", "c1", "c1 == c0");
    for (a, b) in [(2, 3), (3, 3), (3, 4), (3, 5), (4, 4), (4, 5)] {
        let (x, y) = (c0(a, b)?, c1(a, b)?);
        println!(
            "{:>6} {:>12} {:>12} {:>8}",
            format!("({a},{b})"),
            format!("[{},{},{}]", x.length(), x.dimension(), x.min_distance()?),
            format!("[{},{},{}]", y.length(), y.dimension(), y.min_distance()?),
            x == y
        );
    }

    let code = c0(3, 4)?;
    println!("c0(3,4) spectrum {:?}", code.weight_spectrum()?.to_vec());
    Ok(())
}
