//! One-sided derivative verdicts across the three point classes:
//! r-adic points, midpoint-set points (odd radix), and generic points
//! decided by their per-period sign drift.
//!
//! ```bash
//! cargo run --example classify_points
//! ```

use takagi::derivative::certify;
use takagi::digits::DigitStream;
use takagi::{Radix, Result};

fn main() -> Result<()> {
    let cases = [
        (2u32, "1/4"),    // r-adic: left -inf, right +inf
        (3, "1/2"),       // midpoint set: left +inf, right -inf
        (2, "1/7"),       // period 001, drift +1: both +inf
        (2, "6/7"),       // mirror image, drift -1: both -inf
        (2, "1/3"),       // period 01, drift 0: neither
        (3, "0.(021)_3"), // odd radix, middle digit resolves up: drift +1
        (3, "0.(012)_3"), // middle digit resolves down: drift -1
    ];
    println!(
        "{:>4} {:>12} {:>10} {:>16} {:>16}",
        "r", "point", "class", "left", "right"
    );
    for (r, spec) in cases {
        let radix = Radix::new(r)?;
        let stream = DigitStream::parse(spec, radix)?;
        let (left, right) = certify(&stream)?;
        println!(
            "{:>4} {:>12} {:>10} {:>16} {:>16}",
            r,
            spec,
            format!("{:?}", stream.classify()),
            format!("{:?}", left.result),
            format!("{:?}", right.result),
        );
    }
    Ok(())
}
