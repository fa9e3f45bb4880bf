//! Exact difference quotients along the canonical step ladders.
//!
//! At the r-adic point 1/4 the right quotients climb without bound and
//! the left quotients fall without bound; at 1/3 both ladders stay
//! inside a narrow band forever. Every quotient here is an exact
//! rational, no rounding anywhere.
//!
//! ```bash
//! cargo run --example quotient_ladders
//! ```

use takagi::derivative::{quotient_probe, Side};
use takagi::digits::DigitStream;
use takagi::{Radix, Result};

fn main() -> Result<()> {
    let radix = Radix::new(2)?;
    for spec in ["1/4", "1/3"] {
        let stream = DigitStream::parse(spec, radix)?;
        println!("point {spec}:");
        for side in [Side::Right, Side::Left] {
            let steps = quotient_probe(&stream, side, 12)?;
            let rendered: Vec<String> =
                steps.iter().map(|p| format!("{}", p.quotient.lo)).collect();
            println!("  {side:?} quotients: {}", rendered.join(", "));
        }
        println!();
    }
    Ok(())
}
