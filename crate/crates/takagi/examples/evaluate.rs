//! Exact evaluation: closed-form values at rational points, certified
//! enclosures at generator points, and two identities that hold with
//! zero tolerance.
//!
//! ```bash
//! cargo run --example evaluate
//! ```

use num_bigint::BigInt;
use takagi::digits::DigitStream;
use takagi::eval::{eval_exact, eval_partial, eval_stream, midpoint_series};
use takagi::{Radix, Rational, Result};

fn main() -> Result<()> {
    let r2 = Radix::new(2)?;
    let third = Rational::new(BigInt::from(1), BigInt::from(3));

    // The value at 1/3 in base 2 is exactly 2/3: every orbit point of
    // r^n x mod 1 sits at distance 1/3 from the integers.
    let value = eval_exact(&third, r2)?;
    println!("f_2(1/3)        = {value}");

    // Partial sums enclose the same value with an explicit tail bound.
    for depth in [5u64, 10, 30] {
        let enc = eval_partial(&third, r2, depth)?;
        println!(
            "depth {depth:>2} enclosure: [{}, {}], width {}",
            enc.lo,
            enc.hi,
            enc.width()
        );
        assert!(enc.contains(&value));
    }

    // Symmetry about 1/2 is exact, not approximate.
    let mirrored = Rational::new(BigInt::from(2), BigInt::from(3));
    assert_eq!(eval_exact(&mirrored, r2)?, value);
    println!("f_2(2/3)        = f_2(1/3)");

    // The companion series over the midpoint grids sums to
    // r/(2(r-1)) - f_r(x); at r = 2 and x = 1/3 that gives 1/3.
    println!("midpoint series = {}", midpoint_series(&third, r2)?);

    // A generator point has no rational value, but its enclosure
    // shrinks geometrically with the depth.
    let r3 = Radix::new(3)?;
    let sparse = DigitStream::parse("sparse:b=10,on=0,off=1", r3)?;
    for depth in [20u64, 40, 80] {
        let enc = eval_stream(&sparse, depth)?;
        println!(
            "f_3(sparse) depth {depth:>2}: width ~ 10^{:.0}",
            width_log10(&enc.width())
        );
    }
    Ok(())
}

fn width_log10(w: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    let num_bits = w.numer().bits() as f64;
    let den_bits = w.denom().bits() as f64;
    ((num_bits - den_bits) * 2f64.ln() / 10f64.ln())
        .to_f64()
        .unwrap_or(f64::NAN)
}
