//! Criterion terms for the sparse-powers point in base 3: the digit at
//! every power of ten is 0, every other digit is 1.
//!
//! The sign series diverges to +infinity, yet the right derivative is
//! not +infinity: the gap correction at the power anchors drags the
//! right-side criterion to -infinity. The left-side criterion, anchored
//! at the dense nonzero digits, climbs without bound. This is the
//! asymmetry that separates odd from even radix.
//!
//! ```bash
//! cargo run --example criterion_trends
//! ```

use takagi::derivative::{criterion_sequence, heuristic_verdict, CriterionSign, Side};
use takagi::digits::DigitStream;
use takagi::{Radix, Result};

fn main() -> Result<()> {
    let radix = Radix::new(3)?;
    let stream = DigitStream::parse("sparse:b=10,on=0,off=1", radix)?;

    println!("right/+ criterion (anchors at the powers of ten):");
    println!("{:>8} {:>10} {:>6} {:>14}", "anchor", "sum", "gap", "value");
    for term in criterion_sequence(&stream, Side::Right, CriterionSign::Plus, 4)? {
        println!(
            "{:>8} {:>10} {:>6} {:>14.3}",
            term.anchor, term.sum_part, term.gap, term.value
        );
    }

    println!("\nleft/+ criterion (anchors at the nonzero digits), every 20th term:");
    println!("{:>8} {:>10} {:>6} {:>14}", "anchor", "sum", "gap", "value");
    for term in criterion_sequence(&stream, Side::Left, CriterionSign::Plus, 200)?
        .iter()
        .step_by(20)
    {
        println!(
            "{:>8} {:>10} {:>6} {:>14.3}",
            term.anchor, term.sum_part, term.gap, term.value
        );
    }

    let (left, right) = heuristic_verdict(&stream, 4)?;
    println!(
        "\ntrend verdicts: left {:?}, right {:?}",
        left.result, right.result
    );
    Ok(())
}
