//! Sign-sum statistics over uniform random digit words.
//!
//! The resolved signs of a uniform point form a centered walk, so
//! |S_N| of order sqrt(N) is typical and the sets where the sign
//! series diverges carry no Lebesgue measure. Seeding is per sample,
//! so the numbers below never depend on thread count.
//!
//! ```bash
//! cargo run --release --example random_walk
//! ```

use takagi::fractal::{sample_sign_sums, SampleConfig};
use takagi::{Radix, Result};

fn main() -> Result<()> {
    for r in [2u32, 3, 10] {
        let stats = sample_sign_sums(
            Radix::new(r)?,
            SampleConfig {
                radix: r,
                digits: 400,
                samples: 100_000,
                seed: 1,
            },
        )?;
        println!(
            "radix {r}: mean {:+.4}, variance {:.1}",
            stats.mean, stats.variance
        );
        for tail in &stats.tail_fractions {
            println!(
                "  P(|S| > {} sqrt(N)) = {:.5}",
                tail.multiple, tail.fraction
            );
        }
    }
    Ok(())
}
