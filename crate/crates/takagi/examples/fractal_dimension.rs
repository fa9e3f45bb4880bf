//! Word alphabet sizes and similarity dimensions of the self-similar
//! sets inside the infinite-derivative sets.
//!
//! The exact ratio log(#words) / (n log r) grows toward 1 with the
//! word length, which is how the full sets reach Hausdorff dimension
//! one while keeping Lebesgue measure zero.
//!
//! ```bash
//! cargo run --example fractal_dimension
//! ```

use takagi::fractal::{dimension_bounds, DriftSign};
use takagi::{Radix, Result};

fn main() -> Result<()> {
    println!(
        "{:>3} {:>3} {:>10} {:>12} {:>12}",
        "r", "n", "words", "exact", "bound"
    );
    for r in [2u32, 3, 4, 5] {
        let radix = Radix::new(r)?;
        for n in [3u64, 5, 7, 9] {
            let dims = dimension_bounds(n, radix, DriftSign::Plus)?;
            println!(
                "{:>3} {:>3} {:>10} {:>12.6} {:>12.6}",
                r, n, dims.count, dims.exact_ratio, dims.lemma_bound
            );
        }
    }
    // The trend continues: at r = 2, n = 21 the ratio clears 0.9.
    let trend = dimension_bounds(21, Radix::new(2)?, DriftSign::Plus)?;
    println!(
        "\nr=2 n=21: {} words, exact ratio {:.6}",
        trend.count, trend.exact_ratio
    );
    Ok(())
}
