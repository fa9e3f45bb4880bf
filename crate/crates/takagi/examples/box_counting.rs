//! Interval approximations of the self-similar sets and their measured
//! box-counting slope.
//!
//! At grids aligned with the construction the box counts are exactly
//! self-similar, so the least-squares slope equals the similarity
//! dimension to machine precision.
//!
//! ```bash
//! cargo run --example box_counting
//! ```

use takagi::fractal::{
    box_counting_slope, dimension_bounds, grid_box_counts, ifs_approximation, DriftSign,
};
use takagi::{Radix, Result};

fn main() -> Result<()> {
    for (r, n) in [(2u32, 3u64), (3, 3)] {
        let radix = Radix::new(r)?;
        let set = ifs_approximation(n, radix, DriftSign::Plus, 3)?;
        println!(
            "r={r}, word length {n}: {} intervals of length {}",
            set.count(),
            set.piece_length()
        );
        let grid: Vec<u32> = (1..=3).map(|k| (k * n) as u32).collect();
        for (m, boxes) in grid_box_counts(&set, &grid)? {
            println!("  grid r^-{m:<2} -> {boxes} boxes");
        }
        let slope = box_counting_slope(&set, &grid)?;
        let dims = dimension_bounds(n, radix, DriftSign::Plus)?;
        println!(
            "  slope {slope:.9} vs similarity dimension {:.9}\n",
            dims.exact_ratio
        );
    }

    // The first few intervals of the binary depth-2 approximation.
    let set = ifs_approximation(3, Radix::new(2)?, DriftSign::Plus, 2)?;
    println!("depth-2 binary intervals:");
    for (lo, hi) in set.intervals() {
        println!("  [{lo}, {hi}]");
    }
    Ok(())
}
