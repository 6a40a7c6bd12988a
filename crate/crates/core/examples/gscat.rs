//! Geometric category: covers by strongly collapsible subcomplexes.
//!
//! ```text
//! cargo run --example gscat
//! ```

use scatkit::constructions::suspension;
use scatkit::fixtures::{complete_graph, hollow_triangle, sd_k5};
use scatkit::{gscat, scat, ScatOptions};

fn main() -> scatkit::Result<()> {
    for (name, k) in [
        ("K5", complete_graph(5)),
        ("sd K5", sd_k5()),
        ("suspension C3", suspension(&hollow_triangle())),
    ] {
        let g = gscat(&k)?;
        let s = scat(&k, &ScatOptions::default())?;
        println!("{name:>14}: gscat in [{}, {}], scat lower bound {}", g.lower, g.upper, s.lower);
        for block in g.witness.block_labels(&k) {
            println!("    {block:?}");
        }
    }
    Ok(())
}
