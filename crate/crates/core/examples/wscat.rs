//! Whitehead-style category: compressing the diagonal into the fat wedge.
//!
//! ```text
//! cargo run --example wscat
//! ```

use scatkit::category::wscat;
use scatkit::fixtures::{hollow_triangle, path};
use scatkit::wscat_le;

fn main() -> scatkit::Result<()> {
    let t = hollow_triangle();
    let d = wscat_le(&t, "a", 1, 200_000)?;
    println!("hollow triangle, wscat <= 1: {}", d.verdict());

    let (lower, upper, witness) = wscat(&path(2), "0", 2, 200_000)?;
    println!("path-2: wscat in [{lower}, {upper:?}]");
    if let Some(w) = witness {
        println!("  chain of {} maps into a fat wedge with {} facets", w.chain.len(), w.fat_wedge.num_facets());
    }
    Ok(())
}
