//! Searching coned annuli for a collapsible complex that is minimal yet has
//! category one.
//!
//! ```text
//! cargo run --example mother
//! ```

use scatkit::fixtures::{certify_mother, coned_annulus, find_mother};
use scatkit::ScatOptions;

fn main() {
    let opts = ScatOptions::default();
    for m in 2..=4 {
        let c = certify_mother(&coned_annulus(m), &opts);
        println!("m = {m}: {c:?}");
    }
    if let Some((m, k)) = find_mother(4, &opts) {
        println!("first hit at m = {m}: {} vertices, {} facets", k.num_vertices(), k.num_facets());
    }
}
