//! Arboricity with an explicit forest decomposition, and its relation to
//! the category of a graph.
//!
//! ```text
//! cargo run --example arboricity
//! ```

use scatkit::fixtures::graph_fixtures;
use scatkit::graph::{arboricity, graph_gscat, graph_scat, nash_williams_bound, Graph};

fn main() -> scatkit::Result<()> {
    for (name, k) in graph_fixtures() {
        let g = Graph::new(&k)?;
        let (a, forests) = arboricity(&g);
        forests.validate(&g)?;
        println!(
            "{name:>8}: arboricity {a} (Nash-Williams {}), scat {}, gscat {}",
            nash_williams_bound(&g)?,
            graph_scat(&k)?,
            graph_gscat(&k)?
        );
        for f in forests.edge_labels(&g) {
            println!("    {f:?}");
        }
    }
    Ok(())
}
