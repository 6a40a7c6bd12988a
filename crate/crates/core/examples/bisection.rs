//! Subdividing edges off a spanning tree, and searching for edge sets whose
//! subdivision changes the category.
//!
//! ```text
//! cargo run --example bisection
//! ```

use scatkit::fixtures::complete_graph;
use scatkit::graph::{bisect_off_tree, find_bisection, graph_scat};

fn main() -> scatkit::Result<()> {
    let k = complete_graph(5);
    let b = bisect_off_tree(&k)?;
    println!(
        "K5: scat {}; off-tree bisection has {} vertices and scat {}",
        graph_scat(&k)?,
        b.num_vertices(),
        graph_scat(&b)?
    );
    match find_bisection(&k, 3)? {
        Some((edges, l)) => println!("bisecting facets {edges:?} gives scat {}", graph_scat(&l)?),
        None => println!("no set of at most 3 edges changes scat"),
    }
    Ok(())
}
