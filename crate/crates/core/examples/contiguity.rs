//! Simplicial maps, contiguity, and searching a contiguity class.
//!
//! ```text
//! cargo run --example contiguity
//! ```

use std::sync::Arc;

use scatkit::contiguity::{contiguity_class, in_same_contiguity_class, simplicial_maps};
use scatkit::fixtures::{cycle, path};
use scatkit::{Decision, VertexMap};

fn main() -> scatkit::Result<()> {
    let p = Arc::new(path(3));
    let id = VertexMap::identity(p.clone());
    let end = VertexMap::constant(p.clone(), p.clone(), p.vertex_or_err("3")?)?;
    match in_same_contiguity_class(&id, &end, 10_000)? {
        Decision::Yes(chain) => {
            chain.validate()?;
            println!("path-3: identity reaches a constant in {} steps", chain.len() - 1);
            for m in chain.maps() {
                println!("  {:?}", m.label_pairs());
            }
        }
        other => println!("path-3: {}", other.verdict()),
    }

    let c = Arc::new(cycle(4));
    let class = contiguity_class(&VertexMap::identity(c.clone()), 10_000)?;
    let (all, _) = simplicial_maps(&c, &c, 100_000)?;
    println!(
        "C4: identity class has {} of {} self-maps (exhaustive {})",
        class.members.len(),
        all.len(),
        class.exhaustive
    );
    Ok(())
}
