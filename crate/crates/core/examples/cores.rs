//! Strong collapses down to the core, and strong homotopy type by core
//! isomorphism.
//!
//! ```text
//! cargo run --example cores
//! ```

use scatkit::fixtures::{cycle, hollow_triangle, mother, simplex};
use scatkit::iso::{isomorphic, strong_homotopy_equivalent};

fn main() -> scatkit::Result<()> {
    let k = simplex(3);
    let core = k.core();
    println!("simplex-3: {} vertices, core has {}", k.num_vertices(), core.complex.num_vertices());
    for step in &core.steps {
        println!("  delete {} (dominated by {})", step.removed, step.dominator);
    }
    core.replay(&k)?;

    let m = mother();
    println!(
        "mother: f-vector {:?}, euler {}, strongly collapsible {}, collapsible {}",
        m.f_vector(),
        m.euler_characteristic(),
        m.is_strongly_collapsible(),
        m.is_collapsible()?
    );

    let t = hollow_triangle();
    println!("C3 vs C4 isomorphic: {}", isomorphic(&t, &cycle(4)));
    println!("C4 vs C5 strong homotopy equivalent: {}", strong_homotopy_equivalent(&cycle(4), &cycle(5)));
    Ok(())
}
