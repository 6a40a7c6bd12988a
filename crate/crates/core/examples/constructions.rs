//! Subdivision, products, joins, cones, suspensions and fat wedges.
//!
//! ```text
//! cargo run --example constructions
//! ```

use std::sync::Arc;

use scatkit::constructions::{cone, fat_wedge, join, product, sd, sd_iter, suspension, Product};
use scatkit::fixtures::{hollow_triangle, simplex};
use scatkit::Complex;

fn show(name: &str, k: &Complex) {
    println!("{name:>14}: {:>3} vertices {:>3} facets, dim {}", k.num_vertices(), k.num_facets(), k.dim());
}

fn main() -> scatkit::Result<()> {
    let t = hollow_triangle();
    let e = simplex(1);
    show("sd", &sd(&t));
    show("sd^2", &sd_iter(&t, 2));
    show("product", &product(&t, &e));
    show("join", &join(&t, &e));
    show("cone", &cone(&t));
    show("suspension", &suspension(&t));

    let w = fat_wedge(&t, "a", 2)?;
    show("fat wedge", w.complex());

    let p = Product::power(Arc::new(t), 2)?;
    let diagonal = p.diagonal()?;
    println!("diagonal simplicial: {}", diagonal.is_simplicial());
    Ok(())
}
