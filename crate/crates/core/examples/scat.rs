//! Simplicial LS category with a certified cover: every block comes with a
//! contiguity chain from its inclusion to a constant.
//!
//! ```text
//! cargo run --example scat
//! ```

use std::sync::Arc;

use scatkit::category::{verify_scat_witness, CategoricalStrategy};
use scatkit::fixtures::{boundary_simplex, complete_graph, hollow_triangle, sd_k5};
use scatkit::{scat, Complex, ScatOptions};

fn report(name: &str, k: &Complex, opts: &ScatOptions) -> scatkit::Result<()> {
    let r = scat(k, opts)?;
    verify_scat_witness(&Arc::new(k.clone()), &r)?;
    let value = match r.value() {
        Some(v) => v.to_string(),
        None => format!("[{}, {}]", r.lower, r.upper),
    };
    println!("{name:>16}: scat = {value}");
    for (block, chain) in r.witness.block_labels(k).iter().zip(&r.chains) {
        println!("    {block:?} contracts in {} steps", chain.len() - 1);
    }
    Ok(())
}

fn main() -> scatkit::Result<()> {
    let opts = ScatOptions::default();
    report("hollow triangle", &hollow_triangle(), &opts)?;
    report("boundary 3", &boundary_simplex(3), &opts)?;
    report("K5", &complete_graph(5), &opts)?;
    let generic = ScatOptions {
        strategy: CategoricalStrategy::Collapse,
        budget: 5_000,
        ..Default::default()
    };
    report("sd K5", &sd_k5(), &generic)?;
    Ok(())
}
