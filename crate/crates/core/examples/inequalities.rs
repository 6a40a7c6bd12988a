//! Checking the inequalities between scat, wscat, subdivision, products
//! and core size on a pair of complexes.
//!
//! ```text
//! cargo run --example inequalities
//! ```

use scatkit::category::verify_inequalities;
use scatkit::fixtures::{hollow_triangle, path};
use scatkit::ScatOptions;

fn main() -> scatkit::Result<()> {
    let report = verify_inequalities(&hollow_triangle(), &path(1), &ScatOptions::default())?;
    for c in &report.checks {
        println!("{:?}  {}", c.verdict, c.name);
    }
    println!("{} violations", report.violations());
    Ok(())
}
