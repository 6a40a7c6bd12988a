//! Running the built-in verification suite, optionally with a fixture
//! replaced.
//!
//! ```text
//! cargo run --release --example reproduce
//! ```

use scatkit::fixtures::simplex;
use scatkit::reproduce::Suite;

fn main() -> scatkit::Result<()> {
    for o in Suite::new().run() {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        println!("{mark} {:>2} {:<48} {:.2}s  {}", o.id, o.title, o.seconds, o.detail);
    }
    let broken = Suite::new().with_fixture("hollow-triangle", simplex(2))?;
    let o = broken.run_one(1).expect("check 1 exists");
    println!("with a filled triangle, check 1 passed: {}", o.passed);
    Ok(())
}
