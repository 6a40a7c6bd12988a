//! Reading and writing complexes, maps and results in both formats.
//!
//! ```text
//! cargo run --example formats
//! ```

use std::sync::Arc;

use scatkit::io::{cat_result_to_json, complex_to_json, complex_to_text, map_to_json, parse_complex, parse_map};
use scatkit::{scat, ScatOptions, VertexMap};

fn main() -> scatkit::Result<()> {
    let k = parse_complex("# a square\na b\nb c\nc d\nd a\n")?;
    let json = complex_to_json(&k).to_string();
    println!("{json}");
    assert_eq!(parse_complex(&json)?, k);
    print!("{}", complex_to_text(&k));

    let m = parse_map(r#"{"source": "a b\nb c\nc d\nd a\n", "target": "x y\n", "assignment": {"a":"x","b":"y","c":"x","d":"y"}}"#)?;
    println!("{}", map_to_json(&m));
    let id = VertexMap::identity(Arc::new(k.clone()));
    println!("identity simplicial: {}", id.is_simplicial());

    let r = scat(&k, &ScatOptions::default())?;
    println!("{}", cat_result_to_json(&k, &r));
    Ok(())
}
