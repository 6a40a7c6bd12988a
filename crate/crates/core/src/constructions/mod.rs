//! Constructions on complexes and maps: barycentric subdivision, categorical
//! products, joins, and fat wedges.

pub mod fat_wedge;
pub mod join;
pub mod product;
pub mod subdivision;

pub use fat_wedge::{fat_wedge, fat_wedge_map, FatWedge};
pub use join::{cone, join, suspension};
pub use product::{power, product, product_map, Product};
pub use subdivision::{sd, sd_contiguity_chain, sd_iter, sd_label, sd_map, Subdivision};
