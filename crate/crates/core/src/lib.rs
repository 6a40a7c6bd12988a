//! Strong-homotopy invariants of finite simplicial complexes.

pub mod category;
pub mod cli;
pub mod collapse;
pub mod complex;
pub mod constructions;
pub mod contiguity;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod iso;
pub mod maps;
pub mod reproduce;

pub use category::{gscat, scat, wscat_le, CatResult, Cover, ScatOptions};
pub use collapse::{CollapseStep, Core};
pub use complex::{Complex, Simplex, Subcomplex, VertexId};
pub use contiguity::Decision;
pub use error::{Error, Result};
pub use maps::{compose, ContiguityChain, VertexMap};
