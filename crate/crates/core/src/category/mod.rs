//! Simplicial LS category: categorical subcomplexes, `scat`, `gscat`,
//! `wscat`, and inequality checks between them.

mod categorical;
mod gscat;
mod inequalities;
mod scat;
mod wscat;

pub use categorical::{collapse_chain, is_categorical, CategoricalEngine, CategoricalStrategy};
pub use gscat::{gscat, GSCAT_EXHAUSTIVE_FACETS};
pub use inequalities::{verify_inequalities, InequalityCheck, InequalityReport, Interval, Verdict};
pub use scat::{scat, ScatOptions};
pub use wscat::{wscat, wscat_le, WscatWitness};

use std::sync::Arc;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::maps::{ContiguityChain, VertexMap};

/// A cover of a complex by subcomplexes, each given by facet indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub blocks: Vec<Vec<usize>>,
}

impl Cover {
    /// Every facet appears in some block, blocks are nonempty, and with
    /// `partition` set no facet appears twice.
    pub fn validate(&self, k: &Complex, partition: bool) -> Result<()> {
        let mut count = vec![0usize; k.num_facets()];
        for block in &self.blocks {
            if block.is_empty() {
                return Err(Error::InvalidCover("empty block".into()));
            }
            for &f in block {
                *count
                    .get_mut(f)
                    .ok_or_else(|| Error::InvalidCover(format!("facet index {f} out of range")))? += 1;
            }
        }
        if let Some(f) = count.iter().position(|&c| c == 0) {
            return Err(Error::InvalidCover(format!("facet {f} is not covered")));
        }
        if partition {
            if let Some(f) = count.iter().position(|&c| c > 1) {
                return Err(Error::InvalidCover(format!("facet {f} lies in two blocks")));
            }
        }
        Ok(())
    }

    /// Blocks as lists of facets given by labels.
    pub fn block_labels(&self, k: &Complex) -> Vec<Vec<Vec<String>>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&f| k.simplex_labels(&k.facets()[f])).collect())
            .collect()
    }
}

/// Outcome of a category computation: `lower ≤ value ≤ upper`, exact when
/// they agree. The witness realizes `upper` (it has `upper + 1` blocks);
/// `chains[i]` joins the inclusion of block `i` to a constant map.
#[derive(Clone, Debug)]
pub struct CatResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: Cover,
    pub chains: Vec<ContiguityChain>,
}

impl CatResult {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

fn check_block_chain(k: &Arc<Complex>, block: &[usize], chain: &ContiguityChain) -> Result<()> {
    let sub = k.subcomplex(block)?;
    if *chain.first() != VertexMap::embedding(&sub, k.clone()) {
        return Err(Error::InvalidChain("chain does not start at the block inclusion".into()));
    }
    if chain.last().constant_value().is_none() {
        return Err(Error::InvalidChain("chain does not end at a constant map".into()));
    }
    chain.validate()
}

/// Checks a `scat` witness: a facet partition with `upper + 1` blocks and,
/// per block, a valid chain from its inclusion to a constant.
pub fn verify_scat_witness(k: &Arc<Complex>, result: &CatResult) -> Result<()> {
    result.witness.validate(k, true)?;
    if result.witness.blocks.len() != result.upper + 1 {
        return Err(Error::InvalidCover("block count does not match the bound".into()));
    }
    if result.chains.len() != result.witness.blocks.len() {
        return Err(Error::InvalidChain("one chain per block expected".into()));
    }
    for (block, chain) in result.witness.blocks.iter().zip(&result.chains) {
        check_block_chain(k, block, chain)?;
    }
    Ok(())
}

/// Checks a `gscat` witness: a facet cover with `upper + 1` blocks, each
/// strongly collapsible.
pub fn verify_gscat_witness(k: &Complex, result: &CatResult) -> Result<()> {
    result.witness.validate(k, false)?;
    if result.witness.blocks.len() != result.upper + 1 {
        return Err(Error::InvalidCover("block count does not match the bound".into()));
    }
    for block in &result.witness.blocks {
        if !k.subcomplex(block)?.complex.is_strongly_collapsible() {
            return Err(Error::InvalidCover("block is not strongly collapsible".into()));
        }
    }
    Ok(())
}
