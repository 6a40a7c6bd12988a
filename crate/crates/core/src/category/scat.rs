use std::sync::Arc;

use crate::category::categorical::{collapse_chain, CategoricalEngine, CategoricalStrategy};
use crate::category::{CatResult, Cover};
use crate::collapse::Core;
use crate::complex::{Complex, Mask};
use crate::contiguity::Decision;
use crate::error::{Error, Result};
use crate::graph::{arboricity, forest_chain, Graph};
use crate::maps::{ContiguityChain, VertexMap};

/// Knobs for [`scat`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatOptions {
    /// Map-space search budget per categorical test.
    pub budget: usize,
    pub strategy: CategoricalStrategy,
    /// Search on the core and transfer the witness back.
    pub use_core: bool,
    /// Connected graphs are answered by arboricity.
    pub graph_fast_path: bool,
    /// Partition-search nodes per block count before the level is given up.
    pub partition_budget: usize,
}

impl Default for ScatOptions {
    fn default() -> Self {
        ScatOptions {
            budget: 200_000,
            strategy: CategoricalStrategy::Auto,
            use_core: true,
            graph_fast_path: true,
            partition_budget: 1_000_000,
        }
    }
}

/// Simplicial LS category: least `n` such that the facets split into `n + 1`
/// categorical blocks. Exact when the search settles every block count
/// below the best cover found, an interval otherwise.
pub fn scat(k: &Complex, opts: &ScatOptions) -> Result<CatResult> {
    if opts.budget == 0 || opts.partition_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    k.ensure_searchable()?;
    let karc = Arc::new(k.clone());
    if k.num_vertices() == 1 {
        return Ok(point_result(&karc));
    }
    if opts.graph_fast_path && k.dim() <= 1 && k.is_connected() {
        return graph_result(&karc);
    }
    let core = if opts.use_core {
        Some(k.core())
    } else {
        None
    };
    let w = Arc::new(core.as_ref().map_or_else(|| k.clone(), |c| c.complex.clone()));
    if w.num_facets() > crate::complex::MAX_SEARCH_SIZE {
        return Err(Error::TooLarge {
            found: w.num_facets(),
            limit: crate::complex::MAX_SEARCH_SIZE,
        });
    }
    if w.num_vertices() == 1 {
        return Ok(point_result(&karc));
    }
    let mut engine = CategoricalEngine::new(w.clone(), opts.budget, opts.strategy)?;
    let mut lower = w.components().len().saturating_sub(1);
    if opts.use_core {
        lower = lower.max(1);
    }
    let (mut blocks, mut chains) = upper_cover(&w);
    let mut upper = blocks.len() - 1;
    let (first, last) = (lower, upper);
    for level in first..last {
        match partition_level(&mut engine, level + 1, opts.partition_budget)? {
            Level::Found(found, found_chains) => {
                blocks = found;
                chains = found_chains;
                upper = level;
                break;
            }
            Level::Refuted => {
                lower = level + 1;
            }
            Level::Inconclusive => {}
        }
    }
    let (witness, chains) = match &core {
        Some(core) => transfer(&karc, core, &w, &blocks, &chains)?,
        None => (Cover { blocks }, chains),
    };
    Ok(CatResult {
        lower,
        upper,
        exact: lower == upper,
        witness,
        chains,
    })
}

fn point_result(k: &Arc<Complex>) -> CatResult {
    let all: Vec<usize> = (0..k.num_facets()).collect();
    let chain = collapse_chain(k, &all).expect("strongly collapsible");
    CatResult {
        lower: 0,
        upper: 0,
        exact: true,
        witness: Cover { blocks: vec![all] },
        chains: vec![chain],
    }
}

fn graph_result(k: &Arc<Complex>) -> Result<CatResult> {
    let g = Graph::new(k)?;
    let (upsilon, d) = arboricity(&g);
    let blocks: Vec<Vec<usize>> = d
        .forests
        .iter()
        .filter(|f| !f.is_empty())
        .map(|f| f.iter().map(|&e| g.edge_facet(e)).collect())
        .collect();
    let chains = blocks
        .iter()
        .map(|b| forest_chain(k, b).ok_or_else(|| Error::InvalidChain("forest block".into())))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(blocks.len(), upsilon);
    Ok(CatResult {
        lower: upsilon - 1,
        upper: upsilon - 1,
        exact: true,
        witness: Cover { blocks },
        chains,
    })
}

/// The better of two partitions into blocks with strongly collapsible
/// components: stars of a greedy vertex hitting set, and greedy growth.
fn upper_cover(w: &Arc<Complex>) -> (Vec<Vec<usize>>, Vec<ContiguityChain>) {
    let cones = cone_cover(w);
    let grown = greedy_cover(w);
    let blocks = if grown.len() < cones.len() { grown } else { cones };
    let chains = blocks
        .iter()
        .map(|b| collapse_chain(w, b).expect("collapsible block"))
        .collect();
    (blocks, chains)
}

fn cone_cover(w: &Complex) -> Vec<Vec<usize>> {
    let mut open: Vec<bool> = vec![true; w.num_facets()];
    let mut blocks = Vec::new();
    while open.iter().any(|&o| o) {
        let best = w
            .vertices()
            .max_by_key(|&v| {
                let hits = w
                    .facets()
                    .iter()
                    .enumerate()
                    .filter(|(i, f)| open[*i] && f.contains(v))
                    .count();
                (hits, std::cmp::Reverse(v))
            })
            .expect("nonempty complex");
        let block: Vec<usize> = (0..w.num_facets())
            .filter(|&i| open[i] && w.facets()[i].contains(best))
            .collect();
        for &i in &block {
            open[i] = false;
        }
        blocks.push(block);
    }
    blocks
}

#[allow(clippy::needless_range_loop)]
fn greedy_cover(w: &Arc<Complex>) -> Vec<Vec<usize>> {
    let mut open: Vec<bool> = vec![true; w.num_facets()];
    let mut blocks = Vec::new();
    for start in 0..w.num_facets() {
        if !open[start] {
            continue;
        }
        open[start] = false;
        let mut block = vec![start];
        for f in start + 1..w.num_facets() {
            if !open[f] {
                continue;
            }
            block.push(f);
            if collapse_chain(w, &block).is_some() {
                open[f] = false;
            } else {
                block.pop();
            }
        }
        blocks.push(block);
    }
    blocks
}

enum Level {
    Found(Vec<Vec<usize>>, Vec<ContiguityChain>),
    Refuted,
    Inconclusive,
}

struct PartitionSearch<'e> {
    engine: &'e mut CategoricalEngine,
    facets: usize,
    target: usize,
    nodes: usize,
    node_budget: usize,
    inconclusive: bool,
    aborted: bool,
}

impl PartitionSearch<'_> {
    fn dfs(&mut self, i: usize, blocks: &mut Vec<Mask>) -> Result<bool> {
        if self.nodes >= self.node_budget {
            self.aborted = true;
            return Ok(false);
        }
        self.nodes += 1;
        if i == self.facets {
            return Ok(blocks.len() == self.target);
        }
        if blocks.len() + (self.facets - i) < self.target {
            return Ok(false);
        }
        for b in 0..blocks.len() {
            let old = blocks[b];
            match self.engine.test_mask(old | 1 << i)? {
                Decision::Yes(_) => {
                    blocks[b] = old | 1 << i;
                    if self.dfs(i + 1, blocks)? {
                        return Ok(true);
                    }
                    blocks[b] = old;
                    if self.aborted {
                        return Ok(false);
                    }
                }
                Decision::No => {}
                Decision::Unknown { .. } => self.inconclusive = true,
            }
        }
        if blocks.len() < self.target {
            blocks.push(1 << i);
            if self.dfs(i + 1, blocks)? {
                return Ok(true);
            }
            blocks.pop();
        }
        Ok(false)
    }
}

/// Searches for a partition of the facets into exactly `target` nonempty
/// categorical blocks, in restricted-growth order.
fn partition_level(engine: &mut CategoricalEngine, target: usize, node_budget: usize) -> Result<Level> {
    let facets = engine.complex().num_facets();
    if target > facets {
        return Ok(Level::Refuted);
    }
    let mut search = PartitionSearch {
        engine,
        facets,
        target,
        nodes: 0,
        node_budget,
        inconclusive: false,
        aborted: false,
    };
    let mut blocks = Vec::new();
    if search.dfs(0, &mut blocks)? {
        let mut out = Vec::with_capacity(blocks.len());
        let mut chains = Vec::with_capacity(blocks.len());
        for mask in blocks {
            let block: Vec<usize> = (0..facets).filter(|i| mask & (1 << i) != 0).collect();
            let chain = if block.len() == 1 {
                let k = search.engine.complex();
                let sub = k.subcomplex(&block)?;
                let inclusion = VertexMap::embedding(&sub, k.clone());
                let point = VertexMap::constant(inclusion.source().clone(), k.clone(), inclusion.apply(crate::complex::VertexId::new(0)))?;
                ContiguityChain::new(vec![inclusion, point])?
            } else {
                match search.engine.test_mask(mask)? {
                    Decision::Yes(c) => (*c).clone(),
                    _ => return Err(Error::InvalidChain("accepted block lost its chain".into())),
                }
            };
            out.push(block);
            chains.push(chain);
        }
        return Ok(Level::Found(out, chains));
    }
    if search.aborted || search.inconclusive {
        Ok(Level::Inconclusive)
    } else {
        Ok(Level::Refuted)
    }
}

/// Moves a witness on the core `w` back to `k`: each facet of `k` joins the
/// block of a core facet containing its retraction image, and each block's
/// chain is the collapse of `k` restricted to it followed by the core chain
/// precomposed with the retraction.
fn transfer(
    k: &Arc<Complex>,
    core: &Core,
    w: &Arc<Complex>,
    blocks: &[Vec<usize>],
    chains: &[ContiguityChain],
) -> Result<(Cover, Vec<ContiguityChain>)> {
    let r = core.retraction(k);
    let mut k_blocks: Vec<Vec<usize>> = vec![Vec::new(); blocks.len()];
    for (i, f) in k.facets().iter().enumerate() {
        let image = crate::complex::Simplex::new(f.vertices().iter().map(|v| r[v.index()]))
            .expect("nonempty");
        let b = blocks
            .iter()
            .position(|block| block.iter().any(|&c| image.is_face_of(&w.facets()[c])))
            .ok_or_else(|| Error::InvalidCover("retraction image outside the core".into()))?;
        k_blocks[b].push(i);
    }
    let collapse = core.collapse_assignments(k);
    let mut out = Vec::with_capacity(blocks.len());
    for (block, chain) in k_blocks.iter().zip(chains) {
        let sub = k.subcomplex(block)?;
        let source = Arc::new(sub.complex.clone());
        let make = |a: Vec<_>| VertexMap::new(source.clone(), k.clone(), a);
        let mut maps = Vec::new();
        for a in &collapse {
            maps.push(make(sub.embedding.iter().map(|v| a[v.index()]).collect())?);
        }
        for m in &chain.maps()[1..] {
            let core_block = m.source();
            let assignment = sub
                .embedding
                .iter()
                .map(|v| {
                    let local = core_block
                        .vertex(w.label(r[v.index()]))
                        .ok_or_else(|| Error::InvalidChain("retraction leaves the block".into()))?;
                    let image = w.label(m.apply(local));
                    k.vertex_or_err(image)
                })
                .collect::<Result<Vec<_>>>()?;
            maps.push(make(assignment)?);
        }
        out.push(ContiguityChain::new(maps)?);
    }
    Ok((Cover { blocks: k_blocks }, out))
}
