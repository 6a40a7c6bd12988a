use std::sync::Arc;

use crate::category::categorical::collapse_chain;
use crate::category::{CatResult, Cover};
use crate::complex::{Complex, Mask};
use crate::error::{Error, Result};
use crate::graph::{arboricity, forests_to_trees, Graph};

/// Complexes with at most this many facets get an exhaustive cover search.
pub const GSCAT_EXHAUSTIVE_FACETS: usize = 14;

/// Geometric simplicial LS category: least `n` such that `n + 1` strongly
/// collapsible subcomplexes (given by facet sets, possibly overlapping)
/// cover the complex. Exact for graphs and for complexes with few facets;
/// otherwise an interval.
pub fn gscat(k: &Complex) -> Result<CatResult> {
    k.ensure_searchable()?;
    let karc = Arc::new(k.clone());
    let all: Vec<usize> = (0..k.num_facets()).collect();
    if k.is_strongly_collapsible() {
        return Ok(finish(&karc, 0, vec![all]));
    }
    if k.dim() <= 1 {
        let blocks = graph_trees(k)?;
        return Ok(finish(&karc, blocks.len() - 1, blocks));
    }
    if k.num_facets() <= GSCAT_EXHAUSTIVE_FACETS {
        let blocks = exhaustive_cover(k)?;
        return Ok(finish(&karc, blocks.len() - 1, blocks));
    }
    let blocks = greedy_cover(k)?;
    let lower = k.components().len().saturating_sub(1).max(1);
    let mut r = finish(&karc, lower, blocks);
    r.exact = r.lower == r.upper;
    Ok(r)
}

fn finish(k: &Arc<Complex>, lower: usize, blocks: Vec<Vec<usize>>) -> CatResult {
    let chains = blocks
        .iter()
        .filter_map(|b| collapse_chain(k, b))
        .collect::<Vec<_>>();
    let upper = blocks.len() - 1;
    CatResult {
        lower,
        upper,
        exact: lower == upper,
        witness: Cover { blocks },
        chains: if chains.len() == upper + 1 { chains } else { Vec::new() },
    }
}

/// Per component: a single vertex, or as many spanning trees as the
/// arboricity.
fn graph_trees(k: &Complex) -> Result<Vec<Vec<usize>>> {
    let mut blocks = Vec::new();
    for comp in k.components() {
        let facets: Vec<usize> = k
            .facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| comp.contains(&f.vertices()[0]))
            .map(|(i, _)| i)
            .collect();
        let sub = k.subcomplex(&facets)?;
        if sub.complex.num_vertices() == 1 {
            blocks.push(facets);
            continue;
        }
        let g = Graph::new(&sub.complex)?;
        let (_, d) = arboricity(&g);
        for tree in forests_to_trees(&g, &d)? {
            if !tree.is_empty() {
                blocks.push(tree.iter().map(|&e| facets[g.edge_facet(e)]).collect());
            }
        }
    }
    Ok(blocks)
}

fn mask_facets(mask: Mask, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

/// Minimum cover by inclusion-maximal strongly collapsible facet sets.
fn exhaustive_cover(k: &Complex) -> Result<Vec<Vec<usize>>> {
    let n = k.num_facets();
    let full: Mask = (1 << n) - 1;
    let mut good: Vec<Mask> = Vec::new();
    for mask in 1..=full {
        let sub = k.subcomplex(&mask_facets(mask, n))?;
        if sub.complex.is_connected() && sub.complex.is_strongly_collapsible() {
            good.push(mask);
        }
    }
    let maximal: Vec<Mask> = good
        .iter()
        .copied()
        .filter(|&m| !good.iter().any(|&o| o != m && o & m == m))
        .collect();
    for size in 1..=n {
        let mut chosen = Vec::new();
        if cover_search(&maximal, full, 0, size, &mut chosen) {
            return Ok(chosen.into_iter().map(|m| mask_facets(m, n)).collect());
        }
    }
    Err(Error::InvalidCover("no cover by single facets".into()))
}

fn cover_search(sets: &[Mask], full: Mask, covered: Mask, left: usize, chosen: &mut Vec<Mask>) -> bool {
    if covered == full {
        return true;
    }
    if left == 0 {
        return false;
    }
    let first = (!covered & full).trailing_zeros();
    for &s in sets.iter().filter(|&&s| s & (1 << first) != 0) {
        chosen.push(s);
        if cover_search(sets, full, covered | s, left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Partition into strongly collapsible blocks grown greedily.
#[allow(clippy::needless_range_loop)]
fn greedy_cover(k: &Complex) -> Result<Vec<Vec<usize>>> {
    let mut open = vec![true; k.num_facets()];
    let mut blocks = Vec::new();
    for start in 0..k.num_facets() {
        if !open[start] {
            continue;
        }
        open[start] = false;
        let mut block = vec![start];
        for f in start + 1..k.num_facets() {
            if !open[f] {
                continue;
            }
            block.push(f);
            let sub = k.subcomplex(&block)?;
            if sub.complex.is_connected() && sub.complex.is_strongly_collapsible() {
                open[f] = false;
            } else {
                block.pop();
            }
        }
        blocks.push(block);
    }
    Ok(blocks)
}
