use std::collections::HashSet;

use super::arboricity::{arboricity, bfs_parents};
use super::Graph;
use crate::complex::{Complex, VertexId};
use crate::error::{Error, Result};

/// Edges (as edge indices) of the breadth-first spanning tree rooted at the
/// least vertex of a connected graph.
pub fn spanning_tree(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let parent = bfs_parents(g, VertexId::new(0));
    let mut tree: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, w))| parent[u.index()] == Some(w) || parent[w.index()] == Some(u))
        .map(|(e, _)| e)
        .collect();
    tree.sort_unstable();
    Ok(tree)
}

/// Replaces each listed edge facet `{u,w}` by `{u,m}`, `{m,w}` through a new
/// midpoint labelled `{u,w}` (with `'` appended on a clash).
pub fn bisect_edges(k: &Complex, facets: &[usize]) -> Result<Complex> {
    let g = Graph::new(k)?;
    let chosen: HashSet<usize> = facets.iter().copied().collect();
    let mut taken: HashSet<String> = k.labels().iter().cloned().collect();
    let mut out: Vec<Vec<String>> = Vec::new();
    for (i, f) in k.facets().iter().enumerate() {
        let labels = k.simplex_labels(f);
        if !chosen.contains(&i) {
            out.push(labels);
            continue;
        }
        if g.facet_edge(i).is_none() {
            return Err(Error::Precondition(format!("facet {i} is not an edge")));
        }
        let mut mid = format!("{{{},{}}}", labels[0], labels[1]);
        while taken.contains(&mid) {
            mid.push('\'');
        }
        taken.insert(mid.clone());
        out.push(vec![labels[0].clone(), mid.clone()]);
        out.push(vec![mid, labels[1].clone()]);
    }
    Complex::from_facets(out)
}

/// Bisects every edge off the canonical spanning tree.
pub fn bisect_off_tree(k: &Complex) -> Result<Complex> {
    let g = Graph::new(k)?;
    let tree: HashSet<usize> = spanning_tree(&g)?.into_iter().collect();
    let off: Vec<usize> = (0..g.num_edges())
        .filter(|e| !tree.contains(e))
        .map(|e| g.edge_facet(e))
        .collect();
    bisect_edges(k, &off)
}

/// First set of `m` edges (in canonical order of edge subsets) whose
/// bisection leaves a connected graph of arboricity 2, i.e. `scat = 1`.
pub fn find_bisection(k: &Complex, m: usize) -> Result<Option<(Vec<usize>, Complex)>> {
    let g = Graph::new(k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<usize> = (0..g.num_edges()).map(|e| g.edge_facet(e)).collect();
    let mut pick = Vec::with_capacity(m);
    Ok(choose(&edges, 0, m, &mut pick, &mut |facets| {
        let b = bisect_edges(k, facets).ok()?;
        let bg = Graph::new(&b).ok()?;
        (arboricity(&bg).0 == 2).then_some(b)
    }))
}

fn choose(
    items: &[usize],
    start: usize,
    m: usize,
    pick: &mut Vec<usize>,
    test: &mut dyn FnMut(&[usize]) -> Option<Complex>,
) -> Option<(Vec<usize>, Complex)> {
    if pick.len() == m {
        return test(pick).map(|c| (pick.clone(), c));
    }
    for i in start..items.len() {
        pick.push(items[i]);
        if let Some(found) = choose(items, i + 1, m, pick, test) {
            return Some(found);
        }
        pick.pop();
    }
    None
}
