//! Graphs as one-dimensional complexes: forests, cycles, arboricity, and
//! the spanning-tree bisection.

mod arboricity;
mod bisect;

pub use arboricity::{
    arboricity, forest_chain, forests_to_trees, graph_gscat, graph_scat, nash_williams_bound,
    ForestDecomposition,
};
pub use bisect::{bisect_edges, bisect_off_tree, find_bisection, spanning_tree};

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::complex::{Complex, VertexId};
use crate::error::{Error, Result};

/// Read-only graph view of a complex of dimension at most one. Edges are
/// numbered in facet order; `edge_facet` maps them back to facet indices.
#[derive(Clone, Debug)]
pub struct Graph<'a> {
    complex: &'a Complex,
    edges: Vec<(VertexId, VertexId)>,
    edge_facets: Vec<usize>,
}

impl<'a> Graph<'a> {
    pub fn new(complex: &'a Complex) -> Result<Self> {
        if complex.dim() > 1 {
            return Err(Error::NotAGraph(complex.dim()));
        }
        let mut edges = Vec::new();
        let mut edge_facets = Vec::new();
        for (i, f) in complex.facets().iter().enumerate() {
            if let [u, w] = f.vertices() {
                edges.push((*u, *w));
                edge_facets.push(i);
            }
        }
        Ok(Graph {
            complex,
            edges,
            edge_facets,
        })
    }

    pub fn complex(&self) -> &'a Complex {
        self.complex
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Facet index of edge `e`.
    pub fn edge_facet(&self, e: usize) -> usize {
        self.edge_facets[e]
    }

    /// Edge index of a facet, if the facet is an edge.
    pub fn facet_edge(&self, facet: usize) -> Option<usize> {
        self.edge_facets.binary_search(&facet).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.complex.is_connected()
    }

    /// True iff the given edges contain no cycle.
    pub fn is_forest(&self, edges: &[usize]) -> bool {
        let mut uf = UnionFind::<usize>::new(self.num_vertices());
        edges.iter().all(|&e| {
            let (u, w) = self.edges[e];
            uf.union(u.index(), w.index())
        })
    }

    /// A cycle among the given edges (all edges when `None`), as its
    /// vertex sequence, found by depth-first search.
    pub fn find_cycle(&self, edges: Option<&[usize]>) -> Option<Vec<VertexId>> {
        let all: Vec<usize>;
        let edges = match edges {
            Some(e) => e,
            None => {
                all = (0..self.edges.len()).collect();
                &all
            }
        };
        let mut adjacency: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for &e in edges {
            let (u, w) = self.edges[e];
            adjacency.entry(u.index()).or_default().push((w.index(), e));
            adjacency.entry(w.index()).or_default().push((u.index(), e));
        }
        for list in adjacency.values_mut() {
            list.sort_unstable();
        }
        let n = self.num_vertices();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || !adjacency.contains_key(&start) {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![(start, usize::MAX)];
            while let Some((v, via)) = stack.pop() {
                for &(w, e) in adjacency.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                    if e == via {
                        continue;
                    }
                    if seen[w] {
                        if let Some(cycle) = close_cycle(&parent, v, w) {
                            return Some(cycle.into_iter().map(VertexId::new).collect());
                        }
                        continue;
                    }
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    stack.push((w, e));
                }
            }
        }
        None
    }
}

/// Given a non-tree edge `v — w` between two discovered vertices of one
/// search tree, the cycle through their lowest common ancestor.
fn close_cycle(parent: &[Option<(usize, usize)>], v: usize, w: usize) -> Option<Vec<usize>> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while let Some((p, _)) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    let meet = pv.iter().position(|x| pw.contains(x))?;
    let lca = pv[meet];
    let mut cycle: Vec<usize> = pv[..=meet].to_vec();
    let back = pw.iter().position(|&x| x == lca)?;
    cycle.extend(pw[..back].iter().rev());
    if cycle.len() < 3 {
        return None;
    }
    Some(cycle)
}
