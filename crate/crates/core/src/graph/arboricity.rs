use std::collections::VecDeque;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::Graph;
use crate::complex::{Complex, VertexId};
use crate::error::{Error, Result};
use crate::maps::{ContiguityChain, VertexMap};

/// Edge-disjoint forests (as edge indices of a [`Graph`]) whose union is
/// every edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestDecomposition {
    pub forests: Vec<Vec<usize>>,
}

impl ForestDecomposition {
    /// Disjoint, exhaustive, acyclic.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.num_edges()];
        for forest in &self.forests {
            for &e in forest {
                if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
                    return Err(Error::InvalidCover(format!("edge {e} repeated or unknown")));
                }
            }
            if !g.is_forest(forest) {
                return Err(Error::InvalidCover("a block contains a cycle".into()));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidCover("an edge is uncovered".into()));
        }
        Ok(())
    }

    /// Edge label pairs per forest.
    pub fn edge_labels(&self, g: &Graph) -> Vec<Vec<[String; 2]>> {
        self.forests
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&e| {
                        let (u, w) = g.edges()[e];
                        [g.complex().label(u).to_string(), g.complex().label(w).to_string()]
                    })
                    .collect()
            })
            .collect()
    }
}

/// Largest `⌈q / (n − 1)⌉` over vertex subsets of size `n ≥ 2`, where `q`
/// counts the edges induced by the subset. Exhaustive up to 12 vertices,
/// otherwise over the whole graph and all subsets of at most 8 vertices; it
/// is always a lower bound for the arboricity.
pub fn nash_williams_bound(g: &Graph) -> Result<usize> {
    let n = g.num_vertices();
    if n < 2 || g.num_edges() == 0 {
        return Err(Error::Precondition(
            "the bound needs at least two vertices and one edge".into(),
        ));
    }
    let mut best = g.num_edges().div_ceil(n - 1);
    if n > 64 {
        return Ok(best);
    }
    let mut adjacency = vec![0u64; n];
    for &(u, w) in g.edges() {
        adjacency[u.index()] |= 1 << w.index();
        adjacency[w.index()] |= 1 << u.index();
    }
    let max_size = if n <= 12 { n } else { 8.min(n) };
    let mut subset = Vec::with_capacity(max_size);
    subsets(&adjacency, 0, 0, 0, max_size, &mut subset, &mut best);
    Ok(best)
}

fn subsets(
    adjacency: &[u64],
    start: usize,
    mask: u64,
    edges: usize,
    max_size: usize,
    subset: &mut Vec<usize>,
    best: &mut usize,
) {
    if subset.len() >= 2 {
        *best = (*best).max(edges.div_ceil(subset.len() - 1));
    }
    if subset.len() == max_size {
        return;
    }
    for v in start..adjacency.len() {
        let added = (adjacency[v] & mask).count_ones() as usize;
        subset.push(v);
        subsets(adjacency, v + 1, mask | (1 << v), edges + added, max_size, subset, best);
        subset.pop();
    }
}

/// Union-find with undo, one per forest in the backtracking search.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns false (and records nothing) if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
        true
    }

    fn undo(&mut self) {
        if let Some((a, b)) = self.history.pop() {
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

struct ForestSearch<'g> {
    edges: &'g [(VertexId, VertexId)],
    dsu: Vec<RollbackDsu>,
    forest_of: Vec<usize>,
    sizes: Vec<usize>,
}

impl ForestSearch<'_> {
    fn assign(&mut self, e: usize) -> bool {
        if e == self.edges.len() {
            return true;
        }
        let (u, w) = self.edges[e];
        let opened = self.sizes.iter().take_while(|&&s| s > 0).count();
        let limit = (opened + 1).min(self.dsu.len());
        for f in 0..limit {
            if self.dsu[f].union(u.index(), w.index()) {
                self.forest_of[e] = f;
                self.sizes[f] += 1;
                if self.assign(e + 1) {
                    return true;
                }
                self.sizes[f] -= 1;
                self.dsu[f].undo();
            }
        }
        false
    }
}

/// Exact arboricity: starting at the Nash-Williams bound, backtracks over
/// edge-to-forest assignments (a new forest may only be opened after all
/// earlier ones are nonempty). An edgeless graph has arboricity 1.
pub fn arboricity(g: &Graph) -> (usize, ForestDecomposition) {
    if g.num_edges() == 0 {
        return (
            1,
            ForestDecomposition {
                forests: vec![Vec::new()],
            },
        );
    }
    let n = g.num_vertices();
    let mut k = nash_williams_bound(g).expect("nontrivial graph");
    loop {
        let mut search = ForestSearch {
            edges: g.edges(),
            dsu: (0..k).map(|_| RollbackDsu::new(n)).collect(),
            forest_of: vec![0; g.num_edges()],
            sizes: vec![0; k],
        };
        if search.assign(0) {
            let mut forests = vec![Vec::new(); k];
            for (e, &f) in search.forest_of.iter().enumerate() {
                forests[f].push(e);
            }
            let d = ForestDecomposition { forests };
            debug_assert!(d.validate(g).is_ok());
            return (k, d);
        }
        k += 1;
    }
}

/// Extends each forest to a tree of the connected graph `g` by linking its
/// trees along shortest paths, skipping path edges that would close a
/// cycle. Trees may share edges; their number equals the number of forests.
pub fn forests_to_trees(g: &Graph, d: &ForestDecomposition) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.num_vertices();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, w)) in g.edges().iter().enumerate() {
        adjacency[u.index()].push((w.index(), e));
        adjacency[w.index()].push((u.index(), e));
    }
    let mut out = Vec::with_capacity(d.forests.len());
    for forest in &d.forests {
        let mut tree = forest.clone();
        let mut uf = UnionFind::<usize>::new(n);
        let mut touched = vec![false; n];
        for &e in forest {
            let (u, w) = g.edges()[e];
            uf.union(u.index(), w.index());
            touched[u.index()] = true;
            touched[w.index()] = true;
        }
        while let Some(root) = (0..n).find(|&v| touched[v]) {
            let base = uf.find(root);
            let in_base = |uf: &UnionFind<usize>, v: usize| uf.find(v) == base;
            let pending = (0..n).any(|v| touched[v] && !in_base(&uf, v));
            if !pending {
                break;
            }
            // Multi-source BFS from the base tree to a vertex of another tree.
            let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
            let mut seen: Vec<bool> = (0..n).map(|v| in_base(&uf, v) && touched[v]).collect();
            let mut queue: VecDeque<usize> = (0..n).filter(|&v| seen[v]).collect();
            let mut hit = None;
            while let Some(v) = queue.pop_front() {
                if touched[v] && !in_base(&uf, v) {
                    hit = Some(v);
                    break;
                }
                for &(w, e) in &adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        via[w] = Some((v, e));
                        queue.push_back(w);
                    }
                }
            }
            let mut v = hit.expect("connected graph");
            while let Some((p, e)) = via[v] {
                if uf.union(p, v) {
                    tree.push(e);
                }
                touched[p] = true;
                touched[v] = true;
                v = p;
            }
        }
        tree.sort_unstable();
        out.push(tree);
    }
    Ok(out)
}

/// `scat G = Υ(G) − 1` for a connected graph.
pub fn graph_scat(k: &Complex) -> Result<usize> {
    let g = Graph::new(k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(arboricity(&g).0 - 1)
}

/// `gscat G = Υ(G) − 1` for a connected graph.
pub fn graph_gscat(k: &Complex) -> Result<usize> {
    graph_scat(k)
}

/// A contiguity chain from the inclusion of the forest spanned by the given
/// facets of a connected graph `k` to a constant map: first every tree is
/// folded onto its least vertex one depth level at a time, then the tree
/// roots walk along shortest paths of `k` to the first root. `None` if the
/// facets contain a cycle or `k` is not a connected graph.
pub fn forest_chain(k: &Arc<Complex>, facets: &[usize]) -> Option<ContiguityChain> {
    let g = Graph::new(k).ok()?;
    if !g.is_connected() {
        return None;
    }
    let edges: Vec<usize> = facets.iter().filter_map(|&f| g.facet_edge(f)).collect();
    if !g.is_forest(&edges) {
        return None;
    }
    let sub = k.subcomplex(facets).ok()?;
    let local = &sub.complex;
    let m = local.num_vertices();
    let mut adjacency = vec![Vec::new(); m];
    for f in local.facets() {
        if let [u, w] = f.vertices() {
            adjacency[u.index()].push(w.index());
            adjacency[w.index()].push(u.index());
        }
    }
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![usize::MAX; m];
    let mut roots = Vec::new();
    for r in 0..m {
        if depth[r] != usize::MAX {
            continue;
        }
        roots.push(r);
        depth[r] = 0;
        parent[r] = r;
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    let ancestor_at = |mut v: usize, d: usize| {
        while depth[v] > d {
            v = parent[v];
        }
        v
    };
    let source = Arc::new(local.clone());
    let make = |a: Vec<VertexId>| VertexMap::new(source.clone(), k.clone(), a).expect("total");
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let mut maps = Vec::new();
    for d in (0..=max_depth).rev() {
        maps.push(make((0..m).map(|v| sub.embedding[ancestor_at(v, d)]).collect()));
    }
    let component_root: Vec<usize> = (0..m).map(|v| ancestor_at(v, 0)).collect();
    let mut current: Vec<VertexId> = maps.last().expect("at least one level").assignment().to_vec();
    let target = sub.embedding[roots[0]];
    let toward = bfs_parents(&g, target);
    for &r in &roots[1..] {
        let mut at = sub.embedding[r];
        while at != target {
            at = toward[at.index()].expect("connected graph");
            for v in 0..m {
                if component_root[v] == r {
                    current[v] = at;
                }
            }
            maps.push(make(current.clone()));
        }
    }
    ContiguityChain::new(maps).ok()
}

/// Parent pointers of a breadth-first search tree rooted at `root`, with
/// neighbours visited in canonical order.
pub(crate) fn bfs_parents(g: &Graph, root: VertexId) -> Vec<Option<VertexId>> {
    let n = g.num_vertices();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, w) in g.edges() {
        adjacency[u.index()].push(w);
        adjacency[w.index()].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root.index()] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &adjacency[v.index()] {
            if !seen[w.index()] {
                seen[w.index()] = true;
                parent[w.index()] = Some(v);
                queue.push_back(w);
            }
        }
    }
    parent
}
