use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Mask, VertexId, MAX_SEARCH_SIZE};
use crate::contiguity::{contiguity_class_reachable, Decision};
use crate::error::{Error, Result};
use crate::graph::forest_chain;
use crate::maps::{ContiguityChain, VertexMap};

/// How a block is decided to be categorical.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CategoricalStrategy {
    /// Breadth-first search in the map space only.
    Search,
    /// Strongly collapsible blocks are accepted with their collapse chain;
    /// everything else is searched.
    Collapse,
    /// Connected graphs use the forest criterion; other complexes behave
    /// like `Collapse`.
    #[default]
    Auto,
}

/// Contiguity chain from the inclusion of the subcomplex generated by
/// `facets` to a constant map. Each component of the block is strongly
/// collapsed in turn, then the resulting points walk along shortest edge
/// paths of `k` to the first one. `None` unless every component is strongly
/// collapsible and all of them lie in one component of `k`.
pub fn collapse_chain(k: &Arc<Complex>, facets: &[usize]) -> Option<ContiguityChain> {
    let sub = k.subcomplex(facets).ok()?;
    let local = &sub.complex;
    let source = Arc::new(local.clone());
    let make = |a: Vec<VertexId>| VertexMap::new(source.clone(), k.clone(), a).expect("total");
    let mut current: Vec<VertexId> = sub.embedding.clone();
    let mut maps = vec![make(current.clone())];
    let mut points = Vec::new();
    for comp in local.components() {
        let comp_facets: Vec<usize> = local
            .facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| comp.contains(&f.vertices()[0]))
            .map(|(i, _)| i)
            .collect();
        let piece = local.subcomplex(&comp_facets).ok()?;
        let core = piece.complex.core();
        if core.complex.num_vertices() != 1 {
            return None;
        }
        for a in core.collapse_assignments(&piece.complex).into_iter().skip(1) {
            for (i, img) in a.into_iter().enumerate() {
                current[piece.embedding[i].index()] = sub.embedding[piece.embedding[img.index()].index()];
            }
            maps.push(make(current.clone()));
        }
        points.push((comp, current[piece.embedding[0].index()]));
    }
    let target = points[0].1;
    let toward = skeleton_parents(k, target);
    for (comp, mut at) in points.into_iter().skip(1) {
        while at != target {
            at = toward[at.index()]?;
            for &v in &comp {
                current[v.index()] = at;
            }
            maps.push(make(current.clone()));
        }
    }
    ContiguityChain::new(maps).ok()
}

/// Breadth-first parent pointers toward `root` in the 1-skeleton of `k`.
fn skeleton_parents(k: &Complex, root: VertexId) -> Vec<Option<VertexId>> {
    let n = k.num_vertices();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for f in k.facets() {
        for &u in f.vertices() {
            for &w in f.vertices() {
                if u != w {
                    adjacency[u.index()].push(w);
                }
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
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

fn is_constant(a: &[VertexId]) -> bool {
    a.iter().all(|&v| v == a[0])
}

/// Memoizing decision procedure for "the subcomplex generated by these
/// facets is categorical in K", keyed by facet bitmask.
#[derive(Debug)]
pub struct CategoricalEngine {
    complex: Arc<Complex>,
    budget: usize,
    strategy: CategoricalStrategy,
    graph: bool,
    memo: HashMap<Mask, Decision<Arc<ContiguityChain>>>,
}

impl CategoricalEngine {
    pub fn new(complex: Arc<Complex>, budget: usize, strategy: CategoricalStrategy) -> Result<Self> {
        if budget == 0 {
            return Err(Error::ZeroBudget);
        }
        complex.ensure_searchable()?;
        if complex.num_facets() > MAX_SEARCH_SIZE {
            return Err(Error::TooLarge {
                found: complex.num_facets(),
                limit: MAX_SEARCH_SIZE,
            });
        }
        let graph = complex.dim() <= 1 && complex.is_connected();
        Ok(CategoricalEngine {
            complex,
            budget,
            strategy,
            graph,
            memo: HashMap::new(),
        })
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    /// Number of distinct facet sets decided so far.
    pub fn evaluations(&self) -> usize {
        self.memo.len()
    }

    pub fn test(&mut self, facets: &[usize]) -> Result<Decision<Arc<ContiguityChain>>> {
        let mut mask: Mask = 0;
        for &f in facets {
            if f >= self.complex.num_facets() {
                return Err(Error::Precondition(format!("facet index {f} out of range")));
            }
            mask |= 1 << f;
        }
        self.test_mask(mask)
    }

    pub fn test_mask(&mut self, facets: Mask) -> Result<Decision<Arc<ContiguityChain>>> {
        if facets == 0 {
            return Err(Error::Precondition("empty facet set".into()));
        }
        if let Some(d) = self.memo.get(&facets) {
            return Ok(d.clone());
        }
        let d = self.compute(facets)?.map(Arc::new);
        self.memo.insert(facets, d.clone());
        Ok(d)
    }

    fn compute(&self, facets: Mask) -> Result<Decision<ContiguityChain>> {
        let indices: Vec<usize> = (0..self.complex.num_facets())
            .filter(|i| facets & (1 << i) != 0)
            .collect();
        match self.strategy {
            CategoricalStrategy::Auto if self.graph => {
                return Ok(match forest_chain(&self.complex, &indices) {
                    Some(chain) => Decision::Yes(chain),
                    None => Decision::No,
                });
            }
            CategoricalStrategy::Collapse | CategoricalStrategy::Auto => {
                if let Some(chain) = collapse_chain(&self.complex, &indices) {
                    return Ok(Decision::Yes(chain));
                }
            }
            CategoricalStrategy::Search => {}
        }
        let sub = self.complex.subcomplex(&indices)?;
        let inclusion = VertexMap::embedding(&sub, self.complex.clone());
        contiguity_class_reachable(&inclusion, is_constant, self.budget)
    }
}

/// Whether the subcomplex generated by `facets` is categorical in `k`; a
/// `Yes` carries a chain from its inclusion to a constant map.
pub fn is_categorical(
    k: &Arc<Complex>,
    facets: &[usize],
    budget: usize,
    strategy: CategoricalStrategy,
) -> Result<Decision<ContiguityChain>> {
    let mut engine = CategoricalEngine::new(k.clone(), budget, strategy)?;
    Ok(engine
        .test(facets)?
        .map(|c| Arc::try_unwrap(c).unwrap_or_else(|c| (*c).clone())))
}
