//! Contiguity classes by breadth-first search in the graph of simplicial
//! maps, and the contiguity extension property.
//!
//! The nodes of the map graph are the simplicial maps between two fixed
//! complexes; edges join directly contiguous maps. Searches are budgeted by
//! the number of distinct maps visited, and report `Unknown` rather than
//! guessing when the budget runs out.

use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use crate::complex::{Complex, Mask, VertexId};
use crate::error::{Error, Result};
use crate::maps::{ContiguityChain, VertexMap};

/// Outcome of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<W> {
    /// Found, with a witness that revalidates.
    Yes(W),
    /// The search space was exhausted.
    No,
    /// The budget ran out first.
    Unknown { visited: usize, budget: usize },
}

impl<W> Decision<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown { .. })
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<U, F: FnOnce(W) -> U>(self, f: F) -> Decision<U> {
        match self {
            Decision::Yes(w) => Decision::Yes(f(w)),
            Decision::No => Decision::No,
            Decision::Unknown { visited, budget } => Decision::Unknown { visited, budget },
        }
    }

    /// `"yes"`, `"no"` or `"unknown"`.
    pub fn verdict(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No => "no",
            Decision::Unknown { .. } => "unknown",
        }
    }
}

/// Bitmask view of a source/target pair used to enumerate maps.
pub(crate) struct MapSpace {
    n_source: usize,
    source_facets: Vec<Vec<usize>>,
    vertex_facets: Vec<Vec<usize>>,
    target_facets: Vec<Mask>,
    all_targets: Mask,
}

impl MapSpace {
    pub(crate) fn new(source: &Complex, target: &Complex) -> Result<Self> {
        let target_facets = target.facet_masks()?;
        let n = target.num_vertices();
        let all_targets = if n == 128 { Mask::MAX } else { (1 << n) - 1 };
        Ok(MapSpace {
            n_source: source.num_vertices(),
            source_facets: source
                .facets()
                .iter()
                .map(|f| f.vertices().iter().map(|v| v.index()).collect())
                .collect(),
            vertex_facets: source.vertex_facets(),
            target_facets,
            all_targets,
        })
    }

    /// Union of the target facets containing `acc`: the vertices that may
    /// still join `acc` inside one simplex.
    fn allowed(&self, acc: Mask) -> Mask {
        self.target_facets
            .iter()
            .filter(|&&t| acc & !t == 0)
            .fold(0, |m, &t| m | t)
    }

    fn image_mask(&self, f: &[VertexId], facet: usize) -> Mask {
        self.source_facets[facet]
            .iter()
            .fold(0, |m, &v| m | (1 << f[v].index()))
    }

    /// Calls `visit` on every map directly contiguous to `f` (including `f`
    /// itself), in canonical order. Stops early when `visit` returns false.
    pub(crate) fn for_each_neighbor(
        &self,
        f: &[VertexId],
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        let acc: Vec<Mask> = (0..self.source_facets.len())
            .map(|i| self.image_mask(f, i))
            .collect();
        self.enumerate(acc, &[], visit)
    }

    /// Calls `visit` on every simplicial map agreeing with `fixed` where it
    /// is `Some`, in canonical order.
    pub(crate) fn for_each_simplicial_map(
        &self,
        fixed: &[Option<VertexId>],
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        self.enumerate(vec![0; self.source_facets.len()], fixed, visit)
    }

    fn enumerate(
        &self,
        mut acc: Vec<Mask>,
        fixed: &[Option<VertexId>],
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        let mut g = vec![VertexId::new(0); self.n_source];
        let mut saved = Vec::new();
        self.assign(0, &mut acc, &mut g, fixed, &mut saved, visit)
    }

    fn assign(
        &self,
        v: usize,
        acc: &mut [Mask],
        g: &mut [VertexId],
        fixed: &[Option<VertexId>],
        saved: &mut Vec<Mask>,
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        if v == self.n_source {
            return visit(g);
        }
        let mut cand = match fixed.get(v).copied().flatten() {
            Some(w) => 1 << w.index(),
            None => self.all_targets,
        };
        for &s in &self.vertex_facets[v] {
            cand &= self.allowed(acc[s]);
            if cand == 0 {
                return true;
            }
        }
        while cand != 0 {
            let b = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            g[v] = VertexId::new(b);
            let mark = saved.len();
            for &s in &self.vertex_facets[v] {
                saved.push(acc[s]);
                acc[s] |= 1 << b;
            }
            let go_on = self.assign(v + 1, acc, g, fixed, saved, visit);
            for (k, &s) in self.vertex_facets[v].iter().enumerate() {
                acc[s] = saved[mark + k];
            }
            saved.truncate(mark);
            if !go_on {
                return false;
            }
        }
        true
    }
}

enum BfsEnd {
    Goal(usize),
    Exhausted,
    Budget,
}

struct Bfs {
    nodes: Vec<Rc<[VertexId]>>,
    parent: Vec<usize>,
}

impl Bfs {
    fn path_to(&self, mut id: usize) -> Vec<Rc<[VertexId]>> {
        let mut path = vec![self.nodes[id].clone()];
        while id != 0 {
            id = self.parent[id];
            path.push(self.nodes[id].clone());
        }
        path.reverse();
        path
    }
}

fn run_bfs(
    space: &MapSpace,
    start: &[VertexId],
    goal: &mut dyn FnMut(&[VertexId]) -> bool,
    budget: usize,
) -> (Bfs, BfsEnd) {
    let start: Rc<[VertexId]> = start.into();
    let mut bfs = Bfs {
        nodes: vec![start.clone()],
        parent: vec![0],
    };
    if goal(&start) {
        return (bfs, BfsEnd::Goal(0));
    }
    let mut index: HashMap<Rc<[VertexId]>, usize> = HashMap::new();
    index.insert(start, 0);
    let mut head = 0;
    while head < bfs.nodes.len() {
        let current = bfs.nodes[head].clone();
        let mut end = None;
        space.for_each_neighbor(&current, &mut |g| {
            if index.contains_key(g) {
                return true;
            }
            if bfs.nodes.len() >= budget {
                end = Some(BfsEnd::Budget);
                return false;
            }
            let id = bfs.nodes.len();
            let node: Rc<[VertexId]> = g.into();
            bfs.nodes.push(node.clone());
            bfs.parent.push(head);
            index.insert(node, id);
            if goal(g) {
                end = Some(BfsEnd::Goal(id));
                return false;
            }
            true
        });
        if let Some(end) = end {
            return (bfs, end);
        }
        head += 1;
    }
    (bfs, BfsEnd::Exhausted)
}

fn chain_from(f: &VertexMap, path: Vec<Rc<[VertexId]>>) -> ContiguityChain {
    let maps = path
        .into_iter()
        .map(|a| {
            VertexMap::new(f.source().clone(), f.target().clone(), a.to_vec())
                .expect("enumerated maps are total")
        })
        .collect();
    ContiguityChain::new_unchecked(maps)
}

/// Breadth-first search from `f` for any map whose assignment satisfies
/// `goal`. `Yes` carries a shortest chain from `f`; `No` means the whole
/// contiguity class of `f` was explored.
pub fn contiguity_class_reachable<G>(
    f: &VertexMap,
    mut goal: G,
    budget: usize,
) -> Result<Decision<ContiguityChain>>
where
    G: FnMut(&[VertexId]) -> bool,
{
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if !f.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let space = MapSpace::new(f.source(), f.target())?;
    let (bfs, end) = run_bfs(&space, f.assignment(), &mut goal, budget);
    Ok(match end {
        BfsEnd::Goal(id) => Decision::Yes(chain_from(f, bfs.path_to(id))),
        BfsEnd::Exhausted => Decision::No,
        BfsEnd::Budget => Decision::Unknown {
            visited: bfs.nodes.len(),
            budget,
        },
    })
}

/// `f ~ g` by a search from `f` with the single goal `g`.
pub fn in_same_contiguity_class(
    f: &VertexMap,
    g: &VertexMap,
    budget: usize,
) -> Result<Decision<ContiguityChain>> {
    if !f.same_endpoints(g) {
        return Err(Error::MapMismatch);
    }
    if !g.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let target = g.assignment().to_vec();
    contiguity_class_reachable(f, |a| a == target.as_slice(), budget)
}

/// The explored part of the contiguity class of `f`.
#[derive(Clone, Debug)]
pub struct ClassExploration {
    pub members: Vec<VertexMap>,
    /// True when the whole class was enumerated within the budget.
    pub exhaustive: bool,
}

/// Enumerates the contiguity class of `f` (up to `budget` maps).
pub fn contiguity_class(f: &VertexMap, budget: usize) -> Result<ClassExploration> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if !f.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let space = MapSpace::new(f.source(), f.target())?;
    let (bfs, end) = run_bfs(&space, f.assignment(), &mut |_| false, budget);
    let members = bfs
        .nodes
        .iter()
        .map(|a| VertexMap::new(f.source().clone(), f.target().clone(), a.to_vec()).expect("total"))
        .collect();
    Ok(ClassExploration {
        members,
        exhaustive: matches!(end, BfsEnd::Exhausted),
    })
}

/// Every simplicial map `source → target`, in canonical order, stopping
/// after `limit` maps. The flag tells whether the list is complete.
pub fn simplicial_maps(
    source: &Arc<Complex>,
    target: &Arc<Complex>,
    limit: usize,
) -> Result<(Vec<VertexMap>, bool)> {
    let space = MapSpace::new(source, target)?;
    let mut out = Vec::new();
    let complete = space.for_each_simplicial_map(&[], &mut |g| {
        if out.len() >= limit {
            return false;
        }
        out.push(VertexMap::new(source.clone(), target.clone(), g.to_vec()).expect("total"));
        true
    });
    Ok((out, complete))
}

/// A positive answer to the extension problem: the extension of `ψ` and a
/// chain from the given extension of `φ` to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub map: VertexMap,
    pub chain: ContiguityChain,
}

/// Decides whether `ψ: L → M` has an extension `ψ̃: K → M` (so `ψ̃ ∘ i = ψ`)
/// in the contiguity class of the given extension `φ̃` of `φ`.
///
/// Requires `φ̃ ∘ i = φ`. The hypothesis `φ ~ ψ` is confirmed by a search
/// under the same budget; if it fails the call is a precondition error. One
/// search from `φ̃` tests every extension of `ψ` as a goal at once.
pub fn has_contiguity_extension(
    inclusion: &VertexMap,
    phi: &VertexMap,
    psi: &VertexMap,
    phi_ext: &VertexMap,
    budget: usize,
) -> Result<Decision<Extension>> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if !phi.same_endpoints(psi)
        || !Arc::ptr_eq(inclusion.source(), phi.source()) && **inclusion.source() != **phi.source()
        || **phi_ext.source() != **inclusion.target()
        || **phi_ext.target() != **phi.target()
    {
        return Err(Error::MapMismatch);
    }
    for m in [inclusion, phi, psi, phi_ext] {
        if !m.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
    }
    let restricts = inclusion
        .assignment()
        .iter()
        .zip(phi.assignment())
        .all(|(&iv, &pv)| phi_ext.apply(iv) == pv);
    if !restricts {
        return Err(Error::Precondition(
            "the given extension does not restrict to phi".into(),
        ));
    }
    match in_same_contiguity_class(phi, psi, budget)? {
        Decision::Yes(_) => {}
        Decision::No => {
            return Err(Error::Precondition(
                "phi and psi are not in the same contiguity class".into(),
            ))
        }
        Decision::Unknown { visited, budget } => return Ok(Decision::Unknown { visited, budget }),
    }

    let mut fixed: Vec<Option<VertexId>> = vec![None; phi_ext.source().num_vertices()];
    for (&iv, &target) in inclusion.assignment().iter().zip(psi.assignment()) {
        match fixed[iv.index()] {
            Some(t) if t != target => return Ok(Decision::No),
            _ => fixed[iv.index()] = Some(target),
        }
    }
    let space = MapSpace::new(phi_ext.source(), phi_ext.target())?;
    let mut any_extension = false;
    space.for_each_simplicial_map(&fixed, &mut |_| {
        any_extension = true;
        false
    });
    if !any_extension {
        return Ok(Decision::No);
    }
    let is_extension = |a: &[VertexId]| {
        fixed
            .iter()
            .zip(a)
            .all(|(want, got)| want.is_none_or(|w| w == *got))
    };
    Ok(contiguity_class_reachable(phi_ext, is_extension, budget)?.map(|chain| Extension {
        map: chain.last().clone(),
        chain,
    }))
}
