//! Vertex maps between complexes, simpliciality, direct contiguity, and
//! contiguity chains.

use std::sync::Arc;

use crate::complex::{Complex, Simplex, Subcomplex, VertexId};
use crate::error::{Error, Result};

/// A total map on vertex labels between two complexes. Whether it is
/// simplicial is checked, never assumed.
///
/// Two maps are equal only when their assignments agree and their sources
/// and targets are equal complexes.
#[derive(Clone, Debug)]
pub struct VertexMap {
    source: Arc<Complex>,
    target: Arc<Complex>,
    assignment: Vec<VertexId>,
}

fn same_complex(a: &Arc<Complex>, b: &Arc<Complex>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for VertexMap {
    fn eq(&self, other: &Self) -> bool {
        self.assignment == other.assignment
            && same_complex(&self.source, &other.source)
            && same_complex(&self.target, &other.target)
    }
}

impl Eq for VertexMap {}

impl VertexMap {
    pub fn new(
        source: Arc<Complex>,
        target: Arc<Complex>,
        assignment: Vec<VertexId>,
    ) -> Result<Self> {
        if assignment.len() != source.num_vertices() {
            let missing = source
                .labels()
                .get(assignment.len())
                .cloned()
                .unwrap_or_default();
            return Err(Error::IncompleteMap(missing));
        }
        if let Some(bad) = assignment.iter().find(|v| v.index() >= target.num_vertices()) {
            return Err(Error::UnknownVertex(bad.to_string()));
        }
        Ok(VertexMap {
            source,
            target,
            assignment,
        })
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels<I, S, T>(source: Arc<Complex>, target: Arc<Complex>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut assignment = vec![None; source.num_vertices()];
        for (s, t) in pairs {
            let v = source.vertex_or_err(s.as_ref())?;
            let w = target.vertex_or_err(t.as_ref())?;
            assignment[v.index()] = Some(w);
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::IncompleteMap(source.labels()[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(k: Arc<Complex>) -> Self {
        let assignment = k.vertices().collect();
        VertexMap {
            source: k.clone(),
            target: k,
            assignment,
        }
    }

    pub fn constant(source: Arc<Complex>, target: Arc<Complex>, v: VertexId) -> Result<Self> {
        let assignment = vec![v; source.num_vertices()];
        VertexMap::new(source, target, assignment)
    }

    /// Inclusion of a subcomplex, matching vertices by label.
    pub fn inclusion(sub: Arc<Complex>, ambient: Arc<Complex>) -> Result<Self> {
        if !sub.is_subcomplex_of(&ambient) {
            return Err(Error::NotSubcomplex("facets missing from the ambient complex".into()));
        }
        let assignment = sub
            .labels()
            .iter()
            .map(|l| ambient.vertex(l).expect("subcomplex vertex"))
            .collect();
        Ok(VertexMap {
            source: sub,
            target: ambient,
            assignment,
        })
    }

    /// Inclusion of a facet-generated subcomplex, using its embedding.
    pub fn embedding(sub: &Subcomplex, ambient: Arc<Complex>) -> Self {
        VertexMap {
            source: Arc::new(sub.complex.clone()),
            target: ambient,
            assignment: sub.embedding.clone(),
        }
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.target
    }

    pub fn assignment(&self) -> &[VertexId] {
        &self.assignment
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.assignment[v.index()]
    }

    pub fn image(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.apply(v))).expect("nonempty")
    }

    /// Every facet of the source lands on a simplex of the target.
    pub fn is_simplicial(&self) -> bool {
        self.source
            .facets()
            .iter()
            .all(|f| self.target.is_simplex(&self.image(f)))
    }

    pub fn constant_value(&self) -> Option<VertexId> {
        let first = *self.assignment.first()?;
        self.assignment.iter().all(|&v| v == first).then_some(first)
    }

    pub fn same_endpoints(&self, other: &VertexMap) -> bool {
        same_complex(&self.source, &other.source) && same_complex(&self.target, &other.target)
    }

    /// Direct contiguity: `f(σ) ∪ g(σ)` is a simplex for every facet σ.
    /// Checking facets suffices since the condition passes to faces.
    pub fn is_contiguous(&self, other: &VertexMap) -> Result<bool> {
        if !self.same_endpoints(other) {
            return Err(Error::MapMismatch);
        }
        if !self.is_simplicial() || !other.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        Ok(self.contiguous_unchecked(other))
    }

    pub(crate) fn contiguous_unchecked(&self, other: &VertexMap) -> bool {
        self.source.facets().iter().all(|f| {
            let joint = Simplex::new(
                f.vertices()
                    .iter()
                    .flat_map(|&v| [self.apply(v), other.apply(v)]),
            )
            .expect("nonempty");
            self.target.is_simplex(&joint)
        })
    }

    /// Restriction to a subcomplex of the source (matched by label).
    pub fn restrict(&self, sub: &Arc<Complex>) -> Result<VertexMap> {
        let inc = VertexMap::inclusion(sub.clone(), self.source.clone())?;
        compose(self, &inc)
    }

    /// The same assignment read as a map into `target`, which must contain
    /// every image simplex. Images are matched by label.
    pub fn corestrict(&self, target: Arc<Complex>) -> Result<VertexMap> {
        let assignment = self
            .assignment
            .iter()
            .map(|&w| target.vertex_or_err(self.target.label(w)))
            .collect::<Result<Vec<_>>>()?;
        let map = VertexMap {
            source: self.source.clone(),
            target,
            assignment,
        };
        if self.is_simplicial() && !map.is_simplicial() {
            return Err(Error::NotSubcomplex("image leaves the new target".into()));
        }
        Ok(map)
    }

    /// `(source label, target label)` pairs in canonical source order.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.source
            .vertices()
            .map(|v| {
                (
                    self.source.label(v).to_string(),
                    self.target.label(self.apply(v)).to_string(),
                )
            })
            .collect()
    }
}

/// `g ∘ f`.
pub fn compose(g: &VertexMap, f: &VertexMap) -> Result<VertexMap> {
    if !same_complex(&f.target, &g.source) {
        return Err(Error::MapMismatch);
    }
    Ok(VertexMap {
        source: f.source.clone(),
        target: g.target.clone(),
        assignment: f.assignment.iter().map(|&v| g.apply(v)).collect(),
    })
}

/// A nonempty sequence of simplicial maps with shared endpoints, each
/// consecutive pair directly contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContiguityChain {
    maps: Vec<VertexMap>,
}

impl ContiguityChain {
    /// Validates and wraps a sequence of maps.
    pub fn new(maps: Vec<VertexMap>) -> Result<Self> {
        let chain = ContiguityChain { maps };
        chain.validate()?;
        Ok(chain)
    }

    pub(crate) fn new_unchecked(maps: Vec<VertexMap>) -> Self {
        debug_assert!(!maps.is_empty());
        ContiguityChain { maps }
    }

    pub fn validate(&self) -> Result<()> {
        let first = self
            .maps
            .first()
            .ok_or_else(|| Error::InvalidChain("empty".into()))?;
        for (i, m) in self.maps.iter().enumerate() {
            if !m.same_endpoints(first) {
                return Err(Error::InvalidChain(format!("map {i} has other endpoints")));
            }
            if !m.is_simplicial() {
                return Err(Error::InvalidChain(format!("map {i} is not simplicial")));
            }
        }
        for (i, pair) in self.maps.windows(2).enumerate() {
            if !pair[0].contiguous_unchecked(&pair[1]) {
                return Err(Error::InvalidChain(format!(
                    "maps {i} and {} are not contiguous",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub fn maps(&self) -> &[VertexMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn first(&self) -> &VertexMap {
        &self.maps[0]
    }

    pub fn last(&self) -> &VertexMap {
        self.maps.last().expect("nonempty chain")
    }

    pub fn into_maps(self) -> Vec<VertexMap> {
        self.maps
    }

    /// Chain run backwards.
    pub fn reversed(&self) -> ContiguityChain {
        let mut maps = self.maps.clone();
        maps.reverse();
        ContiguityChain { maps }
    }

    /// Concatenation; the last map of `self` must equal the first of `next`.
    pub fn concat(&self, next: &ContiguityChain) -> Result<ContiguityChain> {
        if self.last() != next.first() {
            return Err(Error::InvalidChain("chains do not meet".into()));
        }
        let mut maps = self.maps.clone();
        maps.extend_from_slice(&next.maps[1..]);
        Ok(ContiguityChain { maps })
    }

    /// Post-composes every map with `g`. Contiguity survives composition.
    pub fn then(&self, g: &VertexMap) -> Result<ContiguityChain> {
        let maps = self
            .maps
            .iter()
            .map(|m| compose(g, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(ContiguityChain { maps })
    }
}
