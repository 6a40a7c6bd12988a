//! Finite abstract simplicial complexes stored by their facets.
//!
//! Vertices carry string labels and are indexed densely in lexicographic
//! label order, so a [`VertexId`] comparison is the canonical vertex order.
//! A simplex belongs to the complex exactly when it is contained in some
//! facet; faces are never materialized unless a caller asks for them.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// Vertex sets used by the search engines.
pub type Mask = u128;

/// Largest vertex (or facet) count the bitmask-based searches accept.
pub const MAX_SEARCH_SIZE: usize = Mask::BITS as usize;

/// Dense index of a vertex inside one complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(transparent)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index overflows u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A nonempty vertex set, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Returns `None` for the empty set.
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Option<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            None
        } else {
            Some(Simplex(v))
        }
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Simplex::new(v).expect("union of nonempty sets")
    }

    pub fn without(&self, v: VertexId) -> Option<Simplex> {
        Simplex::new(self.0.iter().copied().filter(|&w| w != v))
    }

    /// Bitmask of the vertex indices; every index must be below 128.
    pub fn mask(&self) -> Mask {
        self.0.iter().fold(0, |m, v| m | (1 << v.index()))
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        (1u32..(1 << n))
            .map(|bits| {
                Simplex(
                    (0..n)
                        .filter(|i| bits & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }
}

/// Rejects empty labels, whitespace, and a leading `#` (reserved for comments
/// in the text format).
pub fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() || label.starts_with('#') || label.chars().any(char::is_whitespace) {
        Err(Error::MalformedLabel(label.to_string()))
    } else {
        Ok(())
    }
}

/// A finite abstract simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    labels: Vec<String>,
    facets: Vec<Simplex>,
}

/// A subcomplex generated by some facets, with its vertex embedding into the
/// ambient complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    pub complex: Complex,
    pub embedding: Vec<VertexId>,
}

impl Complex {
    /// Builds the complex generated by the given simplices. Non-maximal
    /// inputs are absorbed; the vertex set is the union of all labels.
    pub fn from_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut sets: Vec<BTreeSet<String>> = Vec::new();
        for facet in facets {
            let mut set = BTreeSet::new();
            for label in facet {
                let label = label.as_ref();
                validate_label(label)?;
                set.insert(label.to_string());
            }
            if set.is_empty() {
                return Err(Error::Precondition("facet with no vertices".into()));
            }
            sets.push(set);
        }
        if sets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let labels: Vec<String> = sets
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index_sets = sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|l| labels.binary_search(l).expect("label collected"))
                    .collect()
            })
            .collect();
        Ok(Self::build(labels, index_sets, false)?.0)
    }

    /// Internal constructor from arbitrary (unsorted, unique) labels and sets
    /// of label indices. Returns the complex and the map from input label
    /// index to the new vertex id (`None` for labels not used by any set).
    pub(crate) fn build(
        labels: Vec<String>,
        sets: Vec<Vec<usize>>,
        already_maximal: bool,
    ) -> Result<(Complex, Vec<Option<VertexId>>)> {
        let mut used = vec![false; labels.len()];
        for s in &sets {
            for &i in s {
                used[i] = true;
            }
        }
        let mut order: Vec<usize> = (0..labels.len()).filter(|&i| used[i]).collect();
        if order.is_empty() {
            return Err(Error::EmptyComplex);
        }
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        debug_assert!(order.windows(2).all(|w| labels[w[0]] != labels[w[1]]));
        let mut remap = vec![None; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = Some(VertexId::new(new));
        }
        let simplices: Vec<Simplex> = sets
            .iter()
            .filter_map(|s| Simplex::new(s.iter().map(|&i| remap[i].expect("used"))))
            .collect();
        let facets = if already_maximal {
            let mut f = simplices;
            f.sort();
            f.dedup();
            f
        } else {
            maximalize(simplices)
        };
        let mut labels = labels;
        let new_labels = order.iter().map(|&i| std::mem::take(&mut labels[i])).collect();
        Ok((
            Complex {
                labels: new_labels,
                facets,
            },
            remap,
        ))
    }

    /// The full simplex on the given labels.
    pub fn simplex<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        Self::from_facets([labels.iter().map(|s| s.as_ref())])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(VertexId::new)
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<VertexId> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId::new)
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn dim(&self) -> usize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(0)
    }

    /// Facets as label lists, in canonical order.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| self.simplex_labels(f))
            .collect()
    }

    pub fn simplex_labels(&self, s: &Simplex) -> Vec<String> {
        s.vertices()
            .iter()
            .map(|&v| self.label(v).to_string())
            .collect()
    }

    /// Looks up a simplex by labels; fails on an unknown label.
    pub fn simplex_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let ids = labels
            .iter()
            .map(|l| self.vertex_or_err(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(ids).ok_or_else(|| Error::Precondition("empty simplex".into()))
    }

    pub fn is_simplex(&self, s: &Simplex) -> bool {
        s.vertices().iter().all(|v| v.index() < self.labels.len())
            && self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// Label-level membership; unknown labels make the answer `false`.
    pub fn contains_labels<S: AsRef<str>>(&self, labels: &[S]) -> bool {
        match self.simplex_from_labels(labels) {
            Ok(s) => self.is_simplex(&s),
            Err(_) => false,
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn facets_containing(&self, v: VertexId) -> impl Iterator<Item = &Simplex> + '_ {
        self.facets.iter().filter(move |f| f.contains(v))
    }

    /// Facet indices grouped by vertex.
    pub fn vertex_facets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.labels.len()];
        for (i, f) in self.facets.iter().enumerate() {
            for v in f.vertices() {
                out[v.index()].push(i);
            }
        }
        out
    }

    /// Complex of all simplices missing `v` whose join with `v` is in the
    /// complex. Fails with [`Error::EmptyComplex`] for an isolated vertex.
    pub fn link(&self, v: VertexId) -> Result<Complex> {
        self.check_vertex(v)?;
        let sets = self
            .facets_containing(v)
            .map(|f| {
                f.vertices()
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|w| w.index())
                    .collect()
            })
            .collect();
        Ok(Complex::build(self.labels.clone(), sets, false)?.0)
    }

    /// Subcomplex generated by the facets containing `v`.
    pub fn star(&self, v: VertexId) -> Result<Complex> {
        self.check_vertex(v)?;
        let sets = self
            .facets_containing(v)
            .map(|f| f.vertices().iter().map(|w| w.index()).collect())
            .collect();
        Ok(Complex::build(self.labels.clone(), sets, true)?.0)
    }

    /// True iff every facet containing `v` also contains `w`.
    pub fn dominated_by(&self, v: VertexId, w: VertexId) -> Result<bool> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::SelfDomination(self.label(v).to_string()));
        }
        Ok(self.facets_containing(v).all(|f| f.contains(w)))
    }

    /// Every vertex dominating `v`, in canonical order.
    pub fn dominators(&self, v: VertexId) -> Vec<VertexId> {
        let mut iter = self.facets_containing(v);
        let first = match iter.next() {
            Some(f) => f.vertices().to_vec(),
            None => return Vec::new(),
        };
        let common = iter.fold(first, |acc, f| {
            acc.into_iter().filter(|&w| f.contains(w)).collect()
        });
        common.into_iter().filter(|&w| w != v).collect()
    }

    /// All dominated pairs `(v, w)` in canonical order.
    pub fn dominated_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.vertices()
            .flat_map(|v| self.dominators(v).into_iter().map(move |w| (v, w)))
            .collect()
    }

    /// Removes the open star of `v`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Complex> {
        self.check_vertex(v)?;
        let sets = self
            .facets
            .iter()
            .map(|f| {
                f.vertices()
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|w| w.index())
                    .collect()
            })
            .collect();
        Ok(Complex::build(self.labels.clone(), sets, false)?.0)
    }

    /// Subcomplex generated by the facets with the given indices.
    pub fn subcomplex(&self, facet_indices: &[usize]) -> Result<Subcomplex> {
        let mut used = BTreeSet::new();
        for &i in facet_indices {
            let f = self
                .facets
                .get(i)
                .ok_or_else(|| Error::Precondition(format!("facet index {i} out of range")))?;
            used.extend(f.vertices().iter().copied());
        }
        if used.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let embedding: Vec<VertexId> = used.into_iter().collect();
        let local = |v: VertexId| VertexId::new(embedding.binary_search(&v).expect("used vertex"));
        let mut facets: Vec<Simplex> = facet_indices
            .iter()
            .map(|&i| Simplex(self.facets[i].vertices().iter().map(|&v| local(v)).collect()))
            .collect();
        facets.sort();
        facets.dedup();
        let labels = embedding
            .iter()
            .map(|&v| self.labels[v.index()].clone())
            .collect();
        Ok(Subcomplex {
            complex: Complex { labels, facets },
            embedding,
        })
    }

    /// True iff every simplex of `self` (matched by label) lies in `other`.
    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.facets.iter().all(|f| {
            let labels = self.simplex_labels(f);
            other.contains_labels(&labels)
        })
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut uf = UnionFind::<usize>::new(self.labels.len());
        for f in &self.facets {
            let first = f.vertices()[0].index();
            for v in &f.vertices()[1..] {
                uf.union(first, v.index());
            }
        }
        let labeling = uf.into_labeling();
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut slot = std::collections::HashMap::new();
        for (i, root) in labeling.into_iter().enumerate() {
            let g = *slot.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(VertexId::new(i));
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Every simplex of the complex, sorted.
    pub fn all_simplices(&self) -> Vec<Simplex> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.faces());
        }
        let mut out: Vec<Simplex> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dim() + 1];
        for s in self.all_simplices() {
            counts[s.dim()] += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub(crate) fn ensure_searchable(&self) -> Result<()> {
        if self.labels.len() > MAX_SEARCH_SIZE {
            Err(Error::TooLarge {
                found: self.labels.len(),
                limit: MAX_SEARCH_SIZE,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn facet_masks(&self) -> Result<Vec<Mask>> {
        self.ensure_searchable()?;
        Ok(self.facets.iter().map(Simplex::mask).collect())
    }

    /// Complex with the same facets over renamed labels.
    pub fn relabel<F: FnMut(&str) -> String>(&self, mut rename: F) -> Result<Complex> {
        let labels: Vec<String> = self.labels.iter().map(|l| rename(l)).collect();
        for l in &labels {
            validate_label(l)?;
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Precondition("relabeling is not injective".into()));
        }
        let sets = self
            .facets
            .iter()
            .map(|f| f.vertices().iter().map(|v| v.index()).collect())
            .collect();
        Ok(Complex::build(labels, sets, true)?.0)
    }
}

/// Keeps only the inclusion-maximal simplices, sorted canonically.
pub(crate) fn maximalize(mut simplices: Vec<Simplex>) -> Vec<Simplex> {
    simplices.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    simplices.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(simplices.len());
    for s in simplices {
        if !kept.iter().any(|k| k.len() > s.len() && s.is_face_of(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl fmt::Display for Complex {
    /// The text format: one facet per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            writeln!(f, "{}", self.simplex_labels(facet).join(" "))?;
        }
        Ok(())
    }
}
