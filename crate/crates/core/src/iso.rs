//! Exact isomorphism of small complexes by backtracking.

use std::collections::HashSet;

use crate::complex::{Complex, Simplex, VertexId};

/// A vertex bijection carrying the facets of one complex exactly onto the
/// facets of another; `image[v]` is the image of vertex `v`.
pub type VertexBijection = Vec<VertexId>;

/// First isomorphism `k → l` in canonical order, if any.
///
/// Vertices of `k` are assigned in canonical order and candidate images are
/// tried in canonical order of `l`, restricted to vertices with the same
/// facet-dimension signature. A partial assignment is pruned as soon as
/// some facet's assigned part cannot sit inside an equal-size facet of `l`.
pub fn isomorphism(k: &Complex, l: &Complex) -> Option<VertexBijection> {
    if k.num_vertices() != l.num_vertices() || k.num_facets() != l.num_facets() {
        return None;
    }
    let mut k_sizes: Vec<usize> = k.facets().iter().map(Simplex::len).collect();
    let mut l_sizes: Vec<usize> = l.facets().iter().map(Simplex::len).collect();
    k_sizes.sort_unstable();
    l_sizes.sort_unstable();
    if k_sizes != l_sizes {
        return None;
    }
    let k_sig = signatures(k);
    let l_sig = signatures(l);
    let mut a = k_sig.clone();
    let mut b = l_sig.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let search = Search {
        k,
        l,
        k_sig,
        l_sig,
        k_vertex_facets: k.vertex_facets(),
        l_facets: l.facets().iter().cloned().collect(),
    };
    let mut image = vec![None; k.num_vertices()];
    let mut used = vec![false; l.num_vertices()];
    if search.extend(0, &mut image, &mut used) {
        Some(image.into_iter().map(|v| v.expect("total")).collect())
    } else {
        None
    }
}

pub fn isomorphic(k: &Complex, l: &Complex) -> bool {
    isomorphism(k, l).is_some()
}

/// Same strong homotopy type: the cores are isomorphic.
pub fn strong_homotopy_equivalent(k: &Complex, l: &Complex) -> bool {
    isomorphic(&k.core().complex, &l.core().complex)
}

fn signatures(k: &Complex) -> Vec<Vec<usize>> {
    k.vertices()
        .map(|v| {
            let mut s: Vec<usize> = k.facets_containing(v).map(Simplex::len).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

struct Search<'a> {
    k: &'a Complex,
    l: &'a Complex,
    k_sig: Vec<Vec<usize>>,
    l_sig: Vec<Vec<usize>>,
    k_vertex_facets: Vec<Vec<usize>>,
    l_facets: HashSet<Simplex>,
}

impl Search<'_> {
    fn extend(&self, next: usize, image: &mut [Option<VertexId>], used: &mut [bool]) -> bool {
        if next == image.len() {
            return true;
        }
        for w in self.l.vertices() {
            if used[w.index()] || self.k_sig[next] != self.l_sig[w.index()] {
                continue;
            }
            image[next] = Some(w);
            if self.consistent(next, image) {
                used[w.index()] = true;
                if self.extend(next + 1, image, used) {
                    return true;
                }
                used[w.index()] = false;
            }
            image[next] = None;
        }
        false
    }

    fn consistent(&self, v: usize, image: &[Option<VertexId>]) -> bool {
        self.k_vertex_facets[v].iter().all(|&fi| {
            let facet = &self.k.facets()[fi];
            let mapped: Vec<VertexId> = facet
                .vertices()
                .iter()
                .filter_map(|u| image[u.index()])
                .collect();
            let part = Simplex::new(mapped).expect("contains v");
            if part.len() == facet.len() {
                self.l_facets.contains(&part)
            } else {
                self.l
                    .facets()
                    .iter()
                    .any(|g| g.len() == facet.len() && part.is_face_of(g))
            }
        })
    }
}
