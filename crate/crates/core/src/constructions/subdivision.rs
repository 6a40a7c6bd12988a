use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::maps::{ContiguityChain, VertexMap};

/// The barycentric subdivision of a complex, remembering which simplex of
/// the base each new vertex stands for.
#[derive(Clone, Debug)]
pub struct Subdivision {
    base: Arc<Complex>,
    complex: Arc<Complex>,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, VertexId>,
}

/// Label of the vertex of `sd K` standing for `s`: `{a,b,c}`.
pub fn sd_label(k: &Complex, s: &Simplex) -> String {
    format!("{{{}}}", k.simplex_labels(s).join(","))
}

impl Subdivision {
    /// Vertices are the simplices of `k`; facets are the full flags
    /// `{v} ⊂ … ⊂ σ` of each facet σ, which are exactly the maximal chains.
    pub fn new(k: Arc<Complex>) -> Self {
        let simplices = k.all_simplices();
        let position: HashMap<&Simplex, usize> =
            simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let labels: Vec<String> = simplices.iter().map(|s| sd_label(&k, s)).collect();
        let mut flags = Vec::new();
        for facet in k.facets() {
            let mut chain = Vec::with_capacity(facet.len());
            full_flags(facet, &position, &mut chain, &mut flags);
        }
        let (complex, remap) = Complex::build(labels, flags, true).expect("nonempty base");
        let mut ordered = vec![None; simplices.len()];
        for (old, s) in simplices.into_iter().enumerate() {
            ordered[remap[old].expect("every simplex lies on a flag").index()] = Some(s);
        }
        let simplices: Vec<Simplex> = ordered.into_iter().map(|s| s.expect("bijective")).collect();
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), VertexId::new(i)))
            .collect();
        Subdivision {
            base: k,
            complex: Arc::new(complex),
            simplices,
            index,
        }
    }

    pub fn base(&self) -> &Arc<Complex> {
        &self.base
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    /// The simplex of the base complex that vertex `v` of `sd K` stands for.
    pub fn simplex_of(&self, v: VertexId) -> &Simplex {
        &self.simplices[v.index()]
    }

    pub fn vertex_of(&self, s: &Simplex) -> Option<VertexId> {
        self.index.get(s).copied()
    }

    /// `sd φ: sd K → sd L`, sending `{σ}` to `{φ(σ)}`. `φ` must go from
    /// `self.base()` to `target.base()` and be simplicial.
    pub fn map(&self, target: &Subdivision, phi: &VertexMap) -> Result<VertexMap> {
        self.check_map(target, phi)?;
        let assignment = self
            .simplices
            .iter()
            .map(|s| target.vertex_of(&phi.image(s)).expect("image is a simplex"))
            .collect();
        VertexMap::new(self.complex.clone(), target.complex.clone(), assignment)
    }

    fn check_map(&self, target: &Subdivision, phi: &VertexMap) -> Result<()> {
        if **phi.source() != *self.base || **phi.target() != *target.base {
            return Err(Error::MapMismatch);
        }
        if !phi.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        Ok(())
    }

    /// A contiguity chain from `sd φ` to `sd ψ` for directly contiguous
    /// `φ, ψ`, built through the map `F{σ} = {φ(σ) ∪ ψ(σ)}`.
    ///
    /// Starting at `sd φ`, the canonically least maximal-dimension simplex
    /// whose image still differs from `F` is switched to its `F` value, one
    /// per step; the same is done from `sd ψ` and the two halves are joined
    /// at `F`. The result is validated before it is returned.
    pub fn contiguity_chain(
        &self,
        target: &Subdivision,
        phi: &VertexMap,
        psi: &VertexMap,
    ) -> Result<ContiguityChain> {
        self.check_map(target, phi)?;
        self.check_map(target, psi)?;
        if !phi.is_contiguous(psi)? {
            return Err(Error::NotContiguous);
        }
        let f: Vec<VertexId> = self
            .simplices
            .iter()
            .map(|s| {
                target
                    .vertex_of(&phi.image(s).union(&psi.image(s)))
                    .expect("contiguity makes the union a simplex")
            })
            .collect();
        let forward = self.walk_to(target, phi, &f)?;
        let backward = self.walk_to(target, psi, &f)?;
        let chain = forward.concat(&backward.reversed())?;
        chain.validate()?;
        Ok(chain)
    }

    fn walk_to(
        &self,
        target: &Subdivision,
        start: &VertexMap,
        goal: &[VertexId],
    ) -> Result<ContiguityChain> {
        let mut current = self.map(target, start)?.assignment().to_vec();
        let mut order: Vec<usize> = (0..self.simplices.len()).collect();
        order.sort_by(|&a, &b| {
            let (sa, sb) = (&self.simplices[a], &self.simplices[b]);
            sb.len().cmp(&sa.len()).then_with(|| sa.cmp(sb))
        });
        let make = |a: &[VertexId]| {
            VertexMap::new(self.complex.clone(), target.complex.clone(), a.to_vec())
        };
        let mut maps = vec![make(&current)?];
        for i in order {
            if current[i] != goal[i] {
                current[i] = goal[i];
                maps.push(make(&current)?);
            }
        }
        ContiguityChain::new(maps)
    }
}

fn full_flags(
    top: &Simplex,
    position: &HashMap<&Simplex, usize>,
    chain: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    chain.push(position[top]);
    if top.len() == 1 {
        out.push(chain.clone());
    } else {
        for &v in top.vertices() {
            let face = top.without(v).expect("at least two vertices");
            full_flags(&face, position, chain, out);
        }
    }
    chain.pop();
}

/// `sd K`.
pub fn sd(k: &Complex) -> Complex {
    (*Subdivision::new(Arc::new(k.clone())).complex).clone()
}

/// `sd^n K`; `sd^0 K = K`.
pub fn sd_iter(k: &Complex, n: usize) -> Complex {
    (0..n).fold(k.clone(), |acc, _| sd(&acc))
}

/// `sd φ`, building both subdivisions.
pub fn sd_map(phi: &VertexMap) -> Result<VertexMap> {
    let s = Subdivision::new(phi.source().clone());
    let t = Subdivision::new(phi.target().clone());
    s.map(&t, phi)
}

/// Chain from `sd φ` to `sd ψ` for directly contiguous `φ, ψ`.
pub fn sd_contiguity_chain(phi: &VertexMap, psi: &VertexMap) -> Result<ContiguityChain> {
    if !phi.same_endpoints(psi) {
        return Err(Error::MapMismatch);
    }
    let s = Subdivision::new(phi.source().clone());
    let t = Subdivision::new(phi.target().clone());
    s.contiguity_chain(&t, phi, psi)
}
