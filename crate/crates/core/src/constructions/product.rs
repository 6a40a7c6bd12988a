use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::{Complex, VertexId};
use crate::error::{Error, Result};
use crate::maps::VertexMap;

/// The categorical product `K₁ × ⋯ × Kₙ`, remembering the coordinates of
/// every vertex.
///
/// Its simplices are the vertex-tuple sets whose coordinate projections are
/// simplices, so the facets are the products `σ₁ × ⋯ × σₙ` of facets.
/// Vertex labels are `(x1,…,xn)`. A one-factor product is the factor itself.
#[derive(Clone, Debug)]
pub struct Product {
    complex: Arc<Complex>,
    factors: Vec<Arc<Complex>>,
    tuples: Vec<Vec<VertexId>>,
    index: HashMap<Vec<VertexId>, VertexId>,
}

impl Product {
    /// Built one factor at a time, each step pairing the facets found so far
    /// with the facets of the next factor.
    pub fn new(factors: Vec<Arc<Complex>>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::Precondition("a product needs at least one factor".into()))?;
        let mut tuples: Vec<Vec<VertexId>> = first.vertices().map(|v| vec![v]).collect();
        let mut facets: Vec<Vec<usize>> = first
            .facets()
            .iter()
            .map(|f| f.vertices().iter().map(|v| v.index()).collect())
            .collect();
        for k in &factors[1..] {
            let n = k.num_vertices();
            tuples = tuples
                .iter()
                .flat_map(|t| {
                    k.vertices().map(move |v| {
                        let mut t = t.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
            facets = facets
                .iter()
                .flat_map(|f| {
                    k.facets().iter().map(move |g| {
                        f.iter()
                            .flat_map(|&i| g.vertices().iter().map(move |v| i * n + v.index()))
                            .collect()
                    })
                })
                .collect();
        }
        let (complex, tuples) = if factors.len() == 1 {
            ((**first).clone(), tuples)
        } else {
            let labels = tuples
                .iter()
                .map(|t| {
                    let parts: Vec<&str> = t
                        .iter()
                        .zip(&factors)
                        .map(|(&v, k)| k.label(v))
                        .collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            let (complex, remap) = Complex::build(labels, facets, true)?;
            let mut ordered = vec![Vec::new(); tuples.len()];
            for (old, t) in tuples.into_iter().enumerate() {
                ordered[remap[old].expect("every tuple lies in a facet").index()] = t;
            }
            (complex, ordered)
        };
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), VertexId::new(i)))
            .collect();
        Ok(Product {
            complex: Arc::new(complex),
            factors,
            tuples,
            index,
        })
    }

    pub fn binary(k: Arc<Complex>, l: Arc<Complex>) -> Result<Self> {
        Product::new(vec![k, l])
    }

    /// `Kⁿ`; fails for `n = 0`.
    pub fn power(k: Arc<Complex>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("power needs n >= 1".into()));
        }
        Product::new(vec![k; n])
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    pub fn factors(&self) -> &[Arc<Complex>] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn coordinates(&self, v: VertexId) -> &[VertexId] {
        &self.tuples[v.index()]
    }

    pub fn vertex_of(&self, coordinates: &[VertexId]) -> Option<VertexId> {
        self.index.get(coordinates).copied()
    }

    /// `πⱼ`.
    pub fn projection(&self, j: usize) -> Result<VertexMap> {
        let factor = self
            .factors
            .get(j)
            .ok_or_else(|| Error::Precondition(format!("no factor {j}")))?;
        let assignment = self.tuples.iter().map(|t| t[j]).collect();
        VertexMap::new(self.complex.clone(), factor.clone(), assignment)
    }

    /// `(f₁, …, fₙ): M → K₁ × ⋯ × Kₙ` for maps `fⱼ: M → Kⱼ` sharing a source.
    pub fn tuple_map(&self, maps: &[VertexMap]) -> Result<VertexMap> {
        if maps.len() != self.arity() {
            return Err(Error::MapMismatch);
        }
        let source = maps[0].source().clone();
        for (m, k) in maps.iter().zip(&self.factors) {
            if **m.source() != *source || **m.target() != **k {
                return Err(Error::MapMismatch);
            }
        }
        let assignment = source
            .vertices()
            .map(|v| {
                let t: Vec<VertexId> = maps.iter().map(|m| m.apply(v)).collect();
                self.vertex_of(&t).expect("every tuple is a vertex")
            })
            .collect();
        VertexMap::new(source, self.complex.clone(), assignment)
    }

    /// The diagonal `K → Kⁿ`; every factor must be the same complex.
    pub fn diagonal(&self) -> Result<VertexMap> {
        let k = &self.factors[0];
        if self.factors.iter().any(|f| **f != **k) {
            return Err(Error::Precondition("diagonal needs equal factors".into()));
        }
        let id = VertexMap::identity(k.clone());
        self.tuple_map(&vec![id; self.arity()])
    }

    /// `f₁ × ⋯ × fₙ: self → target` with `fⱼ: Kⱼ → Lⱼ`.
    pub fn map_to(&self, target: &Product, maps: &[VertexMap]) -> Result<VertexMap> {
        if maps.len() != self.arity() || target.arity() != self.arity() {
            return Err(Error::MapMismatch);
        }
        for ((m, k), l) in maps.iter().zip(&self.factors).zip(&target.factors) {
            if **m.source() != **k || **m.target() != **l {
                return Err(Error::MapMismatch);
            }
        }
        let assignment = self
            .tuples
            .iter()
            .map(|t| {
                let image: Vec<VertexId> = t.iter().zip(maps).map(|(&v, m)| m.apply(v)).collect();
                target.vertex_of(&image).expect("every tuple is a vertex")
            })
            .collect();
        VertexMap::new(self.complex.clone(), target.complex.clone(), assignment)
    }
}

/// `K × L` with labels `(x,y)`.
pub fn product(k: &Complex, l: &Complex) -> Complex {
    let p = Product::binary(Arc::new(k.clone()), Arc::new(l.clone())).expect("two factors");
    (*p.complex).clone()
}

/// `Kⁿ` with labels `(x1,…,xn)`; `K¹ = K`.
pub fn power(k: &Complex, n: usize) -> Result<Complex> {
    Ok((*Product::power(Arc::new(k.clone()), n)?.complex).clone())
}

/// `f × g: K × L → K′ × L′`.
pub fn product_map(f: &VertexMap, g: &VertexMap) -> Result<VertexMap> {
    let s = Product::binary(f.source().clone(), g.source().clone())?;
    let t = Product::binary(f.target().clone(), g.target().clone())?;
    s.map_to(&t, &[f.clone(), g.clone()])
}
