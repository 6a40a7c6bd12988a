use std::sync::Arc;

use crate::complex::{Complex, VertexId};
use crate::constructions::product::Product;
use crate::error::{Error, Result};
use crate::maps::VertexMap;

/// The fat wedge `TⁿK ⊆ Kⁿ`: the union of the subcomplexes where some
/// coordinate is pinned to the base point.
#[derive(Clone, Debug)]
pub struct FatWedge {
    complex: Arc<Complex>,
    power: Product,
    basepoint: VertexId,
    inclusion: VertexMap,
}

impl FatWedge {
    /// Fails for `n = 0` or an unknown base point.
    pub fn new(k: Arc<Complex>, basepoint: &str, n: usize) -> Result<Self> {
        let v0 = k.vertex_or_err(basepoint)?;
        let power = Product::power(k.clone(), n)?;
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for j in 0..n {
            let mut cells: Vec<Vec<Vec<VertexId>>> = vec![Vec::new()];
            for i in 0..n {
                let factor: Vec<Vec<VertexId>> = if i == j {
                    vec![vec![v0]]
                } else {
                    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
                };
                cells = cells
                    .into_iter()
                    .flat_map(|cell| {
                        factor.iter().map(move |f| {
                            let mut c = cell.clone();
                            c.push(f.clone());
                            c
                        })
                    })
                    .collect();
            }
            for cell in cells {
                sets.push(tuples_of(&cell).map(|t| power.vertex_of(&t).expect("tuple").index()).collect());
            }
        }
        let ambient = power.complex().clone();
        let (complex, remap) = Complex::build(ambient.labels().to_vec(), sets, false)?;
        let mut assignment = vec![VertexId::new(0); complex.num_vertices()];
        for (old, new) in remap.iter().enumerate() {
            if let Some(new) = new {
                assignment[new.index()] = VertexId::new(old);
            }
        }
        let complex = Arc::new(complex);
        let inclusion = VertexMap::new(complex.clone(), ambient, assignment)?;
        Ok(FatWedge {
            complex,
            power,
            basepoint: v0,
            inclusion,
        })
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    /// The ambient power `Kⁿ`.
    pub fn power(&self) -> &Product {
        &self.power
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    /// `TⁿK → Kⁿ`.
    pub fn inclusion(&self) -> &VertexMap {
        &self.inclusion
    }

    /// Coordinates in `K` of a vertex of `TⁿK`.
    pub fn coordinates(&self, v: VertexId) -> &[VertexId] {
        self.power.coordinates(self.inclusion.apply(v))
    }

    pub fn vertex_of(&self, coordinates: &[VertexId]) -> Option<VertexId> {
        let v = self.power.vertex_of(coordinates)?;
        self.complex.vertex(self.power.complex().label(v))
    }

    /// `Tⁿφ: TⁿK → TⁿL` for a pointed `φ: K → L` (`φ(v₀) = w₀`).
    pub fn map_to(&self, target: &FatWedge, phi: &VertexMap) -> Result<VertexMap> {
        let k = &self.power.factors()[0];
        let l = &target.power.factors()[0];
        if **phi.source() != **k || **phi.target() != **l || self.power.arity() != target.power.arity()
        {
            return Err(Error::MapMismatch);
        }
        if phi.apply(self.basepoint) != target.basepoint {
            return Err(Error::Precondition("map does not preserve the base point".into()));
        }
        let assignment = self
            .complex
            .vertices()
            .map(|v| {
                let image: Vec<VertexId> = self.coordinates(v).iter().map(|&x| phi.apply(x)).collect();
                target.vertex_of(&image).expect("pinned coordinate stays pinned")
            })
            .collect();
        VertexMap::new(self.complex.clone(), target.complex.clone(), assignment)
    }
}

/// All tuples of a cell given as one vertex list per coordinate.
fn tuples_of(cell: &[Vec<VertexId>]) -> impl Iterator<Item = Vec<VertexId>> + '_ {
    let total: usize = cell.iter().map(Vec::len).product();
    (0..total).map(move |mut code| {
        let mut t = vec![VertexId::new(0); cell.len()];
        for i in (0..cell.len()).rev() {
            t[i] = cell[i][code % cell[i].len()];
            code /= cell[i].len();
        }
        t
    })
}

/// `TⁿK` based at `basepoint`.
pub fn fat_wedge(k: &Complex, basepoint: &str, n: usize) -> Result<FatWedge> {
    FatWedge::new(Arc::new(k.clone()), basepoint, n)
}

/// `Tⁿφ` for `φ: K → L` with `φ(v₀) = w₀`.
pub fn fat_wedge_map(phi: &VertexMap, v0: &str, w0: &str, n: usize) -> Result<VertexMap> {
    let s = FatWedge::new(phi.source().clone(), v0, n)?;
    let t = FatWedge::new(phi.target().clone(), w0, n)?;
    s.map_to(&t, phi)
}
