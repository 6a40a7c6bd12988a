use std::sync::Arc;

use crate::complex::{Complex, Simplex, VertexId};
use crate::constructions::FatWedge;
use crate::contiguity::{contiguity_class_reachable, Decision};
use crate::error::{Error, Result};
use crate::maps::{ContiguityChain, VertexMap};

/// Certificate for `wscat K ≤ n`: a map `δ: K → Tⁿ⁺¹K` and a chain from the
/// diagonal `K → Kⁿ⁺¹` to the composite of `δ` with the inclusion.
#[derive(Clone, Debug)]
pub struct WscatWitness {
    pub fat_wedge: Arc<Complex>,
    pub delta: VertexMap,
    pub chain: ContiguityChain,
}

/// Decides whether the diagonal `K → Kⁿ⁺¹` is in the contiguity class of a
/// map factoring through the fat wedge `Tⁿ⁺¹K` at `basepoint`.
pub fn wscat_le(k: &Complex, basepoint: &str, n: usize, budget: usize) -> Result<Decision<WscatWitness>> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    k.vertex_or_err(basepoint)?;
    if !k.is_connected() {
        return Err(Error::Disconnected);
    }
    let karc = Arc::new(k.clone());
    let t = FatWedge::new(karc.clone(), basepoint, n + 1)?;
    let power = t.power();
    power.complex().ensure_searchable()?;
    let diagonal = power.diagonal()?;
    let mut in_t: Vec<Option<VertexId>> = vec![None; power.complex().num_vertices()];
    for v in t.complex().vertices() {
        in_t[t.inclusion().apply(v).index()] = Some(v);
    }
    let tc = t.complex().clone();
    let facets: Vec<Simplex> = k.facets().to_vec();
    let goal = |a: &[VertexId]| {
        facets.iter().all(|f| {
            let image: Option<Vec<VertexId>> = f.vertices().iter().map(|v| in_t[a[v.index()].index()]).collect();
            image
                .and_then(Simplex::new)
                .is_some_and(|s| tc.is_simplex(&s))
        })
    };
    let d = contiguity_class_reachable(&diagonal, goal, budget)?;
    Ok(match d {
        Decision::Yes(chain) => {
            let last = chain.last();
            let assignment = last
                .assignment()
                .iter()
                .map(|p| in_t[p.index()].expect("goal lands in the fat wedge"))
                .collect();
            let delta = VertexMap::new(karc, t.complex().clone(), assignment)?;
            Decision::Yes(WscatWitness {
                fat_wedge: t.complex().clone(),
                delta,
                chain,
            })
        }
        Decision::No => Decision::No,
        Decision::Unknown { visited, budget } => Decision::Unknown { visited, budget },
    })
}

/// Least `n ≤ max_n` with `wscat_le` answering Yes, as an interval: the
/// lower end is one past the largest refuted `n` below the first
/// unsettled one; the upper end is `None` when no `n ≤ max_n` succeeded.
pub fn wscat(
    k: &Complex,
    basepoint: &str,
    max_n: usize,
    budget: usize,
) -> Result<(usize, Option<usize>, Option<WscatWitness>)> {
    let mut lower = 0;
    let mut settled = true;
    for n in 0..=max_n {
        match wscat_le(k, basepoint, n, budget)? {
            Decision::Yes(w) => return Ok((lower, Some(n), Some(w))),
            Decision::No => {
                if settled {
                    lower = n + 1;
                }
            }
            Decision::Unknown { .. } => settled = false,
        }
    }
    Ok((lower, None, None))
}
