//! Strong collapses, cores, and simple collapsibility.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Mask, VertexId};
use crate::error::{Error, Result};

/// One elementary strong collapse: `removed` was dominated by `dominator`
/// when its open star was deleted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub removed: String,
    pub dominator: String,
}

/// The minimal complex reached by strong collapses, with the step log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub complex: Complex,
    pub steps: Vec<CollapseStep>,
}

impl Complex {
    /// Deletes the canonically least dominated vertex (using its least
    /// dominator) until no vertex is dominated.
    pub fn core(&self) -> Core {
        let mut current = self.clone();
        let mut steps = Vec::new();
        loop {
            let pair = current
                .vertices()
                .find_map(|v| current.dominators(v).first().map(|&w| (v, w)));
            match pair {
                Some((v, w)) => {
                    steps.push(CollapseStep {
                        removed: current.label(v).to_string(),
                        dominator: current.label(w).to_string(),
                    });
                    current = current.delete_vertex(v).expect("dominated vertex is not alone");
                }
                None => {
                    return Core {
                        complex: current,
                        steps,
                    }
                }
            }
        }
    }

    /// Like [`Complex::core`] but lets `choose` pick which dominated pair to
    /// collapse next. `choose` receives the current complex and every
    /// dominated pair in canonical order and returns an index into them.
    pub fn core_by<F>(&self, mut choose: F) -> Core
    where
        F: FnMut(&Complex, &[(VertexId, VertexId)]) -> usize,
    {
        let mut current = self.clone();
        let mut steps = Vec::new();
        loop {
            let pairs = current.dominated_pairs();
            if pairs.is_empty() {
                return Core {
                    complex: current,
                    steps,
                };
            }
            let (v, w) = pairs[choose(&current, &pairs) % pairs.len()];
            steps.push(CollapseStep {
                removed: current.label(v).to_string(),
                dominator: current.label(w).to_string(),
            });
            current = current.delete_vertex(v).expect("dominated vertex is not alone");
        }
    }

    /// Strong collapses reduce the complex to a single vertex.
    pub fn is_strongly_collapsible(&self) -> bool {
        self.core().complex.num_vertices() == 1
    }
}

impl Core {
    /// The retraction onto the core: image in the core of every vertex of
    /// `original` (the complex this core was computed from).
    pub fn retraction(&self, original: &Complex) -> Vec<VertexId> {
        let images = self.label_images();
        original
            .labels()
            .iter()
            .map(|l| {
                let target = images.get(l.as_str()).copied().unwrap_or(l.as_str());
                self.complex.vertex(target).expect("image survives in the core")
            })
            .collect()
    }

    fn label_images(&self) -> HashMap<&str, &str> {
        let mut images: HashMap<&str, &str> = HashMap::new();
        for step in self.steps.iter().rev() {
            let image = images
                .get(step.dominator.as_str())
                .copied()
                .unwrap_or(step.dominator.as_str());
            images.insert(step.removed.as_str(), image);
        }
        images
    }

    /// Assignments `K → K` of the successive partial retractions: the
    /// identity first, then one map per step, each sending the removed vertex
    /// to its dominator. Consecutive maps are directly contiguous.
    pub fn collapse_assignments(&self, original: &Complex) -> Vec<Vec<VertexId>> {
        let mut current: Vec<VertexId> = original.vertices().collect();
        let mut out = vec![current.clone()];
        for step in &self.steps {
            let v = original.vertex(&step.removed).expect("step vertex in original");
            let w = original.vertex(&step.dominator).expect("step vertex in original");
            for image in current.iter_mut() {
                if *image == v {
                    *image = w;
                }
            }
            out.push(current.clone());
        }
        out
    }

    /// Re-applies the log to `original`, checking each domination at the
    /// moment it is used, and that the result equals the stored core.
    pub fn replay(&self, original: &Complex) -> Result<()> {
        let mut current = original.clone();
        for step in &self.steps {
            let v = current.vertex_or_err(&step.removed)?;
            let w = current.vertex_or_err(&step.dominator)?;
            if !current.dominated_by(v, w)? {
                return Err(Error::Precondition(format!(
                    "{} is not dominated by {}",
                    step.removed, step.dominator
                )));
            }
            current = current.delete_vertex(v)?;
        }
        if current == self.complex {
            Ok(())
        } else {
            Err(Error::Precondition("replayed log ends elsewhere".into()))
        }
    }
}

impl Complex {
    /// True iff elementary simple collapses (removing a free face together
    /// with the unique facet containing it) reduce the complex to a vertex.
    /// Exhaustive backtracking over collapse orders, memoizing dead ends.
    pub fn is_collapsible(&self) -> Result<bool> {
        let state = self.facet_masks()?;
        if !self.is_connected() || self.euler_characteristic() != 1 {
            return Ok(false);
        }
        let mut dead = HashSet::new();
        Ok(collapse_search(normalize(state), &mut dead))
    }
}

fn normalize(mut state: Vec<Mask>) -> Vec<Mask> {
    state.sort_unstable();
    state
}

fn collapse_search(state: Vec<Mask>, dead: &mut HashSet<Vec<Mask>>) -> bool {
    if state.len() == 1 && state[0].count_ones() == 1 {
        return true;
    }
    if dead.contains(&state) {
        return false;
    }
    // Higher-dimensional facets first: it reaches a point sooner on
    // collapsible inputs, and exhaustiveness does not depend on the order.
    let mut order: Vec<usize> = (0..state.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(state[i].count_ones()));
    for &i in &order {
        let sigma = state[i];
        if sigma.count_ones() < 2 {
            continue;
        }
        let mut bits = sigma;
        while bits != 0 {
            let x = bits & bits.wrapping_neg();
            bits &= bits - 1;
            let tau = sigma & !x;
            let free = state
                .iter()
                .enumerate()
                .all(|(j, &f)| j == i || tau & !f != 0);
            if !free {
                continue;
            }
            let mut next: Vec<Mask> = state
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &f)| f)
                .collect();
            let mut rest = sigma;
            while rest != 0 {
                let y = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if y == x {
                    continue;
                }
                let rho = sigma & !y;
                if !next.iter().any(|&f| rho & !f == 0) {
                    next.push(rho);
                }
            }
            if collapse_search(normalize(next), dead) {
                return true;
            }
        }
    }
    dead.insert(state);
    false
}
