//! The reproduction suite: sixteen checks over embedded fixtures, each with
//! a time limit. Fixtures can be overridden to confirm that a corrupted
//! input makes the suite fail.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::category::{
    gscat, is_categorical, scat, verify_gscat_witness, verify_scat_witness, wscat_le, CategoricalStrategy,
    Interval, ScatOptions, Verdict,
};
use crate::complex::Complex;
use crate::constructions::{cone, product, sd, sd_contiguity_chain, sd_map, suspension};
use crate::contiguity::{contiguity_class, has_contiguity_extension, simplicial_maps};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::{arboricity, bisect_off_tree, find_bisection, Graph};
use crate::iso::isomorphic;
use crate::maps::VertexMap;

/// One row of the report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub title: &'static str,
    /// The statement being reproduced.
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: f64,
}

/// Fixture set for the suite; names follow [`fixtures::NAMES`].
#[derive(Clone, Debug, Default)]
pub struct Suite {
    overrides: HashMap<String, Complex>,
}

type CheckFn = fn(&Suite) -> Result<(bool, String)>;

const CHECKS: &[(usize, &str, &str, f64, CheckFn)] = &[
    (1, "scat of the hollow triangle", "scat(∂Δ²) = 1", 1.0, check_hollow),
    (2, "cones have category zero", "scat(K * a) = 0", 5.0, check_cones),
    (3, "suspension of the hollow triangle", "scat(Σ∂Δ²) = 1", 30.0, check_suspension),
    (4, "arboricity of complete graphs", "Υ(K₂ₙ) = n = Υ(K₂ₙ₋₁)", 10.0, check_arboricity),
    (5, "subdivision lowers scat of K5", "1 = scat(sd K₅) < scat K₅ = 2", 60.0, check_k5),
    (6, "gscat of graphs", "gscat G = Υ(G) − 1", 30.0, check_gscat),
    (7, "minimal cores", "core(∂Δ²) and core(sd ∂Δ²) are minimal and not isomorphic", 1.0, check_cores),
    (8, "identity is isolated on minimal complexes", "K minimal ⇒ [id] = {id}", 30.0, check_minid),
    (9, "subdivision of contiguous maps", "φ ~c ψ ⇒ sd φ ~ sd ψ", 60.0, check_sdcont),
    (10, "subdivision monotonicity", "scat(sd K) ≤ scat K", 120.0, check_sd_monotone),
    (11, "products", "Δ¹×Δ¹ ≅ Δ³ and scat(K×L)+1 ≤ (scat K+1)(scat L+1)", 30.0, check_products),
    (12, "weak category decisions", "wscat K = 0 ⇒ K strongly collapsible", 60.0, check_wscat),
    (13, "extension counterexample", "triangle minus an edge lacks the extension property", 10.0, check_extension),
    (14, "categorical subgraphs are forests", "U ⊆ G categorical ⇔ U is a forest", 120.0, check_catfor),
    (15, "bisection off a spanning tree", "scat G' = 1; three bisected edges suffice for K₅", 40.0, check_bisection),
    (16, "collapsible minimal complex", "collapsible, minimal, and scat = 1", 120.0, check_mother),
];

impl Suite {
    pub fn new() -> Self {
        Suite::default()
    }

    /// Replaces a named fixture.
    pub fn with_fixture(mut self, name: &str, k: Complex) -> Result<Self> {
        if fixtures::by_name(name).is_none() {
            return Err(Error::Precondition(format!("unknown fixture {name:?}")));
        }
        self.overrides.insert(name.to_string(), k);
        Ok(self)
    }

    pub fn fixture(&self, name: &str) -> Complex {
        self.overrides
            .get(name)
            .cloned()
            .or_else(|| fixtures::by_name(name))
            .expect("known fixture")
    }

    /// Number of checks in the suite.
    pub fn len(&self) -> usize {
        CHECKS.len()
    }

    pub fn is_empty(&self) -> bool {
        CHECKS.is_empty()
    }

    /// Runs one check by id (1-based).
    pub fn run_one(&self, id: usize) -> Option<CheckOutcome> {
        let &(id, title, anchor, limit, f) = CHECKS.iter().find(|c| c.0 == id)?;
        let start = Instant::now();
        let outcome = f(self);
        let seconds = start.elapsed().as_secs_f64();
        let (ok, detail) = match outcome {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        Some(CheckOutcome {
            id,
            title,
            anchor,
            passed: ok && seconds < limit,
            detail: if ok && seconds >= limit {
                format!("{detail}; over the time limit")
            } else {
                detail
            },
            seconds,
            limit_seconds: limit,
        })
    }

    pub fn run(&self) -> Vec<CheckOutcome> {
        CHECKS.iter().filter_map(|c| self.run_one(c.0)).collect()
    }
}

fn exact(k: &Complex, opts: &ScatOptions) -> Result<Option<usize>> {
    let r = scat(k, opts)?;
    verify_scat_witness(&Arc::new(k.clone()), &r)?;
    Ok(r.value())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T, notes: &mut Vec<String>) -> bool {
    notes.push(format!("{label} = {got:?}"));
    if got != want {
        notes.push(format!("expected {want:?}"));
        false
    } else {
        true
    }
}

fn check_hollow(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let ok = expect_eq(
        "scat",
        exact(&s.fixture("hollow-triangle"), &ScatOptions::default())?,
        Some(1),
        &mut notes,
    );
    Ok((ok, notes.join("; ")))
}

fn check_cones(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for name in ["hollow-triangle", "C5", "K4"] {
        let v = exact(&cone(&s.fixture(name)), &ScatOptions::default())?;
        ok &= expect_eq(&format!("scat(cone {name})"), v, Some(0), &mut notes);
    }
    Ok((ok, notes.join("; ")))
}

fn check_suspension(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let opts = ScatOptions {
        budget: 1_000_000,
        ..Default::default()
    };
    let v = exact(&suspension(&s.fixture("hollow-triangle")), &opts)?;
    let ok = expect_eq("scat(Σ∂Δ²)", v, Some(1), &mut notes);
    Ok((ok, notes.join("; ")))
}

fn check_arboricity(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, want) in [("K4", 2), ("K5", 3), ("K6", 3), ("K7", 4)] {
        let k = s.fixture(name);
        let g = Graph::new(&k)?;
        let (u, d) = arboricity(&g);
        d.validate(&g)?;
        ok &= expect_eq(&format!("Υ({name})"), u, want, &mut notes);
    }
    Ok((ok, notes.join("; ")))
}

fn generic_options() -> ScatOptions {
    ScatOptions {
        graph_fast_path: false,
        strategy: CategoricalStrategy::Collapse,
        budget: 5_000,
        partition_budget: 200_000,
        ..Default::default()
    }
}

fn check_k5(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    let k5 = s.fixture("K5");
    let sdk5 = s.fixture("sd-K5");
    for (label, opts) in [("fast", ScatOptions::default()), ("generic", generic_options())] {
        ok &= expect_eq(&format!("{label} scat K5"), exact(&k5, &opts)?, Some(2), &mut notes);
        ok &= expect_eq(&format!("{label} scat sd K5"), exact(&sdk5, &opts)?, Some(1), &mut notes);
    }
    Ok((ok, notes.join("; ")))
}

fn check_gscat(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, want) in [("K5", 2), ("sd-K5", 1)] {
        let k = s.fixture(name);
        let r = gscat(&k)?;
        verify_gscat_witness(&k, &r)?;
        ok &= expect_eq(&format!("gscat {name}"), r.value(), Some(want), &mut notes);
    }
    let k5 = s.fixture("K5");
    let u = arboricity(&Graph::new(&k5)?).0;
    ok &= expect_eq("Υ(K5) − 1", u - 1, 2, &mut notes);
    Ok((ok, notes.join("; ")))
}

fn check_cores(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let t = s.fixture("hollow-triangle");
    let st = sd(&t);
    let ct = t.core();
    let cst = st.core();
    let mut ok = expect_eq("core(∂Δ²) steps", ct.steps.len(), 0, &mut notes);
    ok &= expect_eq("core(∂Δ²) = ∂Δ²", ct.complex == t, true, &mut notes);
    ok &= expect_eq("core(sd ∂Δ²) = sd ∂Δ²", cst.complex == st, true, &mut notes);
    ok &= expect_eq("isomorphic", isomorphic(&ct.complex, &cst.complex), false, &mut notes);
    Ok((ok, notes.join("; ")))
}

fn check_minid(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    let t = s.fixture("hollow-triangle");
    let minimal = [
        ("∂Δ²", t.clone()),
        ("sd ∂Δ²", sd(&t)),
        ("Σ∂Δ²", suspension(&t)),
        ("C4", s.fixture("C4")),
        ("K4", s.fixture("K4")),
        ("mother", s.fixture("mother")),
    ];
    for (name, k) in minimal {
        if !k.core().steps.is_empty() {
            notes.push(format!("{name} is not minimal"));
            ok = false;
            continue;
        }
        let id = VertexMap::identity(Arc::new(k));
        let class = contiguity_class(&id, 1_000_000)?;
        let isolated = class.exhaustive && class.members.len() == 1;
        ok &= expect_eq(&format!("[id] = {{id}} on {name}"), isolated, true, &mut notes);
    }
    Ok((ok, notes.join("; ")))
}

/// A random complex with at most `max_vertices` vertices and `max_facets`
/// facets, labelled `0..`.
pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize, max_facets: usize) -> Complex {
    let n = rng.random_range(1..=max_vertices);
    let f = rng.random_range(1..=max_facets);
    let facets: Vec<Vec<String>> = (0..f)
        .map(|_| {
            let mask = rng.random_range(1u32..(1 << n));
            (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i.to_string()).collect()
        })
        .collect();
    Complex::from_facets(facets).expect("nonempty facets")
}

/// Pairs `(φ, ψ)` of directly contiguous simplicial maps between random
/// complexes, drawn deterministically from `seed`.
pub fn random_contiguous_pairs(count: usize, seed: u64) -> Vec<(VertexMap, VertexMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = Arc::new(random_complex(&mut rng, 4, 4));
        let l = Arc::new(random_complex(&mut rng, 4, 4));
        let (maps, _) = simplicial_maps(&k, &l, 100_000).expect("small");
        let Some(phi) = maps.choose(&mut rng).cloned() else {
            continue;
        };
        let near: Vec<&VertexMap> = maps
            .iter()
            .filter(|m| **m != phi && phi.is_contiguous(m).unwrap_or(false))
            .collect();
        let psi = near.choose(&mut rng).map_or_else(|| phi.clone(), |m| (*m).clone());
        out.push((phi, psi));
    }
    out
}

fn check_sdcont(_: &Suite) -> Result<(bool, String)> {
    let pairs = random_contiguous_pairs(200, 7);
    let passed = pairs
        .par_iter()
        .filter(|(phi, psi)| {
            let Ok(chain) = sd_contiguity_chain(phi, psi) else {
                return false;
            };
            chain.validate().is_ok()
                && sd_map(phi).is_ok_and(|m| *chain.first() == m)
                && sd_map(psi).is_ok_and(|m| *chain.last() == m)
        })
        .count();
    Ok((passed == 200, format!("{passed}/200 chains revalidated")))
}

fn monotone_options() -> ScatOptions {
    ScatOptions {
        budget: 20_000,
        partition_budget: 20_000,
        ..Default::default()
    }
}

fn check_sd_monotone(s: &Suite) -> Result<(bool, String)> {
    let mut inputs: Vec<(String, Complex)> = fixtures::graph_fixtures()
        .into_iter()
        .map(|(n, _)| (n.to_string(), s.fixture(n)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..50 {
        inputs.push((format!("random-{i}"), random_complex(&mut rng, 4, 4)));
    }
    let opts = monotone_options();
    let verdicts: Vec<(String, Result<Verdict>)> = inputs
        .par_iter()
        .map(|(name, k)| {
            let v = (|| {
                let a = scat(&sd(k), &opts)?;
                let b = scat(k, &opts)?;
                Ok(Verdict::le(
                    Interval { lo: a.lower, hi: Some(a.upper) },
                    Interval { lo: b.lower, hi: Some(b.upper) },
                ))
            })();
            (name.clone(), v)
        })
        .collect();
    let mut violated = Vec::new();
    let mut confirmed = 0;
    let mut inconclusive = 0;
    for (name, v) in verdicts {
        match v {
            Ok(Verdict::Confirmed) => confirmed += 1,
            Ok(Verdict::Inconclusive | Verdict::Skipped) => inconclusive += 1,
            Ok(Verdict::Violated) => violated.push(name),
            Err(e) => violated.push(format!("{name}: {e}")),
        }
    }
    Ok((
        violated.is_empty(),
        format!("{confirmed} confirmed, {inconclusive} inconclusive, violations: {violated:?}"),
    ))
}

fn check_products(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let e = fixtures::simplex(1);
    let mut ok = expect_eq("Δ¹×Δ¹ ≅ Δ³", isomorphic(&product(&e, &e), &fixtures::simplex(3)), true, &mut notes);
    let t = s.fixture("hollow-triangle");
    let opts = ScatOptions::default();
    let p = scat(&product(&t, &e), &opts)?;
    let a = scat(&t, &opts)?;
    let b = scat(&e, &opts)?;
    let lhs = Interval { lo: p.lower + 1, hi: Some(p.upper + 1) };
    let rhs = Interval {
        lo: (a.lower + 1) * (b.lower + 1),
        hi: Some((a.upper + 1) * (b.upper + 1)),
    };
    ok &= expect_eq("rhs", rhs, Interval::exact(2), &mut notes);
    ok &= expect_eq("scat(∂Δ²×Δ¹)+1 ≤ 2", Verdict::le(lhs, rhs), Verdict::Confirmed, &mut notes);
    Ok((ok, notes.join("; ")))
}

fn check_wscat(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let e = fixtures::simplex(1);
    let t = s.fixture("hollow-triangle");
    let base = t.labels()[0].clone();
    let mut ok = expect_eq("wscat_le(Δ¹, 0)", wscat_le(&e, "0", 0, 1_000_000)?.verdict(), "yes", &mut notes);
    ok &= expect_eq("wscat_le(∂Δ², 0)", wscat_le(&t, &base, 0, 1_000_000)?.verdict(), "no", &mut notes);
    ok &= expect_eq("wscat_le(∂Δ², 1)", wscat_le(&t, &base, 1, 1_000_000)?.verdict(), "no", &mut notes);
    Ok((ok, notes.join("; ")))
}

fn check_extension(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let k = Arc::new(s.fixture("hollow-triangle"));
    let [a, b, c] = [0, 1, 2].map(|i| k.labels()[i].clone());
    let l = Arc::new(Complex::from_facets([[a.clone(), b], [a.clone(), c]])?);
    let i = VertexMap::inclusion(l.clone(), k.clone())?;
    let psi = VertexMap::constant(l, k.clone(), k.vertex_or_err(&a)?)?;
    let id = VertexMap::identity(k);
    let d = has_contiguity_extension(&i, &i, &psi, &id, 1_000_000)?;
    let ok = expect_eq("extension", d.verdict(), "no", &mut notes);
    Ok((ok, notes.join("; ")))
}

/// Connected graphs with `1..=max_edges` edges, one per isomorphism class,
/// as edge lists on `0..n`.
pub fn connected_graphs(max_edges: usize) -> Vec<Complex> {
    let mut out: Vec<Complex> = Vec::new();
    let mut level = vec![vec![(0usize, 1usize)]];
    for _ in 1..max_edges {
        let mut next: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut next_complexes: Vec<Complex> = Vec::new();
        for g in &level {
            let n = g.iter().map(|&(_, w)| w).max().unwrap_or(0) + 1;
            let mut candidates = Vec::new();
            for u in 0..n {
                for w in u + 1..=n {
                    if !g.contains(&(u, w)) {
                        let mut h = g.clone();
                        h.push((u, w));
                        candidates.push(h);
                    }
                }
            }
            for h in candidates {
                let k = edges_to_complex(&h);
                if !next_complexes.iter().any(|o| isomorphic(o, &k)) {
                    next_complexes.push(k);
                    next.push(h);
                }
            }
        }
        out.extend(level.iter().map(|g| edges_to_complex(g)));
        level = next;
    }
    out.extend(level.iter().map(|g| edges_to_complex(g)));
    out
}

fn edges_to_complex(edges: &[(usize, usize)]) -> Complex {
    Complex::from_facets(edges.iter().map(|&(u, w)| [u.to_string(), w.to_string()])).expect("nonempty")
}

fn check_catfor(_: &Suite) -> Result<(bool, String)> {
    let graphs = connected_graphs(6);
    let results: Vec<Result<(usize, usize)>> = graphs
        .par_iter()
        .map(|k| {
            let g = Graph::new(k)?;
            let karc = Arc::new(k.clone());
            let n = k.num_facets();
            let mut agree = 0;
            for mask in 1u32..(1 << n) {
                let facets: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let edges: Vec<usize> = facets.iter().filter_map(|&f| g.facet_edge(f)).collect();
                let d = is_categorical(&karc, &facets, 1_000_000, CategoricalStrategy::Search)?;
                let forest = g.is_forest(&edges);
                if (d.is_yes() && forest) || (d.is_no() && !forest) {
                    agree += 1;
                }
            }
            Ok((agree, (1 << n) - 1))
        })
        .collect();
    let mut agree = 0;
    let mut total = 0;
    for r in results {
        let (a, t) = r?;
        agree += a;
        total += t;
    }
    Ok((
        agree == total,
        format!("{} graphs, {agree}/{total} subsets agree", graphs.len()),
    ))
}

fn check_bisection(s: &Suite) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    let opts = ScatOptions::default();
    for name in ["C3", "K4", "K5"] {
        let b = bisect_off_tree(&s.fixture(name))?;
        ok &= expect_eq(&format!("scat G' for {name}"), exact(&b, &opts)?, Some(1), &mut notes);
    }
    for name in ["path-3", "star-4"] {
        let b = bisect_off_tree(&s.fixture(name))?;
        ok &= expect_eq(&format!("scat G' for {name}"), exact(&b, &opts)?, Some(0), &mut notes);
    }
    let k5 = s.fixture("K5");
    match find_bisection(&k5, 3)? {
        Some((edges, g)) => {
            let v = exact(&g, &opts)?;
            ok &= expect_eq(&format!("scat after bisecting {} edges", edges.len()), v, Some(1), &mut notes);
        }
        None => {
            notes.push("no 3-edge bisection found".into());
            ok = false;
        }
    }
    Ok((ok, notes.join("; ")))
}

fn check_mother(s: &Suite) -> Result<(bool, String)> {
    let k = s.fixture("mother");
    let cert = fixtures::certify_mother(&k, &ScatOptions::default());
    Ok((
        cert.holds(),
        format!(
            "collapsible = {}, minimal = {}, scat = 1: {}",
            cert.collapsible, cert.minimal, cert.scat_one
        ),
    ))
}
