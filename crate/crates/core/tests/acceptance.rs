//! The sixteen acceptance criteria, each checked against an independent
//! brute-force oracle where one is feasible, with its time limit. Prints
//! one PASS/FAIL line per criterion.

mod common;

use std::sync::Arc;
use std::time::Instant;

use common::Cx;
use scatkit::category::{
    gscat, is_categorical, scat, verify_gscat_witness, verify_scat_witness, wscat_le, CatResult,
    CategoricalStrategy, Interval, ScatOptions, Verdict,
};
use scatkit::constructions::{cone, product, sd, sd_contiguity_chain, suspension, Subdivision};
use scatkit::contiguity::{contiguity_class, has_contiguity_extension};
use scatkit::fixtures;
use scatkit::graph::{arboricity, bisect_off_tree, find_bisection, Graph};
use scatkit::iso::isomorphic;
use scatkit::reproduce::{connected_graphs, random_complex, random_contiguous_pairs};
use scatkit::{Complex, VertexMap};

type Outcome = Result<String, String>;

struct Row {
    id: &'static str,
    name: &'static str,
    passed: bool,
    seconds: f64,
    limit: f64,
    detail: String,
}

fn timed(id: &'static str, name: &'static str, limit: f64, f: impl FnOnce() -> Outcome) -> Row {
    let start = Instant::now();
    let r = f();
    let seconds = start.elapsed().as_secs_f64();
    let (ok, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Row {
        id,
        name,
        passed: ok && seconds < limit,
        seconds,
        limit,
        detail,
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn checked_scat(k: &Complex, opts: &ScatOptions) -> Result<CatResult, String> {
    let r = scat(k, opts).map_err(|e| e.to_string())?;
    verify_scat_witness(&Arc::new(k.clone()), &r).map_err(|e| format!("witness: {e}"))?;
    Ok(r)
}

fn exact_scat(k: &Complex, opts: &ScatOptions) -> Result<usize, String> {
    let r = checked_scat(k, opts)?;
    r.value().ok_or_else(|| format!("interval [{}, {}]", r.lower, r.upper))
}

fn c1() -> Outcome {
    let t = fixtures::hollow_triangle();
    let v = exact_scat(&t, &ScatOptions::default())?;
    let oracle = common::scat(&Cx::of(&t));
    ensure(v == 1 && oracle == 1, format!("scat = {v}, oracle = {oracle}"))?;
    Ok(format!("scat(∂Δ²) = {v}, oracle {oracle}"))
}

fn c2() -> Outcome {
    let mut notes = Vec::new();
    for (name, k) in [
        ("∂Δ²", fixtures::hollow_triangle()),
        ("C5", fixtures::cycle(5)),
        ("K4", fixtures::complete_graph(4)),
    ] {
        let c = cone(&k);
        let v = exact_scat(&c, &ScatOptions::default())?;
        let cx = Cx::of(&c);
        let all: Vec<usize> = (0..cx.facets.len()).collect();
        let oracle = common::categorical(&cx, &all);
        ensure(v == 0 && oracle, format!("scat(cone {name}) = {v}, oracle categorical = {oracle}"))?;
        notes.push(format!("cone {name}: 0"));
    }
    Ok(notes.join(", "))
}

fn c3() -> Outcome {
    let s = suspension(&fixtures::hollow_triangle());
    let opts = ScatOptions {
        budget: 1_000_000,
        ..Default::default()
    };
    let v = exact_scat(&s, &opts)?;
    let oracle = common::scat(&Cx::of(&s));
    ensure(v == 1 && oracle == 1, format!("scat = {v}, oracle = {oracle}"))?;
    Ok(format!("scat(Σ∂Δ²) = {v}, oracle {oracle}"))
}

fn c4() -> Outcome {
    let mut notes = Vec::new();
    for (n, want) in [(4, 2), (5, 3), (6, 3), (7, 4)] {
        let k = fixtures::complete_graph(n);
        let g = Graph::new(&k).map_err(|e| e.to_string())?;
        let (u, d) = arboricity(&g);
        d.validate(&g).map_err(|e| e.to_string())?;
        let oracle = common::nash_williams(&Cx::of(&k));
        ensure(u == want && oracle == want, format!("Υ(K{n}) = {u}, Nash-Williams {oracle}"))?;
        notes.push(format!("Υ(K{n}) = {u}"));
    }
    Ok(notes.join(", "))
}

fn c5() -> Outcome {
    let k5 = fixtures::complete_graph(5);
    let sdk5 = sd(&k5);
    let oracle_k5 = common::nash_williams(&Cx::of(&k5)) - 1;
    let oracle_sd = common::nash_williams(&Cx::of(&sdk5)) - 1;
    ensure(oracle_k5 == 2 && oracle_sd == 1, "Nash-Williams oracle disagrees")?;
    let generic = ScatOptions {
        graph_fast_path: false,
        strategy: CategoricalStrategy::Collapse,
        budget: 5_000,
        partition_budget: 200_000,
        ..Default::default()
    };
    for (label, opts) in [("fast path", ScatOptions::default()), ("generic", generic)] {
        let a = exact_scat(&k5, &opts)?;
        let b = exact_scat(&sdk5, &opts)?;
        ensure(a == 2 && b == 1, format!("{label}: scat K5 = {a}, scat sd K5 = {b}"))?;
    }
    Ok("scat K5 = 2, scat sd K5 = 1 on both engines".into())
}

fn c6() -> Outcome {
    let mut notes = Vec::new();
    for (name, k, want) in [
        ("K5", fixtures::complete_graph(5), 2),
        ("sd K5", fixtures::sd_k5(), 1),
    ] {
        let r = gscat(&k).map_err(|e| e.to_string())?;
        verify_gscat_witness(&k, &r).map_err(|e| e.to_string())?;
        let oracle = common::nash_williams(&Cx::of(&k)) - 1;
        ensure(
            r.value() == Some(want) && oracle == want,
            format!("gscat {name} = {:?}, Υ − 1 = {oracle}", r.value()),
        )?;
        notes.push(format!("gscat {name} = {want}"));
    }
    Ok(notes.join(", "))
}

fn c7() -> Outcome {
    let t = fixtures::hollow_triangle();
    let st = sd(&t);
    let ct = t.core();
    let cst = st.core();
    ensure(ct.complex == t && ct.steps.is_empty(), "core(∂Δ²) differs")?;
    ensure(cst.complex == st && cst.steps.is_empty(), "core(sd ∂Δ²) differs")?;
    ensure(Cx::of(&t).is_minimal() && Cx::of(&st).is_minimal(), "oracle finds a dominated vertex")?;
    ensure(!isomorphic(&ct.complex, &cst.complex), "cores are isomorphic")?;
    ensure(t.num_vertices() != st.num_vertices(), "vertex counts agree")?;
    Ok("both minimal, 3 vs 6 vertices, not isomorphic".into())
}

fn c8() -> Outcome {
    let t = fixtures::hollow_triangle();
    let mut notes = Vec::new();
    for (name, k) in [
        ("∂Δ²", t.clone()),
        ("sd ∂Δ²", sd(&t)),
        ("Σ∂Δ²", suspension(&t)),
        ("C4", fixtures::cycle(4)),
        ("K4", fixtures::complete_graph(4)),
        ("mother", fixtures::mother()),
    ] {
        let cx = Cx::of(&k);
        ensure(cx.is_minimal(), format!("{name} is not minimal"))?;
        let id = VertexMap::identity(Arc::new(k));
        let class = contiguity_class(&id, 1_000_000).map_err(|e| e.to_string())?;
        ensure(class.exhaustive, format!("{name}: search did not finish"))?;
        ensure(class.members.len() == 1, format!("{name}: class has {} maps", class.members.len()))?;
        let ident: Vec<usize> = (0..cx.n()).collect();
        let neighbours = common::simplicial_maps(&cx, &cx)
            .into_iter()
            .filter(|m| *m != ident && common::contiguous(m, &ident, &cx, &cx))
            .count();
        ensure(neighbours == 0, format!("{name}: oracle finds {neighbours} neighbours"))?;
        notes.push(name);
    }
    Ok(format!("[id] = {{id}} exhaustively on {}", notes.join(", ")))
}

fn sd_label_of_image(phi: &VertexMap, base_labels: &[String]) -> String {
    let mut image: Vec<String> = base_labels
        .iter()
        .map(|l| {
            let v = phi.source().vertex(l).expect("label");
            phi.target().label(phi.apply(v)).to_string()
        })
        .collect();
    image.sort();
    image.dedup();
    format!("{{{}}}", image.join(","))
}

fn c9() -> Outcome {
    let pairs = random_contiguous_pairs(200, 9);
    let mut passed = 0;
    for (phi, psi) in &pairs {
        let chain = sd_contiguity_chain(phi, psi).map_err(|e| e.to_string())?;
        let src = Subdivision::new(phi.source().clone());
        let s = Cx::of(chain.first().source());
        let t = Cx::of(chain.first().target());
        let assign = |m: &VertexMap| m.assignment().iter().map(|v| v.index()).collect::<Vec<_>>();
        let maps: Vec<Vec<usize>> = chain.maps().iter().map(assign).collect();
        let simplicial = maps.iter().all(|m| common::is_simplicial(m, &s, &t));
        let linked = maps.windows(2).all(|w| common::contiguous(&w[0], &w[1], &s, &t));
        let ends = |m: &VertexMap, f: &VertexMap| {
            m.source().vertices().all(|v| {
                let base = phi.source().simplex_labels(src.simplex_of(v));
                m.target().label(m.apply(v)) == sd_label_of_image(f, &base)
            })
        };
        if simplicial && linked && ends(chain.first(), phi) && ends(chain.last(), psi) {
            passed += 1;
        }
    }
    ensure(passed == 200, format!("{passed}/200 chains revalidated"))?;
    Ok("200/200 chains revalidated by the oracle".into())
}

fn c10() -> Outcome {
    let opts = ScatOptions {
        budget: 20_000,
        partition_budget: 20_000,
        ..Default::default()
    };
    let mut inputs: Vec<(String, Complex)> = fixtures::graph_fixtures()
        .into_iter()
        .map(|(n, k)| (n.to_string(), k))
        .collect();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(2024);
    for i in 0..50 {
        inputs.push((format!("random {i}"), random_complex(&mut rng, 4, 4)));
    }
    let (mut confirmed, mut inconclusive) = (0, 0);
    for (name, k) in &inputs {
        let a = checked_scat(&sd(k), &opts)?;
        let b = checked_scat(k, &opts)?;
        if k.num_vertices() <= 4 {
            let oracle = common::scat(&Cx::of(k));
            ensure(b.lower <= oracle && oracle <= b.upper, format!("{name}: oracle scat {oracle} outside"))?;
        }
        let verdict = Verdict::le(
            Interval { lo: a.lower, hi: Some(a.upper) },
            Interval { lo: b.lower, hi: Some(b.upper) },
        );
        match verdict {
            Verdict::Confirmed => confirmed += 1,
            Verdict::Violated => return Err(format!("{name}: scat(sd K) > scat K")),
            _ => inconclusive += 1,
        }
    }
    Ok(format!("{} inputs: {confirmed} confirmed, {inconclusive} inconclusive, 0 violations", inputs.len()))
}

fn c11() -> Outcome {
    let e = fixtures::simplex(1);
    let square = product(&e, &e);
    let cx = Cx::of(&square);
    ensure(cx.n() == 4 && cx.facets == vec![0b1111], "Δ¹×Δ¹ is not a single 3-simplex")?;
    ensure(isomorphic(&square, &fixtures::simplex(3)), "library iso disagrees")?;
    let t = fixtures::hollow_triangle();
    let opts = ScatOptions::default();
    let p = checked_scat(&product(&t, &e), &opts)?;
    let a = checked_scat(&t, &opts)?;
    let b = checked_scat(&e, &opts)?;
    let lhs = Interval { lo: p.lower + 1, hi: Some(p.upper + 1) };
    let rhs = Interval {
        lo: (a.lower + 1) * (b.lower + 1),
        hi: Some((a.upper + 1) * (b.upper + 1)),
    };
    ensure(rhs == Interval::exact(2), format!("rhs = {rhs:?}"))?;
    ensure(Verdict::le(lhs, rhs) == Verdict::Confirmed, format!("lhs = {lhs:?}"))?;
    let px = Cx::of(&product(&t, &e));
    ensure(p.witness.blocks.len() <= 2, "witness has more than two blocks")?;
    for block in &p.witness.blocks {
        ensure(common::categorical(&px, block), format!("oracle rejects block {block:?}"))?;
    }
    Ok(format!("Δ¹×Δ¹ ≅ Δ³; scat(∂Δ²×Δ¹) + 1 = {} ≤ 2, blocks certified", p.upper + 1))
}

/// Whether the diagonal `K → K^m` is contiguity-connected to a map whose
/// facet images lie in the fat wedge at vertex `b`, by enumeration.
fn wscat_oracle(k: &Cx, b: usize, m: usize) -> bool {
    let n = k.n();
    let total = n.pow(m as u32);
    let coords = |p: usize| (0..m).map(|j| (p / n.pow((m - 1 - j) as u32)) % n).collect::<Vec<_>>();
    let mut cells: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..m {
        cells = cells
            .into_iter()
            .flat_map(|c| {
                k.facets.iter().map(move |&f| {
                    let mut c = c.clone();
                    c.push(f);
                    c
                })
            })
            .collect();
    }
    let set_of = |choice: &dyn Fn(usize, usize) -> bool| {
        (0..total).filter(|&p| coords(p).iter().enumerate().all(|(j, &x)| choice(j, x))).fold(0u64, |a, p| a | 1 << p)
    };
    let power = Cx {
        labels: (0..total).map(|p| p.to_string()).collect(),
        facets: cells.iter().map(|c| set_of(&|j, x| c[j] & (1 << x) != 0)).collect(),
    };
    let mut wedge_facets = Vec::new();
    for pin in 0..m {
        for c in &cells {
            wedge_facets.push(set_of(&|j, x| if j == pin { x == b } else { c[j] & (1 << x) != 0 }));
        }
    }
    let wedge = Cx {
        labels: power.labels.clone(),
        facets: wedge_facets,
    };
    let diagonal: Vec<usize> = (0..n).map(|v| (0..m).fold(0, |p, _| p * n + v)).collect();
    let maps = common::simplicial_maps(k, &power);
    common::component(&diagonal, &maps, k, &power)
        .iter()
        .any(|g| common::is_simplicial(g, k, &wedge))
}

fn c12() -> Outcome {
    let e = fixtures::simplex(1);
    let t = fixtures::hollow_triangle();
    let cases = [
        ("wscat_le(Δ¹, 0)", &e, "0", 0, true),
        ("wscat_le(∂Δ², 0)", &t, "a", 0, false),
        ("wscat_le(∂Δ², 1)", &t, "a", 1, false),
    ];
    let mut notes = Vec::new();
    for (name, k, base, n, want) in cases {
        let d = wscat_le(k, base, n, 1_000_000).map_err(|e| e.to_string())?;
        ensure(!d.is_unknown(), format!("{name}: unknown"))?;
        let cx = Cx::of(k);
        let b = k.vertex(base).expect("base").index();
        let oracle = wscat_oracle(&cx, b, n + 1);
        ensure(d.is_yes() == want && oracle == want, format!("{name}: {} vs oracle {oracle}", d.verdict()))?;
        if let Some(w) = d.witness() {
            ensure(w.delta.is_simplicial() && w.chain.validate().is_ok(), format!("{name}: bad witness"))?;
        }
        notes.push(format!("{name} = {}", d.verdict()));
    }
    Ok(notes.join(", "))
}

fn c13() -> Outcome {
    let k = Arc::new(fixtures::hollow_triangle());
    let l = Arc::new(Complex::from_facets([["a", "b"], ["a", "c"]]).map_err(|e| e.to_string())?);
    let i = VertexMap::inclusion(l.clone(), k.clone()).map_err(|e| e.to_string())?;
    let psi = VertexMap::constant(l, k.clone(), k.vertex("a").expect("a")).map_err(|e| e.to_string())?;
    let id = VertexMap::identity(k.clone());
    let d = has_contiguity_extension(&i, &i, &psi, &id, 1_000_000).map_err(|e| e.to_string())?;
    let cx = Cx::of(&k);
    let ident: Vec<usize> = (0..3).collect();
    let maps = common::simplicial_maps(&cx, &cx);
    let oracle = common::component(&ident, &maps, &cx, &cx)
        .iter()
        .any(|m| m.iter().all(|&x| x == 0));
    ensure(d.is_no() && !oracle, format!("decision {}, oracle {oracle}", d.verdict()))?;
    Ok("no extension, exhaustive".into())
}

fn c14() -> Outcome {
    let graphs = connected_graphs(6);
    let mut total = 0;
    for k in &graphs {
        let karc = Arc::new(k.clone());
        let cx = Cx::of(k);
        let pairs: Vec<(usize, usize)> = cx
            .facets
            .iter()
            .map(|&f| (f.trailing_zeros() as usize, 63 - f.leading_zeros() as usize))
            .collect();
        let f = cx.facets.len();
        for mask in 1u32..(1 << f) {
            let block: Vec<usize> = (0..f).filter(|i| mask & (1 << i) != 0).collect();
            let edges: Vec<(usize, usize)> = block.iter().map(|&i| pairs[i]).collect();
            let forest = common::is_forest(cx.n(), &edges);
            let d = is_categorical(&karc, &block, 1_000_000, CategoricalStrategy::Search).map_err(|e| e.to_string())?;
            ensure(!d.is_unknown(), format!("{k}: unknown on {block:?}"))?;
            ensure(d.is_yes() == forest, format!("disagreement on {block:?} in\n{k}"))?;
            total += 1;
        }
    }
    ensure(graphs.len() == 52, format!("{} graphs enumerated", graphs.len()))?;
    Ok(format!("{} graphs, {total}/{total} subsets agree", graphs.len()))
}

fn c15a() -> Outcome {
    let opts = ScatOptions::default();
    let mut notes = Vec::new();
    for (name, k, want) in [
        ("C3", fixtures::cycle(3), 1),
        ("K4", fixtures::complete_graph(4), 1),
        ("K5", fixtures::complete_graph(5), 1),
        ("path", fixtures::path(3), 0),
        ("star", fixtures::star_tree(4), 0),
    ] {
        let b = bisect_off_tree(&k).map_err(|e| e.to_string())?;
        let v = exact_scat(&b, &opts)?;
        let oracle = common::nash_williams(&Cx::of(&b)) - 1;
        ensure(v == want && oracle == want, format!("{name}: scat {v}, oracle {oracle}"))?;
        notes.push(format!("{name}: {v}"));
    }
    Ok(notes.join(", "))
}

fn c15b() -> Outcome {
    let k5 = fixtures::complete_graph(5);
    let (edges, g) = find_bisection(&k5, 3)
        .map_err(|e| e.to_string())?
        .ok_or("no 3-edge bisection")?;
    let v = exact_scat(&g, &ScatOptions::default())?;
    let oracle = common::nash_williams(&Cx::of(&g)) - 1;
    ensure(edges.len() == 3 && v == 1 && oracle == 1, format!("scat {v}, oracle {oracle}"))?;
    Ok(format!("bisecting facets {edges:?} gives scat 1"))
}

fn c16() -> Outcome {
    let k = fixtures::mother();
    let cx = Cx::of(&k);
    let collapsible = k.is_collapsible().map_err(|e| e.to_string())?;
    ensure(collapsible && common::greedy_collapses_to_point(&cx), "not collapsible")?;
    let core = k.core();
    ensure(core.steps.is_empty() && core.complex == k && cx.is_minimal(), "not minimal")?;
    ensure(k.num_vertices() > 1, "a point")?;
    let v = exact_scat(&k, &ScatOptions::default())?;
    ensure(v == 1, format!("scat = {v}"))?;
    let (m, found) = fixtures::find_mother(5, &ScatOptions::default()).ok_or("search found nothing")?;
    ensure(found == k, format!("search found m = {m}, not the embedded fixture"))?;
    Ok(format!("{} vertices, {} facets: collapsible, minimal, scat = 1", k.num_vertices(), k.num_facets()))
}

fn main() {
    let rows = vec![
        timed("1", "scat(∂Δ²) = 1", 1.0, c1),
        timed("2", "scat(cone K) = 0", 5.0, c2),
        timed("3", "scat(Σ∂Δ²) = 1", 30.0, c3),
        timed("4", "arboricity of K4..K7", 10.0, c4),
        timed("5", "scat K5 = 2, scat sd K5 = 1", 60.0, c5),
        timed("6", "gscat K5 = 2, gscat sd K5 = 1", 30.0, c6),
        timed("7", "minimal cores, not isomorphic", 1.0, c7),
        timed("8", "identity class is a singleton", 30.0, c8),
        timed("9", "subdivided contiguity chains", 60.0, c9),
        timed("10", "scat(sd K) <= scat K", 120.0, c10),
        timed("11", "products", 30.0, c11),
        timed("12", "wscat decisions", 60.0, c12),
        timed("13", "extension counterexample", 10.0, c13),
        timed("14", "categorical iff forest", 120.0, c14),
        timed("15a", "bisection off a spanning tree", 10.0, c15a),
        timed("15b", "three-edge bisection of K5", 30.0, c15b),
        timed("16", "collapsible minimal complex", 120.0, c16),
    ];
    for r in &rows {
        println!(
            "{} [{:>3}] {:<34} {:>7.3}s / {:>5.0}s  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.seconds,
            r.limit,
            r.detail
        );
    }
    let failed: Vec<&str> = rows.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{} passed, {} failed", rows.len() - failed.len(), failed.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
