//! Small named complexes used by the examples, tests, and the reproduction
//! suite.

use crate::category::{scat, ScatOptions};
use crate::complex::Complex;
use crate::constructions::sd;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `Δⁿ` on vertices `0..=n`.
pub fn simplex(n: usize) -> Complex {
    Complex::simplex(&labels(n + 1)).expect("nonempty")
}

/// `∂Δ²`, the hollow triangle on `a, b, c`.
pub fn hollow_triangle() -> Complex {
    Complex::from_facets([["a", "b"], ["b", "c"], ["c", "a"]]).expect("valid")
}

/// `∂Δⁿ` on vertices `0..=n`.
pub fn boundary_simplex(n: usize) -> Complex {
    let l = labels(n + 1);
    Complex::from_facets((0..=n).map(|skip| {
        l.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, s)| s.clone())
            .collect::<Vec<_>>()
    }))
    .expect("valid")
}

/// Complete graph `Kₙ` on `0..n`, `n ≥ 2`.
pub fn complete_graph(n: usize) -> Complex {
    let l = labels(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push([l[i].clone(), l[j].clone()]);
        }
    }
    Complex::from_facets(edges).expect("n >= 2")
}

/// Cycle graph `Cₙ` on `0..n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Complex {
    let l = labels(n);
    Complex::from_facets((0..n).map(|i| [l[i].clone(), l[(i + 1) % n].clone()])).expect("n >= 3")
}

/// Path with `n ≥ 1` edges.
pub fn path(n: usize) -> Complex {
    let l = labels(n + 1);
    Complex::from_facets((0..n).map(|i| [l[i].clone(), l[i + 1].clone()])).expect("n >= 1")
}

/// Star tree with `n ≥ 1` leaves around `0`.
pub fn star_tree(n: usize) -> Complex {
    let l = labels(n + 1);
    Complex::from_facets((1..=n).map(|i| [l[0].clone(), l[i].clone()])).expect("n >= 1")
}

pub fn sd_k5() -> Complex {
    sd(&complete_graph(5))
}

/// A disk: an annulus between an outer `m`-cycle `b*` and an inner
/// `m`-cycle `i*`, with the inner cycle coned off at `c`.
pub fn coned_annulus(m: usize) -> Complex {
    let b = |j: usize| format!("b{}", j % m);
    let i = |j: usize| format!("i{}", j % m);
    let mut facets = Vec::new();
    for j in 0..m {
        facets.push([b(j), b(j + 1), i(j)]);
        facets.push([b(j + 1), i(j), i(j + 1)]);
        facets.push(["c".to_string(), i(j), i(j + 1)]);
    }
    Complex::from_facets(facets).expect("m >= 3")
}

/// What a collapsible, minimal, category-one complex must satisfy, as
/// certified by the crate's own checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MotherCertificate {
    pub collapsible: bool,
    pub minimal: bool,
    pub scat_one: bool,
}

impl MotherCertificate {
    pub fn holds(&self) -> bool {
        self.collapsible && self.minimal && self.scat_one
    }
}

pub fn certify_mother(k: &Complex, opts: &ScatOptions) -> MotherCertificate {
    let collapsible = k.is_collapsible().unwrap_or(false);
    let core = k.core();
    let minimal = core.steps.is_empty() && core.complex.num_vertices() > 1;
    let scat_one = scat(k, opts).map(|r| r.exact && r.upper == 1).unwrap_or(false);
    MotherCertificate {
        collapsible,
        minimal,
        scat_one,
    }
}

/// Smallest coned annulus passing [`certify_mother`], searching `m` in
/// `3..=max_m`.
pub fn find_mother(max_m: usize, opts: &ScatOptions) -> Option<(usize, Complex)> {
    (3..=max_m)
        .map(|m| (m, coned_annulus(m)))
        .find(|(_, k)| certify_mother(k, opts).holds())
}

/// The collapsible complex without dominated vertices found by
/// [`find_mother`].
pub fn mother() -> Complex {
    coned_annulus(3)
}

/// Named fixtures available to the command line.
pub const NAMES: &[&str] = &[
    "hollow-triangle",
    "simplex-2",
    "simplex-3",
    "K4",
    "K5",
    "K6",
    "K7",
    "sd-K5",
    "C3",
    "C4",
    "C5",
    "C6",
    "path-3",
    "star-4",
    "mother",
];

pub fn by_name(name: &str) -> Option<Complex> {
    Some(match name {
        "hollow-triangle" => hollow_triangle(),
        "simplex-2" => simplex(2),
        "simplex-3" => simplex(3),
        "K4" => complete_graph(4),
        "K5" => complete_graph(5),
        "K6" => complete_graph(6),
        "K7" => complete_graph(7),
        "sd-K5" => sd_k5(),
        "C3" => cycle(3),
        "C4" => cycle(4),
        "C5" => cycle(5),
        "C6" => cycle(6),
        "path-3" => path(3),
        "star-4" => star_tree(4),
        "mother" => mother(),
        _ => return None,
    })
}

/// Every graph fixture with its name.
pub fn graph_fixtures() -> Vec<(&'static str, Complex)> {
    NAMES
        .iter()
        .filter_map(|&n| by_name(n).map(|k| (n, k)))
        .filter(|(_, k)| k.dim() <= 1)
        .collect()
}
