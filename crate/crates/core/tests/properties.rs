mod common;

use std::sync::Arc;

use common::Cx;
use proptest::prelude::*;
use scatkit::category::{gscat, is_categorical, scat, verify_scat_witness, CategoricalStrategy, ScatOptions};
use scatkit::constructions::{cone, product, sd, sd_contiguity_chain, sd_map, Product};
use scatkit::contiguity::simplicial_maps;
use scatkit::graph::{arboricity, Graph};
use scatkit::io::{complex_to_json, complex_to_text, parse_complex};
use scatkit::iso::isomorphic;
use scatkit::{Complex, VertexMap};

fn complex_from_masks(n: usize, masks: &[u32]) -> Complex {
    Complex::from_facets(masks.iter().map(|&m| {
        (0..n)
            .filter(|i| m & (1 << i) != 0)
            .map(|i| format!("v{i}"))
            .collect::<Vec<_>>()
    }))
    .expect("nonempty facets")
}

fn small_complex(max_vertices: usize, max_facets: usize) -> impl Strategy<Value = Complex> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 1..=max_facets).prop_map(move |m| complex_from_masks(n, &m))
    })
}

fn small_graph(max_vertices: usize) -> impl Strategy<Value = Complex> {
    (2..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let count = pairs.len();
        prop::collection::vec(any::<bool>(), count).prop_filter_map("no edges", move |keep| {
            let edges: Vec<[String; 2]> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&(i, j), _)| [format!("v{i}"), format!("v{j}")])
                .collect();
            Complex::from_facets(edges).ok()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formats_round_trip(k in small_complex(6, 6)) {
        prop_assert_eq!(parse_complex(&complex_to_text(&k)).unwrap(), k.clone());
        prop_assert_eq!(parse_complex(&complex_to_json(&k).to_string()).unwrap(), k);
    }

    #[test]
    fn core_is_minimal_and_a_retract(k in small_complex(6, 6)) {
        let core = k.core();
        prop_assert!(Cx::of(&core.complex).is_minimal());
        prop_assert!(core.replay(&k).is_ok());
        let r = core.retraction(&k);
        let retraction = VertexMap::new(Arc::new(k.clone()), Arc::new(core.complex.clone()), r).unwrap();
        prop_assert!(retraction.is_simplicial());
        prop_assert!(isomorphic(&core.complex, &core.complex.core().complex));
    }

    #[test]
    fn contiguity_matches_the_definition(k in small_complex(4, 3), l in small_complex(4, 3)) {
        let (k, l) = (Arc::new(k), Arc::new(l));
        let (maps, complete) = simplicial_maps(&k, &l, 10_000).unwrap();
        prop_assert!(complete);
        let (s, t) = (Cx::of(&k), Cx::of(&l));
        let oracle = common::simplicial_maps(&s, &t);
        prop_assert_eq!(maps.len(), oracle.len());
        let a = |m: &VertexMap| m.assignment().iter().map(|v| v.index()).collect::<Vec<_>>();
        for f in maps.iter().take(6) {
            for g in maps.iter().take(6) {
                let want = common::contiguous(&a(f), &a(g), &s, &t);
                prop_assert_eq!(f.is_contiguous(g).unwrap(), want);
                prop_assert_eq!(g.is_contiguous(f).unwrap(), want);
            }
        }
    }

    #[test]
    fn subdivided_contiguous_maps_stay_in_one_class(k in small_complex(4, 3), l in small_complex(4, 3), pick in any::<prop::sample::Index>()) {
        let (k, l) = (Arc::new(k), Arc::new(l));
        let (maps, _) = simplicial_maps(&k, &l, 10_000).unwrap();
        let f = &maps[pick.index(maps.len())];
        for g in maps.iter().filter(|g| f.is_contiguous(g).unwrap()).take(4) {
            let chain = sd_contiguity_chain(f, g).unwrap();
            prop_assert!(chain.validate().is_ok());
            prop_assert_eq!(chain.first(), &sd_map(f).unwrap());
            prop_assert_eq!(chain.last(), &sd_map(g).unwrap());
        }
    }

    #[test]
    fn scat_agrees_with_brute_force(k in small_complex(4, 4)) {
        let r = scat(&k, &ScatOptions::default()).unwrap();
        verify_scat_witness(&Arc::new(k.clone()), &r).unwrap();
        prop_assert!(r.exact);
        prop_assert_eq!(r.upper, common::scat(&Cx::of(&k)));
        let raw = scat(&k, &ScatOptions { use_core: false, strategy: CategoricalStrategy::Search, ..Default::default() }).unwrap();
        prop_assert_eq!(raw.value(), r.value());
    }

    #[test]
    fn scat_bounds(k in small_complex(5, 5)) {
        let opts = ScatOptions { budget: 20_000, partition_budget: 20_000, ..Default::default() };
        let r = scat(&k, &opts).unwrap();
        let g = gscat(&k).unwrap();
        prop_assert!(r.lower <= g.upper);
        let core = k.core().complex;
        prop_assert!(r.lower < core.num_vertices());
        prop_assert!(r.lower < core.num_facets() || core.num_vertices() == 1);
        prop_assert_eq!(scat(&cone(&k), &opts).unwrap().value(), Some(0));
        let s = scat(&sd(&k), &opts).unwrap();
        prop_assert!(s.lower <= r.upper);
    }

    #[test]
    fn categorical_blocks_match_brute_force(k in small_complex(4, 4), pick in 1u32..16) {
        let karc = Arc::new(k.clone());
        let block: Vec<usize> = (0..k.num_facets()).filter(|i| pick & (1 << i) != 0).collect();
        prop_assume!(!block.is_empty());
        let want = common::categorical(&Cx::of(&k), &block);
        for strategy in [CategoricalStrategy::Search, CategoricalStrategy::Collapse, CategoricalStrategy::Auto] {
            let d = is_categorical(&karc, &block, 100_000, strategy).unwrap();
            prop_assert!(!d.is_unknown());
            prop_assert_eq!(d.is_yes(), want);
        }
    }

    #[test]
    fn arboricity_is_nash_williams(k in small_graph(7)) {
        let g = Graph::new(&k).unwrap();
        let (u, d) = arboricity(&g);
        prop_assert!(d.validate(&g).is_ok());
        prop_assert_eq!(u, common::nash_williams(&Cx::of(&k)));
    }

    #[test]
    fn projections_are_simplicial(k in small_complex(3, 3), l in small_complex(3, 3)) {
        let p = Product::binary(Arc::new(k), Arc::new(l)).unwrap();
        for j in 0..2 {
            prop_assert!(p.projection(j).unwrap().is_simplicial());
        }
        prop_assert!(p.diagonal().is_err() || p.factors()[0] == p.factors()[1]);
    }

    #[test]
    fn relabelled_complexes_are_isomorphic(k in small_complex(5, 5)) {
        let renamed = k.relabel(|l| format!("x{l}")).unwrap();
        prop_assert!(isomorphic(&k, &renamed));
        prop_assert!(isomorphic(&product(&k, &renamed), &product(&renamed, &k)));
    }
}
