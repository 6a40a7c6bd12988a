use std::collections::HashSet;

use crate::complex::Complex;

/// Renames labels of `l` that clash with labels of `k` by appending `'`
/// until they are unique.
fn disjoint_labels(k: &Complex, l: &Complex) -> Vec<String> {
    let mut taken: HashSet<String> = k.labels().iter().cloned().collect();
    taken.extend(l.labels().iter().cloned());
    l.labels()
        .iter()
        .map(|label| {
            if k.vertex(label).is_none() {
                return label.clone();
            }
            let mut fresh = format!("{label}'");
            while taken.contains(&fresh) {
                fresh.push('\'');
            }
            taken.insert(fresh.clone());
            fresh
        })
        .collect()
}

/// `K ∗ L`: facets are the unions `σ ∪ τ` of a facet of each. Labels of `L`
/// that also occur in `K` get a `'` suffix.
pub fn join(k: &Complex, l: &Complex) -> Complex {
    let right = disjoint_labels(k, l);
    let offset = k.num_vertices();
    let mut labels: Vec<String> = k.labels().to_vec();
    labels.extend(right);
    let facets = k
        .facets()
        .iter()
        .flat_map(|s| {
            l.facets().iter().map(move |t| {
                s.vertices()
                    .iter()
                    .map(|v| v.index())
                    .chain(t.vertices().iter().map(|v| offset + v.index()))
                    .collect()
            })
        })
        .collect();
    Complex::build(labels, facets, true).expect("nonempty").0
}

/// `K ∗ {apex}`.
pub fn cone(k: &Complex) -> Complex {
    join(k, &Complex::simplex(&["apex"]).expect("valid label"))
}

/// `K ∗ S⁰` with poles `north` and `south`.
pub fn suspension(k: &Complex) -> Complex {
    let poles = Complex::from_facets([["north"], ["south"]]).expect("valid labels");
    join(k, &poles)
}
