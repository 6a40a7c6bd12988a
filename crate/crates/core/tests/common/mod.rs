//! Brute-force oracles that only read labels and facets, never the search
//! engines.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use scatkit::Complex;

/// A complex as label list plus facet bitmasks.
#[derive(Clone, Debug)]
pub struct Cx {
    pub labels: Vec<String>,
    pub facets: Vec<u64>,
}

impl Cx {
    pub fn of(k: &Complex) -> Self {
        let labels: Vec<String> = k.labels().to_vec();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let facets = k
            .facet_labels()
            .iter()
            .map(|f| f.iter().fold(0u64, |m, l| m | 1 << index[l.as_str()]))
            .collect();
        Cx { labels, facets }
    }

    pub fn from_sets(n: usize, sets: &[&[usize]]) -> Self {
        Cx {
            labels: (0..n).map(|i| i.to_string()).collect(),
            facets: sets.iter().map(|s| s.iter().fold(0u64, |m, &v| m | 1 << v)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_simplex(&self, m: u64) -> bool {
        m != 0 && self.facets.iter().any(|&f| f & m == m)
    }

    /// Subcomplex generated by the facets with the given indices, with the
    /// embedding of its vertices.
    pub fn sub(&self, block: &[usize]) -> (Cx, Vec<usize>) {
        let used = block.iter().fold(0u64, |m, &i| m | self.facets[i]);
        let emb: Vec<usize> = (0..self.n()).filter(|v| used & (1 << v) != 0).collect();
        let local = |m: u64| {
            emb.iter()
                .enumerate()
                .filter(|(_, &v)| m & (1 << v) != 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        };
        let facets = block.iter().map(|&i| local(self.facets[i])).collect();
        (
            Cx {
                labels: emb.iter().map(|&v| self.labels[v].clone()).collect(),
                facets,
            },
            emb,
        )
    }

    /// True iff some other vertex lies in every facet containing `v`.
    pub fn dominated(&self, v: usize) -> bool {
        let common = self
            .facets
            .iter()
            .filter(|&&f| f & (1 << v) != 0)
            .fold(u64::MAX, |acc, &f| acc & f);
        common & !(1 << v) != 0
    }

    pub fn is_minimal(&self) -> bool {
        (0..self.n()).all(|v| !self.dominated(v))
    }
}

pub fn image(a: &[usize], m: u64) -> u64 {
    (0..a.len()).filter(|v| m & (1 << v) != 0).fold(0u64, |acc, v| acc | 1 << a[v])
}

pub fn is_simplicial(a: &[usize], s: &Cx, t: &Cx) -> bool {
    s.facets.iter().all(|&f| t.is_simplex(image(a, f)))
}

pub fn contiguous(a: &[usize], b: &[usize], s: &Cx, t: &Cx) -> bool {
    s.facets.iter().all(|&f| t.is_simplex(image(a, f) | image(b, f)))
}

/// Every simplicial map by backtracking, each facet checked once its
/// vertices are all assigned.
pub fn simplicial_maps(s: &Cx, t: &Cx) -> Vec<Vec<usize>> {
    let n = s.n();
    let mut due: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &f in &s.facets {
        due[63 - f.leading_zeros() as usize].push(f);
    }
    let mut out = Vec::new();
    let mut a = vec![0usize; n];
    fn go(i: usize, a: &mut Vec<usize>, due: &[Vec<u64>], t: &Cx, out: &mut Vec<Vec<usize>>) {
        if i == a.len() {
            out.push(a.clone());
            return;
        }
        for w in 0..t.n() {
            a[i] = w;
            if due[i].iter().all(|&f| t.is_simplex(image(&a[..=i], f))) {
                go(i + 1, a, due, t, out);
            }
        }
    }
    go(0, &mut a, &due, t, &mut out);
    out
}

/// Contiguity component of `start` within `maps`.
pub fn component(start: &[usize], maps: &[Vec<usize>], s: &Cx, t: &Cx) -> Vec<Vec<usize>> {
    let mut seen = vec![false; maps.len()];
    let first = maps.iter().position(|m| m == start).expect("start is simplicial");
    seen[first] = true;
    let mut queue = VecDeque::from([first]);
    let mut out = Vec::new();
    while let Some(i) = queue.pop_front() {
        out.push(maps[i].clone());
        for (j, m) in maps.iter().enumerate() {
            if !seen[j] && contiguous(&maps[i], m, s, t) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    out
}

/// Whether the inclusion of the block is contiguity-connected to a
/// constant, by exhaustive enumeration.
pub fn categorical(k: &Cx, block: &[usize]) -> bool {
    let (u, emb) = k.sub(block);
    let maps = simplicial_maps(&u, k);
    let mut seen = vec![false; maps.len()];
    let first = maps.iter().position(|m| *m == emb).expect("inclusion is simplicial");
    seen[first] = true;
    let mut queue = VecDeque::from([first]);
    while let Some(i) = queue.pop_front() {
        if maps[i].iter().all(|&x| x == maps[i][0]) {
            return true;
        }
        for (j, m) in maps.iter().enumerate() {
            if !seen[j] && contiguous(&maps[i], m, &u, k) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    false
}

/// Least `n` with a partition of the facets into `n + 1` categorical blocks.
pub fn scat(k: &Cx) -> usize {
    let f = k.facets.len();
    let mut memo: HashMap<u64, bool> = HashMap::new();
    let mut test = |mask: u64| {
        *memo.entry(mask).or_insert_with(|| {
            let block: Vec<usize> = (0..f).filter(|i| mask & (1 << i) != 0).collect();
            categorical(k, &block)
        })
    };
    for blocks in 1..=f {
        let mut parts: Vec<u64> = Vec::new();
        if partition(0, f, blocks, &mut parts, &mut test) {
            return blocks - 1;
        }
    }
    unreachable!("singletons are categorical")
}

fn partition(i: usize, f: usize, target: usize, parts: &mut Vec<u64>, test: &mut impl FnMut(u64) -> bool) -> bool {
    if i == f {
        return parts.len() == target && parts.iter().all(|&p| test(p));
    }
    for b in 0..parts.len() {
        parts[b] |= 1 << i;
        let ok = test(parts[b]) && partition(i + 1, f, target, parts, test);
        parts[b] &= !(1 << i);
        if ok {
            return true;
        }
    }
    if parts.len() < target {
        parts.push(1 << i);
        if partition(i + 1, f, target, parts, test) {
            return true;
        }
        parts.pop();
    }
    false
}

/// Nash-Williams: `max ⌈e(H) / (|H| − 1)⌉` over vertex subsets `H`.
pub fn nash_williams(k: &Cx) -> usize {
    let edges: Vec<u64> = k.facets.iter().copied().filter(|f| f.count_ones() == 2).collect();
    let n = k.n();
    let mut best = 1;
    for h in 1u64..(1 << n) {
        let size = h.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let e = edges.iter().filter(|&&x| x & h == x).count();
        best = best.max(e.div_ceil(size - 1));
    }
    best
}

/// Union-find forest test on edges given as vertex pairs.
pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, w) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, w));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Greedy elementary collapses; `true` proves collapsibility.
pub fn greedy_collapses_to_point(k: &Cx) -> bool {
    let mut faces: Vec<u64> = Vec::new();
    for &f in &k.facets {
        let mut s = f;
        loop {
            if !faces.contains(&s) {
                faces.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    faces.retain(|&s| s != 0);
    loop {
        if faces.len() == 1 {
            return true;
        }
        let free = faces.iter().copied().find_map(|tau| {
            let cofaces: Vec<u64> = faces.iter().copied().filter(|&s| s != tau && s & tau == tau).collect();
            (cofaces.len() == 1 && cofaces[0].count_ones() == tau.count_ones() + 1).then(|| (tau, cofaces[0]))
        });
        match free {
            Some((tau, sigma)) => faces.retain(|&s| s != tau && s != sigma),
            None => return false,
        }
    }
}
