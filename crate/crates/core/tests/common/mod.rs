//! Brute-force oracles shared by the integration tests. None of them call
//! the library routine they are used to check.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use preprojective::coxgraph::{preset, CoxeterGraph, Orientation, Vertex};
use preprojective::preproj::CoxeterContext;
use preprojective::rootsys::RootSystem;

pub fn graph(name: &str, params: &[&str]) -> CoxeterGraph {
    CoxeterGraph::new(preset(name, params).unwrap())
}

pub fn system(name: &str, params: &[&str]) -> RootSystem {
    RootSystem::from_matrix(preset(name, params).unwrap())
}

pub fn context(rs: &RootSystem, o: &Orientation) -> CoxeterContext {
    CoxeterContext::from_orientation(rs.clone(), o).unwrap()
}

/// Every word (as written) over `n` letters of length at most `max_len`.
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![vec![]];
    let mut level = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for v in 0..n {
                let mut x: Vec<Vertex> = w.clone();
                x.push(v);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn adjacent(g: &CoxeterGraph, a: Vertex, b: Vertex) -> bool {
    g.matrix().get(a, b).is_edge()
}

/// All words reachable from `word` by swapping neighbouring letters that
/// are distinct and not joined by an edge.
pub fn commutation_class(g: &CoxeterGraph, word: &[Vertex]) -> HashSet<Vec<Vertex>> {
    let mut seen = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] != w[i + 1] && !adjacent(g, w[i], w[i + 1]) {
                let mut x = w.clone();
                x.swap(i, i + 1);
                if seen.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
    }
    seen
}

/// Class identifiers for every word up to `max_len`, with the members of each class.
pub struct Classes {
    pub id: HashMap<Vec<Vertex>, usize>,
    pub members: Vec<Vec<Vec<Vertex>>>,
}

pub fn classes(g: &CoxeterGraph, max_len: usize) -> Classes {
    let mut id = HashMap::new();
    let mut members = Vec::new();
    for w in all_words(g.rank(), max_len) {
        if id.contains_key(&w) {
            continue;
        }
        let cls: Vec<Vec<Vertex>> = commutation_class(g, &w).into_iter().collect();
        for x in &cls {
            id.insert(x.clone(), members.len());
        }
        members.push(cls);
    }
    Classes { id, members }
}

/// Whether the sequence of letters (as written, rightmost applied first)
/// is a valid sequence of sink reflections, checked from scratch.
pub fn sink_sequence_ok(o: &Orientation, written: &[Vertex]) -> bool {
    let n = o.rank();
    let mut arrows: HashSet<(Vertex, Vertex)> = o.arrows().collect();
    for &v in written.iter().rev() {
        if (0..n).any(|w| arrows.contains(&(v, w))) {
            return false;
        }
        arrows = arrows
            .into_iter()
            .map(|(a, b)| if a == v || b == v { (b, a) } else { (a, b) })
            .collect();
    }
    true
}

/// Integer action of `s1`, `s2` on the infinite dihedral group:
/// `s1(a, b) = (2b − a, b)` and `s2(a, b) = (a, 2a − b)`.
pub fn dihedral_reflect(s: usize, (a, b): (i64, i64)) -> (i64, i64) {
    if s == 0 {
        (2 * b - a, b)
    } else {
        (a, 2 * a - b)
    }
}

/// Least `r <= r_max` with `c^r (a, b)` negative, for `c = s2 s1`.
pub fn dihedral_size(root: (i64, i64), r_max: usize) -> Option<usize> {
    let mut v = root;
    for r in 1..=r_max {
        v = dihedral_reflect(1, dihedral_reflect(0, v));
        if v.0 <= 0 && v.1 <= 0 {
            return Some(r);
        }
        assert!(v.0 >= 0 && v.1 >= 0, "mixed signs in the orbit");
    }
    None
}

/// Number of acyclic orientations, by trying every direction of every edge.
pub fn acyclic_orientation_count(g: &CoxeterGraph) -> usize {
    let n = g.rank();
    let edges: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| adjacent(g, a, b)).collect();
    (0u64..1 << edges.len())
        .filter(|mask| {
            let arrows: Vec<(Vertex, Vertex)> = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            // Kahn's algorithm
            let mut indeg = vec![0; n];
            for &(_, b) in &arrows {
                indeg[b] += 1;
            }
            let mut ready: Vec<Vertex> = (0..n).filter(|&v| indeg[v] == 0).collect();
            let mut seen = 0;
            while let Some(v) = ready.pop() {
                seen += 1;
                for &(a, b) in &arrows {
                    if a == v {
                        indeg[b] -= 1;
                        if indeg[b] == 0 {
                            ready.push(b);
                        }
                    }
                }
            }
            seen == n
        })
        .count()
}
