//! Brute-force oracles shared by the integration suites. Everything here
//! works by permutation search or edge deletion only, independent of the
//! canonical-form machinery it cross-checks.
#![allow(dead_code)] // each test binary uses its own subset

use bridgelab::graph::Graph;

/// All permutations of 0..n (Heap's algorithm), n <= 8 for sanity.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 8, "oracle permutations capped at 8");
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(&mut cur, n, &mut out);
    out
}

fn heap(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap(cur, k - 1, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

pub fn brute_is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    permutations(g1.n()).iter().any(|p| &g1.permuted(p) == g2)
}

/// Rooted isomorphism: some permutation maps g1 to g2 and root1 to root2.
pub fn brute_is_rooted_isomorphic(g1: &Graph, root1: usize, g2: &Graph, root2: usize) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    permutations(g1.n())
        .iter()
        .any(|p| p[root1] == root2 && &g1.permuted(p) == g2)
}

pub fn brute_automorphism_count(g: &Graph) -> u64 {
    permutations(g.n())
        .iter()
        .filter(|p| &g.permuted(p) == g)
        .count() as u64
}

/// Number of distinct labelled adjacency structures in g's isomorphism class.
pub fn brute_labelled_class_size(g: &Graph) -> u64 {
    let mut seen = std::collections::BTreeSet::new();
    for p in permutations(g.n()) {
        seen.insert(g.permuted(&p));
    }
    seen.len() as u64
}

/// Every labelled graph on n vertices, by edge mask.
pub fn all_labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    assert!(m <= 21, "labelled sweep oracle capped at n = 7");
    (0u64..1 << m)
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("mask edges valid")
        })
        .collect()
}

pub fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}
