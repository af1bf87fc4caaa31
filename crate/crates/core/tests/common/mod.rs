//! Brute-force references. Everything here works on `u32` masks built from
//! the edge list alone, sharing no code with the library's search.

#![allow(dead_code)]

use cind::{Graph, VertexSet};

pub const NAIVE_MAX_N: usize = 24;

pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= NAIVE_MAX_N, "naive enumeration is capped at {NAIVE_MAX_N}");
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

pub fn to_mask(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

fn degrees_in(adj: &[u32], s: u32) -> impl Iterator<Item = u32> + '_ {
    (0..adj.len())
        .filter(move |&v| s >> v & 1 == 1)
        .map(move |v| (adj[v] & s).count_ones())
}

pub fn is_induced_regular(adj: &[u32], s: u32, d: u32) -> bool {
    degrees_in(adj, s).all(|x| x == d)
}

/// Components `K_1`, `K_2` or cycles.
pub fn is_mixed(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).filter(|&v| s >> v & 1 == 1).all(|v| {
        let dv = (adj[v] & s).count_ones();
        dv <= 2
            && (0..adj.len())
                .filter(|&u| (adj[v] & s) >> u & 1 == 1)
                .all(|u| (adj[u] & s).count_ones() == dv)
    })
}

/// Largest mask passing `ok`; ties go to the lexicographically smallest
/// sorted vertex list.
pub fn best_by(adj: &[u32], ok: impl Fn(u32) -> bool) -> (usize, u32) {
    let n = adj.len();
    let mut best: Option<(usize, Vec<usize>, u32)> = None;
    for s in 0u32..(1u32 << n) {
        if !ok(s) {
            continue;
        }
        let size = s.count_ones() as usize;
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some((b, bv, _)) => size > *b || (size == *b && verts < *bv),
        };
        if better {
            best = Some((size, verts, s));
        }
    }
    let (size, _, s) = best.expect("the empty set always qualifies");
    (size, s)
}

pub fn c_ind(g: &Graph) -> usize {
    let adj = masks(g);
    best_by(&adj, |s| is_induced_regular(&adj, s, 2)).0
}

pub fn alpha(g: &Graph) -> usize {
    let adj = masks(g);
    best_by(&adj, |s| is_induced_regular(&adj, s, 0)).0
}

pub fn max_regular(g: &Graph, d: u32) -> usize {
    let adj = masks(g);
    best_by(&adj, |s| is_induced_regular(&adj, s, d)).0
}

pub fn mixed(g: &Graph) -> usize {
    let adj = masks(g);
    best_by(&adj, |s| is_mixed(&adj, s)).0
}

/// Smallest `D` such that every vertex outside has the same positive
/// number of neighbours in `D`.
pub fn fair_domination(g: &Graph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (0u32..=full)
        .filter(|&d| {
            let mut count = None;
            (0..n).filter(|&v| d >> v & 1 == 0).all(|v| {
                let c = (adj[v] & d).count_ones();
                c > 0 && *count.get_or_insert(c) == c
            })
        })
        .map(|d| d.count_ones() as usize)
        .min()
        .unwrap()
}

/// Induced cycles as sorted vertex masks: connected 2-regular masks.
pub fn induced_cycles(g: &Graph) -> Vec<u32> {
    let adj = masks(g);
    (1u32..(1u32 << adj.len()))
        .filter(|&s| s.count_ones() >= 3 && is_induced_regular(&adj, s, 2) && connected(&adj, s))
        .collect()
}

pub fn connected(adj: &[u32], s: u32) -> bool {
    if s == 0 {
        return true;
    }
    let mut seen = s & s.wrapping_neg();
    loop {
        let mut next = seen;
        for v in 0..adj.len() {
            if seen >> v & 1 == 1 {
                next |= adj[v] & s;
            }
        }
        if next == seen {
            return seen == s;
        }
        seen = next;
    }
}

/// Longest induced cycle length, 0 for forests.
pub fn chordality(g: &Graph) -> usize {
    induced_cycles(g)
        .iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Random simple graph with maximum degree `max_deg`.
pub fn random_bounded_degree(n: usize, max_deg: usize, edge_tries: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for _ in 0..edge_tries {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || deg[u] >= max_deg || deg[v] >= max_deg || edges.contains(&(u.min(v), u.max(v))) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u.min(v), u.max(v)));
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Induced 2-regularity from the edge list, for graphs of any order.
pub fn is_induced_2_regular_any(g: &Graph, s: &VertexSet) -> bool {
    let mut inside = vec![false; g.n()];
    for v in s.iter() {
        inside[v] = true;
    }
    let mut deg = vec![0usize; g.n()];
    for (u, v) in g.edges() {
        if inside[u] && inside[v] {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    (0..g.n()).filter(|&v| inside[v]).all(|v| deg[v] == 2)
}
