//! Induced cycles, chordality, and induced 2-regular vertex sets.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// A chordless cycle, stored in canonical orientation: the smallest vertex
/// comes first and the second vertex is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedCycle {
    // length first so the derived order sorts by length, then vertices
    len: usize,
    vertices: Vec<usize>,
}

impl InducedCycle {
    /// Validates a cyclic vertex sequence against `g` and canonicalises it.
    pub fn new(g: &Graph, sequence: &[usize]) -> Option<InducedCycle> {
        let l = sequence.len();
        if l < 3 || sequence.iter().any(|&v| v >= g.n()) {
            return None;
        }
        let set = VertexSet::from_vertices(g.n(), sequence.iter().copied());
        if set.len() != l {
            return None;
        }
        for i in 0..l {
            let (u, v) = (sequence[i], sequence[(i + 1) % l]);
            if !g.has_edge(u, v) || g.degree_in(u, &set) != 2 {
                return None;
            }
        }
        Some(Self::canonical(sequence.to_vec()))
    }

    fn canonical(mut seq: Vec<usize>) -> InducedCycle {
        let pos = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        seq.rotate_left(pos);
        if seq.len() > 2 && seq[1] > seq[seq.len() - 1] {
            seq[1..].reverse();
        }
        InducedCycle {
            len: seq.len(),
            vertices: seq,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.vertices.iter().copied())
    }

    /// Relabels through `f`, re-canonicalising the orientation.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> InducedCycle {
        Self::canonical(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for InducedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Length of the longest induced cycle, or `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chordality {
    Acyclic,
    Bounded(usize),
}

impl Chordality {
    /// True if the graph has no induced cycle longer than `k`.
    pub fn is_k_chordal(self, k: usize) -> bool {
        match self {
            Chordality::Acyclic => true,
            Chordality::Bounded(c) => c <= k,
        }
    }

    pub fn value(self) -> Option<usize> {
        match self {
            Chordality::Acyclic => None,
            Chordality::Bounded(c) => Some(c),
        }
    }
}

impl fmt::Display for Chordality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chordality::Acyclic => f.write_str("acyclic"),
            Chordality::Bounded(k) => write!(f, "{k}"),
        }
    }
}

/// A vertex whose degree inside the candidate set is wrong.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("vertex {vertex} has {degree} neighbours inside the set, expected {expected}")]
pub struct Violation {
    pub vertex: usize,
    pub degree: usize,
    pub expected: usize,
}

/// Enumerates every induced cycle of length at most `max_len` (all of them
/// when `None`), each exactly once, sorted by length and then vertices.
///
/// Paths grow from their smallest vertex `s` through larger vertices only,
/// and a candidate extension must avoid every interior path vertex's
/// neighbourhood, so every path explored is induced.
pub fn enumerate_induced_cycles(g: &Graph, max_len: Option<usize>) -> Vec<InducedCycle> {
    let n = g.n();
    let limit = max_len.unwrap_or(n);
    let mut out = Vec::new();
    if limit < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        for p1 in g.neighbors(s).iter().filter(|&v| v > s) {
            path.clear();
            path.push(s);
            path.push(p1);
            // the path itself, anything below s, and neighbours of interior
            // vertices (none yet)
            let mut blocked = VertexSet::new(n);
            for v in 0..=s {
                blocked.insert(v);
            }
            blocked.insert(p1);
            extend(g, s, &mut path, &blocked, limit, &mut out);
        }
    }
    out.sort();
    out
}

fn extend(g: &Graph, s: usize, path: &mut Vec<usize>, blocked: &VertexSet, limit: usize, out: &mut Vec<InducedCycle>) {
    let head = *path.last().expect("path is non-empty");
    let start_nbrs = g.neighbors(s);
    for u in g.neighbors(head).iter() {
        if blocked.contains(u) {
            continue;
        }
        if start_nbrs.contains(u) {
            // closes a cycle; count it from one orientation only
            if path[1] < u && path.len() < limit {
                let mut seq = path.clone();
                seq.push(u);
                out.push(InducedCycle {
                    len: seq.len(),
                    vertices: seq,
                });
            }
            continue;
        }
        // need room for u plus at least one closing vertex
        if path.len() + 2 > limit {
            continue;
        }
        // the old head becomes interior, so its neighbours are off limits
        let mut next = blocked.clone();
        next.union_with(g.neighbors(head));
        next.insert(u);
        path.push(u);
        extend(g, s, path, &next, limit, out);
        path.pop();
    }
}

/// The smallest `k ≥ 3` such that `g` is `k`-chordal.
///
/// Induced cycles are 2-connected, so each nontrivial block is scanned
/// separately.
pub fn chordality(g: &Graph) -> Chordality {
    let mut best = Chordality::Acyclic;
    for block in g.block_structure().nontrivial_blocks() {
        let (sub, _) = g.induced_subgraph(&block.vertices);
        if let Some(c) = enumerate_induced_cycles(&sub, None).iter().map(|c| c.len()).max() {
            best = best.max(Chordality::Bounded(c));
        }
    }
    best
}

/// Checks that every vertex of `s` has exactly `degree` neighbours in `s`.
pub fn verify_induced_regular(g: &Graph, s: &VertexSet, degree: usize) -> Result<(), Violation> {
    for v in s.iter() {
        let d = g.degree_in(v, s);
        if d != degree {
            return Err(Violation {
                vertex: v,
                degree: d,
                expected: degree,
            });
        }
    }
    Ok(())
}

/// Checks that `G[S]` is 2-regular. The empty set passes.
pub fn verify_induced_2_regular(g: &Graph, s: &VertexSet) -> Result<(), Violation> {
    verify_induced_regular(g, s, 2)
}

/// Splits an induced 2-regular set into its cycles, sorted.
pub fn component_cycles(g: &Graph, s: &VertexSet) -> Result<Vec<InducedCycle>, Violation> {
    verify_induced_2_regular(g, s)?;
    let mut left = s.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut seq = vec![start];
        left.remove(start);
        let mut prev = start;
        let mut cur = g
            .neighbors(start)
            .intersection(s)
            .first()
            .expect("2-regular vertex has a neighbour");
        while cur != start {
            seq.push(cur);
            left.remove(cur);
            let next = g
                .neighbors(cur)
                .intersection(s)
                .iter()
                .find(|&w| w != prev)
                .expect("2-regular vertex has two neighbours");
            prev = cur;
            cur = next;
        }
        out.push(InducedCycle::canonical(seq));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn c5_has_one_cycle() {
        let cs = enumerate_induced_cycles(&cycle(5), None);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn k4_has_four_triangles() {
        let cs = enumerate_induced_cycles(&complete(4), None);
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn length_bound_filters() {
        let g = cycle(6).disjoint_union(&complete(3));
        assert_eq!(enumerate_induced_cycles(&g, Some(5)).len(), 1);
        assert_eq!(enumerate_induced_cycles(&g, Some(6)).len(), 2);
        assert!(enumerate_induced_cycles(&g, Some(2)).is_empty());
    }

    #[test]
    fn chordality_basics() {
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(chordality(&tree), Chordality::Acyclic);
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert_eq!(chordality(&k33), Chordality::Bounded(4));
        assert_eq!(chordality(&cycle(9)), Chordality::Bounded(9));
        assert!(Chordality::Acyclic.is_k_chordal(3));
    }

    #[test]
    fn two_regular_verdicts() {
        let k4 = complete(4);
        let err = verify_induced_2_regular(&k4, &k4.vertex_set()).unwrap_err();
        assert_eq!((err.vertex, err.degree), (0, 3));
        assert!(verify_induced_2_regular(&k4, &VertexSet::new(4)).is_ok());
        assert!(verify_induced_2_regular(&k4, &VertexSet::from_vertices(4, [0, 1, 3])).is_ok());
    }

    #[test]
    fn components_of_two_regular_sets() {
        // C3 on 0..3 and C4 on 3..7, joined by a single edge 2-3 that the
        // chosen set avoids
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 7), (3, 4), (4, 5), (5, 6), (6, 3), (7, 3)],
        )
        .unwrap();
        let s = VertexSet::from_vertices(8, [0, 1, 2, 3, 4, 5, 6]);
        let cs = component_cycles(&g, &s).unwrap();
        assert_eq!(cs.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![3, 4]);
        assert!(component_cycles(&g, &VertexSet::new(8)).unwrap().is_empty());
        let c6 = cycle(6);
        assert_eq!(component_cycles(&c6, &c6.vertex_set()).unwrap().len(), 1);
        let bad = VertexSet::from_vertices(8, [0, 1]);
        assert!(component_cycles(&g, &bad).is_err());
    }

    #[test]
    fn cycle_validation() {
        let k4 = complete(4);
        assert!(InducedCycle::new(&k4, &[0, 1, 2, 3]).is_none());
        let c = InducedCycle::new(&k4, &[2, 0, 1]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2]);
    }
}
