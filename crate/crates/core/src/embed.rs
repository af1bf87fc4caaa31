//! Backtracking search for induced embeddings and isomorphisms of small
//! pattern graphs.

use crate::graph::{Graph, VertexSet};

/// Finds an injective map from pattern vertices to host vertices under
/// which pattern adjacency and host adjacency agree exactly, i.e. the image
/// induces a copy of `pattern`.
///
/// Pattern vertices are assigned in `order` (which must list every pattern
/// vertex once) and host candidates are tried in ascending order, so the
/// first hit is the lexicographically smallest image tuple in that order.
/// `compatible(p, h)` can veto individual assignments.
pub fn find_induced_embedding_with(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    compatible: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    assert_eq!(order.len(), pattern.n(), "order must cover the pattern");
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = VertexSet::new(host.n());
    search(pattern, host, order, 0, &mut map, &mut used, &compatible).then_some(map)
}

pub fn find_induced_embedding(pattern: &Graph, host: &Graph, order: &[usize]) -> Option<Vec<usize>> {
    find_induced_embedding_with(pattern, host, order, |p, h| host.degree(h) >= pattern.degree(p))
}

/// An isomorphism `a → b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    find_isomorphism_with(a, b, |_, _| true)
}

/// Isomorphism search with an extra vertex-compatibility predicate, e.g. to
/// respect labels.
pub fn find_isomorphism_with(a: &Graph, b: &Graph, compatible: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let order = connected_order(a);
    find_induced_embedding_with(a, b, &order, |p, h| a.degree(p) == b.degree(h) && compatible(p, h))
}

/// Vertex order in which every vertex after the first of its component has
/// an earlier neighbour (BFS from the smallest vertex of each component).
pub fn connected_order(g: &Graph) -> Vec<usize> {
    let mut seen = VertexSet::new(g.n());
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if !seen.insert(s) {
            continue;
        }
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbors(v).iter() {
                if seen.insert(w) {
                    order.push(w);
                }
            }
        }
    }
    order
}

fn search(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    pos: usize,
    map: &mut [usize],
    used: &mut VertexSet,
    compatible: &impl Fn(usize, usize) -> bool,
) -> bool {
    let Some(&p) = order.get(pos) else {
        return true;
    };
    let anchor = order[..pos].iter().copied().find(|&q| pattern.has_edge(p, q));
    let candidates: Vec<usize> = match anchor {
        Some(q) => host.neighbors(map[q]).iter().collect(),
        None => (0..host.n()).collect(),
    };
    for h in candidates {
        if used.contains(h) || !compatible(p, h) {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[p] = h;
        used.insert(h);
        if search(pattern, host, order, pos + 1, map, used, compatible) {
            return true;
        }
        used.remove(h);
        map[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let perm = [3, 5, 0, 2, 4, 1];
        let p = c6.permuted(&perm);
        let iso = find_isomorphism(&c6, &p).unwrap();
        for (u, v) in c6.edges() {
            assert!(p.has_edge(iso[u], iso[v]));
        }
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(find_isomorphism(&c6, &two_triangles).is_none());
    }

    #[test]
    fn induced_c4_not_in_k4() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_induced_embedding(&c4, &k4, &[0, 1, 2, 3]).is_none());
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(find_induced_embedding(&c4, &c5, &[0, 1, 2, 3]).is_none());
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_induced_embedding(&p3, &c5, &[0, 1, 2]), Some(vec![0, 1, 2]));
    }
}
