//! Immutable simple graphs on dense vertex indices.
//!
//! Every vertex row is a [`VertexSet`] bitset. Graphs with at most 64
//! vertices keep each row in a single inline machine word; larger graphs
//! spill to a heap-allocated multi-word row transparently.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};
use thiserror::Error;

/// Errors raised while constructing graphs or vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {u}-{v} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
}

/// A subset of `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: SmallVec<[u64; 1]>,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: smallvec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet::new(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(universe);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    /// Builds a set from vertex indices.
    ///
    /// Panics if a vertex lies outside the universe; use
    /// [`VertexSet::try_from_vertices`] for untrusted input.
    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        Self::try_from_vertices(universe, vertices).expect("vertex out of range")
    }

    pub fn try_from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut s = VertexSet::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange { v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`, returning whether it was absent.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside 0..{}", self.universe);
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let absent = *w & bit == 0;
        *w |= bit;
        absent
    }

    /// Removes `v`, returning whether it was present.
    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    /// Orders sets by their ascending vertex sequences, so `{0, 5} < {1, 2}`
    /// and a proper prefix sorts first.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Old-to-new vertex correspondence produced by vertex deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            to_parent: (0..n).collect(),
            from_parent: (0..n).map(Some).collect(),
        }
    }

    /// Vertex count of the derived graph.
    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }

    pub fn parent_len(&self) -> usize {
        self.from_parent.len()
    }

    pub fn to_parent(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    pub fn from_parent(&self, v: usize) -> Option<usize> {
        self.from_parent[v]
    }

    /// Maps a set over the derived graph back into the parent graph.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.parent_len(), s.iter().map(|v| self.to_parent[v]))
    }

    /// Maps a parent set into the derived graph, dropping deleted vertices.
    pub fn restrict(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.len(), s.iter().filter_map(|v| self.from_parent[v]))
    }

    /// `self` maps G1 → G0 and `inner` maps G2 → G1; the result maps G2 → G0.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        let to_parent: Vec<usize> = inner.to_parent.iter().map(|&v| self.to_parent[v]).collect();
        let mut from_parent = vec![None; self.parent_len()];
        for (new, &old) in to_parent.iter().enumerate() {
            from_parent[old] = Some(new);
        }
        VertexMap { to_parent, from_parent }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeClass {
    Cubic,
    /// Maximum degree at most three but not cubic.
    Subcubic,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub class: DegreeClass,
    pub degrees: Vec<usize>,
}

impl DegreeReport {
    pub fn is_cubic(&self) -> bool {
        self.class == DegreeClass::Cubic
    }

    pub fn is_subcubic(&self) -> bool {
        self.class != DegreeClass::Neither
    }
}

/// A block of a graph: a maximal 2-connected subgraph, a bridge, or an
/// isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// Blocks other than `K_1` and `K_2`.
    pub fn is_nontrivial(&self) -> bool {
        self.vertices.len() >= 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub blocks: Vec<Block>,
    pub cutvertices: VertexSet,
    pub bridges: Vec<(usize, usize)>,
}

impl BlockStructure {
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.is_nontrivial())
    }
}

/// Simple undirected graph; immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, loops and
    /// repeated pairs.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        let mut adj = vec![VertexSet::new(n); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            if !adj[u].insert(v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[v].insert(u);
            m += 1;
        }
        Ok(Graph { adj, m })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of neighbours of `v` inside `s`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].intersection_len(s)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v].iter() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// κ(G), the number of connected components.
    pub fn kappa(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.kappa() == 1
    }

    /// μ(G) = m + κ − n; zero exactly for forests.
    pub fn cyclomatic_number(&self) -> usize {
        self.m + self.kappa() - self.n()
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    /// `N[S]`: `S` together with every neighbour of a vertex in `S`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `G − S`, plus the map relating new indices to old ones. Remaining
    /// vertices keep their relative order.
    pub fn delete_vertices(&self, s: &VertexSet) -> (Graph, VertexMap) {
        let keep = self.vertex_set().difference(s);
        self.induced_subgraph(&keep)
    }

    /// `G[S]`, plus the map relating new indices to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, VertexMap) {
        let to_parent: Vec<usize> = keep.iter().collect();
        let mut from_parent = vec![None; self.n()];
        for (new, &old) in to_parent.iter().enumerate() {
            from_parent[old] = Some(new);
        }
        let k = to_parent.len();
        let mut adj = vec![VertexSet::new(k); k];
        let mut m = 0;
        for (new, &old) in to_parent.iter().enumerate() {
            for w in self.adj[old].iter() {
                if let Some(nw) = from_parent[w] {
                    adj[new].insert(nw);
                    if nw > new {
                        m += 1;
                    }
                }
            }
        }
        (Graph { adj, m }, VertexMap { to_parent, from_parent })
    }

    /// Returns a copy with extra edges added.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n(), self.edges().chain(edges))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        Graph::from_edges(
            off + other.n(),
            self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
        .expect("disjoint union of simple graphs is simple")
    }

    /// Relabels the vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation of a simple graph is simple")
    }

    pub fn degree_check(&self) -> DegreeReport {
        let degrees: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let class = if degrees.iter().all(|&d| d == 3) {
            DegreeClass::Cubic
        } else if degrees.iter().all(|&d| d <= 3) {
            DegreeClass::Subcubic
        } else {
            DegreeClass::Neither
        };
        DegreeReport { class, degrees }
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) == 3)
    }

    /// The common degree, if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n() == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Biconnected decomposition (Hopcroft–Tarjan with an edge stack).
    pub fn block_structure(&self) -> BlockStructure {
        let n = self.n();
        let nbrs: Vec<Vec<usize>> = self.adj.iter().map(|r| r.to_vec()).collect();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();

        struct Frame {
            v: usize,
            parent: usize,
            next: usize,
        }

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            if nbrs[root].is_empty() {
                blocks.push(Block {
                    vertices: VertexSet::from_vertices(n, [root]),
                    edges: Vec::new(),
                });
                continue;
            }
            let mut stack = vec![Frame {
                v: root,
                parent: usize::MAX,
                next: 0,
            }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < nbrs[v].len() {
                    let w = nbrs[v][frame.next];
                    frame.next += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push(Frame {
                            v: w,
                            parent: v,
                            next: 0,
                        });
                    } else if w != frame.parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(up) = stack.last() {
                        let p = up.v;
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut vertices = VertexSet::new(n);
                            let mut edges = Vec::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                vertices.insert(a);
                                vertices.insert(b);
                                edges.push((a.min(b), a.max(b)));
                                if (a, b) == (p, v) {
                                    break;
                                }
                            }
                            edges.sort_unstable();
                            blocks.push(Block { vertices, edges });
                        }
                    }
                }
            }
        }

        blocks.sort_by(|a, b| a.vertices.lex_cmp(&b.vertices));
        let mut count = vec![0usize; n];
        for b in &blocks {
            for v in b.vertices.iter() {
                count[v] += 1;
            }
        }
        let cutvertices = VertexSet::from_vertices(n, (0..n).filter(|&v| count[v] >= 2));
        let mut bridges: Vec<(usize, usize)> = blocks.iter().filter(|b| b.is_bridge()).map(|b| b.edges[0]).collect();
        bridges.sort_unstable();
        BlockStructure {
            blocks,
            cutvertices,
            bridges,
        }
    }

    /// At least three vertices, connected, and no cutvertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n() < 3 || !self.is_connected() {
            return false;
        }
        self.block_structure().blocks.len() == 1
    }
}
