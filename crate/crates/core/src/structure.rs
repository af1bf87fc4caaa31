//! Structure of 4-chordal cubic graphs.
//!
//! Every 2-connected subcubic 4-chordal graph is one of eight small graphs
//! (`K_3`, `K_4`, the diamond `D`, `D′`, the prism, `K_{2,3}`, `K_{3,3}`,
//! `K_{3,3}⁻`) or a ladder `B_k = P_2 □ P_k`, possibly with an apex triangle
//! on one end rung (`B_k′`) or on both (`B_k″`). A connected cubic 4-chordal
//! graph that is not 2-connected is a tree of such blocks joined by
//! bridges, and [`decompose_4chordal`] / [`assemble`] convert between the
//! two views.
//!
//! Each kind has a canonical template whose degree-2 vertices, in template
//! order, are the attachment slots.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{chordality, Chordality};
use crate::embed::{find_isomorphism, find_isomorphism_with};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum BlockKind {
    K3,
    K4,
    D,
    Dprime,
    Prism,
    K23,
    K33,
    K33minus,
    Ladder(usize),
    LadderPrime(usize),
    LadderDoublePrime(usize),
}

/// A block of the graph together with the canonical order of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub graph: Graph,
    /// Attachment points, in slot order.
    pub slots: Vec<usize>,
}

fn complete_bipartite(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect()
}

fn ladder_edges(k: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::with_capacity(3 * k);
    for i in 0..k {
        e.push((i, k + i));
        if i + 1 < k {
            e.push((i, i + 1));
            e.push((k + i, k + i + 1));
        }
    }
    e
}

impl BlockKind {
    /// The 2-connected cubic kinds, which never occur as proper blocks.
    pub const EXCEPTIONAL: [BlockKind; 3] = [BlockKind::K4, BlockKind::K33, BlockKind::Prism];

    pub fn is_exceptional(self) -> bool {
        Self::EXCEPTIONAL.contains(&self)
    }

    /// Ladder length for the parametric kinds.
    pub fn rungs(self) -> Option<usize> {
        match self {
            BlockKind::Ladder(k) | BlockKind::LadderPrime(k) | BlockKind::LadderDoublePrime(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_valid(self) -> bool {
        self.rungs().is_none_or(|k| k >= 2)
    }

    /// Number of degree-2 vertices, i.e. bridges the block takes in a cubic
    /// graph.
    pub fn capacity(self) -> usize {
        match self {
            BlockKind::K4 | BlockKind::K33 | BlockKind::Prism => 0,
            BlockKind::Dprime => 1,
            BlockKind::D | BlockKind::K33minus | BlockKind::LadderDoublePrime(_) => 2,
            BlockKind::K3 | BlockKind::K23 | BlockKind::LadderPrime(_) => 3,
            BlockKind::Ladder(_) => 4,
        }
    }

    pub fn order(self) -> usize {
        match self {
            BlockKind::K3 => 3,
            BlockKind::K4 | BlockKind::D => 4,
            BlockKind::Dprime | BlockKind::K23 => 5,
            BlockKind::Prism | BlockKind::K33 | BlockKind::K33minus => 6,
            BlockKind::Ladder(k) => 2 * k,
            BlockKind::LadderPrime(k) => 2 * k + 1,
            BlockKind::LadderDoublePrime(k) => 2 * k + 2,
        }
    }

    /// Canonical template.
    ///
    /// Ladders number the rails `a_1..a_k` as `0..k` and `b_1..b_k` as
    /// `k..2k`; the apex on rung 1 is `2k`, the apex on rung `k` is `2k+1`.
    /// Panics on a parametric kind with `k < 2`.
    pub fn template(self) -> Template {
        assert!(self.is_valid(), "{self} needs k >= 2");
        let (n, edges, slots): (usize, Vec<(usize, usize)>, Vec<usize>) = match self {
            BlockKind::K3 => (3, vec![(0, 1), (1, 2), (0, 2)], vec![0, 1, 2]),
            BlockKind::K4 => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], vec![]),
            BlockKind::D => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], vec![2, 3]),
            BlockKind::Dprime => (5, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)], vec![4]),
            BlockKind::Prism => (
                6,
                vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
                vec![],
            ),
            BlockKind::K23 => (5, complete_bipartite(2, 3), vec![2, 3, 4]),
            BlockKind::K33 => (6, complete_bipartite(3, 3), vec![]),
            BlockKind::K33minus => {
                let e = complete_bipartite(3, 3).into_iter().filter(|&e| e != (0, 3)).collect();
                (6, e, vec![0, 3])
            }
            BlockKind::Ladder(k) => (2 * k, ladder_edges(k), vec![0, k, k - 1, 2 * k - 1]),
            BlockKind::LadderPrime(k) => {
                let mut e = ladder_edges(k);
                e.extend([(0, 2 * k), (k, 2 * k)]);
                (2 * k + 1, e, vec![2 * k, k - 1, 2 * k - 1])
            }
            BlockKind::LadderDoublePrime(k) => {
                let mut e = ladder_edges(k);
                e.extend([(0, 2 * k), (k, 2 * k), (k - 1, 2 * k + 1), (2 * k - 1, 2 * k + 1)]);
                (2 * k + 2, e, vec![2 * k, 2 * k + 1])
            }
        };
        Template {
            graph: Graph::from_edges(n, edges).expect("templates are simple"),
            slots,
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::K3 => f.write_str("K3"),
            BlockKind::K4 => f.write_str("K4"),
            BlockKind::D => f.write_str("D"),
            BlockKind::Dprime => f.write_str("Dprime"),
            BlockKind::Prism => f.write_str("Prism"),
            BlockKind::K23 => f.write_str("K23"),
            BlockKind::K33 => f.write_str("K33"),
            BlockKind::K33minus => f.write_str("K33minus"),
            BlockKind::Ladder(k) => write!(f, "Ladder(k={k})"),
            BlockKind::LadderPrime(k) => write!(f, "LadderPrime(k={k})"),
            BlockKind::LadderDoublePrime(k) => write!(f, "LadderDoublePrime(k={k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown block kind {0:?}")]
pub struct ParseKindError(pub String);

impl FromStr for BlockKind {
    type Err = ParseKindError;

    /// Accepts the `Display` form; parametric kinds also parse as
    /// `Ladder(3)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseKindError(s.to_string());
        let s = s.trim();
        let simple = match s {
            "K3" => Some(BlockKind::K3),
            "K4" => Some(BlockKind::K4),
            "D" => Some(BlockKind::D),
            "Dprime" => Some(BlockKind::Dprime),
            "Prism" => Some(BlockKind::Prism),
            "K23" => Some(BlockKind::K23),
            "K33" => Some(BlockKind::K33),
            "K33minus" => Some(BlockKind::K33minus),
            _ => None,
        };
        if let Some(kind) = simple {
            return Ok(kind);
        }
        let (name, rest) = s.split_once('(').ok_or_else(err)?;
        let inner = rest.strip_suffix(')').ok_or_else(err)?;
        let inner = inner.trim().strip_prefix("k=").unwrap_or(inner).trim();
        let k: usize = inner.parse().map_err(|_| err())?;
        let kind = match name.trim() {
            "Ladder" => BlockKind::Ladder(k),
            "LadderPrime" => BlockKind::LadderPrime(k),
            "LadderDoublePrime" => BlockKind::LadderDoublePrime(k),
            _ => return Err(err()),
        };
        if kind.is_valid() {
            Ok(kind)
        } else {
            Err(err())
        }
    }
}

impl From<BlockKind> for String {
    fn from(k: BlockKind) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for BlockKind {
    type Error = ParseKindError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// What a tree vertex stands for: a nontrivial block, or a single degree-3
/// vertex whose three edges are all bridges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Label {
    Block(BlockKind),
    PlainVertex,
}

impl Label {
    pub fn capacity(self) -> usize {
        match self {
            Label::Block(k) => k.capacity(),
            Label::PlainVertex => 3,
        }
    }

    pub fn order(self) -> usize {
        match self {
            Label::Block(k) => k.order(),
            Label::PlainVertex => 1,
        }
    }

    /// Template; a plain vertex is `K_1` with its single vertex in all three
    /// slots.
    pub fn template(self) -> Template {
        match self {
            Label::Block(k) => k.template(),
            Label::PlainVertex => Template {
                graph: Graph::empty(1),
                slots: vec![0, 0, 0],
            },
        }
    }

    pub fn kind(self) -> Option<BlockKind> {
        match self {
            Label::Block(k) => Some(k),
            Label::PlainVertex => None,
        }
    }
}

impl From<BlockKind> for Label {
    fn from(k: BlockKind) -> Label {
        Label::Block(k)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Block(k) => k.fmt(f),
            Label::PlainVertex => f.write_str("PlainVertex"),
        }
    }
}

impl FromStr for Label {
    type Err = ParseKindError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "PlainVertex" {
            Ok(Label::PlainVertex)
        } else {
            s.parse().map(Label::Block)
        }
    }
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for Label {
    type Error = ParseKindError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not subcubic")]
    NotSubcubic,
    #[error("graph is not 4-chordal (chordality {0})")]
    NotFourChordal(Chordality),
    /// A 2-connected subcubic 4-chordal graph outside the known families;
    /// impossible unless the classifier is broken.
    #[error("internal error: 2-connected subcubic 4-chordal graph matched no family")]
    NotInFamily,
}

/// Identifies a 2-connected subcubic 4-chordal graph.
pub fn classify_2connected(g: &Graph) -> Result<BlockKind, ClassifyError> {
    classify_with_embedding(g).map(|(k, _)| k)
}

/// Like [`classify_2connected`], also returning where each template vertex
/// of the kind sits in `g`.
pub fn classify_with_embedding(g: &Graph) -> Result<(BlockKind, Vec<usize>), ClassifyError> {
    if !g.degree_check().is_subcubic() {
        return Err(ClassifyError::NotSubcubic);
    }
    if !g.is_two_connected() {
        return Err(ClassifyError::NotTwoConnected);
    }
    let c = chordality(g);
    if !c.is_k_chordal(4) {
        return Err(ClassifyError::NotFourChordal(c));
    }
    identify(g).ok_or(ClassifyError::NotInFamily)
}

const SMALL_KINDS: [BlockKind; 8] = [
    BlockKind::K3,
    BlockKind::K4,
    BlockKind::D,
    BlockKind::Dprime,
    BlockKind::Prism,
    BlockKind::K23,
    BlockKind::K33,
    BlockKind::K33minus,
];

fn identify(g: &Graph) -> Option<(BlockKind, Vec<usize>)> {
    let n = g.n();
    let deg2: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    for kind in SMALL_KINDS {
        if kind.order() == n && kind.capacity() == deg2.len() {
            if let Some(map) = find_isomorphism(&kind.template().graph, g) {
                return Some((kind, map));
            }
        }
    }
    match deg2.len() {
        4 if n % 2 == 0 => recognize_ladder(g, &deg2),
        3 if n % 2 == 1 && n >= 5 => recognize_ladder_prime(g, &deg2),
        2 if n % 2 == 0 && n >= 6 => recognize_ladder_double_prime(g, &deg2),
        _ => None,
    }
}

/// Walks the two rails of a ladder starting from the end rung `a1 b1`,
/// never stepping onto `exclude`.
fn walk_rails(g: &Graph, a1: usize, b1: usize, exclude: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    if !g.has_edge(a1, b1) {
        return None;
    }
    let mut seen = VertexSet::from_vertices(g.n(), exclude.iter().copied());
    seen.insert(a1);
    seen.insert(b1);
    let (mut a, mut b) = (vec![a1], vec![b1]);
    loop {
        let (ai, bi) = (*a.last()?, *b.last()?);
        let na = g.neighbors(ai).difference(&seen);
        let nb = g.neighbors(bi).difference(&seen);
        match (na.len(), nb.len()) {
            (0, 0) => return Some((a, b)),
            (1, 1) => {
                let (x, y) = (na.first()?, nb.first()?);
                if x == y || !g.has_edge(x, y) {
                    return None;
                }
                seen.insert(x);
                seen.insert(y);
                a.push(x);
                b.push(y);
            }
            _ => return None,
        }
    }
}

fn matches_template(g: &Graph, kind: BlockKind, map: &[usize]) -> bool {
    let t = kind.template();
    if t.graph.n() != g.n() || t.graph.m() != g.m() || map.len() != g.n() {
        return false;
    }
    let image = VertexSet::from_vertices(g.n(), map.iter().copied());
    image.len() == g.n() && t.graph.edges().all(|(u, v)| g.has_edge(map[u], map[v]))
}

fn ladder_map(a: &[usize], b: &[usize], apexes: &[usize]) -> Vec<usize> {
    a.iter().chain(b).chain(apexes).copied().collect()
}

fn recognize_ladder(g: &Graph, deg2: &[usize]) -> Option<(BlockKind, Vec<usize>)> {
    let a1 = deg2[0];
    let b1 = g.neighbors(a1).iter().find(|v| deg2.contains(v))?;
    let (a, b) = walk_rails(g, a1, b1, &[])?;
    let kind = BlockKind::Ladder(a.len());
    let map = ladder_map(&a, &b, &[]);
    (kind.is_valid() && matches_template(g, kind, &map)).then_some((kind, map))
}

fn apex_rung(g: &Graph, z: usize) -> Option<(usize, usize)> {
    let nz = g.neighbors(z).to_vec();
    (nz.len() == 2 && g.has_edge(nz[0], nz[1])).then(|| (nz[0], nz[1]))
}

fn recognize_ladder_prime(g: &Graph, deg2: &[usize]) -> Option<(BlockKind, Vec<usize>)> {
    for &z in deg2 {
        let Some((a1, b1)) = apex_rung(g, z) else {
            continue;
        };
        let Some((a, b)) = walk_rails(g, a1, b1, &[z]) else {
            continue;
        };
        let kind = BlockKind::LadderPrime(a.len());
        let map = ladder_map(&a, &b, &[z]);
        if kind.is_valid() && matches_template(g, kind, &map) {
            return Some((kind, map));
        }
    }
    None
}

fn recognize_ladder_double_prime(g: &Graph, deg2: &[usize]) -> Option<(BlockKind, Vec<usize>)> {
    let (z1, z2) = (deg2[0], deg2[1]);
    let (a1, b1) = apex_rung(g, z1)?;
    let (a, b) = walk_rails(g, a1, b1, &[z1, z2])?;
    let kind = BlockKind::LadderDoublePrime(a.len());
    let map = ladder_map(&a, &b, &[z1, z2]);
    (kind.is_valid() && matches_template(g, kind, &map)).then_some((kind, map))
}

/// One bridge of the tree of blocks: which slot of each endpoint it uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Attachment {
    /// Tree edge `(u, v)` with `u < v`.
    pub edge: (usize, usize),
    /// Slot of `u`'s label, slot of `v`'s label.
    pub slots: (usize, usize),
}

/// A tree whose vertices are labelled with blocks, plus the slot used by
/// every tree edge at each end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub tree: Graph,
    pub labels: Vec<Label>,
    pub attachments: Vec<Attachment>,
}

impl BlockDecomposition {
    /// Uses the lowest free slot at each end, taking tree edges in
    /// ascending order.
    pub fn with_default_slots(tree: Graph, labels: Vec<Label>) -> BlockDecomposition {
        let mut next = vec![0usize; tree.n()];
        let attachments = tree
            .edges()
            .map(|(u, v)| {
                let slots = (next[u], next[v]);
                next[u] += 1;
                next[v] += 1;
                Attachment { edge: (u, v), slots }
            })
            .collect();
        BlockDecomposition {
            tree,
            labels,
            attachments,
        }
    }

    /// Order of the assembled graph.
    pub fn graph_order(&self) -> usize {
        self.labels.iter().map(|l| l.order()).sum()
    }

    /// Checks the invariants [`assemble`] relies on.
    pub fn validate(&self) -> Result<(), AssembleError> {
        let t = &self.tree;
        if t.n() < 2 {
            return Err(AssembleError::TreeTooSmall);
        }
        if !t.is_connected() || t.m() + 1 != t.n() {
            return Err(AssembleError::NotATree);
        }
        if self.labels.len() != t.n() {
            return Err(AssembleError::LabelCount {
                labels: self.labels.len(),
                tree: t.n(),
            });
        }
        for v in 0..t.n() {
            let label = self.labels[v];
            if label.kind().is_some_and(|k| !k.is_valid()) {
                return Err(AssembleError::InvalidLabel { vertex: v, label });
            }
            if t.degree(v) > 4 {
                return Err(AssembleError::DegreeTooLarge {
                    vertex: v,
                    degree: t.degree(v),
                });
            }
            if label.capacity() != t.degree(v) {
                return Err(AssembleError::LabelDegreeMismatch {
                    vertex: v,
                    label,
                    degree: t.degree(v),
                });
            }
        }
        if self.attachments.len() != t.m() {
            return Err(AssembleError::AttachmentCount {
                attachments: self.attachments.len(),
                edges: t.m(),
            });
        }
        let mut used: Vec<VertexSet> = (0..t.n()).map(|v| VertexSet::new(t.degree(v))).collect();
        let mut covered = VertexSet::new(t.n() * t.n());
        for a in &self.attachments {
            let (u, v) = a.edge;
            if u >= t.n() || v >= t.n() || !t.has_edge(u, v) {
                return Err(AssembleError::UnknownTreeEdge { edge: a.edge });
            }
            if !covered.insert(u.min(v) * t.n() + u.max(v)) {
                return Err(AssembleError::UnknownTreeEdge { edge: a.edge });
            }
            for (x, s) in [(u, a.slots.0), (v, a.slots.1)] {
                if s >= t.degree(x) {
                    return Err(AssembleError::SlotOutOfRange { vertex: x, slot: s });
                }
                if !used[x].insert(s) {
                    return Err(AssembleError::SlotReused { vertex: x, slot: s });
                }
            }
        }
        Ok(())
    }

    /// Same tree up to a label-preserving isomorphism.
    pub fn equivalent(&self, other: &BlockDecomposition) -> bool {
        self.labels.len() == other.labels.len()
            && find_isomorphism_with(&self.tree, &other.tree, |p, h| self.labels[p] == other.labels[h]).is_some()
    }

    /// `(tree degree, label)` pairs, sorted.
    pub fn label_profile(&self) -> Vec<(usize, Label)> {
        let mut p: Vec<(usize, Label)> = (0..self.tree.n())
            .map(|v| (self.tree.degree(v), self.labels[v]))
            .collect();
        p.sort();
        p
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssembleError {
    #[error("tree needs at least two vertices")]
    TreeTooSmall,
    #[error("not a tree")]
    NotATree,
    #[error("{labels} labels for a tree of order {tree}")]
    LabelCount { labels: usize, tree: usize },
    #[error("label {label} at tree vertex {vertex} is not a valid block")]
    InvalidLabel { vertex: usize, label: Label },
    #[error("tree vertex {vertex} has degree {degree} > 4")]
    DegreeTooLarge { vertex: usize, degree: usize },
    #[error("tree vertex {vertex} has degree {degree} but {label} takes {} bridges", .label.capacity())]
    LabelDegreeMismatch { vertex: usize, label: Label, degree: usize },
    #[error("{attachments} attachments for {edges} tree edges")]
    AttachmentCount { attachments: usize, edges: usize },
    #[error("attachment for {edge:?} does not name a distinct tree edge")]
    UnknownTreeEdge { edge: (usize, usize) },
    #[error("slot {slot} out of range at tree vertex {vertex}")]
    SlotOutOfRange { vertex: usize, slot: usize },
    #[error("slot {slot} used twice at tree vertex {vertex}")]
    SlotReused { vertex: usize, slot: usize },
    #[error("tree has a vertex of degree {0} > 3")]
    ExtremalDegree(usize),
}

/// A decomposition together with where its blocks sit in the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedDecomposition {
    pub decomposition: BlockDecomposition,
    /// For each tree vertex, the graph vertex of every template vertex.
    pub placement: Vec<Vec<usize>>,
    /// For each graph vertex, the tree vertex containing it.
    pub owner: Vec<usize>,
}

impl PlacedDecomposition {
    /// Graph vertex sitting in `slot` of tree vertex `t`.
    pub fn slot_vertex(&self, t: usize, slot: usize) -> usize {
        let label = self.decomposition.labels[t];
        self.placement[t][label.template().slots[slot]]
    }
}

/// Builds the graph described by a decomposition.
pub fn assemble(dec: &BlockDecomposition) -> Result<Graph, AssembleError> {
    assemble_placed(dec).map(|p| p.0)
}

/// [`assemble`], also returning the vertex placement of every tree vertex.
pub fn assemble_placed(dec: &BlockDecomposition) -> Result<(Graph, PlacedDecomposition), AssembleError> {
    dec.validate()?;
    let templates: Vec<Template> = dec.labels.iter().map(|l| l.template()).collect();
    let mut offset = Vec::with_capacity(templates.len());
    let mut n = 0;
    for t in &templates {
        offset.push(n);
        n += t.graph.n();
    }
    let mut edges = Vec::new();
    let mut owner = vec![0; n];
    for (i, t) in templates.iter().enumerate() {
        edges.extend(t.graph.edges().map(|(u, v)| (u + offset[i], v + offset[i])));
        for v in 0..t.graph.n() {
            owner[offset[i] + v] = i;
        }
    }
    for a in &dec.attachments {
        let (u, v) = a.edge;
        let x = offset[u] + templates[u].slots[a.slots.0];
        let y = offset[v] + templates[v].slots[a.slots.1];
        edges.push((x, y));
    }
    let g = Graph::from_edges(n, edges).expect("validated decompositions assemble to simple graphs");
    let placement = templates
        .iter()
        .enumerate()
        .map(|(i, t)| (0..t.graph.n()).map(|v| offset[i] + v).collect())
        .collect();
    Ok((
        g,
        PlacedDecomposition {
            decomposition: dec.clone(),
            placement,
            owner,
        },
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not 4-chordal (chordality {0})")]
    NotFourChordal(Chordality),
    #[error("graph is the 2-connected exceptional graph {0}")]
    Exceptional(BlockKind),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Tree-of-blocks decomposition of a connected cubic 4-chordal graph.
pub fn decompose_4chordal(g: &Graph) -> Result<BlockDecomposition, DecomposeError> {
    decompose_placed(g).map(|p| p.decomposition)
}

/// [`decompose_4chordal`], also reporting where every block sits.
///
/// Tree vertices are numbered by the smallest graph vertex they contain;
/// the bridges at a plain vertex take its slots in ascending order.
pub fn decompose_placed(g: &Graph) -> Result<PlacedDecomposition, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    if !g.is_cubic() {
        return Err(DecomposeError::NotCubic);
    }
    let n = g.n();
    let bs = g.block_structure();

    let mut block_of: Vec<Option<(BlockKind, Vec<usize>)>> = vec![None; n];
    for block in bs.nontrivial_blocks() {
        let (sub, map) = g.induced_subgraph(&block.vertices);
        let (kind, emb) = match classify_with_embedding(&sub) {
            Ok(x) => x,
            Err(ClassifyError::NotFourChordal(c)) => return Err(DecomposeError::NotFourChordal(c)),
            Err(e) => return Err(DecomposeError::Internal(format!("block classification: {e}"))),
        };
        if kind.is_exceptional() {
            return Err(DecomposeError::Exceptional(kind));
        }
        let emb: Vec<usize> = emb.into_iter().map(|v| map.to_parent(v)).collect();
        let first = block.vertices.first().expect("blocks are non-empty");
        block_of[first] = Some((kind, emb));
    }

    let mut owner = vec![usize::MAX; n];
    let mut labels = Vec::new();
    let mut placement: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if owner[v] != usize::MAX {
            continue;
        }
        let t = labels.len();
        match block_of[v].take() {
            Some((kind, emb)) => {
                for &w in &emb {
                    owner[w] = t;
                }
                labels.push(Label::Block(kind));
                placement.push(emb);
            }
            None => {
                owner[v] = t;
                labels.push(Label::PlainVertex);
                placement.push(vec![v]);
            }
        }
    }

    let slot_of = |t: usize, x: usize, used: &mut [usize]| -> usize {
        match labels[t] {
            Label::PlainVertex => {
                used[t] += 1;
                used[t] - 1
            }
            Label::Block(kind) => {
                let slots = kind.template().slots;
                slots
                    .iter()
                    .position(|&s| placement[t][s] == x)
                    .expect("bridge endpoints in a block are its degree-2 vertices")
            }
        }
    };
    let mut used = vec![0usize; labels.len()];
    let mut tree_edges = Vec::with_capacity(bs.bridges.len());
    let mut attachments = Vec::with_capacity(bs.bridges.len());
    for &(x, y) in &bs.bridges {
        let (tx, ty) = (owner[x], owner[y]);
        let (sx, sy) = (slot_of(tx, x, &mut used), slot_of(ty, y, &mut used));
        let (edge, slots) = if tx < ty {
            ((tx, ty), (sx, sy))
        } else {
            ((ty, tx), (sy, sx))
        };
        tree_edges.push(edge);
        attachments.push(Attachment { edge, slots });
    }
    attachments.sort_by_key(|a| a.edge);
    let tree = Graph::from_edges(labels.len(), tree_edges)
        .map_err(|e| DecomposeError::Internal(format!("block tree: {e}")))?;

    if labels.len() == 1 {
        // a single tree vertex means the graph is 2-connected; cubic members
        // of the families are all exceptional
        return Err(match labels[0] {
            Label::Block(kind) => DecomposeError::Exceptional(kind),
            Label::PlainVertex => DecomposeError::Internal("lone plain vertex".into()),
        });
    }
    let decomposition = BlockDecomposition {
        tree,
        labels,
        attachments,
    };
    decomposition
        .validate()
        .map_err(|e| DecomposeError::Internal(format!("decomposition invariant: {e}")))?;
    Ok(PlacedDecomposition {
        decomposition,
        placement,
        owner,
    })
}

/// The graph for a tree of maximum degree 3 with `D′` at the leaves, `B_3″`
/// at degree-2 vertices and `K_3` at degree-3 vertices.
pub fn generate_extremal(tree: &Graph) -> Result<Graph, AssembleError> {
    if let Some(d) = (0..tree.n()).map(|v| tree.degree(v)).find(|&d| d > 3) {
        return Err(AssembleError::ExtremalDegree(d));
    }
    let labels = (0..tree.n())
        .map(|v| match tree.degree(v) {
            1 => Label::Block(BlockKind::Dprime),
            2 => Label::Block(BlockKind::LadderDoublePrime(3)),
            _ => Label::Block(BlockKind::K3),
        })
        .collect();
    assemble(&BlockDecomposition::with_default_slots(tree.clone(), labels))
}
