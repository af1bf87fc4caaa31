//! Named graphs and seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::structure::{assemble, AssembleError, Attachment, BlockDecomposition, BlockKind, Label};

/// Pairing-model attempts before giving up.
pub const PAIRING_ATTEMPTS: usize = 10_000;

/// Largest ladder length drawn by [`random_decomposition`].
pub const MAX_RANDOM_RUNGS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("ladder length must be at least 2, got {0}")]
    LadderTooShort(usize),
    #[error("a cubic graph needs an even order of at least 4, got {0}")]
    BadCubicOrder(usize),
    #[error("no connected simple cubic pairing after {0} attempts")]
    RejectionBudget(usize),
    #[error("tree order must be at least 2, got {0}")]
    TreeTooSmall(usize),
    #[error(transparent)]
    Assemble(#[from] AssembleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    K3,
    K4,
    D,
    Dprime,
    Prism,
    K23,
    K33,
    K33minus,
    Petersen,
    Figure1,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 10] = [
        NamedGraph::K3,
        NamedGraph::K4,
        NamedGraph::D,
        NamedGraph::Dprime,
        NamedGraph::Prism,
        NamedGraph::K23,
        NamedGraph::K33,
        NamedGraph::K33minus,
        NamedGraph::Petersen,
        NamedGraph::Figure1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K3 => "K3",
            NamedGraph::K4 => "K4",
            NamedGraph::D => "D",
            NamedGraph::Dprime => "Dprime",
            NamedGraph::Prism => "Prism",
            NamedGraph::K23 => "K23",
            NamedGraph::K33 => "K33",
            NamedGraph::K33minus => "K33minus",
            NamedGraph::Petersen => "Petersen",
            NamedGraph::Figure1 => "Figure1",
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| GenError::UnknownName(s.to_string()))
    }
}

/// The cubic 12-vertex graph with `c_ind = n/2`: two 6-vertex paths, top
/// `0..6` and bottom `6..12`, closed by the long edges `0–5` and `6–11`,
/// with crossing rungs between them.
fn figure1() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
    e.extend((6..11).map(|i| (i, i + 1)));
    e.extend([(0, 7), (1, 6), (2, 9), (3, 8), (4, 11), (5, 10), (0, 5), (6, 11)]);
    Graph::from_edges(12, e).expect("static edge list")
}

fn petersen() -> Graph {
    let mut e = Vec::with_capacity(15);
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, e).expect("static edge list")
}

pub fn named(which: NamedGraph) -> Graph {
    let kind = match which {
        NamedGraph::Petersen => return petersen(),
        NamedGraph::Figure1 => return figure1(),
        NamedGraph::K3 => BlockKind::K3,
        NamedGraph::K4 => BlockKind::K4,
        NamedGraph::D => BlockKind::D,
        NamedGraph::Dprime => BlockKind::Dprime,
        NamedGraph::Prism => BlockKind::Prism,
        NamedGraph::K23 => BlockKind::K23,
        NamedGraph::K33 => BlockKind::K33,
        NamedGraph::K33minus => BlockKind::K33minus,
    };
    kind.template().graph
}

/// Looks a graph up by name (case-insensitive).
pub fn named_by_str(name: &str) -> Result<Graph, GenError> {
    name.parse().map(named)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderFamily {
    /// `P_2 □ P_k`.
    B,
    /// One apex triangle on the first rung.
    Bprime,
    /// Apex triangles on both end rungs.
    Bdoubleprime,
}

pub fn ladder_family(family: LadderFamily, k: usize) -> Result<Graph, GenError> {
    if k < 2 {
        return Err(GenError::LadderTooShort(k));
    }
    let kind = match family {
        LadderFamily::B => BlockKind::Ladder(k),
        LadderFamily::Bprime => BlockKind::LadderPrime(k),
        LadderFamily::Bdoubleprime => BlockKind::LadderDoublePrime(k),
    };
    Ok(kind.template().graph)
}

/// Connected simple cubic graph from the pairing model, redrawing until
/// the pairing has no loops or repeated edges and is connected.
pub fn random_cubic_connected(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 4 || n % 2 == 1 {
        return Err(GenError::BadCubicOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let edges = points.chunks_exact(2).map(|p| (p[0], p[1]));
        if let Ok(g) = Graph::from_edges(n, edges) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(GenError::RejectionBudget(PAIRING_ATTEMPTS))
}

fn random_label(rng: &mut ChaCha8Rng, degree: usize) -> Label {
    let k = rng.gen_range(2..=MAX_RANDOM_RUNGS);
    let kind = match degree {
        1 => BlockKind::Dprime,
        2 => [BlockKind::D, BlockKind::K33minus, BlockKind::LadderDoublePrime(k)][rng.gen_range(0..3)],
        3 => match rng.gen_range(0..4) {
            0 => return Label::PlainVertex,
            1 => BlockKind::K3,
            2 => BlockKind::K23,
            _ => BlockKind::LadderPrime(k),
        },
        _ => BlockKind::Ladder(k),
    };
    Label::Block(kind)
}

/// Random tree of maximum degree 4 with random labels of the right
/// capacity and a random slot permutation at every tree vertex.
pub fn random_decomposition(tree_order: usize, seed: u64) -> Result<BlockDecomposition, GenError> {
    if tree_order < 2 {
        return Err(GenError::TreeTooSmall(tree_order));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; tree_order];
    let mut edges = Vec::with_capacity(tree_order - 1);
    for v in 1..tree_order {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < 4).collect();
        let u = *open.choose(&mut rng).expect("a tree always has a vertex of degree < 4");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    let tree = Graph::from_edges(tree_order, edges).expect("attachment builds a tree");
    let labels: Vec<Label> = (0..tree_order).map(|v| random_label(&mut rng, degree[v])).collect();
    let mut slot_order: Vec<Vec<usize>> = (0..tree_order)
        .map(|v| {
            let mut s: Vec<usize> = (0..degree[v]).collect();
            s.shuffle(&mut rng);
            s
        })
        .collect();
    let attachments = tree
        .edges()
        .map(|(u, v)| Attachment {
            edge: (u, v),
            slots: (
                slot_order[u].pop().expect("one slot per incident edge"),
                slot_order[v].pop().expect("one slot per incident edge"),
            ),
        })
        .collect();
    Ok(BlockDecomposition {
        tree,
        labels,
        attachments,
    })
}

/// A random connected cubic 4-chordal graph assembled from
/// [`random_decomposition`].
pub fn random_4chordal_cubic(tree_order: usize, seed: u64) -> Result<Graph, GenError> {
    Ok(assemble(&random_decomposition(tree_order, seed)?)?)
}

/// Random tree on `n` vertices by random attachment, with degrees capped
/// at `max_degree`.
pub fn random_tree(n: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let Some(&u) = open.choose(&mut rng) else {
            break;
        };
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).expect("attachment builds a forest")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{chordality, Chordality};

    #[test]
    fn named_shapes() {
        let d = named(NamedGraph::D);
        assert_eq!((d.n(), d.m()), (4, 5));
        assert_eq!((0..4).filter(|&v| d.degree(v) == 2).count(), 2);
        let p = named(NamedGraph::Petersen);
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.is_cubic());
        assert_eq!(chordality(&p), Chordality::Bounded(6));
        let f = named(NamedGraph::Figure1);
        assert_eq!((f.n(), f.m()), (12, 18));
        assert!(f.is_cubic() && f.is_connected());
        assert_eq!("figure1".parse::<NamedGraph>().unwrap(), NamedGraph::Figure1);
        assert!(named_by_str("Heawood").is_err());
    }

    #[test]
    fn ladders() {
        let c4 = ladder_family(LadderFamily::B, 2).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        let house = ladder_family(LadderFamily::Bprime, 2).unwrap();
        assert_eq!(house.n(), 5);
        assert_eq!((0..5).filter(|&v| house.degree(v) == 2).count(), 3);
        let b3pp = ladder_family(LadderFamily::Bdoubleprime, 3).unwrap();
        assert_eq!(b3pp.n(), 8);
        assert_eq!((0..8).filter(|&v| b3pp.degree(v) == 2).count(), 2);
        assert_eq!(ladder_family(LadderFamily::B, 1), Err(GenError::LadderTooShort(1)));
    }

    #[test]
    fn random_cubic() {
        let g = random_cubic_connected(4, 99).unwrap();
        assert_eq!(g.m(), 6);
        let g = random_cubic_connected(10, 1).unwrap();
        assert!(g.is_cubic() && g.is_connected());
        assert_eq!(g.cyclomatic_number(), 6);
        assert_eq!(random_cubic_connected(7, 0), Err(GenError::BadCubicOrder(7)));
        assert_eq!(random_cubic_connected(10, 5), random_cubic_connected(10, 5));
    }

    #[test]
    fn random_4chordal() {
        let g = random_4chordal_cubic(2, 3).unwrap();
        assert_eq!(g.n(), 10);
        for seed in 0..20 {
            let g = random_4chordal_cubic(6, seed).unwrap();
            assert!(g.is_cubic() && g.is_connected());
            assert!(chordality(&g).is_k_chordal(4));
        }
        assert_eq!(random_4chordal_cubic(1, 0), Err(GenError::TreeTooSmall(1)));
    }
}
