//! Cartesian, Kronecker, strong and lexicographic products, and the
//! orientations of each with a bipartite left factor.
//!
//! Product vertex `(u, v)` with `u ∈ V(H)`, `v ∈ V(G)` is stored at flat index
//! `u·n + v`, the same order the Kronecker product of matrices uses. Each
//! oriented product is built from its arc rules and cross-checked against the
//! corresponding matrix formula in debug builds.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphs::{Bipartite, Bipartition, Graph, OrientedGraph};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Kronecker,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Kronecker,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Kronecker => "kronecker",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_owned()))
    }
}

/// A vertex of `V(H) × V(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub h_index: usize,
    pub g_index: usize,
}

impl ProductVertex {
    pub fn flat(self, n: usize) -> usize {
        self.h_index * n + self.g_index
    }

    pub fn from_flat(index: usize, n: usize) -> Self {
        Self {
            h_index: index / n,
            g_index: index % n,
        }
    }
}

#[inline]
fn flat(u: usize, v: usize, n: usize) -> usize {
    u * n + v
}

/// Unordered product edges `((u1, v1), (u2, v2))` in flat indices.
fn cartesian_edges(h: &Graph, g: &Graph) -> Vec<(usize, usize)> {
    let (m, n) = (h.order(), g.order());
    let mut edges = Vec::with_capacity(m * g.edge_count() + n * h.edge_count());
    for u in 0..m {
        for (v1, v2) in g.edges() {
            edges.push((flat(u, v1, n), flat(u, v2, n)));
        }
    }
    for (u1, u2) in h.edges() {
        for v in 0..n {
            edges.push((flat(u1, v, n), flat(u2, v, n)));
        }
    }
    edges
}

fn kronecker_edges(h: &Graph, g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * h.edge_count() * g.edge_count());
    for (u1, u2) in h.edges() {
        for (v1, v2) in g.edges() {
            edges.push((flat(u1, v1, n), flat(u2, v2, n)));
            edges.push((flat(u1, v2, n), flat(u2, v1, n)));
        }
    }
    edges
}

fn lexicographic_edges(h: &Graph, g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut edges = Vec::new();
    for u in 0..h.order() {
        for (v1, v2) in g.edges() {
            edges.push((flat(u, v1, n), flat(u, v2, n)));
        }
    }
    for (u1, u2) in h.edges() {
        for v1 in 0..n {
            for v2 in 0..n {
                edges.push((flat(u1, v1, n), flat(u2, v2, n)));
            }
        }
    }
    edges
}

/// The undirected product `H ∘ G` for the given kind.
pub fn product_graph(h: &Graph, g: &Graph, kind: ProductKind) -> Graph {
    let order = h.order() * g.order();
    let edges = match kind {
        ProductKind::Cartesian => cartesian_edges(h, g),
        ProductKind::Kronecker => kronecker_edges(h, g),
        ProductKind::Strong => {
            let cart = cartesian_edges(h, g);
            let kron = kronecker_edges(h, g);
            let cart_set: std::collections::BTreeSet<_> =
                cart.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            assert!(
                kron.iter()
                    .all(|&(a, b)| !cart_set.contains(&(a.min(b), a.max(b)))),
                "Cartesian and Kronecker edge sets overlap"
            );
            cart.into_iter().chain(kron).collect()
        }
        ProductKind::Lexicographic => lexicographic_edges(h, g),
    };
    Graph::new(order, edges).expect("product edges are in range and loop-free")
}

/// Orients one Kronecker edge `{(u1, v1), (u2, v2)}` with `u1 ∈ X`.
///
/// The arc runs from the `X` end when the `H` and `G` arcs agree in direction
/// (both forwards or both backwards), and from the `Y` end otherwise.
fn kronecker_arc(
    h: &OrientedGraph,
    g: &OrientedGraph,
    in_x: &[bool],
    (u1, v1): (usize, usize),
    (u2, v2): (usize, usize),
    n: usize,
) -> (usize, usize) {
    let (x_end, y_end) = if in_x[u1] {
        ((u1, v1), (u2, v2))
    } else {
        ((u2, v2), (u1, v1))
    };
    let ((a, va), (b, vb)) = (x_end, y_end);
    let forward = (h.has_arc(a, b) && g.has_arc(va, vb)) || (h.has_arc(b, a) && g.has_arc(vb, va));
    let (from, to) = if forward {
        (x_end, y_end)
    } else {
        (y_end, x_end)
    };
    (flat(from.0, from.1, n), flat(to.0, to.1, n))
}

fn kronecker_arcs(h: &Bipartite, g: &OrientedGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    let in_x = h.parts().membership();
    let hg = h.graph();
    let mut arcs = Vec::with_capacity(2 * hg.arc_count() * g.arc_count());
    for (u1, u2) in hg.underlying().edges() {
        for (v1, v2) in g.underlying().edges() {
            arcs.push(kronecker_arc(hg, g, &in_x, (u1, v1), (u2, v2), n));
            arcs.push(kronecker_arc(hg, g, &in_x, (u1, v2), (u2, v1), n));
        }
    }
    arcs
}

/// Cartesian arcs: inside an `X`-fibre follow `G`, inside a `Y`-fibre
/// reverse `G`, and between fibres follow `H`.
fn cartesian_arcs(h: &Bipartite, g: &OrientedGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    let in_x = h.parts().membership();
    let mut arcs = Vec::with_capacity(h.order() * g.arc_count() + n * h.graph().arc_count());
    for (u, &x_side) in in_x.iter().enumerate() {
        for (v1, v2) in g.arcs() {
            if x_side {
                arcs.push((flat(u, v1, n), flat(u, v2, n)));
            } else {
                arcs.push((flat(u, v2, n), flat(u, v1, n)));
            }
        }
    }
    for (u1, u2) in h.graph().arcs() {
        for v in 0..n {
            arcs.push((flat(u1, v, n), flat(u2, v, n)));
        }
    }
    arcs
}

fn disjoint_union(order: usize, a: Vec<(usize, usize)>, b: Vec<(usize, usize)>) -> OrientedGraph {
    let expected = a.len() + b.len();
    let g = OrientedGraph::from_arcs(order, a.into_iter().chain(b))
        .expect("constituent arc sets are loop-free and edge-disjoint");
    assert_eq!(g.arc_count(), expected, "constituent arc sets overlap");
    g
}

/// `S'₁ ⊗ S₂`.
pub fn kronecker_matrix(h: &Bipartite, g: &OrientedGraph) -> Result<IntMatrix> {
    h.symmetrized_adjacency().kronecker(&g.skew_adjacency())
}

/// `I' ⊗ S₂ + S₁ ⊗ I_n`, with `I'` the side-sign diagonal of `H`.
pub fn cartesian_matrix(h: &Bipartite, g: &OrientedGraph) -> Result<IntMatrix> {
    let left = h.side_sign_matrix().kronecker(&g.skew_adjacency())?;
    let right = h
        .graph()
        .skew_adjacency()
        .kronecker(&IntMatrix::identity(g.order()))?;
    left.add(&right)
}

/// `S̄ + S'₁ ⊗ S₂`.
pub fn strong_matrix(h: &Bipartite, g: &OrientedGraph) -> Result<IntMatrix> {
    cartesian_matrix(h, g)?.add(&kronecker_matrix(h, g)?)
}

/// `S̄ + S'₁ ⊗ S₃` where `S₃` is the skew-adjacency of the oriented `K_n`.
pub fn lexicographic_matrix(
    h: &Bipartite,
    g: &OrientedGraph,
    kn: &OrientedGraph,
) -> Result<IntMatrix> {
    check_complete(g, kn)?;
    cartesian_matrix(h, g)?.add(&kronecker_matrix(h, kn)?)
}

fn check_complete(g: &OrientedGraph, kn: &OrientedGraph) -> Result<()> {
    if kn.order() != g.order() || !kn.underlying().is_complete() {
        return Err(Error::WrongCompleteOrder {
            expected: g.order(),
        });
    }
    Ok(())
}

macro_rules! debug_cross_check {
    ($graph:expr, $matrix:expr) => {
        debug_assert_eq!(
            $graph.skew_adjacency(),
            $matrix.expect("matrix formula"),
            "arc rules disagree with the matrix formula"
        );
    };
}

/// Oriented Kronecker product `(H^τ ⊗ G^σ)^o`.
pub fn orient_kronecker(h: &Bipartite, g: &OrientedGraph) -> OrientedGraph {
    let out = OrientedGraph::from_arcs(h.order() * g.order(), kronecker_arcs(h, g))
        .expect("Kronecker arcs are loop-free and each edge is oriented once");
    debug_cross_check!(out, kronecker_matrix(h, g));
    out
}

/// Bipartition `X × V(G)` of `H ⊗ G`, listed in flat order.
pub fn inherited_bipartition(h: &Bipartite, n: usize) -> Bipartition {
    let in_x = h.parts().membership();
    let (x, y): (Vec<usize>, Vec<usize>) = (0..h.order() * n).partition(|&i| in_x[i / n]);
    Bipartition::new(&Graph::empty(h.order() * n), x, y).expect("partition of the vertex range")
}

/// [`orient_kronecker`] keeping the inherited bipartition, ready to be the
/// left factor of a further product.
pub fn orient_kronecker_bipartite(h: &Bipartite, g: &OrientedGraph) -> Bipartite {
    let product = orient_kronecker(h, g);
    let parts = inherited_bipartition(h, g.order());
    Bipartite::with_parts(product, parts).expect("X × V(G) splits every Kronecker edge")
}

/// Oriented Cartesian product `(H^τ □ G^σ)^o`.
pub fn orient_cartesian(h: &Bipartite, g: &OrientedGraph) -> OrientedGraph {
    let out = OrientedGraph::from_arcs(h.order() * g.order(), cartesian_arcs(h, g))
        .expect("Cartesian arcs are loop-free and each edge is oriented once");
    debug_cross_check!(out, cartesian_matrix(h, g));
    out
}

/// Oriented strong product: Cartesian arcs plus Kronecker arcs.
pub fn orient_strong(h: &Bipartite, g: &OrientedGraph) -> OrientedGraph {
    let out = disjoint_union(
        h.order() * g.order(),
        cartesian_arcs(h, g),
        kronecker_arcs(h, g),
    );
    debug_cross_check!(out, strong_matrix(h, g));
    out
}

/// Oriented lexicographic product `H[G]^o`: the Cartesian arcs of `H □ G`
/// plus the Kronecker arcs of `H ⊗ K_n` for the oriented complete graph `kn`.
pub fn orient_lexicographic(
    h: &Bipartite,
    g: &OrientedGraph,
    kn: &OrientedGraph,
) -> Result<OrientedGraph> {
    check_complete(g, kn)?;
    let out = disjoint_union(
        h.order() * g.order(),
        cartesian_arcs(h, g),
        kronecker_arcs(h, kn),
    );
    debug_cross_check!(out, lexicographic_matrix(h, g, kn));
    Ok(out)
}

/// Dispatch on [`ProductKind`]; `kn` is required for the lexicographic kind.
pub fn orient_product(
    kind: ProductKind,
    h: &Bipartite,
    g: &OrientedGraph,
    kn: Option<&OrientedGraph>,
) -> Result<OrientedGraph> {
    Ok(match kind {
        ProductKind::Cartesian => orient_cartesian(h, g),
        ProductKind::Kronecker => orient_kronecker(h, g),
        ProductKind::Strong => orient_strong(h, g),
        ProductKind::Lexicographic => {
            let kn = kn.ok_or(Error::WrongCompleteOrder {
                expected: g.order(),
            })?;
            orient_lexicographic(h, g, kn)?
        }
    })
}

/// The matrix-formula counterpart of [`orient_product`].
pub fn product_matrix(
    kind: ProductKind,
    h: &Bipartite,
    g: &OrientedGraph,
    kn: Option<&OrientedGraph>,
) -> Result<IntMatrix> {
    match kind {
        ProductKind::Cartesian => cartesian_matrix(h, g),
        ProductKind::Kronecker => kronecker_matrix(h, g),
        ProductKind::Strong => strong_matrix(h, g),
        ProductKind::Lexicographic => {
            let kn = kn.ok_or(Error::WrongCompleteOrder {
                expected: g.order(),
            })?;
            lexicographic_matrix(h, g, kn)
        }
    }
}
