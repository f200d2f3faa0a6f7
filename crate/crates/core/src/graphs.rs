//! Undirected graphs, orientations and bipartitions.
//!
//! Vertices are always the dense range `0..n`. Relabelings are explicit
//! permutations `perm` with `perm[old] = new`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // normalized as (min, max)
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Repeated pairs collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self { n, edges }
    }

    /// Cycle `0-1-…-(n-1)-0`; needs `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.edges.insert((0, n - 1));
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }
}

/// `Some(k)` if every vertex has degree `k`.
///
/// The graph on zero vertices counts as 0-regular.
pub fn regularity(g: &Graph) -> Option<usize> {
    let deg = g.degrees();
    match deg.first() {
        None => Some(0),
        Some(&k) => deg.iter().all(|&d| d == k).then_some(k),
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange {
            vertex: v,
            order: n,
        })
    } else {
        Ok(())
    }
}

/// A graph together with a direction on each of its edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    graph: Graph,
    arcs: BTreeSet<(usize, usize)>,
}

impl OrientedGraph {
    /// Arcs `u → v`. Repeats collapse; an edge given in both directions is rejected.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: BTreeSet<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if arcs.contains(&(v, u)) {
                return Err(Error::AntiparallelArcs(u.min(v), u.max(v)));
            }
        }
        let graph = Graph::new(n, arcs.iter().copied())?;
        Ok(Self { graph, arcs })
    }

    /// Every edge directed from its smaller to its larger endpoint.
    pub fn default_orientation(graph: &Graph) -> Self {
        Self {
            arcs: graph.edges.clone(),
            graph: graph.clone(),
        }
    }

    /// Reads the orientation back from a skew-adjacency matrix.
    pub fn from_skew_adjacency(s: &IntMatrix) -> Result<Self> {
        s.ensure_skew_symmetric()?;
        let n = s.rows();
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                match s.get(i, j) {
                    1 => arcs.push((i, j)),
                    0 | -1 => {}
                    v => {
                        return Err(Error::InvalidSpectrum(format!(
                            "entry ({i}, {j}) = {v} is not in {{-1, 0, 1}}"
                        )))
                    }
                }
            }
        }
        Self::from_arcs(n, arcs)
    }

    pub fn underlying(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// `+1` for `u → v`, `-1` for `v → u`, `0` when not adjacent.
    pub fn direction(&self, u: usize, v: usize) -> i64 {
        if self.has_arc(u, v) {
            1
        } else if self.has_arc(v, u) {
            -1
        } else {
            0
        }
    }

    pub fn skew_adjacency(&self) -> IntMatrix {
        skew_adjacency(self)
    }

    /// Every arc reversed.
    pub fn reversed(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order())?;
        Self::from_arcs(self.order(), self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }
}

/// `M[i][j] = 1` and `M[j][i] = -1` for every arc `i → j`.
pub fn skew_adjacency(g: &OrientedGraph) -> IntMatrix {
    let n = g.order();
    let mut rows = vec![vec![0i64; n]; n];
    for (u, v) in g.arcs() {
        rows[u][v] = 1;
        rows[v][u] = -1;
    }
    IntMatrix::from_rows(&rows).expect("square by construction")
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of length {} for {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        check_vertex(p, n)?;
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::DimensionMismatch(format!(
                "{p} repeated in permutation"
            )));
        }
    }
    Ok(())
}

/// Two-sided split `(X, Y)` of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl Bipartition {
    /// Checks that `x` and `y` partition `0..n` and split every edge of `g`.
    pub fn new(g: &Graph, mut x: Vec<usize>, mut y: Vec<usize>) -> Result<Self> {
        x.sort_unstable();
        y.sort_unstable();
        let n = g.order();
        let mut side = vec![None; n];
        for (list, is_x) in [(&x, true), (&y, false)] {
            for &v in list {
                check_vertex(v, n)?;
                if side[v].replace(is_x).is_some() {
                    return Err(Error::InvalidBipartition(format!(
                        "vertex {v} listed twice"
                    )));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::InvalidBipartition(format!(
                "vertex {v} not assigned"
            )));
        }
        for (u, v) in g.edges() {
            if side[u] == side[v] {
                return Err(Error::InvalidBipartition(format!(
                    "edge {{{u}, {v}}} lies inside one side"
                )));
            }
        }
        Ok(Self { x, y })
    }

    /// `X = 0..m1`, `Y = m1..m1+m2`.
    pub fn x_first(m1: usize, m2: usize) -> Self {
        Self {
            x: (0..m1).collect(),
            y: (m1..m1 + m2).collect(),
        }
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn m1(&self) -> usize {
        self.x.len()
    }

    pub fn m2(&self) -> usize {
        self.y.len()
    }

    pub fn order(&self) -> usize {
        self.x.len() + self.y.len()
    }

    /// `true` per vertex in `X`.
    pub fn membership(&self) -> Vec<bool> {
        let mut in_x = vec![false; self.order()];
        for &v in &self.x {
            in_x[v] = true;
        }
        in_x
    }

    pub fn is_x_first(&self) -> bool {
        self.x.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `+1` for vertices of `X`, `-1` for vertices of `Y`.
    pub fn side_signs(&self) -> Vec<i64> {
        self.membership()
            .into_iter()
            .map(|in_x| if in_x { 1 } else { -1 })
            .collect()
    }

    /// The permutation that lists `X` first then `Y`, each in increasing order.
    pub fn x_first_permutation(&self) -> Vec<usize> {
        let mut perm = vec![0; self.order()];
        for (new, &old) in self.x.iter().chain(&self.y).enumerate() {
            perm[old] = new;
        }
        perm
    }
}

/// Two-colours `g` by breadth-first layering.
///
/// Components are processed in order of their smallest vertex, which lands in
/// `X`; isolated vertices therefore go to `X` as well.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let adj = g.adjacency_lists();
    let mut colour: Vec<Option<bool>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for start in 0..g.order() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(true);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &v in &adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Err(Error::NotBipartite(u.min(v), u.max(v))),
                    Some(_) => {}
                }
            }
        }
    }
    let (x, y): (Vec<usize>, Vec<usize>) = (0..g.order()).partition(|&v| colour[v] == Some(true));
    Ok(Bipartition { x, y })
}

/// Relabels `h` so that `X` occupies `0..m1` and `Y` occupies `m1..m`.
///
/// Returns the relabeled graph and `perm` with `perm[old] = new`.
pub fn relabel_x_first(h: &OrientedGraph, b: &Bipartition) -> Result<(OrientedGraph, Vec<usize>)> {
    Bipartition::new(h.underlying(), b.x.clone(), b.y.clone())?;
    let perm = b.x_first_permutation();
    Ok((h.permuted(&perm)?, perm))
}

/// Permutation matrix `P` with `P[perm[i]][i] = 1`, so `P·S·Pᵀ` relabels `S`.
pub fn permutation_matrix(perm: &[usize]) -> IntMatrix {
    let n = perm.len();
    IntMatrix::from_fn(n, n, |r, c| i64::from(perm[c] == r))
}

/// An oriented bipartite graph with a fixed bipartition.
///
/// This is the left factor of every oriented product; the side of each
/// vertex decides how product arcs are directed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    graph: OrientedGraph,
    parts: Bipartition,
}

impl Bipartite {
    /// Uses the canonical bipartition from [`bipartition`].
    pub fn new(graph: OrientedGraph) -> Result<Self> {
        let parts = bipartition(graph.underlying())?;
        Ok(Self { graph, parts })
    }

    pub fn with_parts(graph: OrientedGraph, parts: Bipartition) -> Result<Self> {
        let parts = Bipartition::new(graph.underlying(), parts.x, parts.y)?;
        Ok(Self { graph, parts })
    }

    /// Canonical bipartition, then relabeled so `X` comes first.
    pub fn x_first(graph: OrientedGraph) -> Result<Self> {
        let parts = bipartition(graph.underlying())?;
        let (graph, _) = relabel_x_first(&graph, &parts)?;
        Ok(Self {
            graph,
            parts: Bipartition::x_first(parts.m1(), parts.m2()),
        })
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    pub fn parts(&self) -> &Bipartition {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn into_graph(self) -> OrientedGraph {
        self.graph
    }

    /// Side-sign diagonal `D`; equals `I'_{m1+m2}` when the labeling is X-first.
    pub fn side_sign_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.parts.side_signs())
    }

    /// `S' = D·S`, i.e. `[[0, A], [Aᵀ, 0]]` in X-first labeling.
    pub fn symmetrized_adjacency(&self) -> IntMatrix {
        let s = self.graph.skew_adjacency();
        let signs = self.parts.side_signs();
        IntMatrix::from_fn(s.rows(), s.cols(), |i, j| signs[i] * s.get(i, j))
    }

    /// The `m1 × m2` block `A` of an X-first skew-adjacency matrix.
    pub fn biadjacency(&self) -> IntMatrix {
        let s = self.graph.skew_adjacency();
        let (x, y) = (self.parts.x(), self.parts.y());
        IntMatrix::from_fn(x.len(), y.len(), |i, j| s.get(x[i], y[j]))
    }
}
