//! Random instances for property checks and the `verify` command.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graphs::{Bipartite, Bipartition, Graph, OrientedGraph};

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("pairs are in range")
}

/// Uniformly random orientation of `g`.
pub fn random_orientation<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> OrientedGraph {
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| if rng.gen_bool(0.5) { (v, u) } else { (u, v) })
        .collect();
    OrientedGraph::from_arcs(g.order(), arcs).expect("one arc per edge")
}

/// Random bipartite graph on `m` vertices: shuffled labels, a random split,
/// and each cross pair present with probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(rng: &mut R, m: usize, p: f64) -> (Graph, Bipartition) {
    let mut labels: Vec<usize> = (0..m).collect();
    labels.shuffle(rng);
    let m1 = if m == 0 { 0 } else { rng.gen_range(0..=m) };
    let (x, y) = labels.split_at(m1);
    let mut edges = Vec::new();
    for &u in x {
        for &v in y {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(m, edges).expect("pairs are in range");
    let parts = Bipartition::new(&g, x.to_vec(), y.to_vec()).expect("edges cross the split");
    (g, parts)
}

/// Random oriented bipartite graph with its generating bipartition.
pub fn random_oriented_bipartite<R: Rng + ?Sized>(rng: &mut R, m: usize, p: f64) -> Bipartite {
    let (g, parts) = random_bipartite(rng, m, p);
    let o = random_orientation(rng, &g);
    Bipartite::with_parts(o, parts).expect("orientation keeps the underlying graph")
}
