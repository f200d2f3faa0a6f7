//! Exhaustive enumeration of the orientations of a small graph.
//!
//! Orientation code `bits` refers to the graph's edges in lexicographic
//! order; bit `e` set reverses edge `e` from its default `min → max`
//! direction. Codes are visited by binary counting.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{regularity, Graph, OrientedGraph};
use crate::spectra::skew_energy;

/// Edge guard for [`enumerate_max_energy`].
pub const MAX_SEARCH_EDGES: usize = 24;
/// Edge guard for [`energy_histogram`].
pub const MAX_HISTOGRAM_EDGES: usize = 20;
/// Histogram bucket width.
pub const HISTOGRAM_RESOLUTION: f64 = 1e-6;

/// Orientation of `g` encoded by `code`.
pub fn orientation_from_code(g: &Graph, code: u64) -> OrientedGraph {
    let arcs = g
        .edges()
        .enumerate()
        .map(|(e, (u, v))| if code >> e & 1 == 1 { (v, u) } else { (u, v) });
    OrientedGraph::from_arcs(g.order(), arcs).expect("one arc per edge")
}

/// Inverse of [`orientation_from_code`].
pub fn code_of(o: &OrientedGraph) -> u64 {
    o.underlying()
        .edges()
        .enumerate()
        .filter(|&(_, (u, v))| o.has_arc(v, u))
        .fold(0, |acc, (e, _)| acc | 1 << e)
}

fn check_edges(g: &Graph, limit: usize) -> Result<()> {
    if g.edge_count() > limit {
        return Err(Error::SizeLimit {
            what: "edge count",
            actual: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// One line of search output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchRecord {
    pub code: u64,
    pub energy: f64,
    pub certified: bool,
}

/// All codes whose orientation satisfies `SᵀS = kI` for the regular degree `k`,
/// in increasing order.
pub fn enumerate_max_energy(g: &Graph) -> Result<Vec<u64>> {
    let k = regularity(g).ok_or(Error::NotRegular)?;
    check_edges(g, MAX_SEARCH_EDGES)?;
    let k = k as i64;
    let total = 1u64 << g.edge_count();
    let mut hits: Vec<u64> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let s = orientation_from_code(g, code).skew_adjacency();
            match s.gram_scalar_violation(k) {
                Ok(None) => Some(Ok(code)),
                Ok(Some(_)) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<Result<_>>()?;
    hits.sort_unstable();
    Ok(hits)
}

/// [`enumerate_max_energy`] with the energy of each certified orientation.
pub fn max_energy_records(g: &Graph) -> Result<Vec<SearchRecord>> {
    enumerate_max_energy(g)?
        .into_par_iter()
        .map(|code| {
            let energy = skew_energy(&orientation_from_code(g, code).skew_adjacency())?;
            Ok(SearchRecord {
                code,
                energy,
                certified: true,
            })
        })
        .collect()
}

/// Skew energies of every orientation, bucketed at [`HISTOGRAM_RESOLUTION`]
/// and sorted by descending energy.
pub fn energy_histogram(g: &Graph) -> Result<Vec<(f64, usize)>> {
    check_edges(g, MAX_HISTOGRAM_EDGES)?;
    let total = 1u64 << g.edge_count();
    let mut buckets: Vec<i64> = (0..total)
        .into_par_iter()
        .map(|code| {
            let e = skew_energy(&orientation_from_code(g, code).skew_adjacency())?;
            Ok((e / HISTOGRAM_RESOLUTION).round() as i64)
        })
        .collect::<Result<_>>()?;
    buckets.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut last = None;
    for key in buckets {
        if last == Some(key) {
            out.last_mut().expect("bucket opened").1 += 1;
        } else {
            out.push((key as f64 * HISTOGRAM_RESOLUTION, 1));
            last = Some(key);
        }
    }
    Ok(out)
}
