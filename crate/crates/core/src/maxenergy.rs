//! Maximum skew energy: exact certificates, seed orientations and the
//! iterated product families.
//!
//! An oriented graph of order `n` and maximum degree `Δ` has skew energy at
//! most `n√Δ`, with equality exactly when `SᵀS = ΔI`. The certificate is that
//! integer identity, checked without tolerance.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{regularity, Bipartite, Graph, OrientedGraph};
use crate::linalg::IntMatrix;
use crate::products::{
    orient_cartesian, orient_kronecker_bipartite, orient_lexicographic, orient_strong,
};
use crate::search::orientation_from_code;
use crate::spectra::skew_energy;

/// Absolute tolerance when comparing energies with `n√Δ`.
pub const ENERGY_TOL: f64 = 1e-9;
/// Default order guard for constructions.
pub const DEFAULT_SIZE_LIMIT: usize = 4096;
/// Largest `n` for which [`find_commuting_kn`] enumerates orientations of `K_n`.
pub const COMMUTING_SEARCH_MAX_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// `SᵀS = ΔI` holds entrywise.
    Verified,
    /// First entry of `SᵀS` (row-major) that differs from `ΔI`.
    Violation { row: usize, col: usize, value: i64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Verified => f.write_str("S^T S = Delta I verified exactly"),
            Witness::Violation { row, col, value } => {
                write!(f, "(S^T S)[{row}][{col}] = {value}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxEnergyCertificate {
    pub holds: bool,
    pub order: usize,
    pub degree: usize,
    pub energy: f64,
    pub witness: Witness,
}

impl MaxEnergyCertificate {
    /// The bound `n√Δ`.
    pub fn bound(&self) -> f64 {
        self.order as f64 * (self.degree as f64).sqrt()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "holds": self.holds,
            "order": self.order,
            "degree": self.degree,
            "energy": self.energy,
            "witness": self.witness.to_string(),
        })
    }
}

/// Checks `SᵀS = Δ·I` in exact integers and records the skew energy.
///
/// When the identity holds, the computed energy must equal `n√Δ` within
/// [`ENERGY_TOL`]; a mismatch is reported as [`Error::CertificateFailed`].
pub fn certify_max_energy(s: &IntMatrix, delta: usize) -> Result<MaxEnergyCertificate> {
    s.ensure_skew_symmetric()?;
    let value = i64::try_from(delta).map_err(|_| Error::Overflow)?;
    let witness = match s.gram_scalar_violation(value)? {
        None => Witness::Verified,
        Some((row, col, value)) => Witness::Violation { row, col, value },
    };
    let cert = MaxEnergyCertificate {
        holds: witness == Witness::Verified,
        order: s.rows(),
        degree: delta,
        energy: skew_energy(s)?,
        witness,
    };
    if cert.holds && (cert.energy - cert.bound()).abs() >= ENERGY_TOL {
        return Err(Error::CertificateFailed(format!(
            "identity holds but energy {} differs from {}",
            cert.energy,
            cert.bound()
        )));
    }
    Ok(cert)
}

/// Certificate of a graph against its own maximum degree.
pub fn certify_graph(g: &OrientedGraph) -> Result<MaxEnergyCertificate> {
    certify_max_energy(&g.skew_adjacency(), g.underlying().max_degree())
}

fn require_certified(g: &OrientedGraph, what: &str) -> Result<MaxEnergyCertificate> {
    let cert = certify_graph(g)?;
    if !cert.holds {
        return Err(Error::CertificateFailed(format!(
            "{what}: {}",
            cert.witness
        )));
    }
    Ok(cert)
}

/// Canonical maximum-energy orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seed {
    P2,
    C4,
    K4,
    K44,
    Hypercube(usize),
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seed::P2 => f.write_str("p2"),
            Seed::C4 => f.write_str("c4"),
            Seed::K4 => f.write_str("k4"),
            Seed::K44 => f.write_str("k44"),
            Seed::Hypercube(d) => write!(f, "q{d}"),
        }
    }
}

impl FromStr for Seed {
    type Err = Error;

    /// `p2`, `c4`, `k4`, `k44`, and `q<d>` or `hypercube:<d>` for `d ≥ 1`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_owned());
        Ok(match s {
            "p2" => Seed::P2,
            "c4" => Seed::C4,
            "k4" => Seed::K4,
            "k44" => Seed::K44,
            _ => {
                let d = s
                    .strip_prefix("hypercube:")
                    .or_else(|| s.strip_prefix('q'))
                    .ok_or_else(unknown)?
                    .parse::<usize>()
                    .map_err(|_| unknown())?;
                if d == 0 {
                    return Err(unknown());
                }
                Seed::Hypercube(d)
            }
        })
    }
}

const K4_SKEW: [[i64; 4]; 4] = [[0, 1, 1, 1], [-1, 0, -1, 1], [-1, 1, 0, -1], [-1, -1, 1, 0]];

/// Lexicographically smallest 4×4 ±1 matrix with orthogonal rows (−1 < +1, row-major).
pub const HADAMARD_4: [[i64; 4]; 4] = [
    [-1, -1, -1, -1],
    [-1, -1, 1, 1],
    [-1, 1, -1, 1],
    [-1, 1, 1, -1],
];

fn build_seed(seed: Seed) -> Result<OrientedGraph> {
    match seed {
        Seed::P2 => OrientedGraph::from_arcs(2, [(0, 1)]),
        Seed::C4 => OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
        Seed::K4 => OrientedGraph::from_skew_adjacency(&IntMatrix::from_rows(&K4_SKEW)?),
        Seed::K44 => {
            let mut arcs = Vec::with_capacity(16);
            for (i, row) in HADAMARD_4.iter().enumerate() {
                for (j, &sign) in row.iter().enumerate() {
                    arcs.push(if sign > 0 { (i, 4 + j) } else { (4 + j, i) });
                }
            }
            OrientedGraph::from_arcs(8, arcs)
        }
        Seed::Hypercube(0) => Err(Error::UnknownName("q0".into())),
        Seed::Hypercube(d) => {
            let p2 = Bipartite::x_first(build_seed(Seed::P2)?)?;
            let mut q = build_seed(Seed::P2)?;
            for _ in 1..d {
                q = orient_cartesian(&p2, &q);
            }
            Ok(q)
        }
    }
}

/// Builds a seed orientation and certifies it before returning.
pub fn seed(seed: Seed) -> Result<OrientedGraph> {
    let g = build_seed(seed)?;
    require_certified(&g, &format!("seed {seed}"))?;
    Ok(g)
}

/// Left fold of the oriented Kronecker product over `gs`, each step reusing
/// the inherited bipartition so the result is again bipartite.
///
/// Every input and the final product are certified; the final degree is
/// `k·Π lᵢ`.
pub fn iterate_kronecker(h: &Bipartite, gs: &[OrientedGraph]) -> Result<Bipartite> {
    let mut degree = require_regular_certified(h.graph(), "left factor")?;
    for (i, g) in gs.iter().enumerate() {
        degree *= require_regular_certified(g, &format!("factor {i}"))?;
    }
    let mut acc = h.clone();
    for g in gs {
        acc = orient_kronecker_bipartite(&acc, g);
    }
    let cert = certify_max_energy(&acc.graph().skew_adjacency(), degree)?;
    if !cert.holds {
        return Err(Error::CertificateFailed(format!(
            "iterated product: {}",
            cert.witness
        )));
    }
    Ok(acc)
}

fn require_regular_certified(g: &OrientedGraph, what: &str) -> Result<usize> {
    let k = regularity(g.underlying()).ok_or(Error::NotRegular)?;
    require_certified(g, what)?;
    Ok(k)
}

/// First orientation of `K_n` (in increasing orientation-code order) whose
/// skew-adjacency `S₃` satisfies `S₃ᵀS₃ = (n−1)I` and commutes with `S(g)`.
pub fn find_commuting_kn(g: &OrientedGraph) -> Result<Option<OrientedGraph>> {
    let n = g.order();
    if n > COMMUTING_SEARCH_MAX_N {
        return Err(Error::SizeLimit {
            what: "K_n order for commuting search",
            actual: n,
            limit: COMMUTING_SEARCH_MAX_N,
        });
    }
    let s2 = g.skew_adjacency();
    let kn = Graph::complete(n);
    let degree = n.saturating_sub(1) as i64;
    for code in 0..1u64 << kn.edge_count() {
        let candidate = orientation_from_code(&kn, code);
        let s3 = candidate.skew_adjacency();
        if s3.gram_scalar_violation(degree)?.is_some() {
            continue;
        }
        if s2.matmul(&s3)? == s3.matmul(&s2)? {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// The named iterated families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    /// `G₀ = K₄`, `G_r = C₄ □ G_{r−1}`.
    CartesianC4K4,
    /// `G₀ = K₄`, `G_r = C₄ ⊗ G_{r−1}`.
    KronC4Iter,
    /// `C₄ ⊗ K₄ ⊗ … ⊗ K₄` with `r` copies of `K₄`; `r = 0` is `C₄` itself.
    KronK4Iter,
    /// `G₀ = K₄`, `G_r = C₄ ∗ G_{r−1}`.
    StrongC4Iter,
    /// `Q_{r+1}[C₄]` oriented with a commuting `K₄`; `r = 0` is `P₂[C₄]`.
    LexP2,
}

impl FamilyName {
    pub const ALL: [FamilyName; 5] = [
        FamilyName::CartesianC4K4,
        FamilyName::KronC4Iter,
        FamilyName::KronK4Iter,
        FamilyName::StrongC4Iter,
        FamilyName::LexP2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyName::CartesianC4K4 => "cartesian_c4k4",
            FamilyName::KronC4Iter => "kron_c4_iter",
            FamilyName::KronK4Iter => "kron_k4_iter",
            FamilyName::StrongC4Iter => "strong_c4_iter",
            FamilyName::LexP2 => "lex_p2",
        }
    }

    /// Closed-form `(order, degree)` at depth `r`.
    pub fn expected(self, r: u32) -> Result<(usize, usize)> {
        let pow = |base: usize, e: u32| base.checked_pow(e).ok_or(Error::Overflow);
        let order = pow(4, r + 1)?;
        Ok(match self {
            FamilyName::CartesianC4K4 => (order, 2 * r as usize + 3),
            FamilyName::KronC4Iter => (order, 3 * pow(2, r)?),
            FamilyName::KronK4Iter => (order, 2 * pow(3, r)?),
            FamilyName::StrongC4Iter => (order, 4 * pow(3, r)? - 1),
            // H = Q_{r+1}: m = 2^{r+1}, k = r + 1; order 4m, degree 4k + 2
            FamilyName::LexP2 => (4 * pow(2, r + 1)?, 4 * (r as usize + 1) + 2),
        })
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub r: u32,
}

#[derive(Debug, Clone)]
pub struct FamilyBuild {
    pub graph: OrientedGraph,
    pub expected_order: usize,
    pub expected_degree: usize,
    pub expected_energy: f64,
    pub certificate: MaxEnergyCertificate,
}

/// Constructs a family member and certifies it against the closed-form degree.
pub fn build_family(family: FamilySpec, size_limit: usize) -> Result<FamilyBuild> {
    let (expected_order, expected_degree) = family.name.expected(family.r)?;
    if expected_order > size_limit {
        return Err(Error::SizeLimit {
            what: "family order",
            actual: expected_order,
            limit: size_limit,
        });
    }
    let c4 = Bipartite::x_first(seed(Seed::C4)?)?;
    let k4 = seed(Seed::K4)?;
    let graph = match family.name {
        FamilyName::CartesianC4K4 => (0..family.r).fold(k4, |g, _| orient_cartesian(&c4, &g)),
        FamilyName::KronC4Iter => {
            (0..family.r).fold(k4, |g, _| orient_kronecker_bipartite(&c4, &g).into_graph())
        }
        FamilyName::KronK4Iter => {
            let factors = vec![k4; family.r as usize];
            iterate_kronecker(&c4, &factors)?.into_graph()
        }
        FamilyName::StrongC4Iter => (0..family.r).fold(k4, |g, _| orient_strong(&c4, &g)),
        FamilyName::LexP2 => {
            let h = Bipartite::x_first(seed(Seed::Hypercube(family.r as usize + 1))?)?;
            let g = seed(Seed::C4)?;
            let kn = find_commuting_kn(&g)?.ok_or_else(|| {
                Error::CertificateFailed("no commuting K4 orientation for C4".into())
            })?;
            orient_lexicographic(&h, &g, &kn)?
        }
    };
    let certificate = certify_max_energy(&graph.skew_adjacency(), expected_degree)?;
    if !certificate.holds {
        return Err(Error::CertificateFailed(format!(
            "{} r={}: {}",
            family.name, family.r, certificate.witness
        )));
    }
    Ok(FamilyBuild {
        graph,
        expected_order,
        expected_degree,
        expected_energy: expected_order as f64 * (expected_degree as f64).sqrt(),
        certificate,
    })
}
