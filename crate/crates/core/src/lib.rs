//! Oriented graph products with a bipartite left factor, their skew spectra,
//! and exact maximum-skew-energy certificates.
//!
//! The pieces:
//!
//! - [`graphs`]: graphs, orientations, bipartitions and X-first relabeling.
//! - [`linalg`]: exact integer matrices and a Jacobi eigensolver.
//! - [`products`]: Cartesian, Kronecker, strong and lexicographic products and
//!   their orientations, each built from arc rules and checkable against its
//!   matrix formula.
//! - [`spectra`]: skew energy and closed-form spectra of the Kronecker and
//!   strong orientations.
//! - [`maxenergy`]: `SᵀS = ΔI` certificates, seed orientations and iterated
//!   families.
//! - [`search`]: brute force over all orientations of a small graph.
//!
//! ```
//! use skewspec::graphs::Bipartite;
//! use skewspec::maxenergy::{certify_graph, seed, Seed};
//! use skewspec::products::orient_kronecker;
//!
//! let c4 = Bipartite::x_first(seed(Seed::C4)?)?;
//! let k4 = seed(Seed::K4)?;
//! let product = orient_kronecker(&c4, &k4);
//! let cert = certify_graph(&product)?;
//! assert!(cert.holds);
//! assert_eq!((cert.order, cert.degree), (16, 6));
//! # Ok::<(), skewspec::Error>(())
//! ```

pub mod error;
pub mod graphs;
pub mod io;
pub mod linalg;
pub mod maxenergy;
pub mod products;
pub mod random;
pub mod search;
pub mod spectra;

pub use error::{Error, Result};
