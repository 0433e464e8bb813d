//! Exact resistance-distance analytics for small undirected graphs.
//!
//! Every edge is a unit resistor. The crate computes resistance matrices,
//! resistive eccentricities, the Kirchhoff index and resistance curvature
//! (the solution `kappa` of `R kappa = 1`) in exact rational arithmetic, and
//! checks the extremal results for these quantities by exhaustive labeled
//! enumeration:
//!
//! * resistance-regular graphs on `n >= 3` vertices are 2-connected;
//! * over 2-connected graphs, `Ecc(u) <= (n^2 - 1) / 6` and
//!   `Kf <= (n^3 - n) / 12`, with equality only for the cycle;
//! * constant curvature satisfies `6 / (n^2 - 1) <= K <= n / (2n - 2)`,
//!   with the cycle at the bottom and the complete graph at the top.
//!
//! ```
//! use ohmcurve::graph::Graph;
//! use ohmcurve::resistance::analyze;
//!
//! let report = analyze(&Graph::cycle(6).unwrap()).unwrap();
//! assert_eq!(report.constant_curvature.unwrap().to_string(), "6/35");
//! ```

pub mod blocks;
pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod numerics;
pub mod parallel;
pub mod resistance;
pub mod verify;

pub use blocks::{block_cut_decomposition, BlockDecomposition};
pub use graph::{parse_edge_list, parse_graph6, Graph};
pub use numerics::{ExactNumber, Matrix};
pub use resistance::{analyze, ResistanceReport};
pub use verify::{VerificationRecord, VerifyOptions};
