//! Directed-network analysis built around two notions of path on the arc set:
//! directed paths (arcs composed head-to-tail, i.e. paths in the line graph)
//! and lateral paths (arcs chained by shared sources / shared targets).
//!
//! The crate provides:
//!
//! - [`net`]: the network data model, edge-list ingestion, Erdős–Rényi
//!   generation and degree-preserving rewiring;
//! - [`arcpaths`]: line-graph and lateral transforms, arc geodesics,
//!   betweenness centralities (LBC/DBC) and efficiencies;
//! - [`evolve`]: a hill-climbing optimizer of the quality function
//!   Q(λ) = λ·Eff_D + (1−λ)·Eff_L;
//! - [`netstats`]: clustering, mean geodesic distance, small-world-ness,
//!   discrete power-law fitting, KS tests against randomized ensembles;
//! - [`presheaf`]: an exact finite presheaf engine (tensors, interfaces,
//!   interface transformations, stability, gluing) that doubles as an
//!   independent oracle for lateral connectivity.
//!
//! Heavy loops (per-arc sweeps, ensemble replicas) run on rayon when the
//! default `parallel` feature is enabled and fall back to plain sequential
//! iteration otherwise. Results are identical either way.

pub mod arcpaths;
pub mod evolve;
pub mod net;
pub mod netstats;
pub mod presheaf;

mod dsu;
mod par;

pub use net::{DirectedNetwork, RngSeed, UndirectedNetwork};
pub use par::configure_threads;
