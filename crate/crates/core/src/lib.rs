//! Spectral toolkit for uniform hypergraphs.
//!
//! * [`hypergraph`]: validated edge-list hypergraphs, constructions (Fano
//!   plane, complete and complete 2-colorable 3-graphs, expansions) and a
//!   plain-text file format.
//! * [`spectral`]: implicit adjacency and signless Laplacian tensors,
//!   Rayleigh values, and spectral radii by bracketed power iteration.
//! * [`containment`]: subgraph search, Fano-freeness and 2-colorability.
//! * [`turan`], [`split`], [`verify`]: Turán numbers, the two-block
//!   reduction for complete 2-colorable 3-graphs, and numeric checks around
//!   the signless Laplacian spectral Turán problem for the Fano plane.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the usual double-precision choice.

pub mod containment;
pub mod error;
pub mod hypergraph;
pub mod random;
pub mod report;
mod scalar;
pub mod spectral;
pub mod split;
pub mod turan;
pub mod verify;

pub use containment::{contains_subgraph, is_fano_free, two_coloring, Embedding};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, TwoColoring};
pub use scalar::Scalar;
pub use spectral::{Operator, SpectralOptions, SpectralResult, WeightVector};
pub use split::{scan_splits, two_block_q, SplitProfile, SplitScan};
pub use turan::{bn_q_bounds, fano_turan_number, CriterionParams, CriterionRow};

pub type WeightVector64 = WeightVector<f64>;
pub type WeightVector32 = WeightVector<f32>;
pub type SpectralResult64 = SpectralResult<f64>;
pub type SpectralResult32 = SpectralResult<f32>;
pub type SpectralOptions64 = SpectralOptions<f64>;
pub type SplitProfile64 = SplitProfile<f64>;
pub type SplitProfile32 = SplitProfile<f32>;
pub type SplitScan64 = SplitScan<f64>;
pub type DeletionCheck64 = verify::DeletionCheck<f64>;
pub type ExtremalityReport64 = verify::ExtremalityReport<f64>;
