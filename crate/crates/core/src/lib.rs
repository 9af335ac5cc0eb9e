//! Graph spectra and local spectra from equitable partitions.
//!
//! An equitable (regular) partition of a graph compresses the adjacency
//! matrix `A` into a small quotient matrix `B` without losing spectral
//! information about the base cell. When the first cell is a single vertex
//! `u`, the crossed local multiplicities `m_uv(theta) = (E_theta)_{uv}` can
//! be read off `B` alone, and with them the local spectrum of `u`, per-cell
//! walk counts, and eventually the whole spectrum of the graph.
//! This crate implements that pipeline end to end and cross-validates every
//! route against a direct eigendecomposition oracle.
//!
//! Modules:
//! - [`graph`]: dense simple graphs, edge-list and graph6 parsing, BFS
//!   distances, exact walk counts.
//! - [`partition`]: equitability testing with witnesses, coarsest equitable
//!   refinement, quotient and characteristic matrices.
//! - [`spectra`]: cyclic Jacobi eigendecomposition, eigenvalue clustering,
//!   spectral projectors from eigenbases and from Lagrange interpolation.
//! - [`localspec`]: crossed multiplicity tables, local spectra,
//!   walk-regularity, the simple-eigenvalue shortcut, and full-spectrum
//!   reconstruction from quotients.
//! - [`families`]: fixture constructors and closed-form reference data.
//! - [`enumerate`]: exhaustive small connected graphs up to isomorphism.
//!
//! Floating-point kernels are generic over [`Scalar`] (`f32` or `f64`);
//! the [`Real`] alias fixes the default `f64` precision used by the type
//! aliases at this crate root. Exact structures (adjacency, walk counts,
//! quotient matrices) use checked `i64` arithmetic throughout.
//!
//! All types are immutable values after construction and all operations are
//! pure functions, so everything here is safe to share across threads.

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod localspec;
pub mod matrix;
pub mod partition;
pub mod scalar;
pub mod spectra;

pub use error::{EquitabilityWitness, Error, Result};
pub use scalar::Scalar;

/// Default floating-point precision.
pub type Real = f64;

/// Dense integer matrix with checked arithmetic.
pub type IntMat = matrix::Mat<i64>;
/// Dense matrix at the default precision.
pub type RealMat = matrix::Mat<Real>;
/// Eigendecomposition at the default precision.
pub type EigenDecomposition = spectra::EigenDecomposition<Real>;
/// Spectrum at the default precision.
pub type Spectrum = spectra::Spectrum<Real>;
/// Quotient eigenstructure at the default precision.
pub type QuotientEigen = spectra::QuotientEigen<Real>;
/// Crossed multiplicity table at the default precision.
pub type CrossedMultiplicityTable = localspec::CrossedMultiplicityTable<Real>;
/// Local spectrum at the default precision.
pub type LocalSpectrum = localspec::LocalSpectrum<Real>;

/// Default tolerance for eigenvalue deduplication.
pub const DEFAULT_TOL: Real = 1e-9;
