//! reslab — a numerical laboratory for quantum resonances of
//! one-dimensional discrete Schrödinger operators.
//!
//! The operator under study is H_L = -Δ + V·1⟦0,L⟧ on ℓ²(ℕ) with a
//! Dirichlet condition at 0, where V is periodic or random. Its
//! resolvent continues meromorphically through the continuous
//! spectrum [-2, 2]; the poles of that continuation (the resonances)
//! are encoded as roots of a characteristic polynomial in the
//! uniformizing variable λ, where z = λ + 1/λ maps the unit disk to
//! the cut plane.
//!
//! Pipeline:
//!
//! 1. [`model`] — potentials, reproducible disorder, transfer matrices;
//! 2. [`charpoly`] — symbolic Laurent recursion producing the
//!    resonance polynomial at configurable precision;
//! 3. [`rootfind`] — Aberth–Ehrlich simultaneous root finding;
//! 4. [`resonances`] — sheet classification, counting, resonance-free
//!    region scans;
//! 5. [`spectral`] — density of states, Lyapunov exponent, Thouless
//!    formula, the function Ξ and its zeros;
//! 6. [`pointprocess`] — rescaled resonance clouds (periodic curve
//!    collapse, random-case 2D point processes);
//! 7. [`stats`] — Poisson/independence goodness-of-fit machinery;
//! 8. [`verify`] — the acceptance battery driven by `reslab verify`.

pub mod charpoly;
pub mod cli;
pub mod model;
pub mod num;
pub mod pointprocess;
pub mod resonances;
pub mod rootfind;
pub mod runs;
pub mod spectral;
pub mod stats;
pub mod verify;

pub use num::{C64, MpComplex, MpFloat};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "precision underflow: coefficient dynamic range of {range_bits} bits exceeds the \
         working precision of {precision_bits} bits; rebuild with --precision-bits {suggested} \
         or higher"
    )]
    PrecisionUnderflow {
        range_bits: u32,
        precision_bits: u32,
        suggested: u32,
    },

    #[error(
        "root finder did not converge within {iterations} sweeps \
         (worst relative residual {worst_residual:.3e}); partial results retained"
    )]
    NonConvergence {
        iterations: usize,
        worst_residual: f64,
        partial: rootfind::RootSet,
    },

    #[error("Newton polishing diverged from {start}")]
    PolishDiverged { start: C64 },

    #[error("band edge degeneracy: discriminant touches ±2 tangentially near E = {at}")]
    ClosedGap { at: f64 },

    #[error("energy {e} is within {dist:.2e} of a band edge; dN is not smooth there")]
    NearBandEdge { e: f64, dist: f64 },

    #[error("quadrature point too close to the real axis: |Im z| = {im_abs:.2e} < 1e-8")]
    TooCloseToAxis { im_abs: f64 },

    #[error("density of states at E0 = {e0} is {n0:.4}, below the positivity floor {floor}")]
    DensityFloor { e0: f64, n0: f64, floor: f64 },

    #[error("scale sequence rejected: {0}")]
    ScaleGuard(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("boxes outside the populated window: {0}")]
    BoxOutsideWindow(String),

    #[error("mismatched sample keys between ensembles: {0}")]
    MismatchedSamples(String),

    #[error("resume conflict: {0}")]
    ResumeConflict(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
