//! Error taxonomy shared by grid construction, assembly, solvers and the
//! benchmark driver.

use thiserror::Error;

/// Everything that can go wrong short of a panic.
#[derive(Debug, Error)]
pub enum Error {
    /// Grid construction rejected its inputs (degenerate extents, too few
    /// cells, rotation outside [0, 45] degrees).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Physical or experiment configuration rejected (negative mass,
    /// unknown scheme tag, incompatible scheme/rotation pair, bad solver
    /// settings, malformed config file).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A basis was evaluated outside its reference cell.
    #[error("reference coordinate {0} outside [0, 1]")]
    OutOfReference(f64),

    /// The spectral oracle needs a uniform grid with a power-of-two sample
    /// count.
    #[error("spectral oracle: {0}")]
    SpectralGrid(String),

    /// Krylov iteration hit an exact breakdown (zero inner product) before
    /// reaching the tolerance.
    #[error("solver breakdown after {iterations} iterations, residual {residual:.3e}")]
    Breakdown { iterations: f64, residual: f64 },

    /// Mismatched operand shapes in linear algebra.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A direct factorization met a pivot too small to divide by.
    #[error("matrix is numerically singular at pivot row {row}")]
    Singular { row: usize },

    /// An experiment stage failed; wraps the underlying error with the
    /// stage name so driver output says where the pipeline stopped.
    #[error("{stage}: {source}")]
    Stage { stage: &'static str, source: Box<Error> },

    /// Filesystem or formatting failure while writing reports.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
