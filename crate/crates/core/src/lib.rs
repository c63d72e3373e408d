//! Space-time solvers for the 1+1 dimensional Dirac equation.
//!
//! The equation is treated as a single boundary value problem over the whole
//! space-time slab `[x0, x_max] x [0, t_max]`: every discretization here is
//! fully implicit, producing one sparse complex system whose solution is the
//! spinor field on all of space-time at once. The initial condition enters
//! through matrix partitioning (known rows eliminated, their columns moved to
//! the right-hand side), never through time stepping.
//!
//! In natural units (hbar = c = 1) the operator applied throughout is
//!
//! ```text
//!     i s0 d/dt - i a d/dx - m,      s0 = [[1, 0], [0, -1]],
//!                                    a  = [[0, 1], [-1, 0]],
//! ```
//!
//! acting on two-component complex spinors. Seven discretizations are
//! provided: central and balanced finite differences, linear triangular
//! elements, cubic Hermite and trigonometric tensor elements with derivative
//! degrees of freedom, bilinear Lagrange tensor elements, and the same
//! bilinear elements on a 45-degree rotated (diamond) lattice aligned with
//! the characteristics. The systems are solved with the complex Krylov
//! methods in [`krylov`] and checked against the closed-form massless
//! solution and an FFT propagator oracle in [`analytic`].
//!
//! Everything numeric is generic over the scalar via [`Scalar`]; `f64` is
//! the working precision, aliased at the crate root.

pub mod analytic;
pub mod assembly;
pub mod bench;
pub mod direct;
pub mod dof;
pub mod error;
pub mod field;
pub mod grid;
pub mod krylov;
pub mod scalar;
pub mod schemes;
pub mod sparse;

pub use error::Error;
pub use scalar::Scalar;

/// Working-precision real scalar.
pub type Real = f64;
/// Working-precision complex scalar.
pub type Cplx = num_complex::Complex<f64>;
/// Space-time grid at working precision.
pub type Grid = grid::SpaceTimeGrid<f64>;
/// Spinor field at working precision.
pub type Field = field::SpinorField<f64>;
/// Sparse complex matrix at working precision.
pub type Matrix = sparse::CsrMatrix<f64>;
/// Gaussian packet at working precision.
pub type Packet = analytic::GaussianPacket<f64>;

/// Result alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, Error>;
