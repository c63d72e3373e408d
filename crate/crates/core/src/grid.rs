//! Space-time lattice geometry, including rotated (diamond) lattices.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Physical constants and the mass parameter.
///
/// The crate works in natural units; `hbar` and `c` are stored for clarity
/// but fixed at one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams<S: Scalar> {
    pub hbar: S,
    pub c: S,
    /// Rest energy `m c^2` in natural units. Zero for the massless runs.
    pub mass: S,
}

impl<S: Scalar> PhysParams<S> {
    pub fn new(mass: S) -> Result<Self> {
        if !(mass >= S::zero()) || !mass.is_finite() {
            return Err(Error::InvalidConfig(format!("mass must be finite and >= 0, got {mass}")));
        }
        Ok(Self { hbar: S::one(), c: S::one(), mass })
    }

    pub fn massless() -> Self {
        Self { hbar: S::one(), c: S::one(), mass: S::zero() }
    }
}

/// Uniform lattice over `[x0, x_max] x [0, t_max]`, optionally rotated
/// counter-clockwise about the origin.
///
/// Lattice coordinates `(xi_i, tau_j)` are laid out on the unrotated
/// rectangle; [`SpaceTimeGrid::node_coords`] maps them to physical space-time
/// through the rotation
///
/// ```text
///     [x]   [cos th  -sin th] [xi ]
///     [t] = [sin th   cos th] [tau]
/// ```
///
/// At 45 degrees with equal spacings the node set is the diamond lattice
/// whose cell edges lie along the two characteristics `x = +-t`; at zero
/// degrees the lattice rows are constant-time lines.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceTimeGrid<S: Scalar> {
    pub nx: usize,
    pub nt: usize,
    pub x0: S,
    pub x_max: S,
    pub t_max: S,
    /// Rotation angle in degrees, within `[0, 45]`.
    pub theta_deg: S,
    dx: S,
    dt: S,
    cos_th: S,
    sin_th: S,
}

impl<S: Scalar> SpaceTimeGrid<S> {
    /// Build a grid with `nx` cells across `[x0, x_max]` and `nt` cells
    /// across `[0, t_max]`, rotated by `theta_deg` degrees.
    pub fn build(nx: usize, nt: usize, x0: S, x_max: S, t_max: S, theta_deg: S) -> Result<Self> {
        if nx < 2 || nt < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 cells per direction, got {nx}x{nt}")));
        }
        if !(x_max > x0) {
            return Err(Error::InvalidGrid(format!("x range [{x0}, {x_max}] is degenerate")));
        }
        if !(t_max > S::zero()) {
            return Err(Error::InvalidGrid(format!("t_max must be positive, got {t_max}")));
        }
        let limit = S::from_f64_const(45.0);
        if !(theta_deg >= S::zero() && theta_deg <= limit) {
            return Err(Error::InvalidGrid(format!("rotation {theta_deg} outside [0, 45] degrees")));
        }
        let dx = (x_max - x0) / S::from_usize(nx).unwrap();
        let dt = t_max / S::from_usize(nt).unwrap();
        let theta = theta_deg.to_radians();
        Ok(Self { nx, nt, x0, x_max, t_max, theta_deg, dx, dt, cos_th: theta.cos(), sin_th: theta.sin() })
    }

    /// Lattice spacing along the (possibly rotated) space axis.
    pub fn dx(&self) -> S {
        self.dx
    }

    /// Lattice spacing along the (possibly rotated) time axis.
    pub fn dt(&self) -> S {
        self.dt
    }

    pub fn is_rotated(&self) -> bool {
        self.theta_deg != S::zero()
    }

    /// Cosine and sine of the rotation angle.
    pub fn rotation(&self) -> (S, S) {
        (self.cos_th, self.sin_th)
    }

    /// Nodes per lattice row.
    pub fn row_len(&self) -> usize {
        self.nx + 1
    }

    /// Total node count `(nx + 1)(nt + 1)`.
    pub fn n_nodes(&self) -> usize {
        (self.nx + 1) * (self.nt + 1)
    }

    /// Row-major node index of lattice node `(i, j)`.
    pub fn node_id(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.nx && j <= self.nt);
        j * (self.nx + 1) + i
    }

    /// Lattice coordinates of node `(i, j)` before rotation.
    pub fn lattice_coords(&self, i: usize, j: usize) -> (S, S) {
        (self.x0 + self.dx * S::from_usize(i).unwrap(), self.dt * S::from_usize(j).unwrap())
    }

    /// Physical space-time position of lattice node `(i, j)`.
    pub fn node_coords(&self, i: usize, j: usize) -> (S, S) {
        let (xi, tau) = self.lattice_coords(i, j);
        (self.cos_th * xi - self.sin_th * tau, self.sin_th * xi + self.cos_th * tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(SpaceTimeGrid::<f64>::build(1, 8, 0.0, 1.0, 1.0, 0.0).is_err());
        assert!(SpaceTimeGrid::<f64>::build(8, 1, 0.0, 1.0, 1.0, 0.0).is_err());
        assert!(SpaceTimeGrid::<f64>::build(8, 8, 1.0, 1.0, 1.0, 0.0).is_err());
        assert!(SpaceTimeGrid::<f64>::build(8, 8, 0.0, 1.0, 0.0, 0.0).is_err());
        assert!(SpaceTimeGrid::<f64>::build(8, 8, 0.0, 1.0, 1.0, 50.0).is_err());
        assert!(SpaceTimeGrid::<f64>::build(8, 8, 0.0, 1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn spacings_are_positive_and_exact() {
        let g = SpaceTimeGrid::build(32, 16, 0.0, 1.6, 0.8, 0.0).unwrap();
        assert_eq!(g.dx(), 0.05);
        assert_eq!(g.dt(), 0.05);
        assert_eq!(g.n_nodes(), 33 * 17);
    }

    #[test]
    fn unrotated_rows_are_constant_time() {
        let g = SpaceTimeGrid::build(8, 4, 0.5, 1.5, 1.0, 0.0).unwrap();
        for i in 0..=8 {
            let (_, t) = g.node_coords(i, 3);
            assert_eq!(t, 3.0 * 0.25);
        }
    }

    #[test]
    fn rotation_maps_unit_lattice_step() {
        let g = SpaceTimeGrid::build(2, 2, 0.0, 2.0, 2.0, 45.0).unwrap();
        let (x, t) = g.node_coords(1, 0);
        let c = (45.0f64).to_radians().cos();
        assert!((x - c).abs() < 1e-15);
        assert!((t - c).abs() < 1e-15);
    }

    #[test]
    fn diamond_lattice_edges_lie_on_characteristics() {
        let g = SpaceTimeGrid::<f64>::build(4, 4, 0.0, 1.0, 1.0, 45.0).unwrap();
        let (x0, t0) = g.node_coords(1, 1);
        let (x1, t1) = g.node_coords(2, 1);
        let (x2, t2) = g.node_coords(1, 2);
        // +xi edge climbs the right characteristic, +tau edge the left one.
        assert!(((x1 - x0) - (t1 - t0)).abs() < 1e-15);
        assert!(((x2 - x0) + (t2 - t0)).abs() < 1e-15);
    }

    #[test]
    fn mass_must_be_nonnegative() {
        assert!(PhysParams::<f64>::new(-1.0).is_err());
        assert!(PhysParams::<f64>::new(20.0).is_ok());
        let p = PhysParams::<f64>::massless();
        assert_eq!(p.hbar, 1.0);
        assert_eq!(p.c, 1.0);
    }
}
