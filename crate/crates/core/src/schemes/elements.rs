//! Local Galerkin element matrices for the finite-element discretizations.
//!
//! All elements discretize the weak form of `i s0 d/dt - i a d/dx - m`
//! tested directly against the shape functions (no integration by parts):
//!
//! ```text
//!     E[p][q] = Int( i s0 N_p dN_q/dt - i a N_p dN_q/dx - m N_p N_q ) dA
//! ```
//!
//! Triangles are integrated exactly from the linear shape-function
//! gradients; quadrilateral tensor elements use Gauss quadrature and
//! support a rigid rotation of the lattice against the physical axes, with
//! the physical derivatives obtained by the chain rule.

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::{coupling, sigma0, Mat2, Scalar};
use crate::schemes::basis::BasisFamily;
use crate::schemes::quadrature::gauss_unit;
use crate::Result;

/// Dense local matrix of one element together with its node geometry.
#[derive(Debug, Clone)]
pub struct ElementMatrix<S: Scalar> {
    /// Lattice offsets of the local nodes relative to the element origin.
    pub node_offsets: Vec<(usize, usize)>,
    /// Scalar DOFs per node and spinor component (1 or 3).
    pub dofs_per_node: usize,
    entries: Vec<Vec<Complex<S>>>,
}

impl<S: Scalar> ElementMatrix<S> {
    /// Matrix dimension: nodes x components x DOFs per node.
    pub fn dim(&self) -> usize {
        self.node_offsets.len() * 2 * self.dofs_per_node
    }

    /// Local index of `(node, component, kind)`, mirroring the global
    /// DOF layout.
    pub fn local_dof(&self, local_node: usize, comp: usize, kind: usize) -> usize {
        (local_node * 2 + comp) * self.dofs_per_node + kind
    }

    /// Entry at (test `p`, trial `q`).
    pub fn at(&self, p: usize, q: usize) -> Complex<S> {
        self.entries[p][q]
    }
}

/// Scalar integrals shared by every block of one element: value-value,
/// value-(dx trial), value-(dt trial).
struct ScalarIntegrals<S> {
    mass: Vec<Vec<S>>,
    dx: Vec<Vec<S>>,
    dt: Vec<Vec<S>>,
}

fn spin_compose<S: Scalar>(
    integrals: &ScalarIntegrals<S>,
    mass: S,
    node_offsets: Vec<(usize, usize)>,
    dofs_per_node: usize,
) -> ElementMatrix<S> {
    let n_scalar = integrals.mass.len();
    let dim = 2 * n_scalar;
    let mut entries = vec![vec![S::czero(); dim]; dim];
    let s0: Mat2<S> = sigma0();
    let a: Mat2<S> = coupling();
    let i = S::ci();
    for p in 0..n_scalar {
        let (node_p, kind_p) = (p / dofs_per_node, p % dofs_per_node);
        for q in 0..n_scalar {
            let (node_q, kind_q) = (q / dofs_per_node, q % dofs_per_node);
            for c1 in 0..2 {
                for c2 in 0..2 {
                    let mut v = i * s0[c1][c2] * S::creal(integrals.dt[p][q])
                        - i * a[c1][c2] * S::creal(integrals.dx[p][q]);
                    if c1 == c2 && mass != S::zero() {
                        v -= S::creal(mass * integrals.mass[p][q]);
                    }
                    let row = (node_p * 2 + c1) * dofs_per_node + kind_p;
                    let col = (node_q * 2 + c2) * dofs_per_node + kind_q;
                    entries[row][col] = v;
                }
            }
        }
    }
    ElementMatrix { node_offsets, dofs_per_node, entries }
}

/// The two linear triangles splitting each grid cell along its
/// anti-diagonal: lower-left (origin, +x, +t) and upper-right
/// (+x, +t, +x+t).
pub fn triangle_elements<S: Scalar>(
    hx: S,
    ht: S,
    mass: S,
) -> Result<(ElementMatrix<S>, ElementMatrix<S>)> {
    if !(hx > S::zero()) || !(ht > S::zero()) {
        return Err(Error::InvalidGrid(format!("spacings must be positive, got hx={hx} ht={ht}")));
    }
    let area = hx * ht / S::from_f64_const(2.0);
    let twelve = S::from_f64_const(12.0);
    let three = S::from_f64_const(3.0);
    // Reference gradients (dN/dx_ref, dN/dt_ref) per local node.
    let build = |grads: [(S, S); 3], offsets: [(usize, usize); 3]| {
        let mut ints = ScalarIntegrals {
            mass: vec![vec![S::zero(); 3]; 3],
            dx: vec![vec![S::zero(); 3]; 3],
            dt: vec![vec![S::zero(); 3]; 3],
        };
        for p in 0..3 {
            for q in 0..3 {
                // Int N_p dA = area/3; gradients are constant.
                ints.dx[p][q] = area / three * grads[q].0 / hx;
                ints.dt[p][q] = area / three * grads[q].1 / ht;
                let diag = if p == q { S::one() } else { S::zero() };
                ints.mass[p][q] = area / twelve * (S::one() + diag);
            }
        }
        spin_compose(&ints, mass, offsets.to_vec(), 1)
    };
    let one = S::one();
    let lower = build(
        [(-one, -one), (one, S::zero()), (S::zero(), one)],
        [(0, 0), (1, 0), (0, 1)],
    );
    let upper = build(
        [(S::zero(), -one), (-one, S::zero()), (one, one)],
        [(1, 0), (0, 1), (1, 1)],
    );
    Ok((lower, upper))
}

/// Scalar shape functions of a tensor-product element: per node, a value
/// function, plus x-slope and t-slope functions for the cubic families
/// (the mixed-slope product is excluded).
///
/// Returns per-function (node, kind, xi-function index, tau-function index)
/// where the 1-D function index addresses `family_eval`'s output.
fn tensor_layout(family: BasisFamily) -> Vec<(usize, usize, usize, usize)> {
    let corners = [(0usize, 0usize), (1, 0), (0, 1), (1, 1)];
    let mut layout = Vec::new();
    for (node, &(ax, at)) in corners.iter().enumerate() {
        match family {
            BasisFamily::LagrangeLinear => {
                layout.push((node, 0, ax, at));
            }
            BasisFamily::HermitePoly | BasisFamily::HermiteTrig => {
                let (vx, sx) = (2 * ax, 2 * ax + 1);
                let (vt, st) = (2 * at, 2 * at + 1);
                layout.push((node, 0, vx, vt));
                layout.push((node, 1, sx, vt));
                layout.push((node, 2, vx, st));
            }
        }
    }
    layout
}

/// Galerkin element matrix of a quadrilateral tensor element with lattice
/// spacings `hx`, `ht`, rotated by `theta_deg` against the physical axes,
/// using `n_gauss` Gauss points per direction.
pub fn tensor_element_with_quadrature<S: Scalar>(
    family: BasisFamily,
    hx: S,
    ht: S,
    mass: S,
    theta_deg: S,
    n_gauss: usize,
) -> Result<ElementMatrix<S>> {
    if !(hx > S::zero()) || !(ht > S::zero()) {
        return Err(Error::InvalidGrid(format!("spacings must be positive, got hx={hx} ht={ht}")));
    }
    if n_gauss < family.min_quadrature_points() {
        return Err(Error::InvalidConfig(format!(
            "{family:?} needs at least {} Gauss points per direction, got {n_gauss}",
            family.min_quadrature_points()
        )));
    }
    let rule = gauss_unit::<S>(n_gauss)?;
    let layout = tensor_layout(family);
    let n_scalar = layout.len();
    let dofs_per_node = n_scalar / 4;
    let mut ints = ScalarIntegrals {
        mass: vec![vec![S::zero(); n_scalar]; n_scalar],
        dx: vec![vec![S::zero(); n_scalar]; n_scalar],
        dt: vec![vec![S::zero(); n_scalar]; n_scalar],
    };
    let (sin_th, cos_th) = theta_deg.to_radians().sin_cos();
    let area_scale = hx * ht;
    for &(xi, wxi) in &rule {
        let (fx, dx) = crate::schemes::basis::family_eval(family, xi)?;
        for &(tau, wtau) in &rule {
            let (ft, dt) = crate::schemes::basis::family_eval(family, tau)?;
            let w = wxi * wtau * area_scale;
            for (p, &(_, _, pxi, ptau)) in layout.iter().enumerate() {
                let np = fx[pxi] * ft[ptau];
                if np == S::zero() {
                    continue;
                }
                for (q, &(_, _, qxi, qtau)) in layout.iter().enumerate() {
                    let nq = fx[qxi] * ft[qtau];
                    let dq_xi = dx[qxi] * ft[qtau] / hx;
                    let dq_tau = fx[qxi] * dt[qtau] / ht;
                    // Physical derivatives through the lattice rotation.
                    let dq_x = cos_th * dq_xi - sin_th * dq_tau;
                    let dq_t = sin_th * dq_xi + cos_th * dq_tau;
                    ints.mass[p][q] += w * np * nq;
                    ints.dx[p][q] += w * np * dq_x;
                    ints.dt[p][q] += w * np * dq_t;
                }
            }
        }
    }
    let offsets = vec![(0, 0), (1, 0), (0, 1), (1, 1)];
    Ok(spin_compose(&ints, mass, offsets, dofs_per_node))
}

/// Tensor element at the family's default quadrature.
pub fn tensor_element<S: Scalar>(
    family: BasisFamily,
    hx: S,
    ht: S,
    mass: S,
    theta_deg: S,
) -> Result<ElementMatrix<S>> {
    tensor_element_with_quadrature(family, hx, ht, mass, theta_deg, family.quadrature_points())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    /// Applying an element to a constant spinor field (value DOFs 1, slope
    /// DOFs 0) must vanish without mass: derivatives annihilate constants.
    fn assert_annihilates_constants(e: &ElementMatrix<f64>) {
        for comp in 0..2 {
            let mut v = vec![c(0.0, 0.0); e.dim()];
            for node in 0..e.node_offsets.len() {
                v[e.local_dof(node, comp, 0)] = c(1.0, 0.0);
            }
            for p in 0..e.dim() {
                let sum: Complex<f64> = (0..e.dim()).map(|q| e.at(p, q) * v[q]).sum();
                assert!(sum.norm() < 1e-13, "row {p} comp {comp}: {sum}");
            }
        }
    }

    #[test]
    fn triangle_geometry_and_dimensions() {
        let (lower, upper) = triangle_elements(0.1f64, 0.1, 0.0).unwrap();
        assert_eq!(lower.node_offsets, vec![(0, 0), (1, 0), (0, 1)]);
        assert_eq!(upper.node_offsets, vec![(1, 0), (0, 1), (1, 1)]);
        assert_eq!(lower.dim(), 6);
        assert_eq!(upper.dim(), 6);
    }

    #[test]
    fn triangle_hand_checked_entry() {
        // Test function of node 0, trial function of node 1 on the lower
        // triangle: x-gradient of the trial hat is 1/hx, the averaged test
        // weight is area/3, so the coupling entry is -i*ht/6.
        let (hx, ht) = (0.1f64, 0.2);
        let (lower, _) = triangle_elements(hx, ht, 0.0).unwrap();
        let p = lower.local_dof(0, 0, 0);
        let q = lower.local_dof(1, 1, 0);
        let expect = c(0.0, -ht / 6.0);
        assert!((lower.at(p, q) - expect).norm() < 1e-15);
        // Same-component entry couples only through time: node 1's hat has
        // zero t-gradient on this triangle.
        let q_same = lower.local_dof(1, 0, 0);
        assert!((lower.at(p, q_same)).norm() < 1e-15);
    }

    #[test]
    fn triangle_mass_term_is_the_scaled_mass_matrix() {
        let (hx, ht, m) = (0.1f64, 0.1, 20.0);
        let (with_mass, _) = triangle_elements(hx, ht, m).unwrap();
        let (without, _) = triangle_elements(hx, ht, 0.0).unwrap();
        let area = hx * ht / 2.0;
        for a in 0..3 {
            for b in 0..3 {
                let factor = if a == b { 2.0 } else { 1.0 };
                let expect = -m * area / 12.0 * factor;
                for comp in 0..2 {
                    let p = with_mass.local_dof(a, comp, 0);
                    let q = with_mass.local_dof(b, comp, 0);
                    let diff = with_mass.at(p, q) - without.at(p, q);
                    assert!((diff - c(expect, 0.0)).norm() < 1e-15, "a={a} b={b}");
                }
                let p = with_mass.local_dof(a, 0, 0);
                let q = with_mass.local_dof(b, 1, 0);
                assert_eq!(with_mass.at(p, q), without.at(p, q));
            }
        }
    }

    #[test]
    fn triangles_annihilate_constants() {
        let (lower, upper) = triangle_elements(0.05f64, 0.1, 0.0).unwrap();
        assert_annihilates_constants(&lower);
        assert_annihilates_constants(&upper);
    }

    #[test]
    fn tensor_dimensions_per_family() {
        for (family, dim) in [
            (BasisFamily::LagrangeLinear, 8),
            (BasisFamily::HermitePoly, 24),
            (BasisFamily::HermiteTrig, 24),
        ] {
            let e = tensor_element(family, 0.1f64, 0.1, 0.0, 0.0).unwrap();
            assert_eq!(e.dim(), dim, "{family:?}");
            assert_eq!(e.node_offsets.len(), 4);
        }
    }

    #[test]
    fn tensor_elements_annihilate_constants() {
        for family in [
            BasisFamily::LagrangeLinear,
            BasisFamily::HermitePoly,
            BasisFamily::HermiteTrig,
        ] {
            for theta in [0.0f64, 45.0] {
                let e = tensor_element(family, 0.1f64, 0.1, 0.0, theta).unwrap();
                assert_annihilates_constants(&e);
            }
        }
    }

    #[test]
    fn lagrange_hand_checked_entry() {
        // Test N at node 0, trial N at node 1, flat lattice: the coupling
        // integral is Int (1-xi) d/dxi(xi) * Int (1-tau)^2 * ht = ht/6.
        let (hx, ht) = (0.1f64, 0.2);
        let e = tensor_element(BasisFamily::LagrangeLinear, hx, ht, 0.0, 0.0).unwrap();
        let p = e.local_dof(0, 0, 0);
        let q = e.local_dof(1, 1, 0);
        assert!((e.at(p, q) - c(0.0, -ht / 6.0)).norm() < 1e-15);
        // Same-component neighbor couples through time:
        // i * Int (1-xi) xi * Int (1-tau)(-1) * hx = -i*hx/12.
        let q_same = e.local_dof(1, 0, 0);
        let got = e.at(p, q_same);
        assert!((got - c(0.0, -hx / 12.0)).norm() < 1e-14, "got {got}");
    }

    #[test]
    fn rotated_lagrange_hand_checked_entry() {
        // At 45 degrees the x-derivative mixes the lattice derivatives:
        // Kx = (1/sqrt2) h (1/6 + 1/12) = h/(4 sqrt2) for the node0-node1
        // pair, entering the off-component block as -i*Kx.
        let h = 0.1f64;
        let e = tensor_element(BasisFamily::LagrangeLinear, h, h, 0.0, 45.0).unwrap();
        let p = e.local_dof(0, 0, 0);
        let q = e.local_dof(1, 1, 0);
        let expect = -h / (4.0 * 2.0f64.sqrt());
        assert!((e.at(p, q) - c(0.0, expect)).norm() < 1e-15);
    }

    #[test]
    fn quadrature_is_converged_per_family() {
        let compare = |family: BasisFamily, n_low: usize, n_high: usize, tol: f64| {
            let a = tensor_element_with_quadrature(family, 0.1f64, 0.1, 20.0, 0.0, n_low).unwrap();
            let b = tensor_element_with_quadrature(family, 0.1f64, 0.1, 20.0, 0.0, n_high).unwrap();
            let mut worst: f64 = 0.0;
            for p in 0..a.dim() {
                for q in 0..a.dim() {
                    worst = worst.max((a.at(p, q) - b.at(p, q)).norm());
                }
            }
            assert!(worst < tol, "{family:?}: {worst:.3e}");
        };
        compare(BasisFamily::LagrangeLinear, 2, 4, 1e-13);
        compare(BasisFamily::HermitePoly, 4, 6, 1e-13);
        compare(BasisFamily::HermiteTrig, 10, 12, 1e-10);
    }

    #[test]
    fn quadrature_minimum_is_enforced() {
        assert!(tensor_element_with_quadrature(BasisFamily::HermiteTrig, 0.1f64, 0.1, 0.0, 0.0, 4).is_err());
        assert!(tensor_element_with_quadrature(BasisFamily::HermitePoly, 0.1f64, 0.1, 0.0, 0.0, 2).is_err());
    }

    #[test]
    fn spacing_is_validated() {
        assert!(triangle_elements(0.0f64, 0.1, 0.0).is_err());
        assert!(tensor_element(BasisFamily::LagrangeLinear, 0.1f64, 0.0, 0.0, 0.0).is_err());
    }
}
