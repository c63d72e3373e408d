//! Global operator assembly and the known/unknown system partition.
//!
//! Every scheme produces one square complex operator over all lattice
//! degrees of freedom, assembled either from a finite-difference stencil
//! (neighbors falling outside the lattice are dropped) or by scattering a
//! per-cell element matrix. Initial and boundary data never enter the
//! operator itself: the known rows and columns are eliminated afterwards by
//! [`reduce_system`], which moves each known column, weighted by its
//! prescribed value, to the right-hand side. The reported matrix size of an
//! experiment is the dimension of the full operator before partitioning.

use num_complex::Complex;
use rustfft::FftNum;

use crate::analytic::{
    gaussian_initial, gaussian_initial_dx, initial_dt, massless_exact, GaussianPacket,
    SpectralSolution,
};
use crate::dof::{BoundaryConfig, DofKind, DofMap, SidePolicy};
use crate::error::Error;
use crate::grid::{PhysParams, SpaceTimeGrid};
use crate::scalar::Scalar;
use crate::schemes::{
    balanced_stencil, central_row_stencil, tensor_element, triangle_elements, ElementMatrix,
    SchemeTag, Stencil,
};
use crate::sparse::{CsrMatrix, TripletBuilder};
use crate::Result;

/// Fully assembled and partitioned linear system of one experiment.
#[derive(Debug, Clone)]
pub struct Assembled<S: Scalar> {
    /// Square operator over all degrees of freedom, before partitioning.
    pub full: CsrMatrix<S>,
    /// Operator restricted to the unknown degrees of freedom.
    pub reduced: CsrMatrix<S>,
    /// Right-hand side of the reduced system.
    pub rhs: Vec<Complex<S>>,
    /// Prescribed values, indexed by global dof; zero at unknown dofs.
    pub known: Vec<Complex<S>>,
    pub map: DofMap,
}

impl<S: Scalar> Assembled<S> {
    /// Dimension of the operator before partitioning.
    pub fn matrix_size(&self) -> usize {
        self.full.n_rows()
    }

    /// Dimension of the reduced system actually handed to a solver.
    pub fn unknown_size(&self) -> usize {
        self.reduced.n_rows()
    }

    /// Merge a reduced solution with the known values into a vector over
    /// all degrees of freedom.
    pub fn expand(&self, reduced_solution: &[Complex<S>]) -> Vec<Complex<S>> {
        debug_assert_eq!(reduced_solution.len(), self.unknown_size());
        let mut out = self.known.clone();
        for (r, &dof) in self.map.unknown_dofs().iter().enumerate() {
            out[dof] = reduced_solution[r];
        }
        out
    }

    /// Write the known dofs as `index real imag` lines, one per dof, with a
    /// size header. Together with the MatrixMarket dump of [`Assembled::full`]
    /// this reproduces the partitioned system externally.
    pub fn write_known_sidecar<W: std::io::Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "% known dofs: {} of {}", self.map.n_known(), self.map.total_dofs())?;
        for &dof in self.map.known_dofs() {
            let v = self.known[dof];
            writeln!(w, "{} {:e} {:e}", dof, v.re, v.im)?;
        }
        Ok(())
    }
}

fn check_compatibility<S: Scalar>(scheme: SchemeTag, grid: &SpaceTimeGrid<S>) -> Result<()> {
    let theta = grid.theta_deg.to_f64().unwrap_or(f64::NAN);
    if !scheme.admits_rotation(theta) {
        return Err(Error::InvalidConfig(format!(
            "scheme {scheme} does not support a lattice rotated by {theta} degrees"
        )));
    }
    Ok(())
}

fn scatter_node<S: Scalar>(
    stencil: &Stencil<S>,
    i: usize,
    j: usize,
    grid: &SpaceTimeGrid<S>,
    map: &DofMap,
    builder: &mut TripletBuilder<S>,
) {
    let (nx, nt) = (grid.nx as i64, grid.nt as i64);
    for (&(di, dj), block) in &stencil.blocks {
        let ni = i as i64 + di as i64;
        let nj = j as i64 + dj as i64;
        if ni < 0 || ni > nx || nj < 0 || nj > nt {
            continue;
        }
        let (ni, nj) = (ni as usize, nj as usize);
        for c1 in 0..2 {
            let row = map.dof(i, j, c1, DofKind::Value);
            for c2 in 0..2 {
                let v = block[c1][c2];
                if v != S::czero() {
                    builder.push(row, map.dof(ni, nj, c2, DofKind::Value), v);
                }
            }
        }
    }
}

fn scatter_stencil<S: Scalar>(
    stencil: &Stencil<S>,
    grid: &SpaceTimeGrid<S>,
    map: &DofMap,
    builder: &mut TripletBuilder<S>,
) {
    for j in 0..=grid.nt {
        for i in 0..=grid.nx {
            scatter_node(stencil, i, j, grid, map, builder);
        }
    }
}

fn scatter_central<S: Scalar>(
    grid: &SpaceTimeGrid<S>,
    mass: S,
    map: &DofMap,
    builder: &mut TripletBuilder<S>,
) -> Result<()> {
    // Nine row variants: centered derivatives in the interior, one-sided
    // fallbacks where an axis neighbor is missing. Index 0 interior, 1 the
    // low end, 2 the high end of each axis.
    let (hx, ht) = (grid.dx(), grid.dt());
    let mut variants = Vec::with_capacity(9);
    for tcase in 0..3 {
        for xcase in 0..3 {
            variants.push(central_row_stencil(
                hx,
                ht,
                mass,
                xcase != 1,
                xcase != 2,
                tcase != 1,
                tcase != 2,
            )?);
        }
    }
    for j in 0..=grid.nt {
        let tcase = if j == 0 { 1 } else if j == grid.nt { 2 } else { 0 };
        for i in 0..=grid.nx {
            let xcase = if i == 0 { 1 } else if i == grid.nx { 2 } else { 0 };
            scatter_node(&variants[3 * tcase + xcase], i, j, grid, map, builder);
        }
    }
    Ok(())
}

const KINDS: [DofKind; 3] = [DofKind::Value, DofKind::DxSlope, DofKind::DtSlope];

fn scatter_element<S: Scalar>(
    element: &ElementMatrix<S>,
    cell_i: usize,
    cell_j: usize,
    map: &DofMap,
    builder: &mut TripletBuilder<S>,
) {
    let d = element.dofs_per_node;
    let dim = element.dim();
    let global = |local: usize| {
        let node = local / (2 * d);
        let within = local % (2 * d);
        let (oi, oj) = element.node_offsets[node];
        map.dof(cell_i + oi, cell_j + oj, within / d, KINDS[within % d])
    };
    for p in 0..dim {
        let row = global(p);
        for q in 0..dim {
            let v = element.at(p, q);
            if v != S::czero() {
                builder.push(row, global(q), v);
            }
        }
    }
}

/// Assemble the full (pre-partition) operator of a scheme on a grid.
pub fn assemble_operator<S: Scalar>(
    scheme: SchemeTag,
    grid: &SpaceTimeGrid<S>,
    params: &PhysParams<S>,
    boundary: BoundaryConfig,
) -> Result<(CsrMatrix<S>, DofMap)> {
    check_compatibility(scheme, grid)?;
    let map = DofMap::build(grid, scheme.dofs_per_node(), boundary)?;
    let n = map.total_dofs();
    let mut builder = TripletBuilder::new(n, n);
    let (hx, ht, mass) = (grid.dx(), grid.dt(), params.mass);
    match scheme {
        SchemeTag::CentralDifference => {
            scatter_central(grid, mass, &map, &mut builder)?;
        }
        SchemeTag::BalancedDifference => {
            let stencil = balanced_stencil(hx, ht, mass)?;
            scatter_stencil(&stencil, grid, &map, &mut builder);
        }
        SchemeTag::TriangleLinear => {
            let (lower, upper) = triangle_elements(hx, ht, mass)?;
            for j in 0..grid.nt {
                for i in 0..grid.nx {
                    scatter_element(&lower, i, j, &map, &mut builder);
                    scatter_element(&upper, i, j, &map, &mut builder);
                }
            }
        }
        SchemeTag::HermitePoly
        | SchemeTag::HermiteTrig
        | SchemeTag::LagrangeLinear
        | SchemeTag::Diamond => {
            let family = scheme.tensor_family().expect("tensor scheme");
            let element = tensor_element(family, hx, ht, mass, grid.theta_deg)?;
            for j in 0..grid.nt {
                for i in 0..grid.nx {
                    scatter_element(&element, i, j, &map, &mut builder);
                }
            }
        }
    }
    Ok((builder.finish(), map))
}

/// Prescribed values for every known degree of freedom.
///
/// Nodes on a hard-wall side are zero. All other known nodes (the initial
/// row and any exact-data side) take the reference solution at their
/// physical coordinates: the packet itself where `t = 0`, the closed-form
/// solution for massless runs, and the spectral propagator otherwise.
/// Derivative dofs of the cubic families hold the scaled analytic
/// derivatives of the packet; the time slope comes from the equation of
/// motion applied to the initial data.
pub fn sample_initial<S: Scalar + FftNum>(
    packet: &GaussianPacket<S>,
    params: &PhysParams<S>,
    scheme: SchemeTag,
    grid: &SpaceTimeGrid<S>,
    map: &DofMap,
) -> Result<Vec<Complex<S>>> {
    check_compatibility(scheme, grid)?;
    if map.dofs_per_node != scheme.dofs_per_node() || map.nx != grid.nx || map.nt != grid.nt {
        return Err(Error::Dimension(format!(
            "dof map ({}x{}, d={}) does not match scheme {scheme} on a {}x{} grid",
            map.nx, map.nt, map.dofs_per_node, grid.nx, grid.nt
        )));
    }
    let mass = params.mass;
    let boundary = map.boundary;
    let mut values = vec![S::czero(); map.total_dofs()];

    let has_exact_side = boundary.left == SidePolicy::DirichletExact
        || boundary.right == SidePolicy::DirichletExact;
    let needs_spectral = mass > S::zero() && (grid.is_rotated() || has_exact_side);
    let spectral = if needs_spectral {
        let mut x_lo = S::infinity();
        let mut x_hi = S::neg_infinity();
        let mut t_span = S::zero();
        for (i, j) in [(0, 0), (grid.nx, 0), (0, grid.nt), (grid.nx, grid.nt)] {
            let (x, t) = grid.node_coords(i, j);
            x_lo = x_lo.min(x);
            x_hi = x_hi.max(x);
            t_span = t_span.max(t.abs());
        }
        Some(SpectralSolution::new(packet, mass, x_lo, x_hi, t_span, 4096)?)
    } else {
        None
    };
    let reference = |x: S, t: S| -> [Complex<S>; 2] {
        if t == S::zero() {
            gaussian_initial(packet, x)
        } else if mass == S::zero() {
            massless_exact(packet, x, t)
        } else {
            spectral.as_ref().expect("spectral oracle prepared").evaluate(x, t)
        }
    };

    let d = map.dofs_per_node;
    let family = scheme.tensor_family();
    for j in 0..=grid.nt {
        for i in 0..=grid.nx {
            if !map.is_known(map.dof(i, j, 0, DofKind::Value)) {
                continue;
            }
            let on_zero_wall = (i == 0 && boundary.left == SidePolicy::DirichletZero)
                || (i == grid.nx && boundary.right == SidePolicy::DirichletZero);
            if on_zero_wall {
                continue;
            }
            let (x, t) = grid.node_coords(i, j);
            let value = reference(x, t);
            for comp in 0..2 {
                values[map.dof(i, j, comp, DofKind::Value)] = value[comp];
            }
            if d == 3 {
                let family = family.expect("slope dofs imply a tensor family");
                let dx = gaussian_initial_dx(packet, x);
                let dt = initial_dt(packet, mass, x);
                let sx = family.slope_dof_scale(grid.dx());
                let st = family.slope_dof_scale(grid.dt());
                for comp in 0..2 {
                    values[map.dof(i, j, comp, DofKind::DxSlope)] = dx[comp] * S::creal(sx);
                    values[map.dof(i, j, comp, DofKind::DtSlope)] = dt[comp] * S::creal(st);
                }
            }
        }
    }
    Ok(values)
}

/// Eliminate the known rows and columns of the full operator.
///
/// The reduced operator keeps only unknown-by-unknown couplings; every
/// unknown-row entry in a known column is moved to the right-hand side with
/// weight `-value`.
pub fn reduce_system<S: Scalar>(
    full: &CsrMatrix<S>,
    map: &DofMap,
    known: &[Complex<S>],
) -> Result<(CsrMatrix<S>, Vec<Complex<S>>)> {
    if known.len() != map.total_dofs() || full.n_rows() != map.total_dofs() {
        return Err(Error::Dimension(format!(
            "partition size mismatch: operator {}, values {}, map {}",
            full.n_rows(),
            known.len(),
            map.total_dofs()
        )));
    }
    let n_unknown = map.n_unknown();
    let mut builder = TripletBuilder::new(n_unknown, n_unknown);
    let mut rhs = vec![S::czero(); n_unknown];
    for (r, &dof) in map.unknown_dofs().iter().enumerate() {
        let (cols, vals) = full.row(dof);
        for (&c, &v) in cols.iter().zip(vals) {
            match map.reduced_index(c) {
                Some(cr) => builder.push(r, cr, v),
                None => rhs[r] -= v * known[c],
            }
        }
    }
    Ok((builder.finish(), rhs))
}

/// Assemble, sample the known data and partition in one step.
pub fn assemble<S: Scalar + FftNum>(
    scheme: SchemeTag,
    grid: &SpaceTimeGrid<S>,
    params: &PhysParams<S>,
    boundary: BoundaryConfig,
    packet: &GaussianPacket<S>,
) -> Result<Assembled<S>> {
    let (full, map) = assemble_operator(scheme, grid, params, boundary)?;
    let known = sample_initial(packet, params, scheme, grid, &map)?;
    let (reduced, rhs) = reduce_system(&full, &map, &known)?;
    Ok(Assembled { full, reduced, rhs, known, map })
}
