//! Solution-quality diagnostics: nodal and interpolated error norms, wave
//! packet centroid speed, and the Nyquist-mode (checkerboard) amplitude.

use num_complex::Complex;

use crate::error::Error;
use crate::field::SpinorField;
use crate::grid::SpaceTimeGrid;
use crate::scalar::Scalar;
use crate::schemes::SchemeTag;
use crate::Result;

/// Relative L2 error in percent over all nodal spinor values. Derivative
/// degrees of freedom are excluded: only the value entry at each
/// `(node, component)` participates in either norm.
pub fn l2_error_percent<S: Scalar>(
    numerical: &SpinorField<S>,
    exact: &SpinorField<S>,
) -> Result<S> {
    if numerical.nx != exact.nx
        || numerical.nt != exact.nt
        || numerical.dofs_per_node != exact.dofs_per_node
    {
        return Err(Error::Dimension(format!(
            "field shapes differ: {}x{} ({} dofs) vs {}x{} ({} dofs)",
            numerical.nx,
            numerical.nt,
            numerical.dofs_per_node,
            exact.nx,
            exact.nt,
            exact.dofs_per_node
        )));
    }
    let mut num = S::zero();
    let mut den = S::zero();
    for j in 0..=numerical.nt {
        for i in 0..=numerical.nx {
            for comp in 0..2 {
                let d = numerical.value(i, j, comp) - exact.value(i, j, comp);
                num += d.norm_sqr();
                den += exact.value(i, j, comp).norm_sqr();
            }
        }
    }
    if !(den > S::zero()) {
        return Err(Error::InvalidConfig(
            "exact field has zero norm; relative error undefined".into(),
        ));
    }
    Ok(S::from_f64_const(100.0) * (num / den).sqrt())
}

fn row_centroid<S: Scalar>(
    grid: &SpaceTimeGrid<S>,
    field: &SpinorField<S>,
    j: usize,
) -> Result<(S, S)> {
    let mut weight = S::zero();
    let mut sx = S::zero();
    let mut st = S::zero();
    for i in 0..=grid.nx {
        let (x, t) = grid.node_coords(i, j);
        let mut density = S::zero();
        for comp in 0..2 {
            density += field.value(i, j, comp).norm_sqr();
        }
        weight += density;
        sx += density * x;
        st += density * t;
    }
    if !(weight > S::zero()) {
        return Err(Error::InvalidConfig(format!(
            "row {j} has zero density; centroid speed undefined"
        )));
    }
    Ok((sx / weight, st / weight))
}

/// Density-weighted packet speed between the first and last time rows:
/// `(centroid_x(last) - centroid_x(first)) / elapsed`. On an unrotated grid
/// the elapsed time is exactly `t_max`; on rotated grids the row centroids
/// are taken in physical coordinates, so the same quotient generalizes.
/// The sign carries the propagation direction.
pub fn centroid_speed<S: Scalar>(grid: &SpaceTimeGrid<S>, field: &SpinorField<S>) -> Result<S> {
    let (x_first, t_first) = row_centroid(grid, field, 0)?;
    let (x_last, t_last) = row_centroid(grid, field, grid.nt)?;
    let elapsed = t_last - t_first;
    if !(elapsed.abs() > S::zero()) {
        return Err(Error::InvalidConfig(
            "first and last rows share a centroid time; speed undefined".into(),
        ));
    }
    Ok((x_last - x_first) / elapsed)
}

/// Amplitude of the Nyquist (period 2h) mode along the time index, per
/// space column, reported as the maximum over columns and normalized by
/// the field RMS. Each column is projected onto `(-1)^j` under a Hann
/// window `sin^2(pi j / nt)`, which keeps the pure mode at exactly 1 while
/// suppressing the endpoint leakage a plain alternating sum picks up from
/// smooth fields. The pure mode `(-1)^j` maps to 1, smooth fields to small
/// values, and an identically zero field to 0.
pub fn checkerboard_amplitude<S: Scalar>(grid: &SpaceTimeGrid<S>, field: &SpinorField<S>) -> S {
    let pi = S::from_f64_const(std::f64::consts::PI);
    let steps = S::from_usize(grid.nt).unwrap();
    let mut window = S::zero();
    let weights: Vec<S> = (0..=grid.nt)
        .map(|j| {
            let w = (pi * S::from_usize(j).unwrap() / steps).sin().powi(2);
            window += w;
            w
        })
        .collect();
    let mut sum_sq = S::zero();
    let mut max_amp = S::zero();
    for i in 0..=grid.nx {
        let mut acc = [S::czero(); 2];
        for j in 0..=grid.nt {
            let sign = if j % 2 == 0 { weights[j] } else { -weights[j] };
            for comp in 0..2 {
                let v = field.value(i, j, comp);
                acc[comp] += Complex::new(sign * v.re, sign * v.im);
                sum_sq += v.norm_sqr();
            }
        }
        if window > S::zero() {
            let amp = ((acc[0].norm_sqr() + acc[1].norm_sqr()).sqrt()) / window;
            max_amp = max_amp.max(amp);
        }
    }
    let nodes = S::from_usize((grid.nx + 1) * (grid.nt + 1)).unwrap();
    let rms = (sum_sq / nodes).sqrt();
    if !(rms > S::zero()) {
        return S::zero();
    }
    max_amp / rms
}

/// Relative L2 error in percent of the element interpolant sampled between
/// nodes: each lattice cell is subdivided `refine` times per direction and
/// the bilinear interpolant of the nodal values is compared against the
/// oracle at the physical coordinates of every sample. Captures the
/// between-node error that nodal sampling cannot see (a nodally exact
/// solution still carries an O(h^2) interpolation error off the nodes).
/// Defined for schemes with a single degree of freedom per node.
pub fn interpolated_error_percent<S: Scalar>(
    scheme: SchemeTag,
    grid: &SpaceTimeGrid<S>,
    field: &SpinorField<S>,
    refine: usize,
    oracle: impl Fn(S, S) -> [Complex<S>; 2],
) -> Result<S> {
    if scheme.dofs_per_node() != 1 {
        return Err(Error::InvalidConfig(format!(
            "interpolated error is defined for value-only schemes, not {}",
            scheme.tag()
        )));
    }
    if refine == 0 {
        return Err(Error::InvalidConfig("refinement factor must be positive".into()));
    }
    let (cos_t, sin_t) = grid.rotation();
    let step = S::one() / S::from_usize(refine).unwrap();
    let mut num = S::zero();
    let mut den = S::zero();
    for cj in 0..grid.nt {
        for ci in 0..grid.nx {
            let corners = [
                field.spinor(ci, cj),
                field.spinor(ci + 1, cj),
                field.spinor(ci, cj + 1),
                field.spinor(ci + 1, cj + 1),
            ];
            // Sample the closed upper/right cell edges only on the last
            // cell of each strip so shared points are counted once.
            let u_hi = if ci + 1 == grid.nx { refine } else { refine - 1 };
            let v_hi = if cj + 1 == grid.nt { refine } else { refine - 1 };
            for v in 0..=v_hi {
                for u in 0..=u_hi {
                    let fu = S::from_usize(u).unwrap() * step;
                    let fv = S::from_usize(v).unwrap() * step;
                    let w = [
                        (S::one() - fu) * (S::one() - fv),
                        fu * (S::one() - fv),
                        (S::one() - fu) * fv,
                        fu * fv,
                    ];
                    let (xi, tau) = grid.lattice_coords(ci, cj);
                    let lx = xi + fu * grid.dx();
                    let lt = tau + fv * grid.dt();
                    let x = cos_t * lx - sin_t * lt;
                    let t = sin_t * lx + cos_t * lt;
                    let exact = oracle(x, t);
                    for comp in 0..2 {
                        let mut val = S::czero();
                        for (corner, wk) in corners.iter().zip(w.iter()) {
                            val += corner[comp] * Complex::new(*wk, S::zero());
                        }
                        num += (val - exact[comp]).norm_sqr();
                        den += exact[comp].norm_sqr();
                    }
                }
            }
        }
    }
    if !(den > S::zero()) {
        return Err(Error::InvalidConfig(
            "oracle vanishes on every sample; relative error undefined".into(),
        ));
    }
    Ok(S::from_f64_const(100.0) * (num / den).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{massless_exact, GaussianPacket};
    use crate::dof::{BoundaryConfig, DofKind, DofMap};

    fn grid(nx: usize, nt: usize) -> SpaceTimeGrid<f64> {
        SpaceTimeGrid::build(nx, nt, 0.0, 1.6, 0.8, 0.0).unwrap()
    }

    fn exact_field(grid: &SpaceTimeGrid<f64>, packet: &GaussianPacket<f64>) -> SpinorField<f64> {
        let map = DofMap::build(grid, 1, BoundaryConfig::natural()).unwrap();
        let mut f = SpinorField::zeros(&map);
        for j in 0..=grid.nt {
            for i in 0..=grid.nx {
                let (x, t) = grid.node_coords(i, j);
                let v = massless_exact(packet, x, t);
                for comp in 0..2 {
                    f.set(i, j, comp, DofKind::Value, v[comp]);
                }
            }
        }
        f
    }

    #[test]
    fn error_percent_has_the_expected_fixed_points() {
        let g = grid(16, 8);
        let packet = GaussianPacket::benchmark(0.8);
        let exact = exact_field(&g, &packet);
        assert!(l2_error_percent(&exact, &exact).unwrap() < 1e-12);

        let map = DofMap::build(&g, 1, BoundaryConfig::natural()).unwrap();
        let zero = SpinorField::zeros(&map);
        assert!((l2_error_percent(&zero, &exact).unwrap() - 100.0).abs() < 1e-12);

        let mut scaled = exact.clone();
        for j in 0..=g.nt {
            for i in 0..=g.nx {
                for comp in 0..2 {
                    let v = exact.value(i, j, comp);
                    scaled.set(i, j, comp, DofKind::Value, v * 1.1);
                }
            }
        }
        assert!((l2_error_percent(&scaled, &exact).unwrap() - 10.0).abs() < 1e-12);

        assert!(matches!(l2_error_percent(&exact, &zero), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn exact_solution_moves_at_light_speed() {
        let g = grid(256, 16);
        let packet = GaussianPacket::benchmark(1.1);
        let f = exact_field(&g, &packet);
        let speed = centroid_speed(&g, &f).unwrap();
        assert!((speed + 1.0).abs() < 1e-3, "speed {speed}");
    }

    #[test]
    fn shifted_rows_read_as_double_speed() {
        // Place the packet two lattice sites further left on each time row:
        // dx = dt here, so the displacement reads as speed 2.
        let g = SpaceTimeGrid::build(256, 16, 0.0, 1.6, 0.1, 0.0).unwrap();
        let packet = GaussianPacket::benchmark(1.1);
        let map = DofMap::build(&g, 1, BoundaryConfig::natural()).unwrap();
        let mut f = SpinorField::zeros(&map);
        for j in 0..=g.nt {
            for i in 0..=g.nx {
                let (x, _) = g.node_coords(i, j);
                let shifted = x + 2.0 * g.dx() * j as f64;
                let v = packet.profile(shifted);
                for comp in 0..2 {
                    f.set(i, j, comp, DofKind::Value, v);
                }
            }
        }
        let speed = centroid_speed(&g, &f).unwrap();
        assert!((speed.abs() - 2.0).abs() < 1e-3, "speed {speed}");
    }

    #[test]
    fn time_constant_fields_do_not_move() {
        let g = grid(64, 8);
        let packet = GaussianPacket::benchmark(0.8);
        let map = DofMap::build(&g, 1, BoundaryConfig::natural()).unwrap();
        let mut f = SpinorField::zeros(&map);
        for j in 0..=g.nt {
            for i in 0..=g.nx {
                let (x, _) = g.node_coords(i, 0);
                let v = packet.profile(x);
                for comp in 0..2 {
                    f.set(i, j, comp, DofKind::Value, v);
                }
            }
        }
        assert!(centroid_speed(&g, &f).unwrap().abs() < 1e-12);

        let empty = SpinorField::zeros(&map);
        assert!(centroid_speed(&g, &empty).is_err());
    }

    #[test]
    fn checkerboard_detector_separates_nyquist_from_smooth() {
        let g = grid(64, 16);
        let packet = GaussianPacket::benchmark(0.8);
        let map = DofMap::build(&g, 1, BoundaryConfig::natural()).unwrap();

        let mut nyquist = SpinorField::zeros(&map);
        for j in 0..=g.nt {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            for i in 0..=g.nx {
                for comp in 0..2 {
                    nyquist.set(i, j, comp, DofKind::Value, Complex::new(sign, 0.0));
                }
            }
        }
        assert!((checkerboard_amplitude(&g, &nyquist) - 1.0).abs() < 1e-12);

        let smooth = exact_field(&g, &packet);
        let amp = checkerboard_amplitude(&g, &smooth);
        assert!(amp < 0.05, "smooth amplitude {amp}");

        let zero = SpinorField::zeros(&map);
        assert_eq!(checkerboard_amplitude(&g, &zero), 0.0);
    }

    #[test]
    fn interpolated_error_sees_between_node_curvature() {
        // Nodally exact data still misses the oracle between nodes; the
        // interpolated measure must shrink like h^2 under refinement while
        // the nodal measure stays at zero.
        let packet = GaussianPacket::benchmark(0.5);
        let mut errs = Vec::new();
        for nx in [32usize, 64, 128] {
            let g = SpaceTimeGrid::build(nx, nx / 2, 0.0, 1.6, 0.8, 0.0).unwrap();
            let f = exact_field(&g, &packet);
            let err = interpolated_error_percent(SchemeTag::LagrangeLinear, &g, &f, 2, |x, t| {
                massless_exact(&packet, x, t)
            })
            .unwrap();
            errs.push(err);
        }
        assert!(errs[0] > 4.0 * 0.8 * errs[1], "{errs:?}");
        assert!(errs[1] > 4.0 * 0.8 * errs[2], "{errs:?}");

        let g = grid(8, 4);
        let f = exact_field(&g, &packet);
        assert!(interpolated_error_percent(SchemeTag::HermitePoly, &g, &f, 2, |x, t| {
            massless_exact(&packet, x, t)
        })
        .is_err());
    }
}
