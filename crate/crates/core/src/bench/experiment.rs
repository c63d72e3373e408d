//! Single-experiment driver: build the grid, assemble the chosen scheme,
//! run a Krylov solver, compare against the reference solution and collect
//! the diagnostics into one report row.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rustfft::FftNum;

use crate::analytic::{massless_exact, GaussianPacket, SpectralSolution};
use crate::assembly::assemble;
use crate::dof::{BoundaryConfig, DofKind, DofMap};
use crate::error::Error;
use crate::field::SpinorField;
use crate::grid::{PhysParams, SpaceTimeGrid};
use crate::krylov::{solve, SolveReport, SolverChoice, SolverConfig};
use crate::scalar::Scalar;
use crate::schemes::SchemeTag;
use crate::Result;

use super::diagnostics::{centroid_speed, checkerboard_amplitude, l2_error_percent};
use super::io;

/// Everything one experiment needs: scheme, mesh, domain, physics, packet,
/// boundary policy and solver settings, plus optional file outputs.
#[derive(Debug, Clone)]
pub struct ExperimentConfig<S: Scalar> {
    pub scheme: SchemeTag,
    pub nx: usize,
    pub nt: usize,
    pub x0: S,
    pub x_max: S,
    pub t_max: S,
    pub theta_deg: S,
    pub mass: S,
    pub packet: GaussianPacket<S>,
    /// `None` selects the mass- and angle-dependent default policy.
    pub boundary: Option<BoundaryConfig>,
    pub solver: SolverConfig<S>,
    /// Directory for `report.csv`, `residuals.csv` and the optional dump.
    pub out_dir: Option<PathBuf>,
    /// Also write the solved field as a plain-text grid dump.
    pub dump_grid: bool,
}

impl<S: Scalar> ExperimentConfig<S> {
    /// Massless benchmark setup on the scheme's default domain: packet
    /// a=8, b=4 centered at 0.5, axis-aligned lattice except for the
    /// diamond scheme, which only exists at 45 degrees.
    pub fn new(scheme: SchemeTag, nx: usize, nt: usize) -> Self {
        let (x_max, t_max) = default_domain(scheme);
        let theta = if scheme == SchemeTag::Diamond { 45.0 } else { 0.0 };
        Self {
            scheme,
            nx,
            nt,
            x0: S::zero(),
            x_max,
            t_max,
            theta_deg: S::from_f64_const(theta),
            mass: S::zero(),
            packet: GaussianPacket::benchmark(S::from_f64_const(0.5)),
            boundary: None,
            solver: SolverConfig::default(),
            out_dir: None,
            dump_grid: false,
        }
    }
}

impl<S: Scalar> Default for ExperimentConfig<S> {
    fn default() -> Self {
        Self::new(SchemeTag::CentralDifference, 32, 16)
    }
}

/// Domain extents the reference runs use: `[0, 1.2] x [0, 0.8]` for the
/// diamond lattice and `[0, 1.6] x [0, 0.8]` for everything else.
pub fn default_domain<S: Scalar>(scheme: SchemeTag) -> (S, S) {
    match scheme {
        SchemeTag::Diamond => (S::from_f64_const(1.2), S::from_f64_const(0.8)),
        _ => (S::from_f64_const(1.6), S::from_f64_const(0.8)),
    }
}

/// Boundary policy when the config does not pin one: massive runs wall off
/// the left edge, fully rotated lattices take exact in-flow data on it
/// (their left edge runs along a characteristic, so the one-sided closure
/// rows carry no information), and everything else is left natural.
pub fn default_boundary<S: Scalar>(theta_deg: S, mass: S) -> BoundaryConfig {
    if mass > S::zero() {
        BoundaryConfig::left_zero()
    } else if theta_deg >= S::from_f64_const(45.0 - 1e-9) {
        BoundaryConfig::left_exact()
    } else {
        BoundaryConfig::natural()
    }
}

/// One solved experiment: the config echo plus the measured columns.
#[derive(Debug, Clone)]
pub struct ExperimentReport<S: Scalar> {
    pub config: ExperimentConfig<S>,
    /// Total complex degrees of freedom before partitioning.
    pub matrix_size: usize,
    pub iterations: f64,
    /// Relative residual of the returned iterate.
    pub residual: S,
    pub error_percent: S,
    pub centroid_speed: S,
    pub checkerboard_amplitude: S,
    pub wall_seconds: f64,
}

fn staged<T>(stage: &'static str, result: Result<T>) -> Result<T> {
    result.map_err(|e| Error::Stage { stage, source: Box::new(e) })
}

/// Reference solution sampled at the node value DOFs of `map`: the closed
/// form for massless runs, the spectral propagator otherwise. Slope DOFs
/// stay zero; they are excluded from the nodal error norm.
pub fn exact_solution_field<S: Scalar + FftNum>(
    grid: &SpaceTimeGrid<S>,
    map: &DofMap,
    packet: &GaussianPacket<S>,
    mass: S,
) -> Result<SpinorField<S>> {
    let spectral = if mass > S::zero() {
        let mut x_lo = S::infinity();
        let mut x_hi = S::neg_infinity();
        let mut t_span = S::zero();
        for (i, j) in [(0, 0), (grid.nx, 0), (0, grid.nt), (grid.nx, grid.nt)] {
            let (x, t) = grid.node_coords(i, j);
            x_lo = x_lo.min(x);
            x_hi = x_hi.max(x);
            t_span = t_span.max(t.abs());
        }
        Some(SpectralSolution::new(packet, mass, x_lo, x_hi, t_span, 2048)?)
    } else {
        None
    };
    let mut field = SpinorField::zeros(map);
    for j in 0..=grid.nt {
        for i in 0..=grid.nx {
            let (x, t) = grid.node_coords(i, j);
            let value = match &spectral {
                Some(s) => s.evaluate(x, t),
                None => massless_exact(packet, x, t),
            };
            for comp in 0..2 {
                field.set(i, j, comp, DofKind::Value, value[comp]);
            }
        }
    }
    Ok(field)
}

fn write_outputs<S: Scalar>(
    dir: &Path,
    report: &ExperimentReport<S>,
    solve_report: &SolveReport<S>,
    grid: &SpaceTimeGrid<S>,
    field: &SpinorField<S>,
) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    io::write_reports_csv(
        std::fs::File::create(dir.join("report.csv"))?,
        std::slice::from_ref(report),
    )?;
    let mut residuals = String::from("iteration,residual\n");
    for (k, rel) in &solve_report.history {
        residuals.push_str(&format!("{k},{rel:e}\n"));
    }
    std::fs::write(dir.join("residuals.csv"), residuals)?;
    if report.config.dump_grid {
        io::write_grid_dump(std::fs::File::create(dir.join("grid.txt"))?, grid, field)?;
    }
    Ok(())
}

/// Run one experiment end to end. Solver non-convergence is not an error:
/// the report carries the achieved residual and the caller decides. Errors
/// from the pipeline are labeled with the stage that produced them.
pub fn run_experiment<S: Scalar + FftNum>(config: &ExperimentConfig<S>) -> Result<ExperimentReport<S>> {
    let started = Instant::now();
    if config.dump_grid && config.out_dir.is_none() {
        return Err(Error::Stage {
            stage: "configure",
            source: Box::new(Error::InvalidConfig(
                "grid dumps need an output directory".into(),
            )),
        });
    }
    let params = staged("configure", PhysParams::new(config.mass))?;
    let grid = staged(
        "grid",
        SpaceTimeGrid::build(config.nx, config.nt, config.x0, config.x_max, config.t_max, config.theta_deg),
    )?;
    let boundary = config
        .boundary
        .unwrap_or_else(|| default_boundary(config.theta_deg, config.mass));

    let assembled = staged(
        "assemble",
        assemble(config.scheme, &grid, &params, boundary, &config.packet),
    )?;

    let mut solver = config.solver;
    if solver.choice == SolverChoice::Gmres && solver.restart == 0 {
        solver.restart = assembled.unknown_size().max(1);
    }
    let solve_report = staged("solve", solve(&assembled.reduced, &assembled.rhs, &solver))?;
    let field = staged(
        "solve",
        SpinorField::from_values(&assembled.map, assembled.expand(&solve_report.solution)),
    )?;

    let exact = staged(
        "compare",
        exact_solution_field(&grid, &assembled.map, &config.packet, config.mass),
    )?;
    let error_percent = staged("compare", l2_error_percent(&field, &exact))?;
    let speed = staged("compare", centroid_speed(&grid, &field))?;
    let checkerboard = checkerboard_amplitude(&grid, &field);

    let report = ExperimentReport {
        config: config.clone(),
        matrix_size: assembled.matrix_size(),
        iterations: solve_report.iterations,
        residual: solve_report.residual,
        error_percent,
        centroid_speed: speed,
        checkerboard_amplitude: checkerboard,
        wall_seconds: started.elapsed().as_secs_f64(),
    };
    if let Some(dir) = &config.out_dir {
        staged("write", write_outputs(dir, &report, &solve_report, &grid, &field))?;
    }
    Ok(report)
}

/// `true` when every measured report column is finite.
pub fn report_is_finite<S: Scalar>(report: &ExperimentReport<S>) -> bool {
    report.iterations.is_finite()
        && report.residual.is_finite()
        && report.error_percent.is_finite()
        && report.centroid_speed.is_finite()
        && report.checkerboard_amplitude.is_finite()
        && report.wall_seconds.is_finite()
}
