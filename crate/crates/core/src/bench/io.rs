//! Report serialization and the flat key=value config format shared by
//! config files and command-line flags.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use crate::error::Error;
use crate::field::SpinorField;
use crate::grid::SpaceTimeGrid;
use crate::krylov::SolverChoice;
use crate::scalar::Scalar;
use crate::schemes::SchemeTag;
use crate::Result;

use super::experiment::ExperimentConfig;
use super::experiment::ExperimentReport;

/// Column order of report CSV files: the config echo, then the measured
/// values, matching the report fields.
pub const REPORT_COLUMNS: &str = "scheme,nx,nt,x0,x_max,t_max,theta,mass,a,b,center,solver,tol,\
                                  restart,max_iter,matrix_size,iterations,residual,error_percent,\
                                  centroid_speed,checkerboard_amplitude,wall_seconds";

/// Write reports as CSV in the fixed [`REPORT_COLUMNS`] order.
pub fn write_reports_csv<S: Scalar, W: Write>(
    mut w: W,
    reports: &[ExperimentReport<S>],
) -> Result<()> {
    writeln!(w, "{REPORT_COLUMNS}")?;
    for r in reports {
        let c = &r.config;
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:e},{},{},{},{}",
            c.scheme,
            c.nx,
            c.nt,
            c.x0,
            c.x_max,
            c.t_max,
            c.theta_deg,
            c.mass,
            c.packet.a,
            c.packet.b,
            c.packet.center,
            c.solver.choice,
            c.solver.tol,
            c.solver.restart,
            c.solver.max_iter,
            r.matrix_size,
            r.iterations,
            r.residual,
            r.error_percent,
            r.centroid_speed,
            r.checkerboard_amplitude,
            r.wall_seconds,
        )?;
    }
    Ok(())
}

/// Write the rotation-sweep summary CSV: one row per (angle, mass) run.
pub fn write_sweep_csv<S: Scalar, W: Write>(
    mut w: W,
    reports: &[ExperimentReport<S>],
) -> Result<()> {
    writeln!(w, "angle,mass,iterations,error_percent")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{}",
            r.config.theta_deg, r.config.mass, r.iterations, r.error_percent
        )?;
    }
    Ok(())
}

/// Plain-text dump of a solved field: a header line
/// `nx nt x0 x_max t_max theta`, then one line per node
/// `i j x t re(psi1) im(psi1) re(psi2) im(psi2)`, time-major.
pub fn write_grid_dump<S: Scalar, W: Write>(
    mut w: W,
    grid: &SpaceTimeGrid<S>,
    field: &SpinorField<S>,
) -> Result<()> {
    if field.nx != grid.nx || field.nt != grid.nt {
        return Err(Error::Dimension(format!(
            "field is {}x{} but the grid is {}x{}",
            field.nx, field.nt, grid.nx, grid.nt
        )));
    }
    writeln!(
        w,
        "{} {} {} {} {} {}",
        grid.nx, grid.nt, grid.x0, grid.x_max, grid.t_max, grid.theta_deg
    )?;
    for j in 0..=grid.nt {
        for i in 0..=grid.nx {
            let (x, t) = grid.node_coords(i, j);
            let s = field.spinor(i, j);
            writeln!(
                w,
                "{i} {j} {x} {t} {} {} {} {}",
                s[0].re, s[0].im, s[1].re, s[1].im
            )?;
        }
    }
    Ok(())
}

/// Parse flat `key = value` text: one pair per line, `#` starts a comment,
/// blank lines are skipped, later duplicates win.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (number, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((before, _)) => before.trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::InvalidConfig(format!(
                "line {} is not a key=value pair: '{raw}'",
                number + 1
            )));
        };
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() || value.is_empty() {
            return Err(Error::InvalidConfig(format!(
                "line {} has an empty key or value: '{raw}'",
                number + 1
            )));
        }
        map.insert(key.to_string(), value.to_string());
    }
    Ok(map)
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("{key}: cannot parse '{value}'")))
}

/// Build an experiment config from parsed key=value pairs. Every key is
/// optional; the packet center defaults to 0.5 for massless runs and 0.8
/// for massive ones unless given explicitly. Unknown keys are rejected.
pub fn config_from_map(map: &BTreeMap<String, String>) -> Result<ExperimentConfig<f64>> {
    const KNOWN: [&str; 17] = [
        "scheme", "nx", "nt", "x0", "x-max", "t-max", "theta", "mass", "a", "b", "center", "tol",
        "solver", "restart", "max-iter", "out", "dump-grid",
    ];
    for key in map.keys() {
        if !KNOWN.contains(&key.as_str()) {
            return Err(Error::InvalidConfig(format!(
                "unknown config key '{key}'; expected one of {}",
                KNOWN.join(", ")
            )));
        }
    }
    let get = |key: &str| map.get(key).map(String::as_str);

    let scheme: SchemeTag = match get("scheme") {
        Some(v) => v.parse()?,
        None => SchemeTag::CentralDifference,
    };
    let nx = match get("nx") {
        Some(v) => parse("nx", v)?,
        None => 32,
    };
    let nt = match get("nt") {
        Some(v) => parse("nt", v)?,
        None => 16,
    };
    let mut config = ExperimentConfig::new(scheme, nx, nt);

    if let Some(v) = get("x0") {
        config.x0 = parse("x0", v)?;
    }
    if let Some(v) = get("x-max") {
        config.x_max = parse("x-max", v)?;
    }
    if let Some(v) = get("t-max") {
        config.t_max = parse("t-max", v)?;
    }
    if let Some(v) = get("theta") {
        config.theta_deg = parse("theta", v)?;
    }
    if let Some(v) = get("mass") {
        config.mass = parse("mass", v)?;
    }
    if let Some(v) = get("a") {
        config.packet.a = parse("a", v)?;
    }
    if let Some(v) = get("b") {
        config.packet.b = parse("b", v)?;
    }
    match get("center") {
        Some(v) => config.packet.center = parse("center", v)?,
        None => {
            if config.mass > 0.0 {
                config.packet.center = 0.8;
            }
        }
    }
    if let Some(v) = get("tol") {
        config.solver.tol = parse("tol", v)?;
    }
    if let Some(v) = get("solver") {
        config.solver.choice = v.parse::<SolverChoice>()?;
    }
    if let Some(v) = get("restart") {
        config.solver.restart = parse("restart", v)?;
    }
    if let Some(v) = get("max-iter") {
        config.solver.max_iter = parse("max-iter", v)?;
    }
    if let Some(v) = get("out") {
        config.out_dir = Some(PathBuf::from(v));
    }
    if let Some(v) = get("dump-grid") {
        config.dump_grid = parse("dump-grid", v)?;
    }
    Ok(config)
}
