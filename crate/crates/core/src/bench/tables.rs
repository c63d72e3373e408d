//! Published reference tables for the seven schemes: meshes, matrix sizes,
//! iteration counts and error percentages, plus the experiment configs
//! that rerun them. Matrix sizes are exact facts about the discretization;
//! iteration counts and error percentages are solver- and packet-dependent
//! measurements kept for side-by-side comparison, not for equality checks.

use crate::scalar::Scalar;
use crate::schemes::SchemeTag;

use super::experiment::ExperimentConfig;

/// One published mesh row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub nx: usize,
    pub nt: usize,
    pub matrix_size: usize,
    pub iterations: f64,
    /// Achieved residual, only published for the balanced scheme.
    pub residual: Option<f64>,
    pub error_percent: f64,
}

/// One published table: a scheme, its domain and its mesh rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceTable {
    pub scheme: SchemeTag,
    pub x_max: f64,
    pub t_max: f64,
    pub rows: &'static [TableRow],
}

const fn row(nx: usize, nt: usize, size: usize, iters: f64, err: f64) -> TableRow {
    TableRow { nx, nt, matrix_size: size, iterations: iters, residual: None, error_percent: err }
}

const fn row_res(nx: usize, nt: usize, size: usize, iters: f64, res: f64, err: f64) -> TableRow {
    TableRow { nx, nt, matrix_size: size, iterations: iters, residual: Some(res), error_percent: err }
}

const CENTRAL_ROWS: [TableRow; 8] = [
    row(32, 16, 1122, 97.5, 14.38),
    row(48, 24, 2450, 120.5, 6.28),
    row(64, 32, 4290, 161.0, 9.04),
    row(80, 40, 6642, 418.5, 15.37),
    row(64, 16, 2210, 129.0, 76.79),
    row(80, 20, 3402, 250.0, 56.40),
    row(96, 24, 4850, 307.5, 34.36),
    row(112, 28, 6554, 578.5, 38.85),
];

const BALANCED_ROWS: [TableRow; 8] = [
    row_res(32, 16, 1122, 120.0, 0.044, 27.89),
    row_res(48, 24, 2450, 863.0, 0.03, 19.34),
    row_res(64, 32, 4290, 53.5, 0.029, 15.30),
    row_res(80, 40, 6642, 65.0, 0.025, 11.11),
    row_res(64, 16, 2210, 996.0, 0.13, 75.76),
    row_res(80, 20, 3402, 536.0, 0.03, 60.29),
    row_res(96, 24, 4850, 832.0, 0.26, 45.36),
    row_res(112, 28, 6554, 818.0, 0.34, 38.94),
];

const TRIANGLE_ROWS: [TableRow; 8] = [
    row(32, 16, 1122, 2.5, 101.6),
    row(48, 24, 2450, 2.5, 100.9),
    row(64, 32, 4290, 2.5, 100.6),
    row(80, 40, 6642, 2.5, 100.4),
    row(64, 16, 2210, 5.0, 108.45),
    row(80, 20, 3402, 7.0, 108.93),
    row(96, 24, 4850, 4.0, 106.06),
    row(112, 28, 6554, 4.0, 105.49),
];

const HERMITE_ROWS: [TableRow; 6] = [
    row(30, 15, 2976, 961.0, 21.92),
    row(40, 20, 5166, 1801.0, 25.64),
    row(50, 25, 7956, 2888.0, 16.09),
    row(60, 30, 11346, 4221.0, 10.97),
    row(70, 35, 15336, 5113.0, 7.35),
    row(80, 40, 19926, 6186.0, 8.81),
];

const TRIG_ROWS: [TableRow; 6] = [
    row(30, 15, 2976, 1098.0, 6.87),
    row(40, 20, 5166, 1992.0, 5.15),
    row(50, 25, 7956, 3021.0, 4.19),
    row(60, 30, 11346, 4375.0, 3.69),
    row(70, 35, 15336, 5339.0, 3.50),
    row(80, 40, 19926, 6238.0, 3.18),
];

const LAGRANGE_ROWS: [TableRow; 6] = [
    row(48, 24, 2450, 331.0, 4.64),
    row(64, 32, 4290, 679.0, 2.86),
    row(80, 40, 6642, 899.0, 2.22),
    row(96, 48, 9506, 1230.0, 3.07),
    row(112, 56, 12882, 1569.0, 3.49),
    row(128, 64, 16770, 2012.0, 7.67),
];

const DIAMOND_ROWS: [TableRow; 6] = [
    row(24, 48, 2450, 305.0, 1.28),
    row(32, 64, 4290, 621.0, 0.71),
    row(40, 80, 6642, 883.0, 0.46),
    row(48, 96, 9506, 1177.0, 0.32),
    row(56, 112, 12882, 1593.0, 0.23),
    row(64, 128, 16770, 1897.0, 0.18),
];

const TABLES: [ReferenceTable; 7] = [
    ReferenceTable { scheme: SchemeTag::CentralDifference, x_max: 1.6, t_max: 0.8, rows: &CENTRAL_ROWS },
    ReferenceTable { scheme: SchemeTag::BalancedDifference, x_max: 1.6, t_max: 0.8, rows: &BALANCED_ROWS },
    ReferenceTable { scheme: SchemeTag::TriangleLinear, x_max: 1.6, t_max: 0.8, rows: &TRIANGLE_ROWS },
    ReferenceTable { scheme: SchemeTag::HermitePoly, x_max: 1.6, t_max: 0.8, rows: &HERMITE_ROWS },
    ReferenceTable { scheme: SchemeTag::HermiteTrig, x_max: 1.6, t_max: 0.8, rows: &TRIG_ROWS },
    ReferenceTable { scheme: SchemeTag::LagrangeLinear, x_max: 1.6, t_max: 0.8, rows: &LAGRANGE_ROWS },
    ReferenceTable { scheme: SchemeTag::Diamond, x_max: 1.2, t_max: 0.8, rows: &DIAMOND_ROWS },
];

/// The published table for one scheme.
pub fn reference_table(scheme: SchemeTag) -> &'static ReferenceTable {
    TABLES.iter().find(|t| t.scheme == scheme).expect("every scheme has a table")
}

/// Total complex degrees of freedom of a mesh: two spinor components times
/// the scheme's scalar DOFs per node on an `(nx + 1) x (nt + 1)` lattice.
pub fn expected_matrix_size(scheme: SchemeTag, nx: usize, nt: usize) -> usize {
    2 * scheme.dofs_per_node() * (nx + 1) * (nt + 1)
}

/// Experiment configs that rerun a published table: same meshes and
/// domain, default packet, and an iteration budget of ten times the
/// published count at the published tolerance.
pub fn table_configs<S: Scalar>(scheme: SchemeTag) -> Vec<ExperimentConfig<S>> {
    let table = reference_table(scheme);
    table
        .rows
        .iter()
        .map(|r| {
            let mut config = ExperimentConfig::new(scheme, r.nx, r.nt);
            config.x_max = S::from_f64_const(table.x_max);
            config.t_max = S::from_f64_const(table.t_max);
            config.solver.tol = S::from_f64_const(1e-6);
            config.solver.max_iter = (10.0 * r.iterations).ceil() as usize;
            config
        })
        .collect()
}
