//! Experiment driver and diagnostics: error norms, propagation-speed and
//! checkerboard measurements, reference-table reproduction, rotation
//! sweeps, and the file formats the command-line front end emits.

pub mod diagnostics;
pub mod experiment;
pub mod io;
pub mod sweep;
pub mod tables;

pub use diagnostics::{
    centroid_speed, checkerboard_amplitude, interpolated_error_percent, l2_error_percent,
};
pub use experiment::{
    default_boundary, default_domain, exact_solution_field, report_is_finite, run_experiment,
    ExperimentConfig, ExperimentReport,
};
pub use sweep::{rotation_sweep, run_all, sweep_configs};
pub use tables::{expected_matrix_size, reference_table, table_configs, ReferenceTable, TableRow};
