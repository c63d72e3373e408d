//! Degree-of-freedom numbering and the known/unknown partition.
//!
//! Every lattice node carries `2 * d` complex degrees of freedom: two spinor
//! components times `d` scalar functions per component (`d = 1` for nodal
//! value bases, `d = 3` for bases with value, x-derivative and t-derivative
//! unknowns). Numbering is node-major, then spinor component, then
//! derivative kind, so the block structure of assembled operators follows
//! the lattice layout directly.

use crate::error::Error;
use crate::grid::SpaceTimeGrid;
use crate::scalar::Scalar;
use crate::Result;

/// Derivative kind of a degree of freedom within one spinor component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DofKind {
    Value,
    DxSlope,
    DtSlope,
}

impl DofKind {
    pub fn index(self) -> usize {
        match self {
            DofKind::Value => 0,
            DofKind::DxSlope => 1,
            DofKind::DtSlope => 2,
        }
    }
}

/// Constraint applied along one spatial edge of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SidePolicy {
    /// No constraint; the edge keeps its (one-sided) discrete equations.
    #[default]
    Natural,
    /// Edge values pinned to zero (hard wall).
    DirichletZero,
    /// Edge values pinned to the reference solution (in-flow data on
    /// rotated lattices).
    DirichletExact,
}

/// Which lattice edges are constrained. The initial row `j = 0` is always
/// eliminated; the final row never is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BoundaryConfig {
    pub left: SidePolicy,
    pub right: SidePolicy,
}

impl BoundaryConfig {
    pub fn natural() -> Self {
        Self::default()
    }

    pub fn left_exact() -> Self {
        Self { left: SidePolicy::DirichletExact, right: SidePolicy::Natural }
    }

    pub fn left_zero() -> Self {
        Self { left: SidePolicy::DirichletZero, right: SidePolicy::Natural }
    }
}

/// Node-major numbering of all degrees of freedom on a grid plus the
/// known/unknown split used by matrix partitioning.
#[derive(Debug, Clone)]
pub struct DofMap {
    pub nx: usize,
    pub nt: usize,
    /// Scalar functions per spinor component (1 or 3).
    pub dofs_per_node: usize,
    pub boundary: BoundaryConfig,
    known: Vec<bool>,
    /// Position of each unknown dof in the reduced system; `usize::MAX`
    /// for known dofs.
    reduced_of: Vec<usize>,
    unknown_list: Vec<usize>,
    known_list: Vec<usize>,
}

impl DofMap {
    pub fn build<S: Scalar>(grid: &SpaceTimeGrid<S>, dofs_per_node: usize, boundary: BoundaryConfig) -> Result<Self> {
        if dofs_per_node != 1 && dofs_per_node != 3 {
            return Err(Error::InvalidConfig(format!("dofs_per_node must be 1 or 3, got {dofs_per_node}")));
        }
        if dofs_per_node == 3 && boundary != BoundaryConfig::natural() {
            return Err(Error::InvalidConfig(
                "side Dirichlet policies are only supported for nodal-value bases".into(),
            ));
        }
        let (nx, nt) = (grid.nx, grid.nt);
        let per_node = 2 * dofs_per_node;
        let total = per_node * (nx + 1) * (nt + 1);
        let mut known = vec![false; total];
        let mark_node = |i: usize, j: usize, known: &mut Vec<bool>| {
            let node = j * (nx + 1) + i;
            for d in 0..per_node {
                known[node * per_node + d] = true;
            }
        };
        for i in 0..=nx {
            mark_node(i, 0, &mut known);
        }
        if boundary.left != SidePolicy::Natural {
            for j in 0..=nt {
                mark_node(0, j, &mut known);
            }
        }
        if boundary.right != SidePolicy::Natural {
            for j in 0..=nt {
                mark_node(nx, j, &mut known);
            }
        }
        let mut reduced_of = vec![usize::MAX; total];
        let mut unknown_list = Vec::new();
        let mut known_list = Vec::new();
        for (dof, &k) in known.iter().enumerate() {
            if k {
                known_list.push(dof);
            } else {
                reduced_of[dof] = unknown_list.len();
                unknown_list.push(dof);
            }
        }
        Ok(Self { nx, nt, dofs_per_node, boundary, known, reduced_of, unknown_list, known_list })
    }

    /// Total complex unknowns before partitioning; this is the reported
    /// matrix size.
    pub fn total_dofs(&self) -> usize {
        self.known.len()
    }

    pub fn n_unknown(&self) -> usize {
        self.unknown_list.len()
    }

    pub fn n_known(&self) -> usize {
        self.known_list.len()
    }

    /// Global index of a degree of freedom.
    pub fn dof(&self, i: usize, j: usize, comp: usize, kind: DofKind) -> usize {
        debug_assert!(i <= self.nx && j <= self.nt && comp < 2 && kind.index() < self.dofs_per_node);
        let node = j * (self.nx + 1) + i;
        (node * 2 + comp) * self.dofs_per_node + kind.index()
    }

    /// Global index from a node id (row-major) instead of `(i, j)`.
    pub fn node_dof(&self, node: usize, comp: usize, kind: DofKind) -> usize {
        (node * 2 + comp) * self.dofs_per_node + kind.index()
    }

    /// Lattice node `(i, j)` owning a global dof.
    pub fn node_of(&self, dof: usize) -> (usize, usize) {
        let node = dof / (2 * self.dofs_per_node);
        (node % (self.nx + 1), node / (self.nx + 1))
    }

    /// Spinor component and derivative kind of a global dof.
    pub fn kind_of(&self, dof: usize) -> (usize, usize) {
        let within = dof % (2 * self.dofs_per_node);
        (within / self.dofs_per_node, within % self.dofs_per_node)
    }

    pub fn is_known(&self, dof: usize) -> bool {
        self.known[dof]
    }

    /// Position in the reduced (unknown-only) system, if any.
    pub fn reduced_index(&self, dof: usize) -> Option<usize> {
        let r = self.reduced_of[dof];
        (r != usize::MAX).then_some(r)
    }

    /// Ascending global indices of the unknown dofs.
    pub fn unknown_dofs(&self) -> &[usize] {
        &self.unknown_list
    }

    /// Ascending global indices of the known dofs.
    pub fn known_dofs(&self) -> &[usize] {
        &self.known_list
    }
}
