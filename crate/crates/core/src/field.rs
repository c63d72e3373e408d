//! Discrete spinor fields over a space-time lattice.

use num_complex::Complex;

use crate::dof::{DofKind, DofMap};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// All degrees of freedom of a two-component spinor over the lattice, in
/// the same node-major order the assembled operators use.
#[derive(Debug, Clone)]
pub struct SpinorField<S: Scalar> {
    pub nx: usize,
    pub nt: usize,
    pub dofs_per_node: usize,
    values: Vec<Complex<S>>,
}

impl<S: Scalar> SpinorField<S> {
    pub fn zeros(map: &DofMap) -> Self {
        Self {
            nx: map.nx,
            nt: map.nt,
            dofs_per_node: map.dofs_per_node,
            values: vec![S::czero(); map.total_dofs()],
        }
    }

    /// Wrap a full coefficient vector, rejecting wrong lengths and
    /// non-finite entries.
    pub fn from_values(map: &DofMap, values: Vec<Complex<S>>) -> Result<Self> {
        if values.len() != map.total_dofs() {
            return Err(Error::Dimension(format!(
                "field length {} does not match {} dofs",
                values.len(),
                map.total_dofs()
            )));
        }
        if let Some(k) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::Dimension(format!("non-finite field entry at dof {k}")));
        }
        Ok(Self { nx: map.nx, nt: map.nt, dofs_per_node: map.dofs_per_node, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex<S>] {
        &self.values
    }

    fn idx(&self, i: usize, j: usize, comp: usize, kind: DofKind) -> usize {
        debug_assert!(i <= self.nx && j <= self.nt && comp < 2);
        debug_assert!(kind.index() < self.dofs_per_node);
        let node = j * (self.nx + 1) + i;
        (node * 2 + comp) * self.dofs_per_node + kind.index()
    }

    /// Nodal value of one spinor component.
    pub fn value(&self, i: usize, j: usize, comp: usize) -> Complex<S> {
        self.values[self.idx(i, j, comp, DofKind::Value)]
    }

    /// Both spinor components at a node.
    pub fn spinor(&self, i: usize, j: usize) -> [Complex<S>; 2] {
        [self.value(i, j, 0), self.value(i, j, 1)]
    }

    pub fn get(&self, i: usize, j: usize, comp: usize, kind: DofKind) -> Complex<S> {
        self.values[self.idx(i, j, comp, kind)]
    }

    pub fn set(&mut self, i: usize, j: usize, comp: usize, kind: DofKind, v: Complex<S>) {
        let k = self.idx(i, j, comp, kind);
        self.values[k] = v;
    }

    pub fn set_dof(&mut self, dof: usize, v: Complex<S>) {
        self.values[dof] = v;
    }

    pub fn dof_value(&self, dof: usize) -> Complex<S> {
        self.values[dof]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dof::BoundaryConfig;
    use crate::grid::SpaceTimeGrid;
    use num_complex::Complex;

    #[test]
    fn rejects_bad_vectors() {
        let g = SpaceTimeGrid::build(4, 4, 0.0, 1.0, 1.0, 0.0).unwrap();
        let map = DofMap::build(&g, 1, BoundaryConfig::natural()).unwrap();
        assert!(SpinorField::from_values(&map, vec![Complex::new(0.0, 0.0); 3]).is_err());
        let mut vals = vec![Complex::new(0.0, 0.0); map.total_dofs()];
        vals[7] = Complex::new(f64::NAN, 0.0);
        assert!(SpinorField::from_values(&map, vals).is_err());
    }

    #[test]
    fn indexing_matches_dof_map() {
        let g = SpaceTimeGrid::build(5, 3, 0.0, 1.0, 1.0, 0.0).unwrap();
        let map = DofMap::build(&g, 3, BoundaryConfig::natural()).unwrap();
        let mut f = SpinorField::<f64>::zeros(&map);
        let v = Complex::new(2.5, -1.0);
        f.set(3, 2, 1, DofKind::DtSlope, v);
        assert_eq!(f.dof_value(map.dof(3, 2, 1, DofKind::DtSlope)), v);
        assert_eq!(f.get(3, 2, 1, DofKind::DtSlope), v);
        assert_eq!(f.value(3, 2, 1), Complex::new(0.0, 0.0));
    }
}
