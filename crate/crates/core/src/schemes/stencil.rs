//! Finite-difference stencils for the first-order space-time operator
//! `i s0 d/dt - i a d/dx - m` with `s0 = diag(1, -1)` and
//! `a = [[0, 1], [-1, 0]]`.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::{coupling, sigma0, Mat2, Scalar};
use crate::Result;

/// Sparse local description of a finite-difference scheme: 2x2 coefficient
/// blocks keyed by node offset `(di, dj)`.
#[derive(Debug, Clone)]
pub struct Stencil<S: Scalar> {
    pub hx: S,
    pub ht: S,
    pub blocks: BTreeMap<(i32, i32), Mat2<S>>,
}

impl<S: Scalar> Stencil<S> {
    /// Block at `(di, dj)`, zero if absent.
    pub fn block(&self, di: i32, dj: i32) -> Mat2<S> {
        self.blocks
            .get(&(di, dj))
            .copied()
            .unwrap_or([[S::czero(); 2]; 2])
    }
}

fn check_spacing<S: Scalar>(hx: S, ht: S) -> Result<()> {
    if !(hx > S::zero()) || !(ht > S::zero()) {
        return Err(Error::InvalidGrid(format!("spacings must be positive, got hx={hx} ht={ht}")));
    }
    Ok(())
}

fn scaled<S: Scalar>(m: &Mat2<S>, f: Complex<S>) -> Mat2<S> {
    let mut out = [[S::czero(); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = m[r][c] * f;
        }
    }
    out
}

fn add_block<S: Scalar>(map: &mut BTreeMap<(i32, i32), Mat2<S>>, key: (i32, i32), m: Mat2<S>) {
    let entry = map.entry(key).or_insert([[S::czero(); 2]; 2]);
    for r in 0..2 {
        for c in 0..2 {
            entry[r][c] += m[r][c];
        }
    }
}

/// Difference weights for a first derivative along one axis: the centered
/// pair when both neighbors exist, otherwise the one-sided pair over the
/// available neighbor. Returned as `(offset, weight)` with weights summing
/// to zero, so every variant is a consistent derivative approximation.
fn derivative_pair<S: Scalar>(h: S, has_lo: bool, has_hi: bool) -> Result<[(i32, S); 2]> {
    let two = S::from_f64_const(2.0);
    match (has_lo, has_hi) {
        (true, true) => {
            let w = S::one() / (two * h);
            Ok([(1, w), (-1, -w)])
        }
        (false, true) => {
            let w = S::one() / h;
            Ok([(1, w), (0, -w)])
        }
        (true, false) => {
            let w = S::one() / h;
            Ok([(0, w), (-1, -w)])
        }
        (false, false) => {
            Err(Error::InvalidGrid("a derivative needs at least one neighbor".into()))
        }
    }
}

/// Central-difference row with edge-aware derivative fallbacks: centered
/// differences along each axis wherever both neighbors exist, one-sided
/// differences on the axis ends, mass on the center node. The `has_*`
/// flags say which neighbors the row may reference.
pub fn central_row_stencil<S: Scalar>(
    hx: S,
    ht: S,
    mass: S,
    has_left: bool,
    has_right: bool,
    has_down: bool,
    has_up: bool,
) -> Result<Stencil<S>> {
    check_spacing(hx, ht)?;
    let i = S::ci();
    let mut blocks = BTreeMap::new();
    // i s0 * d/dt
    for (off, w) in derivative_pair(ht, has_down, has_up)? {
        add_block(&mut blocks, (0, off), scaled(&sigma0::<S>(), i * S::creal(w)));
    }
    // -i a * d/dx
    for (off, w) in derivative_pair(hx, has_left, has_right)? {
        add_block(&mut blocks, (off, 0), scaled(&coupling::<S>(), -(i * S::creal(w))));
    }
    if mass != S::zero() {
        let m = -S::creal(mass);
        add_block(&mut blocks, (0, 0), [[m, S::czero()], [S::czero(), m]]);
    }
    Ok(Stencil { hx, ht, blocks })
}

/// Five-point central-difference discretization: first-order central
/// differences along each axis, mass on the center node.
pub fn central_stencil<S: Scalar>(hx: S, ht: S, mass: S) -> Result<Stencil<S>> {
    central_row_stencil(hx, ht, mass, true, true, true, true)
}

/// Four-corner discretization: both derivatives averaged over the diagonal
/// neighbors, symmetric between space and time, mass on the center node.
pub fn balanced_stencil<S: Scalar>(hx: S, ht: S, mass: S) -> Result<Stencil<S>> {
    check_spacing(hx, ht)?;
    let four = S::from_f64_const(4.0);
    let i = S::ci();
    let mut blocks = BTreeMap::new();
    for di in [-1i32, 1] {
        for dj in [-1i32, 1] {
            let wx = S::from_i32(di).unwrap() / (four * hx);
            let wt = S::from_i32(dj).unwrap() / (four * ht);
            let mut block = scaled(&sigma0::<S>(), i * S::creal(wt));
            let ax = scaled(&coupling::<S>(), -(i * S::creal(wx)));
            for r in 0..2 {
                for c in 0..2 {
                    block[r][c] += ax[r][c];
                }
            }
            add_block(&mut blocks, (di, dj), block);
        }
    }
    if mass != S::zero() {
        let m = -S::creal(mass);
        add_block(&mut blocks, (0, 0), [[m, S::czero()], [S::czero(), m]]);
    }
    Ok(Stencil { hx, ht, blocks })
}
