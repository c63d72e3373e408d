//! Scalar abstraction: the crate works in `f32` or `f64`.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar types the solvers accept.
///
/// This is a closed alias over `f32`/`f64`: everything the crate needs from
/// a scalar (transcendentals, conversions from literals, assignment ops) in
/// one bound.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Shorthand for lossy conversion from `f64` constants.
    ///
    /// Panics only for values outside the target type's range, which cannot
    /// happen for the fixed constants this crate feeds it.
    fn from_f64_const(v: f64) -> Self {
        Self::from_f64(v).expect("constant representable in scalar type")
    }

    /// `0 + 0i` in the matching complex type.
    fn czero() -> Complex<Self> {
        Complex::new(Self::zero(), Self::zero())
    }

    /// `0 + 1i` in the matching complex type.
    fn ci() -> Complex<Self> {
        Complex::new(Self::zero(), Self::one())
    }

    /// Real number promoted to complex.
    fn creal(v: Self) -> Complex<Self> {
        Complex::new(v, Self::zero())
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// 2x2 complex matrix, row major. Small enough to live on the stack; used
/// for spinor blocks and the momentum-space propagator.
pub type Mat2<S> = [[Complex<S>; 2]; 2];

/// Multiply a 2x2 block by a spinor.
pub fn mat2_mul_vec<S: Scalar>(m: &Mat2<S>, v: [Complex<S>; 2]) -> [Complex<S>; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

/// Product of two 2x2 blocks.
pub fn mat2_mul<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> Mat2<S> {
    let mut out = [[S::czero(); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

/// The diagonal spin matrix `[[1, 0], [0, -1]]`.
pub fn sigma0<S: Scalar>() -> Mat2<S> {
    let one = S::creal(S::one());
    [[one, S::czero()], [S::czero(), -one]]
}

/// The off-diagonal spin matrix `[[0, 1], [1, 0]]`.
pub fn sigma1<S: Scalar>() -> Mat2<S> {
    let one = S::creal(S::one());
    [[S::czero(), one], [one, S::czero()]]
}

/// The antisymmetric space-coupling block `[[0, 1], [-1, 0]]`
/// (the product `sigma0 * sigma1`).
pub fn coupling<S: Scalar>() -> Mat2<S> {
    let one = S::creal(S::one());
    [[S::czero(), one], [-one, S::czero()]]
}
