//! One-dimensional shape functions on the reference interval [0, 1].
//!
//! Three families: linear hats, cubic Hermite polynomials, and a
//! trigonometric analogue of the Hermite set. The cubic families carry a
//! value and a slope function per endpoint; tensor products of these build
//! the quadrilateral elements.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Shape-function family for tensor-product elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisFamily {
    /// Linear hats; one value DOF per node.
    LagrangeLinear,
    /// Cubic Hermite polynomials; value and slope DOFs per node.
    HermitePoly,
    /// Trigonometric Hermite analogue; value and slope DOFs per node.
    HermiteTrig,
}

impl BasisFamily {
    /// Number of 1-D shape functions (2 for linear, 4 for cubic).
    pub fn n_funcs(self) -> usize {
        match self {
            BasisFamily::LagrangeLinear => 2,
            BasisFamily::HermitePoly | BasisFamily::HermiteTrig => 4,
        }
    }

    /// Scalar DOFs per node and direction (1 value, plus 1 slope for cubics).
    pub fn dofs_per_direction(self) -> usize {
        self.n_funcs() / 2
    }

    /// Default Gauss points per direction: exact for the polynomial
    /// families, converged below 1e-10 for the trigonometric one (whose
    /// integrands carry harmonics up to 3 pi on the reference interval).
    pub fn quadrature_points(self) -> usize {
        match self {
            BasisFamily::LagrangeLinear => 2,
            BasisFamily::HermitePoly => 4,
            BasisFamily::HermiteTrig => 10,
        }
    }

    /// Minimum admissible Gauss points per direction.
    pub fn min_quadrature_points(self) -> usize {
        match self {
            BasisFamily::LagrangeLinear => 2,
            BasisFamily::HermitePoly => 4,
            BasisFamily::HermiteTrig => 6,
        }
    }

    /// Conversion factor from an analytic derivative to the slope DOF the
    /// interpolant stores, for element size `h`: the slope function's unit
    /// derivative at its own node.
    ///
    /// With slope functions normalized to derivative `k` at their node
    /// (`k = 3` for the cubic set, `3 pi` for the trigonometric set), a DOF
    /// value `d` contributes `d * k / h` to the interpolant's derivative, so
    /// the sampled DOF is `h * f'(x) / k`.
    pub fn slope_dof_scale<S: Scalar>(self, h: S) -> S {
        let three = S::from_f64_const(3.0);
        match self {
            BasisFamily::LagrangeLinear => S::one(),
            BasisFamily::HermitePoly => h / three,
            BasisFamily::HermiteTrig => h / (three * S::PI()),
        }
    }
}

fn check_reference<S: Scalar>(e: S) -> Result<()> {
    if e < S::zero() || e > S::one() {
        return Err(Error::OutOfReference(e.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// Linear hats: `(1 - e, e)` and their derivatives.
pub fn linear_eval<S: Scalar>(e: S) -> Result<([S; 2], [S; 2])> {
    check_reference(e)?;
    Ok(([S::one() - e, e], [-S::one(), S::one()]))
}

/// The four cubic functions of `family` at `e`, ordered (value-left,
/// slope-left, value-right, slope-right), with derivatives.
pub fn cubic_eval<S: Scalar>(family: BasisFamily, e: S) -> Result<([S; 4], [S; 4])> {
    check_reference(e)?;
    let one = S::one();
    let two = S::from_f64_const(2.0);
    let three = S::from_f64_const(3.0);
    let six = S::from_f64_const(6.0);
    match family {
        BasisFamily::HermitePoly => {
            let u = one - e;
            let values = [
                (one + two * e) * u * u,
                three * e * u * u,
                e * e * (three - two * e),
                three * e * e * (e - one),
            ];
            let derivs = [
                -six * e * u,
                three * u * (one - three * e),
                six * e * u,
                three * e * (three * e - two),
            ];
            Ok((values, derivs))
        }
        BasisFamily::HermiteTrig => {
            let half_pi = S::FRAC_PI_2();
            let pi = S::PI();
            let (sh, ch) = (half_pi * e).sin_cos();
            let (sf, cf) = (pi * e).sin_cos();
            let values = [ch * ch, three * ch * sf, sh * sh, -three * sh * sf];
            let derivs = [
                -half_pi * sf,
                three * (-half_pi * sh * sf + pi * ch * cf),
                half_pi * sf,
                -three * (half_pi * ch * sf + pi * sh * cf),
            ];
            Ok((values, derivs))
        }
        BasisFamily::LagrangeLinear => Err(Error::InvalidConfig(
            "linear family has two shape functions; use linear_eval".into(),
        )),
    }
}

/// Value and derivative of every 1-D function of `family` at `e`, in DOF
/// order: functions of the left node first, then the right node.
///
/// For the linear family that is `[1 - e, e]`; for cubic families
/// `[value-left, slope-left, value-right, slope-right]`.
pub fn family_eval<S: Scalar>(family: BasisFamily, e: S) -> Result<(Vec<S>, Vec<S>)> {
    match family {
        BasisFamily::LagrangeLinear => {
            let (v, d) = linear_eval(e)?;
            Ok((v.to_vec(), d.to_vec()))
        }
        _ => {
            let (v, d) = cubic_eval(family, e)?;
            Ok((v.to_vec(), d.to_vec()))
        }
    }
}
