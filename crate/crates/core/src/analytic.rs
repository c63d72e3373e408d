//! Reference solutions: the closed-form massless solution of the Gaussian
//! initial value problem and an FFT propagator for arbitrary mass.
//!
//! Both references solve the same operator the discrete schemes assemble,
//! `i s0 d/dt - i a d/dx - m`. For equal-component Gaussian data the
//! massless solution is a rigid leftward translation at light speed, which
//! the closed-form kernel reproduces exactly and the spectral propagator
//! reproduces to round-off; that agreement is checked in the tests rather
//! than assumed.

use num_complex::Complex;
use rustfft::{FftNum, FftPlanner};

use crate::error::Error;
use crate::scalar::{mat2_mul_vec, Mat2, Scalar};
use crate::Result;

/// Gaussian wave packet `exp(i pi b (x - c) - a^2 (x - c)^2)`, used as the
/// initial value for both spinor components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket<S: Scalar> {
    /// Inverse width.
    pub a: S,
    /// Momentum parameter; the carrier wavenumber is `pi * b`.
    pub b: S,
    /// Packet center.
    pub center: S,
}

impl<S: Scalar> GaussianPacket<S> {
    pub fn new(a: S, b: S, center: S) -> Self {
        Self { a, b, center }
    }

    /// The packet used by the benchmark tables: `a = 8`, `b = 4`.
    pub fn benchmark(center: S) -> Self {
        Self::new(S::from_f64_const(8.0), S::from_f64_const(4.0), center)
    }

    /// Scalar profile at `x` (identical for both components).
    pub fn profile(&self, x: S) -> Complex<S> {
        let xi = x - self.center;
        let arg = Complex::new(-(self.a * xi) * (self.a * xi), S::PI() * self.b * xi);
        arg.exp()
    }

    /// x-derivative of the profile.
    pub fn profile_dx(&self, x: S) -> Complex<S> {
        let xi = x - self.center;
        let two = S::from_f64_const(2.0);
        let factor = Complex::new(-two * self.a * self.a * xi, S::PI() * self.b);
        factor * self.profile(x)
    }
}

/// Initial spinor: both components carry the same Gaussian profile.
pub fn gaussian_initial<S: Scalar>(packet: &GaussianPacket<S>, x: S) -> [Complex<S>; 2] {
    let v = packet.profile(x);
    [v, v]
}

/// Spatial derivative of the initial spinor.
pub fn gaussian_initial_dx<S: Scalar>(packet: &GaussianPacket<S>, x: S) -> [Complex<S>; 2] {
    let v = packet.profile_dx(x);
    [v, v]
}

/// Time derivative of the solution at `t = 0`, obtained from the operator
/// itself: `d/dt psi = sigma1 d/dx psi - i m s0 psi`.
pub fn initial_dt<S: Scalar>(packet: &GaussianPacket<S>, mass: S, x: S) -> [Complex<S>; 2] {
    let v = gaussian_initial(packet, x);
    let dv = gaussian_initial_dx(packet, x);
    let im_m = Complex::new(S::zero(), mass);
    [dv[1] - im_m * v[0], dv[0] + im_m * v[1]]
}

/// The 2x2 evolution kernel of the massless problem for Gaussian data,
/// evaluated at offset `xi = x - center` and time `t`:
///
/// ```text
///     A = D = (E- + E+) / 2,     B = C = (E+ - E-) / 2,
///     E-+ = exp(-a^2 (t^2 -+ 2 xi t) -+ i b pi t).
/// ```
pub fn massless_kernel<S: Scalar>(a: S, b: S, xi: S, t: S) -> Mat2<S> {
    let two = S::from_f64_const(2.0);
    let a2 = a * a;
    let bpt = S::PI() * b * t;
    let e_minus = Complex::new(-a2 * (t * t - two * xi * t), -bpt).exp();
    let e_plus = Complex::new(-a2 * (t * t + two * xi * t), bpt).exp();
    let half = S::creal(S::from_f64_const(0.5));
    let diag = half * (e_minus + e_plus);
    let off = half * (e_plus - e_minus);
    [[diag, off], [off, diag]]
}

/// Closed-form solution of the massless problem with Gaussian initial data,
/// valid at every space-time point.
pub fn massless_exact<S: Scalar>(packet: &GaussianPacket<S>, x: S, t: S) -> [Complex<S>; 2] {
    let kernel = massless_kernel(packet.a, packet.b, x - packet.center, t);
    mat2_mul_vec(&kernel, gaussian_initial(packet, x))
}

/// Momentum-space propagator over time `t` for wavenumber `p`:
/// `exp(i t (p sigma1 - m s0))`, the plane-wave solution operator of the
/// space-time operator used throughout the crate.
pub fn momentum_propagator<S: Scalar>(p: S, mass: S, t: S) -> Mat2<S> {
    let omega = (p * p + mass * mass).sqrt();
    if omega == S::zero() {
        let one = S::creal(S::one());
        return [[one, S::czero()], [S::czero(), one]];
    }
    let (s, c) = (omega * t).sin_cos();
    let cos = S::creal(c);
    let i_sin_w = Complex::new(S::zero(), s / omega);
    // i sin(wt)/w * (p sigma1 - m s0) + cos(wt) I
    [
        [cos + i_sin_w * S::creal(-mass), i_sin_w * S::creal(p)],
        [i_sin_w * S::creal(p), cos + i_sin_w * S::creal(mass)],
    ]
}

/// Evolve uniformly sampled initial spinors by time `t` with the spectral
/// propagator.
///
/// `samples` live at `x_k = x0 + k * width / n` for `k = 0..n`; `n` must be
/// a power of two. The transform runs on a grid zero-padded to twice the
/// width, centred on the input window, to keep the periodic images from
/// reaching the physical window.
pub fn fourier_oracle<S: Scalar + FftNum>(
    samples: &[[Complex<S>; 2]],
    width: S,
    mass: S,
    t: S,
) -> Result<Vec<[Complex<S>; 2]>> {
    let n = samples.len();
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::SpectralGrid(format!("sample count {n} is not a power of two")));
    }
    if !(width > S::zero()) {
        return Err(Error::SpectralGrid(format!("window width {width} must be positive")));
    }
    let m = 2 * n;
    let mut comp0 = vec![S::czero(); m];
    let mut comp1 = vec![S::czero(); m];
    let offset = n / 2;
    for (k, s) in samples.iter().enumerate() {
        comp0[offset + k] = s[0];
        comp1[offset + k] = s[1];
    }
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(m);
    fwd.process(&mut comp0);
    fwd.process(&mut comp1);

    let padded_width = width + width;
    let two_pi = S::PI() + S::PI();
    for k in 0..m {
        let signed = if k <= m / 2 { k as isize } else { k as isize - m as isize };
        let p = two_pi * S::from_isize(signed).unwrap() / padded_width;
        let u = momentum_propagator(p, mass, t);
        let v = mat2_mul_vec(&u, [comp0[k], comp1[k]]);
        comp0[k] = v[0];
        comp1[k] = v[1];
    }

    let inv = planner.plan_fft_inverse(m);
    inv.process(&mut comp0);
    inv.process(&mut comp1);
    let scale = S::creal(S::one() / S::from_usize(m).unwrap());
    Ok((0..n).map(|k| [comp0[offset + k] * scale, comp1[offset + k] * scale]).collect())
}

/// Spectral reference solution evaluated at arbitrary space-time points.
///
/// Holds the momentum-space transform of the initial packet on a padded
/// window sized so that nothing reaches the periodic boundary within
/// `t_span`; evaluation at `(x, t)` sums the evolved modes directly, so the
/// points need not lie on any grid.
pub struct SpectralSolution<S: Scalar> {
    mass: S,
    x_start: S,
    length: S,
    spectrum: Vec<[Complex<S>; 2]>,
    // Evolved spectrum cache for the most recently used time.
    cached_t: std::cell::Cell<Option<u64>>,
    evolved: std::cell::RefCell<Vec<[Complex<S>; 2]>>,
}

impl<S: Scalar + FftNum> SpectralSolution<S> {
    /// Prepare the transform for evaluations with `x` in `[x_lo, x_hi]` and
    /// `|t| <= t_span`.
    pub fn new(packet: &GaussianPacket<S>, mass: S, x_lo: S, x_hi: S, t_span: S, n: usize) -> Result<Self> {
        if !n.is_power_of_two() || n < 64 {
            return Err(Error::SpectralGrid(format!("sample count {n} is not a power of two >= 64")));
        }
        if !(x_hi > x_lo) {
            return Err(Error::SpectralGrid("empty evaluation window".into()));
        }
        // Signals travel no faster than light; pad by the time span plus a
        // generous tail allowance on both sides.
        let tail = S::from_f64_const(10.0) / packet.a + S::one();
        let pad = t_span.abs() + tail;
        let lo = x_lo.min(packet.center - tail) - pad;
        let hi = x_hi.max(packet.center + tail) + pad;
        let length = hi - lo;
        let mut spectrum: Vec<[Complex<S>; 2]> = (0..n)
            .map(|k| {
                let x = lo + length * S::from_usize(k).unwrap() / S::from_usize(n).unwrap();
                gaussian_initial(packet, x)
            })
            .collect();
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(n);
        let mut c0: Vec<Complex<S>> = spectrum.iter().map(|s| s[0]).collect();
        let mut c1: Vec<Complex<S>> = spectrum.iter().map(|s| s[1]).collect();
        fft.process(&mut c0);
        fft.process(&mut c1);
        for (k, s) in spectrum.iter_mut().enumerate() {
            *s = [c0[k], c1[k]];
        }
        Ok(Self {
            mass,
            x_start: lo,
            length,
            spectrum,
            cached_t: std::cell::Cell::new(None),
            evolved: std::cell::RefCell::new(Vec::new()),
        })
    }

    fn wavenumber(&self, k: usize) -> S {
        let n = self.spectrum.len();
        let signed = if k <= n / 2 { k as isize } else { k as isize - n as isize };
        (S::PI() + S::PI()) * S::from_isize(signed).unwrap() / self.length
    }

    fn refresh_cache(&self, t: S) {
        let bits = t.to_f64().unwrap().to_bits();
        if self.cached_t.get() == Some(bits) {
            return;
        }
        let mut evolved = self.evolved.borrow_mut();
        evolved.clear();
        evolved.extend((0..self.spectrum.len()).map(|k| {
            let u = momentum_propagator(self.wavenumber(k), self.mass, t);
            mat2_mul_vec(&u, self.spectrum[k])
        }));
        self.cached_t.set(Some(bits));
    }

    /// Solution value at one space-time point.
    pub fn evaluate(&self, x: S, t: S) -> [Complex<S>; 2] {
        self.refresh_cache(t);
        let evolved = self.evolved.borrow();
        let n = self.spectrum.len();
        let mut acc = [S::czero(); 2];
        let rel = x - self.x_start;
        for (k, v) in evolved.iter().enumerate() {
            let phase = self.wavenumber(k) * rel;
            let (s, c) = phase.sin_cos();
            let e = Complex::new(c, s);
            acc[0] += e * v[0];
            acc[1] += e * v[1];
        }
        let scale = S::creal(S::one() / S::from_usize(n).unwrap());
        [acc[0] * scale, acc[1] * scale]
    }
}
