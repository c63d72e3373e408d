//! Complex Krylov solvers for the assembled space-time systems.
//!
//! Both methods start from a zero guess and stop on the relative residual
//! `|b - A x| / |b|`. Reported residuals are always recomputed from the
//! returned solution, never read off the recursion, so a `converged` report
//! is backed by the actual iterate. BiCGSTAB counts half steps: every
//! iteration updates the residual twice, and stopping at the intermediate
//! update reports `k - 0.5`. GMRES restarts after a fixed cycle length and
//! its per-step residual estimates are non-increasing within each cycle.

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::sparse::{axpy, dot, norm2, CsrMatrix};
use crate::Result;

/// Which Krylov method to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverChoice {
    #[default]
    BiCgStab,
    Gmres,
}

impl SolverChoice {
    pub fn tag(self) -> &'static str {
        match self {
            SolverChoice::BiCgStab => "bicgstab",
            SolverChoice::Gmres => "gmres",
        }
    }
}

impl std::str::FromStr for SolverChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bicgstab" => Ok(SolverChoice::BiCgStab),
            "gmres" => Ok(SolverChoice::Gmres),
            other => Err(Error::InvalidConfig(format!(
                "unknown solver '{other}' (expected bicgstab or gmres)"
            ))),
        }
    }
}

impl std::fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Solver settings shared by both methods; `restart` only affects GMRES.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<S: Scalar> {
    pub choice: SolverChoice,
    pub tol: S,
    pub restart: usize,
    pub max_iter: usize,
}

impl<S: Scalar> Default for SolverConfig<S> {
    fn default() -> Self {
        Self {
            choice: SolverChoice::default(),
            tol: S::from_f64_const(1e-6),
            restart: 50,
            max_iter: 10_000,
        }
    }
}

/// Outcome of one linear solve.
#[derive(Debug, Clone)]
pub struct SolveReport<S: Scalar> {
    pub solution: Vec<Complex<S>>,
    /// Iteration count; half-integral for BiCGSTAB stops at the
    /// intermediate residual.
    pub iterations: f64,
    /// Relative residual of `solution`, recomputed from the system.
    pub residual: S,
    pub converged: bool,
    /// `(iteration, relative residual)` per residual update.
    pub history: Vec<(f64, S)>,
}

/// Dispatch on [`SolverConfig::choice`].
pub fn solve<S: Scalar>(
    a: &CsrMatrix<S>,
    b: &[Complex<S>],
    config: &SolverConfig<S>,
) -> Result<SolveReport<S>> {
    match config.choice {
        SolverChoice::BiCgStab => bicgstab(a, b, config.tol, config.max_iter),
        SolverChoice::Gmres => gmres(a, b, config.tol, config.restart, config.max_iter),
    }
}

fn validate<S: Scalar>(a: &CsrMatrix<S>, b: &[Complex<S>], tol: S) -> Result<()> {
    if a.n_rows() != a.n_cols() || a.n_rows() != b.len() {
        return Err(Error::Dimension(format!(
            "system is {}x{} with right-hand side of length {}",
            a.n_rows(),
            a.n_cols(),
            b.len()
        )));
    }
    if !(tol > S::zero()) || !tol.is_finite() {
        return Err(Error::InvalidConfig(format!("tolerance must be positive, got {tol}")));
    }
    let finite = |z: &Complex<S>| z.re.is_finite() && z.im.is_finite();
    if !a.iter().all(|(_, _, v)| finite(&v)) || !b.iter().all(finite) {
        return Err(Error::InvalidConfig("system contains non-finite entries".into()));
    }
    Ok(())
}

fn zero_report<S: Scalar>(n: usize) -> SolveReport<S> {
    SolveReport {
        solution: vec![S::czero(); n],
        iterations: 0.0,
        residual: S::zero(),
        converged: true,
        history: Vec::new(),
    }
}

/// `b - A x` and its norm relative to `bnorm`.
fn true_residual<S: Scalar>(
    a: &CsrMatrix<S>,
    b: &[Complex<S>],
    x: &[Complex<S>],
    bnorm: S,
) -> (Vec<Complex<S>>, S) {
    let mut r = a.mul_vec(x);
    for (rk, bk) in r.iter_mut().zip(b) {
        *rk = *bk - *rk;
    }
    let rel = norm2(&r) / bnorm;
    (r, rel)
}

/// Threshold below which an inner product counts as an exact breakdown.
fn breakdown_floor<S: Scalar>() -> S {
    S::min_positive_value() / S::epsilon()
}

/// Deterministic pseudo-random shadow residual used to restart BiCGSTAB
/// after a breakdown. splitmix64 keeps the refresh reproducible without
/// pulling a generator dependency into the library.
fn shadow_vector<S: Scalar>(n: usize) -> Vec<Complex<S>> {
    let mut state: u64 = 0x243f_6a88_85a3_08d3;
    let mut next = move || {
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z = z ^ (z >> 31);
        let unit = (z >> 11) as f64 / (1u64 << 53) as f64;
        S::from_f64_const(2.0 * unit - 1.0)
    };
    (0..n).map(|_| Complex::new(next(), next())).collect()
}

/// BiCGSTAB with a zero initial guess.
///
/// A vanishing inner product in the recursion triggers one recovery: the
/// true residual is recomputed and the shadow residual is replaced by a
/// fixed pseudo-random vector, which breaks the structured orthogonalities
/// that symmetric initial data produces. A second breakdown is an error;
/// running out of iterations is a non-converged report. Runaway growth of
/// the recursion residual stops the iteration early with a non-converged
/// report so diverging runs still hand back a finite iterate.
pub fn bicgstab<S: Scalar>(
    a: &CsrMatrix<S>,
    b: &[Complex<S>],
    tol: S,
    max_iter: usize,
) -> Result<SolveReport<S>> {
    validate(a, b, tol)?;
    let n = b.len();
    let bnorm = norm2(b);
    if bnorm == S::zero() {
        return Ok(zero_report(n));
    }
    let floor = breakdown_floor::<S>();
    let cap = (S::one() / S::epsilon()).powi(3);
    let one = S::creal(S::one());

    let mut x = vec![S::czero(); n];
    let mut r = b.to_vec();
    let mut rhat = r.clone();
    let mut p = vec![S::czero(); n];
    let mut v = vec![S::czero(); n];
    let mut t = vec![S::czero(); n];
    let (mut rho_prev, mut alpha, mut omega) = (one, one, one);
    let mut history: Vec<(f64, S)> = Vec::new();
    let mut rel = S::one();
    let mut shadow_used = false;

    macro_rules! recover_or_bail {
        ($count:expr) => {{
            if shadow_used {
                return Err(Error::Breakdown {
                    iterations: $count,
                    residual: rel.to_f64().unwrap_or(f64::NAN),
                });
            }
            shadow_used = true;
            let (rt, true_rel) = true_residual(a, b, &x, bnorm);
            r = rt;
            rhat = shadow_vector(n);
            p.fill(S::czero());
            v.fill(S::czero());
            (rho_prev, alpha, omega) = (one, one, one);
            rel = true_rel;
            continue;
        }};
    }

    let mut k = 0usize;
    while k < max_iter {
        k += 1;
        let rho = dot(&rhat, &r);
        if rho.norm() < floor {
            recover_or_bail!(k as f64 - 1.0);
        }
        let beta = (rho / rho_prev) * (alpha / omega);
        for i in 0..n {
            p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        a.mul_vec_into(&p, &mut v);
        let denom = dot(&rhat, &v);
        if denom.norm() < floor {
            recover_or_bail!(k as f64 - 1.0);
        }
        alpha = rho / denom;
        // First half step: s = r - alpha v lives in r.
        for i in 0..n {
            r[i] -= alpha * v[i];
        }
        rel = norm2(&r) / bnorm;
        history.push((k as f64 - 0.5, rel));
        if !(rel <= cap) {
            break;
        }
        if rel <= tol {
            axpy(&mut x, alpha, &p);
            let (rt, true_rel) = true_residual(a, b, &x, bnorm);
            if true_rel <= tol {
                return Ok(SolveReport {
                    solution: x,
                    iterations: k as f64 - 0.5,
                    residual: true_rel,
                    converged: true,
                    history,
                });
            }
            // Recursion drifted from the true residual: resynchronize and
            // keep iterating from the current iterate.
            r = rt;
            rhat = r.clone();
            p.fill(S::czero());
            v.fill(S::czero());
            (rho_prev, alpha, omega) = (one, one, one);
            rel = true_rel;
            continue;
        }
        a.mul_vec_into(&r, &mut t);
        let tt = dot(&t, &t);
        if tt.norm() < floor {
            axpy(&mut x, alpha, &p);
            recover_or_bail!(k as f64 - 0.5);
        }
        omega = dot(&t, &r) / tt;
        if omega.norm() < floor {
            axpy(&mut x, alpha, &p);
            recover_or_bail!(k as f64 - 0.5);
        }
        axpy(&mut x, alpha, &p);
        axpy(&mut x, omega, &r);
        for i in 0..n {
            r[i] -= omega * t[i];
        }
        rel = norm2(&r) / bnorm;
        history.push((k as f64, rel));
        if !(rel <= cap) {
            break;
        }
        if rel <= tol {
            let (rt, true_rel) = true_residual(a, b, &x, bnorm);
            if true_rel <= tol {
                return Ok(SolveReport {
                    solution: x,
                    iterations: k as f64,
                    residual: true_rel,
                    converged: true,
                    history,
                });
            }
            r = rt;
            rhat = r.clone();
            p.fill(S::czero());
            v.fill(S::czero());
            (rho_prev, alpha, omega) = (one, one, one);
            rel = true_rel;
            continue;
        }
        rho_prev = rho;
    }
    let (_, true_rel) = true_residual(a, b, &x, bnorm);
    let iterations = history.last().map_or(0.0, |h| h.0);
    Ok(SolveReport {
        solution: x,
        iterations,
        residual: true_rel,
        converged: true_rel <= tol,
        history,
    })
}

/// Givens rotation `[c, s; -conj(s), c]` with real `c` mapping `(a, b)` with
/// real non-negative `b` onto `(r, 0)`.
fn givens<S: Scalar>(a: Complex<S>, b: S) -> (S, Complex<S>, Complex<S>) {
    if b == S::zero() {
        return (S::one(), S::czero(), a);
    }
    let amag = a.norm();
    if amag == S::zero() {
        return (S::zero(), S::creal(S::one()), S::creal(b));
    }
    let rho = (amag * amag + b * b).sqrt();
    let c = amag / rho;
    let phase = a / S::creal(amag);
    (c, phase.scale(b / rho), phase.scale(rho))
}

/// Restarted GMRES with modified Gram-Schmidt and Givens rotations.
///
/// Within one restart cycle the residual estimates are non-increasing; an
/// Arnoldi breakdown means the Krylov space became invariant and the cycle's
/// least-squares solution is exact.
pub fn gmres<S: Scalar>(
    a: &CsrMatrix<S>,
    b: &[Complex<S>],
    tol: S,
    restart: usize,
    max_iter: usize,
) -> Result<SolveReport<S>> {
    validate(a, b, tol)?;
    if restart == 0 {
        return Err(Error::InvalidConfig("restart length must be at least 1".into()));
    }
    let n = b.len();
    let bnorm = norm2(b);
    if bnorm == S::zero() {
        return Ok(zero_report(n));
    }
    let floor = breakdown_floor::<S>();
    let mut x = vec![S::czero(); n];
    let mut history: Vec<(f64, S)> = Vec::new();
    let mut iter = 0usize;

    loop {
        let (r, rel) = true_residual(a, b, &x, bnorm);
        if rel <= tol || iter >= max_iter {
            return Ok(SolveReport {
                solution: x,
                iterations: iter as f64,
                residual: rel,
                converged: rel <= tol,
                history,
            });
        }
        let beta = norm2(&r);
        let mut basis: Vec<Vec<Complex<S>>> = Vec::with_capacity(restart + 1);
        basis.push(scaled_copy(&r, S::one() / beta));
        let mut h = vec![vec![S::czero(); restart]; restart + 1];
        let mut rot_c: Vec<S> = Vec::with_capacity(restart);
        let mut rot_s: Vec<Complex<S>> = Vec::with_capacity(restart);
        let mut g = vec![S::czero(); restart + 1];
        g[0] = S::creal(beta);
        let mut steps = 0usize;

        for j in 0..restart {
            if iter >= max_iter {
                break;
            }
            iter += 1;
            steps = j + 1;
            let mut w = a.mul_vec(&basis[j]);
            for (i, vi) in basis.iter().enumerate().take(j + 1) {
                let hij = dot(vi, &w);
                h[i][j] = hij;
                axpy(&mut w, -hij, vi);
            }
            let wnorm = norm2(&w);
            for i in 0..j {
                let (c, s) = (rot_c[i], rot_s[i]);
                let top = h[i][j];
                let bot = h[i + 1][j];
                h[i][j] = top.scale(c) + s * bot;
                h[i + 1][j] = bot.scale(c) - s.conj() * top;
            }
            let (c, s, rr) = givens(h[j][j], wnorm);
            rot_c.push(c);
            rot_s.push(s);
            h[j][j] = rr;
            g[j + 1] = -s.conj() * g[j];
            g[j] = g[j].scale(c);
            let estimate = g[j + 1].norm() / bnorm;
            history.push((iter as f64, estimate));
            let invariant = wnorm < floor;
            if !invariant {
                basis.push(scaled_copy(&w, S::one() / wnorm));
            }
            if estimate <= tol || invariant {
                break;
            }
        }

        // Back substitution on the rotated Hessenberg system.
        let mut y = vec![S::czero(); steps];
        for i in (0..steps).rev() {
            let mut sum = g[i];
            for (k, yk) in y.iter().enumerate().skip(i + 1) {
                sum -= h[i][k] * *yk;
            }
            y[i] = sum / h[i][i];
        }
        for (yi, vi) in y.iter().zip(&basis) {
            axpy(&mut x, *yi, vi);
        }
    }
}

fn scaled_copy<S: Scalar>(v: &[Complex<S>], factor: S) -> Vec<Complex<S>> {
    v.iter().map(|z| z.scale(factor)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::GaussianPacket;
    use crate::assembly::assemble;
    use crate::dof::BoundaryConfig;
    use crate::grid::{PhysParams, SpaceTimeGrid};
    use crate::schemes::SchemeTag;
    use crate::sparse::TripletBuilder;
    use nalgebra::{DMatrix, DVector};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn identity(n: usize) -> CsrMatrix<f64> {
        let mut b = TripletBuilder::new(n, n);
        for i in 0..n {
            b.push(i, i, c(1.0, 0.0));
        }
        b.finish()
    }

    /// Diagonally dominant seeded complex system with scattered couplings.
    fn random_system(n: usize, seed: u64, dominance: f64) -> (CsrMatrix<f64>, Vec<Complex<f64>>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut b = TripletBuilder::new(n, n);
        for i in 0..n {
            b.push(i, i, c(dominance + rng.gen_range(0.0..1.0), rng.gen_range(-1.0..1.0)));
            for _ in 0..4 {
                let j = rng.gen_range(0..n);
                if j != i {
                    b.push(i, j, c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)));
                }
            }
        }
        let rhs = (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        (b.finish(), rhs)
    }

    fn dense_lu_solution(a: &CsrMatrix<f64>, b: &[Complex<f64>]) -> Vec<Complex<f64>> {
        let n = b.len();
        let dense = DMatrix::from_fn(n, n, |r, col| a.get(r, col));
        let rhs = DVector::from_column_slice(b);
        let solved = dense.lu().solve(&rhs).expect("dense solve");
        solved.iter().copied().collect()
    }

    fn rel_diff(a: &[Complex<f64>], b: &[Complex<f64>]) -> f64 {
        let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt();
        let den: f64 = b.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        num / den
    }

    #[test]
    fn identity_system_converges_immediately() {
        let n = 6;
        let a = identity(n);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b: Vec<Complex<f64>> =
            (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let report = bicgstab(&a, &b, 1e-12, 50).unwrap();
        assert!(report.converged);
        assert_eq!(report.iterations, 0.5);
        assert!(rel_diff(&report.solution, &b) < 1e-14);

        let report = gmres(&a, &b, 1e-12, 10, 50).unwrap();
        assert!(report.converged);
        assert_eq!(report.iterations, 1.0);
        assert!(rel_diff(&report.solution, &b) < 1e-14);
    }

    #[test]
    fn diagonal_system_has_the_closed_form_solution() {
        let mut builder = TripletBuilder::new(2, 2);
        builder.push(0, 0, c(2.0, 0.0));
        builder.push(1, 1, c(4.0, 0.0));
        let a = builder.finish();
        let b = vec![c(2.0, 0.0), c(4.0, 0.0)];
        for report in [
            bicgstab(&a, &b, 1e-13, 50).unwrap(),
            gmres(&a, &b, 1e-13, 5, 50).unwrap(),
        ] {
            assert!(report.converged);
            assert!((report.solution[0] - c(1.0, 0.0)).norm() < 1e-12);
            assert!((report.solution[1] - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_rhs_returns_zero_without_iterating() {
        let (a, _) = random_system(10, 3, 4.0);
        let b = vec![c(0.0, 0.0); 10];
        for report in [
            bicgstab(&a, &b, 1e-10, 50).unwrap(),
            gmres(&a, &b, 1e-10, 5, 50).unwrap(),
        ] {
            assert!(report.converged);
            assert_eq!(report.iterations, 0.0);
            assert!(report.solution.iter().all(|z| *z == c(0.0, 0.0)));
            assert!(report.history.is_empty());
        }
    }

    #[test]
    fn random_systems_match_the_dense_oracle() {
        let (a, b) = random_system(30, 11, 5.0);
        let exact = dense_lu_solution(&a, &b);
        let bi = bicgstab(&a, &b, 1e-10, 500).unwrap();
        assert!(bi.converged);
        assert!(rel_diff(&bi.solution, &exact) < 1e-6);
        // With restart >= n GMRES is a direct method in exact arithmetic.
        let gm = gmres(&a, &b, 1e-10, 30, 500).unwrap();
        assert!(gm.converged);
        assert!(gm.iterations <= 30.0);
        assert!(rel_diff(&gm.solution, &exact) < 1e-6);
    }

    #[test]
    fn gmres_residual_is_monotone_within_cycles() {
        let (a, b) = random_system(40, 23, 1.5);
        let report = gmres(&a, &b, 1e-12, 5, 400).unwrap();
        assert!(report.converged);
        assert!(report.history.len() > 10, "want several restart cycles");
        for pair in report.history.windows(2) {
            let (it0, r0) = pair[0];
            let (it1, r1) = pair[1];
            let same_cycle = ((it0 as usize - 1) / 5) == ((it1 as usize - 1) / 5);
            if same_cycle {
                assert!(
                    r1 <= r0 * (1.0 + 1e-14) + 1e-300,
                    "residual rose within a cycle: {r0} -> {r1}"
                );
            }
        }
    }

    #[test]
    fn exhausted_budget_reports_non_convergence() {
        let (a, b) = random_system(30, 31, 1.2);
        let report = bicgstab(&a, &b, 1e-12, 1).unwrap();
        assert!(!report.converged);
        assert!(report.residual > 1e-12);
        let report = gmres(&a, &b, 1e-12, 5, 3).unwrap();
        assert!(!report.converged);
        assert_eq!(report.iterations, 3.0);
    }

    #[test]
    fn skew_system_recovers_through_the_shadow_refresh() {
        // With the plain shadow residual the first search direction is
        // exactly orthogonal to the probe; the refreshed shadow breaks the
        // symmetry and the solve finishes.
        let mut builder = TripletBuilder::new(2, 2);
        builder.push(0, 1, c(1.0, 0.0));
        builder.push(1, 0, c(-1.0, 0.0));
        let a = builder.finish();
        let b = vec![c(1.0, 0.0), c(0.0, 0.0)];
        let report = bicgstab(&a, &b, 1e-10, 50).unwrap();
        assert!(report.converged);
        assert!((report.solution[1] - c(1.0, 0.0)).norm() < 1e-10);
        assert!(report.solution[0].norm() < 1e-10);
        let report = gmres(&a, &b, 1e-10, 2, 50).unwrap();
        assert!(report.converged);
        assert!((report.solution[1] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn inconsistent_singular_system_breaks_down_distinctly() {
        // Rank-one system with the right-hand side outside its range: the
        // search direction is annihilated no matter which shadow is used.
        let mut builder = TripletBuilder::new(2, 2);
        builder.push(0, 0, c(1.0, 0.0));
        let a = builder.finish();
        let b = vec![c(0.0, 0.0), c(1.0, 0.0)];
        match bicgstab(&a, &b, 1e-10, 50) {
            Err(Error::Breakdown { .. }) => {}
            other => panic!("expected breakdown, got {other:?}"),
        }
    }

    #[test]
    fn reported_residual_matches_a_recomputation() {
        let (a, b) = random_system(50, 41, 2.0);
        for report in [
            bicgstab(&a, &b, 1e-4, 500).unwrap(),
            gmres(&a, &b, 1e-4, 10, 500).unwrap(),
        ] {
            let mut r = a.mul_vec(&report.solution);
            for (rk, bk) in r.iter_mut().zip(&b) {
                *rk = *bk - *rk;
            }
            let recomputed = norm2(&r) / norm2(&b);
            assert!((report.residual - recomputed).abs() < 1e-13);
            assert!(report.converged);
            assert!(report.residual <= 1e-4);
        }
    }

    #[test]
    fn inputs_are_validated() {
        let (a, b) = random_system(10, 5, 4.0);
        assert!(bicgstab(&a, &b[..5], 1e-10, 50).is_err());
        assert!(bicgstab(&a, &b, 0.0, 50).is_err());
        assert!(gmres(&a, &b, 1e-10, 0, 50).is_err());
        let mut builder = TripletBuilder::new(2, 2);
        builder.push(0, 0, c(f64::NAN, 0.0));
        builder.push(1, 1, c(1.0, 0.0));
        let bad = builder.finish();
        assert!(bicgstab(&bad, &[c(1.0, 0.0), c(1.0, 0.0)], 1e-10, 50).is_err());
    }

    #[test]
    fn assembled_system_matches_the_dense_oracle() {
        // The massive operator is used because the massless central system
        // on an even node count is exactly singular (the centered first
        // derivative decouples the checkerboard sublattices).
        let grid = SpaceTimeGrid::build(16, 8, 0.0, 1.6, 0.8, 0.0).unwrap();
        let params = PhysParams::new(20.0).unwrap();
        let packet = GaussianPacket::benchmark(0.8);
        let sys = assemble(
            SchemeTag::CentralDifference,
            &grid,
            &params,
            BoundaryConfig::natural(),
            &packet,
        )
        .unwrap();
        let exact = dense_lu_solution(&sys.reduced, &sys.rhs);
        let report = bicgstab(&sys.reduced, &sys.rhs, 1e-10, 4000).unwrap();
        assert!(report.converged, "residual {}", report.residual);
        assert!(rel_diff(&report.solution, &exact) < 1e-8);
        let report = gmres(&sys.reduced, &sys.rhs, 1e-10, 50, 4000).unwrap();
        assert!(report.converged);
        assert!(rel_diff(&report.solution, &exact) < 1e-8);
    }
}
