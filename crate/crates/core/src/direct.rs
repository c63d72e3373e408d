//! Non-Krylov linear solvers: banded LU factorization with partial
//! pivoting for the narrow-band systems the lattice ordering produces, and
//! a conjugate-gradient least-squares fallback that returns the minimum-
//! norm solution of rank-deficient but consistent systems.

use num_complex::Complex;

use crate::error::Error;
use crate::krylov::SolveReport;
use crate::scalar::Scalar;
use crate::sparse::{norm2, CsrMatrix};
use crate::Result;

/// LU factorization of a banded matrix in LAPACK band storage, with `kl`
/// extra rows of fill for the row interchanges of partial pivoting.
#[derive(Debug)]
pub struct BandedLu<S: Scalar> {
    n: usize,
    kl: usize,
    ku: usize,
    /// Column-major band storage with leading dimension `2*kl + ku + 1`;
    /// entry `(i, j)` lives at `ab[j * ld + (kl + ku + i - j)]`.
    ab: Vec<Complex<S>>,
    pivot: Vec<usize>,
}

impl<S: Scalar> BandedLu<S> {
    /// Factor a square sparse matrix, measuring its bandwidths from the
    /// stored entries.
    pub fn factor(a: &CsrMatrix<S>) -> Result<Self> {
        let n = a.n_rows();
        if n != a.n_cols() {
            return Err(Error::Dimension(format!(
                "banded factorization needs a square matrix, got {}x{}",
                n,
                a.n_cols()
            )));
        }
        if n == 0 {
            return Err(Error::Dimension("banded factorization of an empty matrix".into()));
        }
        let mut kl = 0usize;
        let mut ku = 0usize;
        let mut scale = S::zero();
        for (r, c, v) in a.iter() {
            if r > c {
                kl = kl.max(r - c);
            } else {
                ku = ku.max(c - r);
            }
            scale = scale.max(v.norm());
        }
        if !(scale > S::zero()) {
            return Err(Error::Singular { row: 0 });
        }

        let ld = 2 * kl + ku + 1;
        let mut ab = vec![S::czero(); ld * n];
        for (r, c, v) in a.iter() {
            ab[c * ld + (kl + ku + r - c)] = v;
        }

        let tiny = scale * S::epsilon() * S::from_usize(n).unwrap();
        let mut pivot = vec![0usize; n];
        for k in 0..n {
            let reach = (k + kl).min(n - 1);
            let mut p = k;
            let mut best = ab[k * ld + (kl + ku)].norm();
            for r in (k + 1)..=reach {
                let mag = ab[k * ld + (kl + ku + r - k)].norm();
                if mag > best {
                    best = mag;
                    p = r;
                }
            }
            if !(best > tiny) {
                return Err(Error::Singular { row: k });
            }
            pivot[k] = p;
            let span = (k + kl + ku).min(n - 1);
            if p != k {
                for c in k..=span {
                    let ik = c * ld + (kl + ku + k - c);
                    let ip = c * ld + (kl + ku + p - c);
                    ab.swap(ik, ip);
                }
            }
            let diag = ab[k * ld + (kl + ku)];
            for r in (k + 1)..=reach {
                let idx = k * ld + (kl + ku + r - k);
                let m = ab[idx] / diag;
                ab[idx] = m;
                for c in (k + 1)..=span {
                    let upper = ab[c * ld + (kl + ku + k - c)];
                    if upper != S::czero() {
                        let t = c * ld + (kl + ku + r - c);
                        let sub = m * upper;
                        ab[t] -= sub;
                    }
                }
            }
        }
        Ok(Self { n, kl, ku, ab, pivot })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Solve `A x = b` with the stored factors.
    pub fn solve(&self, b: &[Complex<S>]) -> Result<Vec<Complex<S>>> {
        if b.len() != self.n {
            return Err(Error::Dimension(format!(
                "rhs length {} does not match factored dimension {}",
                b.len(),
                self.n
            )));
        }
        let ld = 2 * self.kl + self.ku + 1;
        let off = self.kl + self.ku;
        let mut x = b.to_vec();
        for k in 0..self.n {
            let p = self.pivot[k];
            if p != k {
                x.swap(k, p);
            }
            let reach = (k + self.kl).min(self.n - 1);
            let xk = x[k];
            for r in (k + 1)..=reach {
                let m = self.ab[k * ld + (off + r - k)];
                let sub = m * xk;
                x[r] -= sub;
            }
        }
        for k in (0..self.n).rev() {
            let span = (k + self.kl + self.ku).min(self.n - 1);
            let mut acc = x[k];
            for c in (k + 1)..=span {
                let u = self.ab[c * ld + (off + k - c)];
                if u != S::czero() {
                    acc -= u * x[c];
                }
            }
            x[k] = acc / self.ab[k * ld + off];
        }
        Ok(x)
    }
}

/// Factor and solve in one call.
pub fn banded_solve<S: Scalar>(a: &CsrMatrix<S>, b: &[Complex<S>]) -> Result<Vec<Complex<S>>> {
    BandedLu::factor(a)?.solve(b)
}

/// Minimum-norm least-squares solve by conjugate gradients on the normal
/// equations (CGLS). Starting from zero keeps every iterate inside
/// `range(A^H)`, so for a consistent system the limit is the minimum-norm
/// solution; rank-deficient operators are handled without pivot trouble.
///
/// Residual history rows carry the relative residual `||b - A x|| / ||b||`;
/// iteration counts are whole CGLS steps. Convergence additionally stops on
/// normal-equation stagnation (`||A^H r||` driven to roundoff), which is
/// the natural end state for inconsistent right-hand sides.
pub fn min_norm<S: Scalar>(
    a: &CsrMatrix<S>,
    b: &[Complex<S>],
    tol: S,
    max_iter: usize,
) -> Result<SolveReport<S>> {
    let n_rows = a.n_rows();
    let n = a.n_cols();
    if b.len() != n_rows {
        return Err(Error::Dimension(format!(
            "rhs length {} does not match {} rows",
            b.len(),
            n_rows
        )));
    }
    if !(tol > S::zero()) || !tol.is_finite() {
        return Err(Error::InvalidConfig(format!("least-squares tolerance {tol} must be positive")));
    }
    let bnorm = norm2(b);
    let mut report = SolveReport {
        solution: vec![S::czero(); n],
        iterations: 0.0,
        residual: S::zero(),
        converged: true,
        history: Vec::new(),
    };
    if !(bnorm > S::zero()) {
        return Ok(report);
    }

    let mut r = b.to_vec();
    let mut s = vec![S::czero(); n];
    a.mul_adjoint_into(&r, &mut s);
    let s0 = norm2(&s);
    let mut p = s.clone();
    let mut q = vec![S::czero(); n_rows];
    let mut gamma = s0 * s0;

    let mut converged = false;
    let mut steps = 0usize;
    while steps < max_iter {
        steps += 1;
        a.mul_vec_into(&p, &mut q);
        let qn = norm2(&q);
        if !(qn > S::zero()) {
            break;
        }
        let alpha = gamma / (qn * qn);
        for k in 0..n {
            report.solution[k] += Complex::new(alpha, S::zero()) * p[k];
        }
        for k in 0..n_rows {
            r[k] -= Complex::new(alpha, S::zero()) * q[k];
        }
        a.mul_adjoint_into(&r, &mut s);
        let sn = norm2(&s);
        let rel = norm2(&r) / bnorm;
        report.history.push((steps as f64, rel));
        if rel <= tol {
            converged = true;
            break;
        }
        if sn <= s0 * S::epsilon() {
            break;
        }
        let gamma_next = sn * sn;
        let beta = gamma_next / gamma;
        for k in 0..n {
            p[k] = s[k] + Complex::new(beta, S::zero()) * p[k];
        }
        gamma = gamma_next;
    }

    let mut check = r.clone();
    a.mul_vec_into(&report.solution, &mut check);
    for k in 0..n_rows {
        check[k] = b[k] - check[k];
    }
    report.iterations = steps as f64;
    report.residual = norm2(&check) / bnorm;
    report.converged = converged && report.residual <= tol;
    Ok(report)
}
