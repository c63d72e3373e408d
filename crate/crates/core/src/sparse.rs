//! Complex sparse matrices in compressed sparse row form.
//!
//! Assembly accumulates (row, col, value) triplets in a deterministic order;
//! finalization keeps the insertion order stable while merging duplicates,
//! so repeated assemblies of the same experiment produce bit-identical
//! matrices.

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Triplet accumulator for building a [`CsrMatrix`].
#[derive(Debug, Clone)]
pub struct TripletBuilder<S: Scalar> {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<(usize, usize, Complex<S>)>,
}

impl<S: Scalar> TripletBuilder<S> {
    pub fn new(n_rows: usize, n_cols: usize) -> Self {
        Self { n_rows, n_cols, entries: Vec::new() }
    }

    pub fn push(&mut self, row: usize, col: usize, value: Complex<S>) {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        self.entries.push((row, col, value));
    }

    /// Merge duplicates (summing in insertion order), drop exact zeros and
    /// compress.
    pub fn finish(mut self) -> CsrMatrix<S> {
        // Stable sort keeps equal keys in insertion order, which fixes the
        // floating-point summation order.
        self.entries.sort_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; self.n_rows + 1];
        let mut col_idx = Vec::new();
        let mut values: Vec<Complex<S>> = Vec::new();
        let mut k = 0;
        while k < self.entries.len() {
            let (r, c, mut v) = self.entries[k];
            k += 1;
            while k < self.entries.len() && self.entries[k].0 == r && self.entries[k].1 == c {
                v += self.entries[k].2;
                k += 1;
            }
            if v.re != S::zero() || v.im != S::zero() {
                row_ptr[r + 1] += 1;
                col_idx.push(c);
                values.push(v);
            }
        }
        for r in 0..self.n_rows {
            row_ptr[r + 1] += row_ptr[r];
        }
        CsrMatrix { n_rows: self.n_rows, n_cols: self.n_cols, row_ptr, col_idx, values }
    }
}

/// Compressed sparse row complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix<S: Scalar> {
    n_rows: usize,
    n_cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<Complex<S>>,
}

impl<S: Scalar> CsrMatrix<S> {
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Column indices and values of one row.
    pub fn row(&self, r: usize) -> (&[usize], &[Complex<S>]) {
        let lo = self.row_ptr[r];
        let hi = self.row_ptr[r + 1];
        (&self.col_idx[lo..hi], &self.values[lo..hi])
    }

    /// Stored entry at `(r, c)`, or zero.
    pub fn get(&self, r: usize, c: usize) -> Complex<S> {
        let (cols, vals) = self.row(r);
        match cols.binary_search(&c) {
            Ok(k) => vals[k],
            Err(_) => S::czero(),
        }
    }

    /// `y = A x`.
    pub fn mul_vec(&self, x: &[Complex<S>]) -> Vec<Complex<S>> {
        let mut y = vec![S::czero(); self.n_rows];
        self.mul_vec_into(x, &mut y);
        y
    }

    pub fn mul_vec_into(&self, x: &[Complex<S>], y: &mut [Complex<S>]) {
        assert_eq!(x.len(), self.n_cols, "spmv operand length");
        assert_eq!(y.len(), self.n_rows, "spmv output length");
        for r in 0..self.n_rows {
            let mut acc = S::czero();
            let lo = self.row_ptr[r];
            let hi = self.row_ptr[r + 1];
            for k in lo..hi {
                acc += self.values[k] * x[self.col_idx[k]];
            }
            y[r] = acc;
        }
    }

    /// `y = A^H x` (conjugate transpose product), scattered row by row.
    pub fn mul_adjoint_into(&self, x: &[Complex<S>], y: &mut [Complex<S>]) {
        assert_eq!(x.len(), self.n_rows, "adjoint spmv operand length");
        assert_eq!(y.len(), self.n_cols, "adjoint spmv output length");
        y.fill(S::czero());
        for r in 0..self.n_rows {
            let lo = self.row_ptr[r];
            let hi = self.row_ptr[r + 1];
            for k in lo..hi {
                y[self.col_idx[k]] += self.values[k].conj() * x[r];
            }
        }
    }

    /// All stored triplets in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Complex<S>)> + '_ {
        (0..self.n_rows).flat_map(move |r| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals.iter()).map(move |(&c, &v)| (r, c, v))
        })
    }

    /// Write the matrix in MatrixMarket coordinate complex general format.
    pub fn write_matrix_market<W: std::io::Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "%%MatrixMarket matrix coordinate complex general")?;
        writeln!(w, "{} {} {}", self.n_rows, self.n_cols, self.nnz())?;
        for (r, c, v) in self.iter() {
            writeln!(w, "{} {} {:e} {:e}", r + 1, c + 1, v.re, v.im)?;
        }
        Ok(())
    }

    /// Parse MatrixMarket coordinate complex general data (used by the
    /// round-trip tests and external tooling).
    pub fn read_matrix_market<R: std::io::BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Dimension("empty MatrixMarket stream".into()))??;
        if !header.starts_with("%%MatrixMarket matrix coordinate complex general") {
            return Err(Error::Dimension(format!("unsupported MatrixMarket header: {header}")));
        }
        let mut size_line = None;
        for line in lines.by_ref() {
            let line = line?;
            if !line.starts_with('%') && !line.trim().is_empty() {
                size_line = Some(line);
                break;
            }
        }
        let size_line = size_line.ok_or_else(|| Error::Dimension("missing size line".into()))?;
        let mut it = size_line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Dimension(format!("bad size line: {size_line}")))
        };
        let n_rows = parse(it.next())?;
        let n_cols = parse(it.next())?;
        let nnz = parse(it.next())?;
        let mut builder = TripletBuilder::new(n_rows, n_cols);
        let mut seen = 0usize;
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let r: usize = parse(it.next())?;
            let c: usize = parse(it.next())?;
            let re: f64 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Dimension(format!("bad entry line: {line}")))?;
            let im: f64 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Dimension(format!("bad entry line: {line}")))?;
            builder.push(r - 1, c - 1, Complex::new(S::from_f64_const(re), S::from_f64_const(im)));
            seen += 1;
        }
        if seen != nnz {
            return Err(Error::Dimension(format!("expected {nnz} entries, found {seen}")));
        }
        Ok(builder.finish())
    }
}

/// Euclidean norm of a complex vector.
pub fn norm2<S: Scalar>(v: &[Complex<S>]) -> S {
    v.iter().map(|z| z.norm_sqr()).fold(S::zero(), |a, b| a + b).sqrt()
}

/// Conjugated dot product `<a, b> = sum conj(a_k) b_k`.
pub fn dot<S: Scalar>(a: &[Complex<S>], b: &[Complex<S>]) -> Complex<S> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.conj() * y).fold(S::czero(), |acc, z| acc + z)
}

/// `y += alpha * x`.
pub fn axpy<S: Scalar>(y: &mut [Complex<S>], alpha: Complex<S>, x: &[Complex<S>]) {
    debug_assert_eq!(y.len(), x.len());
    for (yk, xk) in y.iter_mut().zip(x) {
        *yk += alpha * *xk;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn duplicates_merge_and_zeros_drop() {
        let mut b = TripletBuilder::new(2, 2);
        b.push(0, 0, c(1.0, 0.0));
        b.push(0, 0, c(2.0, 1.0));
        b.push(1, 1, c(1.0, -1.0));
        b.push(1, 1, c(-1.0, 1.0));
        b.push(0, 1, c(0.5, 0.0));
        let m = b.finish();
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.get(0, 0), c(3.0, 1.0));
        assert_eq!(m.get(1, 1), c(0.0, 0.0));
        assert_eq!(m.get(0, 1), c(0.5, 0.0));
    }

    #[test]
    fn spmv_matches_dense_product() {
        let mut b = TripletBuilder::new(3, 3);
        b.push(0, 1, c(0.0, 1.0));
        b.push(1, 0, c(2.0, 0.0));
        b.push(1, 2, c(-1.0, 0.5));
        b.push(2, 2, c(3.0, -2.0));
        let m = b.finish();
        let x = vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0)];
        let y = m.mul_vec(&x);
        assert_eq!(y[0], c(0.0, 2.0));
        assert_eq!(y[1], c(2.0, 2.0) + c(-1.0, 0.5) * c(0.0, -1.0));
        assert_eq!(y[2], c(3.0, -2.0) * c(0.0, -1.0));
    }

    #[test]
    fn matrix_market_round_trip_is_exact() {
        let mut b = TripletBuilder::new(3, 2);
        b.push(0, 0, c(1.25, -0.5));
        b.push(2, 1, c(1.0 / 3.0, 7.0e-17));
        b.push(1, 1, c(-2.0, 1.0e300));
        let m = b.finish();
        let mut buf = Vec::new();
        m.write_matrix_market(&mut buf).unwrap();
        let back = CsrMatrix::<f64>::read_matrix_market(std::io::BufReader::new(&buf[..])).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn norms_and_dots() {
        let a = vec![c(3.0, 4.0), c(0.0, 0.0)];
        assert_eq!(norm2(&a), 5.0);
        let b = vec![c(0.0, 1.0), c(1.0, 0.0)];
        // <a, b> = conj(3+4i) * i = (3-4i) i = 4 + 3i
        assert_eq!(dot(&a, &b), c(4.0, 3.0));
    }
}
