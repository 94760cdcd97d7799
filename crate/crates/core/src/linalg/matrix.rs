use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest dimension `tensor` will produce unless told otherwise.
pub const DEFAULT_MAX_DIM: usize = 1024;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("empty matrix {rows}×{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}×{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows of real entries.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0))).collect();
        Self::from_vec(n_rows, n_cols, data)
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn trace(&self) -> Complex64 {
        self.diagonal().into_iter().sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * factor).collect() }
    }

    /// Largest `|a_ij − b_ij|`; `None` when the shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// Largest `|a_ij − conj(a_ji)|`; infinite for non-square matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0_f64;
        for r in 0..self.rows {
            for c in r..self.cols {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Returns the matrix with tensor factors permuted: output site `k` is
    /// input site `order[k]`.
    pub fn permute_sites(&self, dims: &[usize], order: &[usize]) -> Result<Self> {
        check_site_dims(self, dims)?;
        let n = dims.len();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
            return Err(Error::Argument(format!("{order:?} is not a permutation of {n} sites")));
        }
        let new_dims: Vec<usize> = order.iter().map(|&s| dims[s]).collect();
        let old_strides = strides(dims);
        let dim = self.rows;
        // map new flat index -> old flat index
        let mut map = vec![0usize; dim];
        for (new_idx, slot) in map.iter_mut().enumerate() {
            let digits = split_index(new_idx, &new_dims);
            *slot = order.iter().zip(&digits).map(|(&site, &d)| d * old_strides[site]).sum();
        }
        let mut out = Self::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                out[(r, c)] = self[(map[r], map[c])];
            }
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}×{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Normalized state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    amplitudes: Vec<Complex64>,
}

impl Ket {
    /// Normalizes `amplitudes`; fails on an empty or zero vector.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if amplitudes.is_empty() || !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::Argument("ket must have a finite, nonzero norm".into()));
        }
        Ok(Self { amplitudes: amplitudes.into_iter().map(|z| z / norm).collect() })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Wraps amplitudes as given, without normalizing. Consumers that need a
    /// unit vector check the norm themselves.
    pub fn from_raw(amplitudes: Vec<Complex64>) -> Self {
        Self { amplitudes }
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::Argument(format!("basis index {index} out of range for dim {dim}")));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> ComplexMatrix {
        let n = self.dim();
        let mut m = ComplexMatrix::zeros(n, n);
        for (r, a) in self.amplitudes.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (c, b) in self.amplitudes.iter().enumerate() {
                m[(r, c)] = a * b.conj();
            }
        }
        m
    }

    /// Applies `op` to the ket (as a column vector).
    pub fn apply(&self, op: &ComplexMatrix) -> Result<Ket> {
        if op.cols() != self.dim() {
            return Err(Error::Shape(format!(
                "operator with {} columns applied to a {}-dim ket",
                op.cols(),
                self.dim()
            )));
        }
        let amplitudes =
            (0..op.rows()).map(|r| (0..op.cols()).map(|c| op[(r, c)] * self.amplitudes[c]).sum()).collect();
        Ok(Ket { amplitudes })
    }
}

/// Kronecker product `a ⊗ b` with the row index of `a` as the slow index.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    tensor_bounded(a, b, DEFAULT_MAX_DIM)
}

/// [`tensor`] with an explicit cap on either output dimension.
pub fn tensor_bounded(a: &ComplexMatrix, b: &ComplexMatrix, max_dim: usize) -> Result<ComplexMatrix> {
    let rows = a.rows.checked_mul(b.rows);
    let cols = a.cols.checked_mul(b.cols);
    let (rows, cols) = match (rows, cols) {
        (Some(r), Some(c)) if r <= max_dim && c <= max_dim => (r, c),
        (r, c) => {
            return Err(Error::Dimension {
                requested: r.unwrap_or(usize::MAX).max(c.unwrap_or(usize::MAX)),
                max: max_dim,
            })
        }
    };
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let x = a[(ar, ac)];
            if x == ZERO {
                continue;
            }
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out[(ar * b.rows + br, ac * b.cols + bc)] = x * b[(br, bc)];
                }
            }
        }
    }
    Ok(out)
}

/// Traces out every site not listed in `keep`. The result's sites appear in
/// the order given by `keep`.
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    check_site_dims(rho, dims)?;
    if keep.is_empty() {
        return Err(Error::Argument("partial trace must keep at least one site".into()));
    }
    let n = dims.len();
    let mut seen = vec![false; n];
    for &k in keep {
        if k >= n {
            return Err(Error::Argument(format!("site {k} out of range for {n} sites")));
        }
        if std::mem::replace(&mut seen[k], true) {
            return Err(Error::Argument(format!("site {k} listed twice in keep")));
        }
    }
    let traced: Vec<usize> = (0..n).filter(|s| !seen[*s]).collect();

    let st = strides(dims);
    let keep_dims: Vec<usize> = keep.iter().map(|&s| dims[s]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&s| dims[s]).collect();
    let out_dim: usize = keep_dims.iter().product();
    let traced_dim: usize = traced_dims.iter().product();

    let offsets = |sites: &[usize], site_dims: &[usize], count: usize| -> Vec<usize> {
        (0..count).map(|i| split_index(i, site_dims).iter().zip(sites).map(|(&d, &s)| d * st[s]).sum()).collect()
    };
    let keep_off = offsets(keep, &keep_dims, out_dim);
    let traced_off = offsets(&traced, &traced_dims, traced_dim);

    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for (r, &kr) in keep_off.iter().enumerate() {
        for (c, &kc) in keep_off.iter().enumerate() {
            out[(r, c)] = traced_off.iter().map(|&t| rho[(kr + t, kc + t)]).sum();
        }
    }
    Ok(out)
}

fn check_site_dims(rho: &ComplexMatrix, dims: &[usize]) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::Shape(format!("{}×{} matrix is not square", rho.rows, rho.cols)));
    }
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Shape(format!("invalid site dimensions {dims:?}")));
    }
    let total = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    if total != Some(rho.rows) {
        return Err(Error::Shape(format!("site dimensions {dims:?} do not multiply to {}", rho.rows)));
    }
    Ok(())
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut st = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        st[k] = st[k + 1] * dims[k + 1];
    }
    st
}

/// Mixed-radix digits of `index`, most significant first.
fn split_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
    digits
}
