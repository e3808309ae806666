//! Exact dense linear algebra over ℚ, ℚ(i) and 𝔽_p.
//!
//! Pivoting always takes the first nonzero entry of the column, so every
//! result here is a deterministic function of the input. Integral systems
//! over ℚ can also be solved over ℤ, see [`Matrix::solve_integral`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar, ScalarKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    kind: ScalarKind,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(kind: ScalarKind, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            kind,
            data: vec![kind.zero(); rows * cols],
        }
    }

    pub fn identity(kind: ScalarKind, n: usize) -> Self {
        let mut m = Self::zeros(kind, n, n);
        for i in 0..n {
            m.data[i * n + i] = kind.one();
        }
        m
    }

    /// Builds a matrix from row-major entries, all of scalar kind `kind`.
    pub fn from_vec(kind: ScalarKind, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.kind() != kind) {
            return Err(Error::IncompatibleScalars(kind, bad.kind()));
        }
        Ok(Matrix {
            rows,
            cols,
            kind,
            data,
        })
    }

    pub fn from_rows(kind: ScalarKind, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::from_vec(kind, rows.len(), cols, rows.concat())
    }

    /// Integer entries, convenient for fixtures and tests.
    pub fn from_i64(kind: ScalarKind, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| kind.from_i64(v)))
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            kind,
            data,
        }
    }

    pub fn column_vector(kind: ScalarKind, entries: Vec<Scalar>) -> Result<Self> {
        let n = entries.len();
        Self::from_vec(kind, n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::IncompatibleScalars(self.kind, other.kind));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x.add(y))
            .collect::<Result<_>>()?;
        Ok(self.with_data(data))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        self.with_data(self.data.iter().map(Scalar::neg).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix> {
        let data = self.data.iter().map(|x| s.mul(x)).collect::<Result<_>>()?;
        Ok(self.with_data(data))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.kind != other.kind {
            return Err(Error::IncompatibleScalars(self.kind, other.kind));
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.kind, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let rhs = other.get(k, j);
                    if rhs.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&lhs.mul(rhs)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.kind, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn conjugate_transpose(&self) -> Matrix {
        let mut out = self.transpose();
        for x in &mut out.data {
            *x = x.conj();
        }
        out
    }

    /// Selects the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.kind, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.kind, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.kind != other.kind {
            return Err(Error::Dimension("hstack needs equal row counts".into()));
        }
        let mut out = Matrix::zeros(self.kind, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols || self.kind != other.kind {
            return Err(Error::Dimension("vstack needs equal column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            kind: self.kind,
            data,
        })
    }

    /// Block-diagonal matrix `diag(a, b)`.
    pub fn block_diagonal(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if a.kind != b.kind {
            return Err(Error::IncompatibleScalars(a.kind, b.kind));
        }
        let mut out = Matrix::zeros(a.kind, a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                out.set(r, c, a.get(r, c).clone());
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                out.set(a.rows + r, a.cols + c, b.get(r, c).clone());
            }
        }
        Ok(out)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            kind: self.kind,
            data,
        }
    }

    fn require_field(&self) -> Result<()> {
        if self.kind.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedScalar(self.kind))
        }
    }

    /// Reduced row echelon form and the ascending list of pivot columns.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        self.require_field()?;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m
                .get(row, col)
                .inverse()
                .ok_or_else(|| Error::Internal("nonzero pivot without inverse".into()))?;
            for c in col..m.cols {
                let v = m.get(row, c).mul(&inv)?;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c))?)?;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok((m, pivots))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Null-space basis from the standard free-variable construction: one
    /// vector per free column, with that variable set to 1 and the other
    /// free variables set to 0.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        let (r, pivots) = self.rref()?;
        Ok(kernel_from_rref(&r, &pivots))
    }

    /// Solves `self · x = rhs`.
    pub fn solve_affine(&self, rhs: &[Scalar]) -> Result<AffineSolution> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has {} entries, system has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        if let Some(bad) = rhs.iter().find(|s| s.kind() != self.kind) {
            return Err(Error::IncompatibleScalars(self.kind, bad.kind()));
        }
        let augmented = self.hstack(&Matrix::column_vector(self.kind, rhs.to_vec())?)?;
        let (r, pivots) = augmented.rref()?;
        let n = self.cols;
        if pivots.last() == Some(&n) {
            return Ok(AffineSolution {
                particular: None,
                kernel: kernel_from_rref(&r.submatrix(0..r.rows, 0..n), &pivots[..pivots.len() - 1]),
            });
        }
        let mut particular = vec![self.kind.zero(); n];
        for (row, &p) in pivots.iter().enumerate() {
            particular[p] = r.get(row, n).clone();
        }
        let coefficient_part = r.submatrix(0..r.rows, 0..n);
        Ok(AffineSolution {
            particular: Some(particular),
            kernel: kernel_from_rref(&coefficient_part, &pivots),
        })
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(self.kind, n))?.rref()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        Ok(Some(r.submatrix(0..n, n..2 * n)))
    }

    /// Multiplies by a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        Ok(self
            .mul(&Matrix::column_vector(self.kind, v.to_vec())?)?
            .into_entries())
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let n = r.cols;
    let kind = r.kind;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![kind.zero(); n];
        v[free] = kind.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = r.get(row, free).neg();
        }
        basis.push(v);
    }
    basis
}

/// Full description of the solution set of `M·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// The solution with every free variable set to zero, when consistent.
    pub particular: Option<Vec<Scalar>>,
    /// Basis of the homogeneous solution space.
    pub kernel: Vec<Vec<Scalar>>,
}

impl AffineSolution {
    pub fn consistent(&self) -> bool {
        self.particular.is_some()
    }
}

fn to_integer(s: &Scalar) -> Result<BigInt> {
    match s {
        Scalar::Rational(r) if r.is_integer() => Ok(r.to_integer()),
        Scalar::Rational(r) => Err(Error::Precondition(format!("entry {r} is not an integer"))),
        other => Err(Error::UnsupportedScalar(other.kind())),
    }
}

fn from_integer(n: BigInt) -> Scalar {
    Scalar::Rational(Rational::from_integer(n))
}

impl Matrix {
    /// Integer solutions of `self · x = rhs` for integral entries: one
    /// particular solution and a basis of the integer kernel lattice.
    ///
    /// Unimodular column operations bring `self` to a column echelon form
    /// `H = self·U`; solutions are `x = U·y` with `H·y = rhs`, where the
    /// pivot part of `y` is forced and the rest is free.
    pub fn solve_integral(&self, rhs: &[Scalar]) -> Result<AffineSolution> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has {} entries, system has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let (r, c) = (self.rows, self.cols);
        let mut h: Vec<Vec<BigInt>> = (0..r)
            .map(|i| self.row(i).iter().map(to_integer).collect())
            .collect::<Result<_>>()?;
        let b: Vec<BigInt> = rhs.iter().map(to_integer).collect::<Result<_>>()?;
        let mut u: Vec<Vec<BigInt>> = (0..c)
            .map(|i| (0..c).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();

        let swap_cols = |m: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
            for row in m.iter_mut() {
                row.swap(x, y);
            }
        };
        // column[dst] -= q · column[src]
        let axpy = |m: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
            for row in m.iter_mut() {
                let delta = &row[src] * q;
                row[dst] -= delta;
            }
        };

        let mut pivot_rows = Vec::new();
        for i in 0..r {
            let p = pivot_rows.len();
            if p == c {
                break;
            }
            while let Some(j) = (p..c).filter(|&j| !h[i][j].is_zero()).min_by_key(|&j| h[i][j].abs()) {
                swap_cols(&mut h, p, j);
                swap_cols(&mut u, p, j);
                let mut cleared = true;
                for j in p + 1..c {
                    if h[i][j].is_zero() {
                        continue;
                    }
                    let q = h[i][j].div_floor(&h[i][p]);
                    axpy(&mut h, j, p, &q);
                    axpy(&mut u, j, p, &q);
                    cleared &= h[i][j].is_zero();
                }
                if cleared {
                    break;
                }
            }
            if !h[i][p].is_zero() {
                pivot_rows.push(i);
            }
        }

        let p = pivot_rows.len();
        let kernel = (p..c)
            .map(|j| u.iter().map(|row| from_integer(row[j].clone())).collect())
            .collect();
        let mut y = vec![BigInt::zero(); p];
        for (t, &i) in pivot_rows.iter().enumerate() {
            let mut s = b[i].clone();
            for (hs, ys) in h[i].iter().zip(&y).take(t) {
                s -= hs * ys;
            }
            let (q, rem) = s.div_rem(&h[i][t]);
            if !rem.is_zero() {
                return Ok(AffineSolution { particular: None, kernel });
            }
            y[t] = q;
        }
        for i in 0..r {
            let lhs: BigInt = h[i].iter().zip(&y).map(|(a, b)| a * b).sum();
            if lhs != b[i] {
                return Ok(AffineSolution { particular: None, kernel });
            }
        }
        let x = u
            .iter()
            .map(|row| from_integer(row.iter().zip(&y).map(|(a, b)| a * b).sum()))
            .collect();
        Ok(AffineSolution { particular: Some(x), kernel })
    }
}

/// Materializes a linear map on `n×n` matrices as an `n²×n²` matrix acting
/// on row-major flattenings.
pub fn operator_matrix<F>(kind: ScalarKind, n: usize, map: F) -> Result<Matrix>
where
    F: Fn(&Matrix) -> Result<Matrix>,
{
    let dim = n * n;
    let mut op = Matrix::zeros(kind, dim, dim);
    for col in 0..dim {
        let mut basis = Matrix::zeros(kind, n, n);
        basis.data[col] = kind.one();
        let image = map(&basis)?;
        if image.rows != n || image.cols != n {
            return Err(Error::Dimension("operator must map n×n to n×n".into()));
        }
        for (row, v) in image.data.into_iter().enumerate() {
            op.set(row, col, v);
        }
    }
    Ok(op)
}

/// Reshapes a length-`n²` vector into an `n×n` matrix.
pub fn unflatten(kind: ScalarKind, n: usize, v: Vec<Scalar>) -> Result<Matrix> {
    Matrix::from_vec(kind, n, n, v)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
