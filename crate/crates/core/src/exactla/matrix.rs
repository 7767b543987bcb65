//! Dense matrices over an exact field, with Gaussian elimination as the
//! single workhorse: rank, reduced row echelon form, inverse and kernels.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::field::Field;

/// A dense `rows x cols` matrix, stored row-major. Rows or columns may be
/// zero; a `0 x n` matrix is the generator matrix of the zero subspace.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == width),
            "ragged rows in matrix literal"
        );
        Matrix {
            rows: height,
            cols: width,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| F::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[F]> {
        (0..self.rows).map(|r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    /// Stacks `other` below `self`; the column counts must agree.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack width mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] = out[(r, c)] + a * other[(k, c)];
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduction to the canonical reduced row echelon form.
    /// Returns the rank. Pivots are 1 with zeros above and below; zero rows
    /// sink to the bottom.
    pub fn rref_in_place(&mut self) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(src) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let scale = self[(pivot_row, col)].inv();
            for c in col..self.cols {
                self[(pivot_row, c)] = self[(pivot_row, c)] * scale;
            }
            for r in 0..self.rows {
                if r != pivot_row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)];
                    for c in col..self.cols {
                        let sub = factor * self[(pivot_row, c)];
                        self[(r, c)] = self[(r, c)] - sub;
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place()
    }

    /// Column index of the leading entry of each nonzero row, assuming the
    /// matrix is already in row echelon form.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.row_vecs()
            .filter_map(|row| row.iter().position(|x| !x.is_zero()))
            .collect()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if self.rank() < n {
            return None;
        }
        // Eliminate on [self | I]; the left block has full rank, so all n
        // pivots land there and the right block becomes the inverse.
        let mut work = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                work[(r, c)] = self[(r, c)];
            }
            work[(r, n + r)] = F::one();
        }
        work.rref_in_place();
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = work[(r, n + c)];
            }
        }
        Some(inv)
    }

    /// Basis, as rows, of the left kernel `{ x : x * self = 0 }`.
    pub fn left_kernel(&self) -> Self {
        // x * self = 0  <=>  self^T x^T = 0; solve for the free variables of
        // the transposed system.
        let mut t = self.transpose();
        t.rref_in_place();
        let pivots = t.pivot_cols();
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(free.len(), n);
        for (k, &f) in free.iter().enumerate() {
            out[(k, f)] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                out[(k, p)] = -t[(r, f)];
            }
        }
        out
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Renders rows of cells with right-aligned columns, one `[ .. ]` line per
/// row. Shared by the matrix display and the chart templates.
pub(crate) fn format_cell_rows(rows: &[Vec<String>]) -> String {
    let width = rows.first().map_or(0, Vec::len);
    let mut col_w = vec![0usize; width];
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            col_w[c] = col_w[c].max(cell.len());
        }
    }
    rows.iter()
        .map(|row| {
            let body = row
                .iter()
                .enumerate()
                .map(|(c, cell)| format!("{cell:>w$}", w = col_w[c]))
                .collect::<Vec<_>>()
                .join(" ");
            format!("[{body}]")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 {
            return write!(f, "[]");
        }
        let cells: Vec<Vec<String>> = self
            .row_vecs()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "{}", format_cell_rows(&cells))
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}\n{}", self.rows, self.cols, self)
    }
}
