//! Dense exact matrices and the Gaussian-elimination kernels.
//!
//! Zero-row and zero-column matrices are first-class citizens: block
//! assembly drops empty index sets by producing 0-dimension blocks, and
//! the rank of an empty matrix is 0.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from integer entries (embedded into the field).
    pub fn from_rows(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> DenseMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        assert_eq!(self.field, rhs.field, "mixed fields");
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn neg(&self) -> DenseMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = v.neg();
        }
        out
    }

    /// Stacks blocks side by side. Row counts must agree.
    pub fn hstack(field: Field, blocks: &[&DenseMatrix]) -> Result<DenseMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        for b in blocks {
            if b.rows != rows {
                return Err(Error::Shape(format!(
                    "hstack: {} rows vs {} rows",
                    b.rows, rows
                )));
            }
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        Ok(out)
    }

    /// Stacks blocks vertically. Column counts must agree.
    pub fn vstack(field: Field, blocks: &[&DenseMatrix]) -> Result<DenseMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape(format!(
                    "vstack: {} cols vs {} cols",
                    b.cols, cols
                )));
            }
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..cols {
                    out.set(off + i, j, b.get(i, j).clone());
                }
            }
            off += b.rows;
        }
        Ok(out)
    }

    /// Assembles a block matrix. Heights must agree along each block row
    /// and widths along each block column; 0-dimension blocks are fine.
    pub fn block(field: Field, grid: &[Vec<&DenseMatrix>]) -> Result<DenseMatrix> {
        for (k, row) in grid.iter().enumerate() {
            for (l, b) in row.iter().enumerate() {
                let expect = grid[0].get(l).map_or(b.cols, |top| top.cols);
                if b.cols != expect {
                    return Err(Error::Shape(format!(
                        "block ({k},{l}): {} cols, block column has {expect}",
                        b.cols
                    )));
                }
            }
        }
        let rows_of: Vec<DenseMatrix> = grid
            .iter()
            .map(|row| DenseMatrix::hstack(field, row))
            .collect::<Result<_>>()?;
        DenseMatrix::vstack(field, &rows_of.iter().collect::<Vec<_>>())
    }

    pub fn block_diag(field: Field, blocks: &[&DenseMatrix]) -> DenseMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    // row[target] += c * row[src]
    fn add_row_multiple(&mut self, target: usize, src: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(target, j).add(&self.get(src, j).mul(c));
            self.set(target, j, v);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(c);
            self.set(r, j, v);
        }
    }

    /// Exact rank by Gaussian elimination with first-nonzero pivoting.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let pivot = (rank..a.rows).find(|&r| !a.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            a.swap_rows(rank, p);
            let inv = a.get(rank, col).inv();
            a.scale_row(rank, &inv);
            for r in 0..a.rows {
                if r != rank && !a.get(r, col).is_zero() {
                    let c = a.get(r, col).neg();
                    a.add_row_multiple(r, rank, &c);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (DenseMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let pivot = (rank..a.rows).find(|&r| !a.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            a.swap_rows(rank, p);
            let inv = a.get(rank, col).inv();
            a.scale_row(rank, &inv);
            for r in 0..a.rows {
                if r != rank && !a.get(r, col).is_zero() {
                    let c = a.get(r, col).neg();
                    a.add_row_multiple(r, rank, &c);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        (a, pivots)
    }

    /// Basis of the right nullspace, one column vector per basis element.
    pub fn nullspace(&self) -> Vec<DenseMatrix> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = DenseMatrix::zeros(self.field, self.cols, 1);
            vec.set(free, 0, self.field.one());
            for (row, &pc) in pivots.iter().enumerate() {
                let coeff = r.get(row, free).neg();
                vec.set(pc, 0, coeff);
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &DenseMatrix) -> Option<DenseMatrix> {
        self.solve_matrix(b)
    }

    /// Solves `self * X = B` for all columns of B at once.
    pub fn solve_matrix(&self, b: &DenseMatrix) -> Option<DenseMatrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = DenseMatrix::hstack(self.field, &[self, b]).expect("rows agree");
        let (r, pivots) = aug.rref();
        // Inconsistent if a pivot lands in the RHS block.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = DenseMatrix::zeros(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Columns listed in `keep`, in order.
    pub fn select_columns(&self, keep: &[usize]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.field, self.rows, keep.len());
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, keep: &[usize]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.field, keep.len(), self.cols);
        for (ii, &i) in keep.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> DenseMatrix {
        self.select_columns(&[j])
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
