//! Dense exact linear algebra over the rational-function field.

use crate::error::{AdoError, Result};
use crate::ring::{Color, WeightRat};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    color: Color,
    rows: usize,
    cols: usize,
    data: Vec<WeightRat>,
}

impl Matrix {
    pub fn zeros(color: Color, rows: usize, cols: usize) -> Self {
        Matrix {
            color,
            rows,
            cols,
            data: vec![WeightRat::zero(color); rows * cols],
        }
    }

    pub fn identity(color: Color, n: usize) -> Self {
        let mut m = Self::zeros(color, n, n);
        for i in 0..n {
            m[(i, i)] = WeightRat::one(color);
        }
        m
    }

    pub fn from_fn(
        color: Color,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> WeightRat,
    ) -> Self {
        let mut m = Self::zeros(color, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn color(&self) -> Color {
        self.color
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

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.color, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = &*a + b;
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = &*a - b;
        }
        out
    }

    pub fn scale(&self, c: &WeightRat) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn trace(&self) -> WeightRat {
        assert!(self.is_square());
        let mut acc = WeightRat::zero(self.color);
        for i in 0..self.rows {
            acc = &acc + &self[(i, i)];
        }
        acc
    }

    pub fn pow(&self, mut k: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.color, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rows and columns restricted to the given index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.color, rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.color, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let b = &rhs[(p, q)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + p, j * rhs.cols + q)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Gauss–Jordan inverse; fails on singular input.
    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(self.color, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(AdoError::SingularBlock)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].inverse()?;
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &p;
                inv[(col, j)] = &inv[(col, j)] * &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    a[(r, j)] = &a[(r, j)] - &(&f * &a[(col, j)]);
                    inv[(r, j)] = &inv[(r, j)] - &(&f * &inv[(col, j)]);
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by fraction-bearing Gaussian elimination.
    pub fn determinant(&self) -> WeightRat {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = WeightRat::one(self.color);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return WeightRat::zero(self.color);
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -&det;
            }
            let p = a[(col, col)].clone();
            det = &det * &p;
            let pinv = p.inverse().expect("pivot nonzero");
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &pinv;
                for j in col..n {
                    a[(r, j)] = &a[(r, j)] - &(&f * &a[(col, j)]);
                }
            }
        }
        det
    }

    /// A basis of the right nullspace, one kernel vector per returned column.
    pub fn nullspace(&self) -> Matrix {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.color, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out[(fc, k)] = WeightRat::one(self.color);
            for (r, &pc) in pivots.iter().enumerate() {
                out[(pc, k)] = -&rref[(r, fc)];
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and the pivot column indices.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                a.swap_rows(p, row);
            }
            let inv = a[(row, col)].inverse().expect("pivot nonzero");
            for j in col..a.cols {
                a[(row, j)] = &a[(row, j)] * &inv;
            }
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in col..a.cols {
                    a[(r, j)] = &a[(r, j)] - &(&f * &a[(row, j)]);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = WeightRat;
    fn index(&self, (i, j): (usize, usize)) -> &WeightRat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut WeightRat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl std::ops::Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = -&*a;
        }
        out
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
