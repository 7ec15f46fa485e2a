//! Dense integer matrices: fraction-free determinants and Smith normal form.
//!
//! Everything here is generic over the integer type, so the same code runs on
//! machine integers and on `BigInt` when entries may grow.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Integer-like scalar accepted by the matrix kernels.
pub trait IntScalar: Integer + Signed + Clone + fmt::Debug + fmt::Display {}

impl<T> IntScalar for T where T: Integer + Signed + Clone + fmt::Debug + fmt::Display {}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: IntScalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * factor.clone();
            self[(dst, j)] = self[(dst, j)].clone() + v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * factor.clone();
            self[(i, dst)] = self[(i, dst)].clone() + v;
        }
    }

    /// Determinant by Bareiss fraction-free elimination. Every intermediate
    /// value is a minor of the input, so growth is bounded by Hadamard.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        if self.is_tridiagonal() {
            return self.tridiagonal_determinant();
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(i, j)].clone() * a[(k, k)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = num / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    pub fn is_tridiagonal(&self) -> bool {
        self.data
            .chunks(self.cols.max(1))
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i.abs_diff(j) <= 1 || x.is_zero()))
    }

    /// Three-term recurrence `D_k = a_kk D_{k-1} - a_{k,k-1} a_{k-1,k} D_{k-2}`.
    fn tridiagonal_determinant(&self) -> T {
        let (mut prev, mut cur) = (T::one(), self[(0, 0)].clone());
        for k in 1..self.rows {
            let next = self[(k, k)].clone() * cur.clone()
                - self[(k, k - 1)].clone() * self[(k - 1, k)].clone() * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Euclid down column `t`, always reducing by the smallest entry.
    fn clear_pivot_column(&mut self, t: usize) {
        loop {
            let k = (t..self.rows)
                .filter(|&i| !self[(i, t)].is_zero())
                .min_by_key(|&i| self[(i, t)].abs())
                .expect("pivot column is nonzero");
            self.swap_rows(t, k);
            let mut done = true;
            for i in t + 1..self.rows {
                if self[(i, t)].is_zero() {
                    continue;
                }
                let q = self[(i, t)].div_floor(&self[(t, t)]);
                self.add_row_multiple(i, t, &-q);
                done &= self[(i, t)].is_zero();
            }
            if done {
                return;
            }
        }
    }

    fn clear_pivot_row(&mut self, t: usize) {
        loop {
            let k = (t..self.cols)
                .filter(|&j| !self[(t, j)].is_zero())
                .min_by_key(|&j| self[(t, j)].abs())
                .expect("pivot row is nonzero");
            self.swap_cols(t, k);
            let mut done = true;
            for j in t + 1..self.cols {
                if self[(t, j)].is_zero() {
                    continue;
                }
                let q = self[(t, j)].div_floor(&self[(t, t)]);
                self.add_col_multiple(j, t, &-q);
                done &= self[(t, j)].is_zero();
            }
            if done {
                return;
            }
        }
    }

    /// Diagonal of the Smith normal form: nonnegative invariant factors
    /// d1 | d2 | ... followed by zeros, `min(rows, cols)` entries in total.
    pub fn smith_diagonal(&self) -> Vec<T> {
        let mut a = self.clone();
        let limit = a.rows.min(a.cols);
        for t in 0..limit {
            // smallest nonzero entry in the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..a.rows {
                for j in t..a.cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);

            loop {
                a.clear_pivot_column(t);
                a.clear_pivot_row(t);
                if (t + 1..a.rows).any(|i| !a[(i, t)].is_zero()) {
                    continue;
                }
                // row and column are clear; enforce divisibility of the rest
                let offender = (t + 1..a.rows)
                    .flat_map(|i| (t + 1..a.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
                match offender {
                    Some((i, _)) => a.add_row_multiple(t, i, &T::one()),
                    None => break,
                }
            }
        }
        (0..limit).map(|i| a[(i, i)].abs()).collect()
    }

    pub fn rank(&self) -> usize {
        self.smith_diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The abelian group `Z^cols / rowspace(M)`: free rank plus the nontrivial
/// invariant factors in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H1Invariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl H1Invariants {
    /// Cokernel invariants of an integer matrix. Computed over `BigInt` so
    /// intermediate growth cannot overflow.
    pub fn of_matrix<T: IntScalar + Into<BigInt>>(m: &Matrix<T>) -> Self {
        let big = m.map(|v| v.clone().into());
        Self::from_smith_diagonal(&big.smith_diagonal(), m.ncols())
    }

    fn from_smith_diagonal(diag: &[BigInt], cols: usize) -> Self {
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let torsion = diag
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .map(|d| d.to_u64().expect("invariant factor exceeds u64"))
            .collect();
        H1Invariants {
            torsion,
            free_rank: cols - rank,
        }
    }

    pub fn trivial() -> Self {
        H1Invariants {
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    /// Group order, when finite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for H1Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
