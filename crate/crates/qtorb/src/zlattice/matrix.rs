//! Dense matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// A dense `rows × cols` matrix with [`Int`] entries, stored row-major.
///
/// Vectors of a lattice are written as columns; a matrix "whose columns
/// form a basis" is an `ambient_dim × rank` instance of this type.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntegerMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Builds a matrix from machine-integer rows.  Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let int_rows: Vec<Vec<Int>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect();
        Self::from_int_rows(&int_rows)
    }

    /// Builds a matrix from rows of [`Int`].  Panics on ragged input.
    pub fn from_int_rows(rows: &[Vec<Int>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flat_map(|row| row.iter().cloned()).collect(),
        }
    }

    /// Builds a matrix from columns of [`Int`].  Panics on ragged input.
    pub fn from_columns(cols: &[Vec<Int>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = IntegerMatrix::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.cols + j] = v;
    }

    /// The `i`-th row as a slice.
    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// The `j`-th column as an owned vector.
    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// All columns, left to right.
    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// The submatrix keeping the listed columns, in the listed order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let cols: Vec<Vec<Int>> = idx.iter().map(|&j| self.column(j)).collect();
        if cols.is_empty() {
            IntegerMatrix::zero(self.rows, 0)
        } else {
            IntegerMatrix::from_columns(&cols)
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntegerMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product `self · other`.  Panics on shape mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix–vector product `self · v`.  Panics on shape mismatch.
    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .fold(Int::zero(), |s, t| s + t)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Int::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IntegerMatrix::identity(self.rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Determinant by the Bareiss fraction-free algorithm.
    ///
    /// Exact over [`Int`]; the determinant of the empty `0 × 0` matrix is 1.
    /// Panics if the matrix is not square.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, Int::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    // Elementary operations shared by the normal-form algorithms.

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c · row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + c * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += c · col[src]`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) + c * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// Largest absolute value of an entry (zero for an empty matrix).
    pub fn max_abs(&self) -> Int {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Int::zero)
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = Int;

    fn index(&self, (i, j): (usize, usize)) -> &Int {
        self.get(i, j)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(x: i64) -> Int {
        Int::from(x)
    }

    #[test]
    fn product_and_transpose() {
        let a = IntegerMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, IntegerMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(
            a.transpose(),
            IntegerMatrix::from_rows(&[vec![1, 3], vec![2, 4]])
        );
        assert_eq!(a.mul_vec(&[i(1), i(1)]), vec![i(3), i(7)]);
    }

    #[test]
    fn determinants() {
        assert_eq!(IntegerMatrix::identity(3).det(), i(1));
        let a = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(a.det(), i(-8));
        let s = IntegerMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(s.det(), i(-2));
        let singular = IntegerMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(), i(0));
        // Needs a row swap to find the first pivot.
        let p = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(p.det(), i(-1));
        assert_eq!(IntegerMatrix::zero(0, 0).det(), i(1));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion_on_larger_matrix() {
        // 4x4 with a known determinant: block triangular.
        let a = IntegerMatrix::from_rows(&[
            vec![2, 1, 5, -3],
            vec![0, 3, 7, 2],
            vec![0, 0, -1, 4],
            vec![0, 0, 0, 5],
        ]);
        assert_eq!(a.det(), i(-(2 * 3 * 5)));
    }

    #[test]
    fn column_selection() {
        let a = IntegerMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        let s = a.select_columns(&[2, 0]);
        assert_eq!(s, IntegerMatrix::from_rows(&[vec![3, 1], vec![6, 4]]));
        assert_eq!(a.column(1), vec![i(2), i(5)]);
    }
}
