//! Exact rational linear algebra: row reduction and linear solving.
//!
//! Matrices here are plain `Vec<Vec<Rat>>` row lists; these routines are
//! the workhorse behind basis coordinates, characteristic submodels, the
//! cohomology ring reduction, and model equivalence.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{Int, IntegerMatrix};

/// Arbitrary-precision rational used throughout the crate.
pub type Rat = BigRational;

/// Converts an integer to a rational.
pub fn rat(x: &Int) -> Rat {
    Rat::from_integer(x.clone())
}

/// Converts an integer matrix into rational rows.
pub fn rat_rows(m: &IntegerMatrix) -> Vec<Vec<Rat>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(rat).collect())
        .collect()
}

/// Reduces `rows` to reduced row echelon form in place, scanning columns in
/// the order given by `column_order`.  Returns the pivot columns in scan
/// order.  Rows may have any common length; zero rows sink to the bottom.
pub fn rref_with_column_order(rows: &mut Vec<Vec<Rat>>, column_order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for &col in column_order {
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = rows[next_row][col].recip();
        for v in rows[next_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in 0..rows[r].len() {
                    let delta = &factor * &rows[next_row][j];
                    rows[r][j] = &rows[r][j] - delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    // Drop rows that reduced to zero.
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    pivots
}

/// Reduced row echelon form with the natural left-to-right column scan.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let order: Vec<usize> = (0..width).collect();
    rref_with_column_order(rows, &order)
}

/// Solves `A · x = b` exactly over the rationals, where `A` is given as an
/// integer matrix.  Returns `None` when the system is inconsistent; free
/// variables (if any) are set to zero.
pub fn solve(a: &IntegerMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "shape mismatch in linear solve");
    let cols = a.cols();
    let mut aug: Vec<Vec<Rat>> = (0..a.rows())
        .map(|i| {
            let mut row: Vec<Rat> = a.row(i).iter().map(rat).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let order: Vec<usize> = (0..cols).collect();
    let pivots = rref_with_column_order(&mut aug, &order);
    // Inconsistent iff a surviving row is zero except in the augmented column.
    for row in &aug {
        if row[..cols].iter().all(Zero::is_zero) && !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (rank, &col) in pivots.iter().enumerate() {
        x[col] = aug[rank][cols].clone();
    }
    Some(x)
}

/// Solves `A · x = b` for an integer right-hand side.
pub fn solve_int(a: &IntegerMatrix, b: &[Int]) -> Option<Vec<Rat>> {
    let rb: Vec<Rat> = b.iter().map(rat).collect();
    solve(a, &rb)
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "non-square matrix");
    let mut m = rows.to_vec();
    let mut result = Rat::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rat::zero();
        };
        if p != k {
            m.swap(k, p);
            result = -result;
        }
        result *= m[k][k].clone();
        let inv = m[k][k].recip();
        let (top, below) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in below.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] * &inv;
            for (x, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *x = &*x - &factor * p;
            }
        }
    }
    result
}

/// Sign of a rational number as -1, 0, or +1.
pub fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// The fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn fract(x: &Rat) -> Rat {
    x - x.floor()
}

/// True when the rational is an integer.
pub fn is_integral(x: &Rat) -> bool {
    x.is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn solve_unique_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1.
        let a = IntegerMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        let b = [q(3, 1), q(1, 1)];
        assert_eq!(solve(&a, &b), Some(vec![q(2, 1), q(1, 1)]));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = IntegerMatrix::from_rows(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&a, &[q(1, 1), q(3, 1)]), None);
        // Consistent overdetermined system.
        let a = IntegerMatrix::from_rows(&[vec![1], vec![2]]);
        assert_eq!(solve(&a, &[q(1, 2), q(1, 1)]), Some(vec![q(1, 2)]));
    }

    #[test]
    fn rref_reports_pivots_in_scan_order() {
        let mut rows = vec![
            vec![q(0, 1), q(1, 1), q(1, 1)],
            vec![q(1, 1), q(0, 1), q(1, 1)],
        ];
        let pivots = rref_with_column_order(&mut rows, &[2, 1, 0]);
        assert_eq!(pivots, vec![2, 1]);
        // Fully reduced: each pivot column has a single 1.
        for &p in &pivots {
            let nonzero: Vec<_> = rows.iter().filter(|r| !r[p].is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
            assert_eq!(*nonzero[0].get(p).unwrap(), q(1, 1));
        }
    }

    #[test]
    fn rational_determinant() {
        let rows = vec![vec![q(1, 2), q(1, 1)], vec![q(1, 1), q(1, 2)]];
        assert_eq!(det(&rows), q(-3, 4));
        let singular = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(det(&singular), q(0, 1));
    }

    #[test]
    fn fractional_parts() {
        assert_eq!(fract(&q(3, 2)), q(1, 2));
        assert_eq!(fract(&q(-1, 2)), q(1, 2));
        assert_eq!(fract(&q(2, 1)), q(0, 1));
    }
}
