//! Smith and Hermite normal forms with unimodular transforms.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{Int, IntegerMatrix};

/// A Smith normal form decomposition `U · A · V = D`.
///
/// `D` is diagonal with non-negative entries `d_1 | d_2 | …`; `U` and `V`
/// are unimodular.  `u_inv` is the exact inverse of `U`, maintained during
/// the reduction; it is what turns diagonal coordinates back into ambient
/// ones when enumerating quotient groups.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `D` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Number of nonzero diagonal entries, i.e. the rank of `A`.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries greater than one, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.diagonal()
            .into_iter()
            .filter(|d| d.abs() > Int::from(1))
            .collect()
    }
}

/// Computes the Smith normal form of `A`.
///
/// Pivots are chosen as the smallest nonzero entry in absolute value of the
/// remaining submatrix (first occurrence in row-major order), which makes
/// the reduction deterministic.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let rn = a.rows();
    let cn = a.cols();
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(rn);
    let mut u_inv = IntegerMatrix::identity(rn);
    let mut v = IntegerMatrix::identity(cn);

    // Row operation on `d` mirrored into `u` and (inversely) `u_inv`.
    fn row_add(
        d: &mut IntegerMatrix,
        u: &mut IntegerMatrix,
        u_inv: &mut IntegerMatrix,
        dst: usize,
        src: usize,
        c: &Int,
    ) {
        d.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        u_inv.add_col_multiple(src, dst, &-c.clone());
    }
    fn row_swap(
        d: &mut IntegerMatrix,
        u: &mut IntegerMatrix,
        u_inv: &mut IntegerMatrix,
        a: usize,
        b: usize,
    ) {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    }

    let mut t = 0;
    while t < rn.min(cn) {
        // Bring the smallest nonzero entry of the trailing submatrix to (t, t).
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rn {
            for j in t..cn {
                if d.get(i, j).is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => d.get(i, j).abs() < d.get(pi, pj).abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break; // trailing submatrix is zero
        };
        row_swap(&mut d, &mut u, &mut u_inv, t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot.
            let mut col_restart = true;
            while col_restart {
                col_restart = false;
                for i in t + 1..rn {
                    if d.get(i, t).is_zero() {
                        continue;
                    }
                    let q = d.get(i, t) / d.get(t, t);
                    row_add(&mut d, &mut u, &mut u_inv, i, t, &-q);
                    if !d.get(i, t).is_zero() {
                        // Remainder is smaller than the pivot: promote it.
                        row_swap(&mut d, &mut u, &mut u_inv, t, i);
                        col_restart = true;
                    }
                }
            }
            // Clear row t right of the pivot.
            let mut row_restart = true;
            while row_restart {
                row_restart = false;
                for j in t + 1..cn {
                    if d.get(t, j).is_zero() {
                        continue;
                    }
                    let q = d.get(t, j) / d.get(t, t);
                    d.add_col_multiple(j, t, &-q.clone());
                    v.add_col_multiple(j, t, &-q);
                    if !d.get(t, j).is_zero() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        row_restart = true;
                    }
                }
            }
            // Column swaps can resurrect entries below the pivot.
            if (t + 1..rn).any(|i| !d.get(i, t).is_zero()) {
                continue;
            }
            // Pivot must divide the whole trailing submatrix.
            let p = d.get(t, t).clone();
            let offender = (t + 1..rn)
                .find(|&i| (t + 1..cn).any(|j| !d.get(i, j).mod_floor(&p).is_zero()));
            match offender {
                Some(i) => {
                    let one = Int::from(1);
                    row_add(&mut d, &mut u, &mut u_inv, t, i, &one);
                }
                None => break,
            }
        }
        t += 1;
    }

    for i in 0..rn.min(cn) {
        if d.get(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
            u_inv.negate_col(i);
        }
    }

    debug_assert_eq!(u.mul(a).mul(&v), d);
    debug_assert!(u.mul(&u_inv).is_identity());
    SmithDecomposition { d, u, v, u_inv }
}

/// Computes the row-style Hermite normal form `H` of `A` together with a
/// unimodular `U` such that `U · A = H`.
///
/// `H` is in row echelon form with positive pivots and with the entries
/// above each pivot reduced into `[0, pivot)`; zero rows sink to the
/// bottom.  The nonzero rows are the canonical basis of the row lattice.
pub fn hnf(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let rn = a.rows();
    let cn = a.cols();
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(rn);
    let mut pivot_row = 0;

    for col in 0..cn {
        if pivot_row == rn {
            break;
        }
        // Euclidean reduction within the column until one entry survives.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rn {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => h.get(i, col).abs() < h.get(b, col).abs(),
                };
                if better {
                    best = Some(i);
                }
            }
            let Some(b) = best else {
                break;
            };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut reduced_all = true;
            for i in pivot_row + 1..rn {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = h.get(i, col) / h.get(pivot_row, col);
                h.add_row_multiple(i, pivot_row, &-q.clone());
                u.add_row_multiple(i, pivot_row, &-q);
                if !h.get(i, col).is_zero() {
                    reduced_all = false;
                }
            }
            if reduced_all {
                break;
            }
        }
        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // Reduce entries above the pivot into [0, pivot).
        let p = h.get(pivot_row, col).clone();
        for i in 0..pivot_row {
            let q = h.get(i, col).div_floor(&p);
            h.add_row_multiple(i, pivot_row, &-q.clone());
            u.add_row_multiple(i, pivot_row, &-q);
        }
        pivot_row += 1;
    }

    debug_assert_eq!(u.mul(a), h);
    (h, u)
}

/// The nonzero rows of the Hermite normal form of `A`: the canonical basis
/// of the lattice generated by the rows of `A`.
pub fn hnf_row_basis(a: &IntegerMatrix) -> Vec<Vec<Int>> {
    let (h, _) = hnf(a);
    (0..h.rows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .map(|i| h.row(i).to_vec())
        .collect()
}
