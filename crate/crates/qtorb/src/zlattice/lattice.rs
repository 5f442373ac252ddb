//! Kernels, saturations, and finite quotients of integer lattices.

use num_traits::{One, Zero};
use thiserror::Error;

use super::matrix::{Int, IntegerMatrix};
use super::normal::{hnf, hnf_row_basis, smith_normal_form};
use super::rational::{self, Rat};

/// Errors from lattice quotient construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("sublattice generator {column} does not lie in the ambient lattice")]
    SubNotInAmbient { column: usize },
    #[error("quotient is infinite: sublattice rank {sub_rank} < ambient rank {ambient_rank}")]
    InfiniteQuotient {
        ambient_rank: usize,
        sub_rank: usize,
    },
    #[error("ambient basis columns are not linearly independent")]
    AmbientNotABasis,
}

/// A finite abelian group `⊕ Z/d_i` presented as a lattice quotient `L/M`.
///
/// `coset_reps` lists one representative per element as an integer vector in
/// the space containing `L`; the zero vector comes first and represents the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<Int>,
    order: Int,
    coset_reps: Vec<Vec<Int>>,
}

impl FiniteAbelianGroup {
    /// The trivial group sitting inside `Z^ambient_dim`.
    pub fn trivial(ambient_dim: usize) -> Self {
        FiniteAbelianGroup {
            invariant_factors: Vec::new(),
            order: Int::one(),
            coset_reps: vec![vec![Int::zero(); ambient_dim]],
        }
    }

    /// Invariant factors `d_1 | d_2 | …`, each at least 2.
    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    /// Group order: the product of the invariant factors (1 when empty).
    pub fn order(&self) -> &Int {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    /// One representative per coset; `coset_reps()[0]` is the zero vector.
    pub fn coset_reps(&self) -> &[Vec<Int>] {
        &self.coset_reps
    }
}

/// A basis (as columns) of the integer kernel `{x : A·x = 0}`.
///
/// The kernel of an integer matrix is automatically saturated; the returned
/// basis is canonicalized through the Hermite normal form, so equal kernels
/// yield identical bases.  The result has `cols(A) - rank(A)` columns.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    // Row-reduce the transpose: rows of `w` pairing with zero rows of `h`
    // are a lattice basis of the kernel.
    let (h, w) = hnf(&a.transpose());
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..h.rows() {
        if h.row(i).iter().all(Int::is_zero) {
            rows.push(w.row(i).to_vec());
        }
    }
    if rows.is_empty() {
        return IntegerMatrix::zero(a.cols(), 0);
    }
    let canonical = hnf_row_basis(&IntegerMatrix::from_int_rows(&rows));
    IntegerMatrix::from_int_rows(&canonical).transpose()
}

/// A basis (as columns) of the saturation of the lattice spanned by
/// `generators` inside `Z^ambient_rank`: all integer vectors lying in the
/// rational span of the generators.
pub fn saturation(generators: &[Vec<Int>], ambient_rank: usize) -> IntegerMatrix {
    assert!(
        generators.iter().all(|g| g.len() == ambient_rank),
        "generator length does not match ambient rank"
    );
    if generators.is_empty() {
        return IntegerMatrix::zero(ambient_rank, 0);
    }
    let g = IntegerMatrix::from_int_rows(generators);
    // Vectors orthogonal to the span, then vectors orthogonal to those:
    // the double kernel is exactly the saturated span.
    let orth = kernel_basis(&g);
    kernel_basis(&orth.transpose())
}

/// Rational coordinates of `v` in the column basis `basis`, or `None` when
/// `v` lies outside the rational column span.
pub fn coords_in_basis(basis: &IntegerMatrix, v: &[Int]) -> Option<Vec<Rat>> {
    rational::solve_int(basis, v)
}

/// True when `v` lies in the lattice generated by the columns of `gens`.
///
/// The generators need not be independent: membership is decided against
/// the canonical Hermite basis of the lattice they span.
pub fn lattice_contains(gens: &IntegerMatrix, v: &[Int]) -> bool {
    let rows: Vec<Vec<Int>> = gens.columns();
    if rows.is_empty() {
        return v.iter().all(Int::is_zero);
    }
    let basis_rows = hnf_row_basis(&IntegerMatrix::from_int_rows(&rows));
    if basis_rows.is_empty() {
        return v.iter().all(Int::is_zero);
    }
    let basis = IntegerMatrix::from_int_rows(&basis_rows).transpose();
    match coords_in_basis(&basis, v) {
        Some(coords) => coords.iter().all(rational::is_integral),
        None => false,
    }
}

/// The quotient `L/M` where `L` is spanned by the columns of
/// `ambient_basis` (which must be linearly independent) and `M` by the
/// columns of `sub_generators`, all living in the same `Z^d`.
///
/// Fails when a generator falls outside `L` or when the quotient is
/// infinite (sublattice rank below ambient rank).  Coset representatives
/// are canonical: coordinates range over `[0, d_i)` along a diagonalized
/// basis of `L` and are mapped back to ambient integer vectors, with the
/// zero vector first.
pub fn quotient_group(
    ambient_basis: &IntegerMatrix,
    sub_generators: &IntegerMatrix,
) -> Result<FiniteAbelianGroup, LatticeError> {
    let r = ambient_basis.cols();
    let s = sub_generators.cols();
    assert_eq!(
        ambient_basis.rows(),
        sub_generators.rows(),
        "ambient and sublattice live in different spaces"
    );

    // Ambient columns must be a basis of what they span.
    let ambient_rank = smith_normal_form(ambient_basis).rank();
    if ambient_rank < r {
        return Err(LatticeError::AmbientNotABasis);
    }

    // Express each generator in ambient coordinates; they must be integral.
    let mut coord_cols: Vec<Vec<Int>> = Vec::with_capacity(s);
    for j in 0..s {
        let col = sub_generators.column(j);
        let coords = coords_in_basis(ambient_basis, &col)
            .ok_or(LatticeError::SubNotInAmbient { column: j })?;
        let ints: Option<Vec<Int>> = coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Some(c.to_integer())
                } else {
                    None
                }
            })
            .collect();
        coord_cols.push(ints.ok_or(LatticeError::SubNotInAmbient { column: j })?);
    }

    if r == 0 {
        return Ok(FiniteAbelianGroup::trivial(ambient_basis.rows()));
    }
    let c = if coord_cols.is_empty() {
        IntegerMatrix::zero(r, 0)
    } else {
        IntegerMatrix::from_columns(&coord_cols)
    };

    let snf = smith_normal_form(&c);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    if nonzero < r {
        return Err(LatticeError::InfiniteQuotient {
            ambient_rank: r,
            sub_rank: nonzero,
        });
    }

    let mut factors: Vec<Int> = Vec::new();
    let mut order = Int::one();
    let mut radices: Vec<Int> = Vec::with_capacity(r);
    for d in diag.iter().take(r).cloned() {
        order *= &d;
        if d > Int::one() {
            factors.push(d.clone());
        }
        radices.push(d);
    }

    // Enumerate the box [0,d_1) × … × [0,d_r) in odometer order (last digit
    // fastest), mapping each digit vector back to an ambient integer vector.
    let mut reps: Vec<Vec<Int>> = Vec::new();
    let mut digits = vec![Int::zero(); r];
    loop {
        let in_new_basis = snf.u_inv.mul_vec(&digits);
        reps.push(ambient_basis.mul_vec(&in_new_basis));
        // Increment.
        let mut pos = r;
        while pos > 0 {
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                break;
            }
            digits[pos] = Int::zero();
            if pos == 0 {
                return Ok(FiniteAbelianGroup {
                    invariant_factors: factors,
                    order,
                    coset_reps: reps,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn i(x: i64) -> Int {
        Int::from(x)
    }

    fn iv(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| i(x)).collect()
    }

    #[test]
    fn kernel_of_rank_two_map() {
        let a = IntegerMatrix::from_rows(&[vec![1, 0, -1], vec![0, 1, -1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), iv(&[1, 1, 1]));
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn kernel_with_nontrivial_coefficients() {
        let a = IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), iv(&[1, 1, 2]));
    }

    #[test]
    fn kernel_of_injective_and_zero_maps() {
        assert_eq!(kernel_basis(&IntegerMatrix::identity(3)).cols(), 0);
        let z = IntegerMatrix::zero(0, 2);
        let k = kernel_basis(&z);
        assert_eq!(k.cols(), 2);
        assert!(k.is_identity());
    }

    #[test]
    fn kernel_basis_is_saturated() {
        // Kernel of [2 -2] is spanned by (1,1), not (2,2)-style multiples.
        let a = IntegerMatrix::from_rows(&[vec![2, -2]]);
        let k = kernel_basis(&a);
        assert_eq!(k.column(0), iv(&[1, 1]));
    }

    #[test]
    fn saturation_divides_out_content() {
        let s = saturation(&[iv(&[2, 0])], 2);
        assert_eq!(s.cols(), 1);
        assert_eq!(s.column(0), iv(&[1, 0]));
    }

    #[test]
    fn saturation_of_full_rank_span_is_everything() {
        let s = saturation(&[iv(&[1, 1]), iv(&[1, -1])], 2);
        assert!(s.is_identity());
    }

    #[test]
    fn saturation_of_empty_set_is_rank_zero() {
        let s = saturation(&[], 2);
        assert_eq!((s.rows(), s.cols()), (2, 0));
    }

    #[test]
    fn saturation_is_idempotent_and_contains_generators() {
        let gens = vec![iv(&[2, 4, 0]), iv(&[0, 6, 2])];
        let s = saturation(&gens, 3);
        assert_eq!(s.cols(), 2);
        for g in &gens {
            assert!(lattice_contains(&s, g));
        }
        let again = saturation(&s.columns(), 3);
        assert_eq!(s, again);
    }

    #[test]
    fn quotient_by_index_two_sublattice() {
        let g = quotient_group(
            &IntegerMatrix::identity(2),
            &IntegerMatrix::from_columns(&[iv(&[1, 1]), iv(&[1, -1])]),
        )
        .unwrap();
        assert_eq!(g.invariant_factors(), &[i(2)]);
        assert_eq!(g.order(), &i(2));
        assert_eq!(g.coset_reps().len(), 2);
        assert_eq!(g.coset_reps()[0], iv(&[0, 0]));
    }

    #[test]
    fn quotient_by_doubled_lattice() {
        let g = quotient_group(
            &IntegerMatrix::identity(2),
            &IntegerMatrix::from_columns(&[iv(&[2, 0]), iv(&[0, 2])]),
        )
        .unwrap();
        assert_eq!(g.invariant_factors(), &[i(2), i(2)]);
        assert_eq!(g.order(), &i(4));
        assert_eq!(g.coset_reps().len(), 4);
    }

    #[test]
    fn coset_reps_are_pairwise_distinct_modulo_sublattice() {
        let sub = IntegerMatrix::from_columns(&[iv(&[1, 1]), iv(&[1, -1])]);
        let g = quotient_group(&IntegerMatrix::identity(2), &sub).unwrap();
        let reps = g.coset_reps();
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                let diff: Vec<Int> = reps[a]
                    .iter()
                    .zip(&reps[b])
                    .map(|(x, y)| x - y)
                    .collect();
                assert!(
                    !lattice_contains(&sub, &diff),
                    "representatives {a} and {b} coincide modulo the sublattice"
                );
            }
        }
    }

    #[test]
    fn quotient_with_redundant_generators() {
        // Three generators of the same index-2 sublattice.
        let sub = IntegerMatrix::from_columns(&[iv(&[1, 1]), iv(&[1, -1]), iv(&[2, 0])]);
        let g = quotient_group(&IntegerMatrix::identity(2), &sub).unwrap();
        assert_eq!(g.order(), &i(2));
    }

    #[test]
    fn quotient_inside_proper_ambient_lattice() {
        // L = 2Z × Z, M = span{(4,0),(0,3)}: quotient Z/2 ⊕ Z/3 = Z/6.
        let ambient = IntegerMatrix::from_columns(&[iv(&[2, 0]), iv(&[0, 1])]);
        let sub = IntegerMatrix::from_columns(&[iv(&[4, 0]), iv(&[0, 3])]);
        let g = quotient_group(&ambient, &sub).unwrap();
        assert_eq!(g.order(), &i(6));
        assert_eq!(g.invariant_factors(), &[i(6)]);
    }

    #[test]
    fn quotient_errors() {
        let err = quotient_group(
            &IntegerMatrix::identity(2),
            &IntegerMatrix::from_columns(&[iv(&[1, 0])]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            LatticeError::InfiniteQuotient {
                ambient_rank: 2,
                sub_rank: 1
            }
        );

        let err = quotient_group(
            &IntegerMatrix::from_columns(&[iv(&[2, 0]), iv(&[0, 2])]),
            &IntegerMatrix::from_columns(&[iv(&[1, 0]), iv(&[0, 2])]),
        )
        .unwrap_err();
        assert_eq!(err, LatticeError::SubNotInAmbient { column: 0 });
    }

    #[test]
    fn quotient_order_equals_determinant_of_square_sublattice() {
        let sub = IntegerMatrix::from_columns(&[iv(&[3, 1]), iv(&[1, 3])]);
        let g = quotient_group(&IntegerMatrix::identity(2), &sub).unwrap();
        assert_eq!(g.order(), &sub.det().abs());
    }

    #[test]
    fn membership_test() {
        let basis = IntegerMatrix::from_columns(&[iv(&[2, 0]), iv(&[1, 1])]);
        assert!(lattice_contains(&basis, &iv(&[3, 1])));
        assert!(!lattice_contains(&basis, &iv(&[1, 0])));
        assert!(!lattice_contains(&basis, &iv(&[0, 1]).clone()));
        assert!(lattice_contains(&basis, &iv(&[0, 2])));
    }
}
