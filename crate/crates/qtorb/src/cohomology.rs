//! The rational cohomology ring of a model, in exact arithmetic.
//!
//! The ring is presented as `Q[w_1, …, w_m] / (I + J)`, with one degree-2
//! generator `w_i` per facet, `I` the face ideal (products of facets with
//! empty common intersection vanish) and `J` generated by the `n` linear
//! forms `θ_r = Σ_i Λ[r][i]·w_i` read off the rows of the characteristic
//! matrix.  All degrees in this module are *complex* degrees: the element
//! `w_i` has degree 1 here and lives in real cohomological degree 2, so the
//! graded piece of degree `d` computed here is `H^{2d}`; odd real degrees
//! vanish.
//!
//! Each graded piece is spanned by the *face monomials* (monomials whose
//! support is a face of the polytope).  A Gaussian elimination over the
//! relations, eliminating monomials from the largest downward in graded
//! lexicographic order, leaves the smallest possible set of *standard
//! monomials* as a basis and expresses every other face monomial in terms
//! of them.  The resulting dimensions must reproduce the h-vector of the
//! polytope and vanish in degree `n+1`; a mismatch is reported as an
//! internal-consistency error rather than silently accepted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::model::CombinatorialModel;
use crate::polytope::{combinations, SimplePolytope};
use crate::zlattice::rational::{self, Rat};
use crate::zlattice::Int;

/// Errors from the ring construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error(
        "cohomology dimensions {got:?} disagree with the expected values {expected:?} \
         (h-vector followed by 0)"
    )]
    DimensionMismatch { got: Vec<i64>, expected: Vec<i64> },
}

/// A monomial in the facet variables `w_1, …, w_m` (indices 0-based in
/// code, displayed 1-based).
///
/// Ordered by graded lexicographic order: first by total degree, then
/// lexicographically by the *reversed* exponent vector, which makes
/// `w_1 < w_2 < … < w_m` and `w_1² < w_1w_2 < w_2²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `m` variables.
    pub fn one(m: usize) -> Self {
        Monomial { exps: vec![0; m] }
    }

    /// The variable `w_j` (0-based `j`) in `m` variables.
    pub fn variable(m: usize, j: usize) -> Self {
        let mut exps = vec![0; m];
        exps[j] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Facets appearing with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            self.exps
                .iter()
                .rev()
                .cmp(other.exps.iter().rev())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "w{}", j + 1)?;
            } else {
                write!(f, "w{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

/// An element of one graded piece, as coordinates over the standard
/// monomial basis of that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub degree: usize,
    pub coeffs: Vec<Rat>,
}

impl Class {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The minimal non-faces of the polytope: facet sets that are not faces
/// although each of their proper subsets is.  These index the generators of
/// the face ideal.  Sorted by size, then lexicographically.
pub fn minimal_nonfaces(p: &SimplePolytope) -> Vec<BTreeSet<usize>> {
    let m = p.facet_count();
    let n = p.dim();
    let all: Vec<usize> = (0..m).collect();
    let mut result = Vec::new();
    for size in 2..=(n + 1).min(m) {
        for subset in combinations(&all, size) {
            let set: BTreeSet<usize> = subset.iter().copied().collect();
            if p.is_face_set(&set) {
                continue;
            }
            let proper_faces = subset.iter().all(|&skip| {
                let mut smaller = set.clone();
                smaller.remove(&skip);
                p.is_face_set(&smaller)
            });
            if proper_faces {
                result.push(set);
            }
        }
    }
    result
}

/// The linear relations imposed by the characteristic matrix: row `r` is
/// the coefficient vector of `θ_r = Σ_i Λ[r][i]·w_i`.
pub fn linear_forms(model: &CombinatorialModel) -> Vec<Vec<Int>> {
    let lam = model.char_matrix();
    (0..lam.rows()).map(|r| lam.row(r).to_vec()).collect()
}

/// Rational Betti numbers `b_0, …, b_{2n}` of the orbifold underlying any
/// valid model on this polytope: `b_{2k}` is the `k`-th entry of the
/// h-vector and all odd Betti numbers vanish.
pub fn betti_numbers(p: &SimplePolytope) -> Vec<i64> {
    let h = p.h_vector();
    let mut b = vec![0i64; 2 * p.dim() + 1];
    for (k, &hk) in h.iter().enumerate() {
        b[2 * k] = hk;
    }
    b
}

struct DegreeData {
    /// All face monomials of this degree, ascending in graded lex order.
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    /// Indices (into `monomials`) of the standard basis, ascending.
    standard: Vec<usize>,
    /// For each non-standard monomial index, its coordinates over the
    /// standard basis.
    reduction: BTreeMap<usize, Vec<Rat>>,
}

/// The graded ring, holding a standard-monomial basis and reduction data
/// for every degree `0..=n+1`.
pub struct CohomologyRing {
    rank: usize,
    facet_count: usize,
    dims: Vec<i64>,
    degrees: Vec<DegreeData>,
}

/// Computes the cohomology ring of a model.
///
/// Fails with [`RingError::DimensionMismatch`] if the graded dimensions do
/// not reproduce the h-vector (with a vanishing degree `n+1`); that would
/// indicate an internal inconsistency, not a property of the input.
pub fn cohomology_ring(model: &CombinatorialModel) -> Result<CohomologyRing, RingError> {
    let p = model.polytope();
    let n = p.dim();
    let m = p.facet_count();
    let forms = linear_forms(model);

    let mut degrees: Vec<DegreeData> = Vec::with_capacity(n + 2);
    for d in 0..=(n + 1) {
        let monomials = face_monomials(p, d as u32);
        let index: BTreeMap<Monomial, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, mono)| (mono, i))
            .collect();

        // Relations: θ_r · μ for every face monomial μ of degree d-1.
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        if d > 0 {
            let lower = &degrees[d - 1];
            for form in &forms {
                for mu in &lower.monomials {
                    let mut row = vec![Rat::zero(); monomials.len()];
                    let mut nonzero = false;
                    for (j, coeff) in form.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let nu = mu.mul(&Monomial::variable(m, j));
                        if let Some(&col) = index.get(&nu) {
                            row[col] += rational::rat(coeff);
                            nonzero = true;
                        }
                        // Monomials with non-face support die in the face
                        // ring and contribute nothing.
                    }
                    if nonzero {
                        rows.push(row);
                    }
                }
            }
        }

        // Eliminate the largest monomials first, leaving the graded-lex
        // smallest possible standard basis.
        let scan_order: Vec<usize> = (0..monomials.len()).rev().collect();
        let pivots = rational::rref_with_column_order(&mut rows, &scan_order);
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let standard: Vec<usize> = (0..monomials.len())
            .filter(|i| !pivot_set.contains(i))
            .collect();
        let mut reduction: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
        for (r, &pcol) in pivots.iter().enumerate() {
            let expr: Vec<Rat> = standard.iter().map(|&c| -rows[r][c].clone()).collect();
            reduction.insert(pcol, expr);
        }
        degrees.push(DegreeData {
            monomials,
            index,
            standard,
            reduction,
        });
    }

    let dims: Vec<i64> = degrees.iter().map(|d| d.standard.len() as i64).collect();
    let mut expected: Vec<i64> = p.h_vector();
    expected.push(0);
    if dims != expected {
        return Err(RingError::DimensionMismatch {
            got: dims,
            expected,
        });
    }

    Ok(CohomologyRing {
        rank: n,
        facet_count: m,
        dims,
        degrees,
    })
}

impl CohomologyRing {
    /// The top nonvanishing degree (the polytope dimension).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    /// Graded dimensions for degrees `0..=rank`; equals the h-vector.
    pub fn dims(&self) -> &[i64] {
        &self.dims[..=self.rank]
    }

    /// The standard monomial basis of one degree (empty above the top).
    pub fn standard_basis(&self, degree: usize) -> Vec<&Monomial> {
        match self.degrees.get(degree) {
            Some(data) => data.standard.iter().map(|&i| &data.monomials[i]).collect(),
            None => Vec::new(),
        }
    }

    /// The zero class of a degree.
    pub fn zero(&self, degree: usize) -> Class {
        let len = self
            .degrees
            .get(degree)
            .map(|d| d.standard.len())
            .unwrap_or(0);
        Class {
            degree,
            coeffs: vec![Rat::zero(); len],
        }
    }

    /// Reduces a linear combination of monomials (all of the stated
    /// degree) into standard-basis coordinates.  Monomials with non-face
    /// support are dropped; any other monomial must be a face monomial of
    /// the right degree.
    pub fn class_from_terms(&self, degree: usize, terms: &[(Monomial, Rat)]) -> Class {
        let mut out = self.zero(degree);
        let Some(data) = self.degrees.get(degree) else {
            return out;
        };
        for (mono, coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            debug_assert_eq!(mono.degree() as usize, degree);
            let Some(&col) = data.index.get(mono) else {
                // Non-face support: the monomial vanishes in the face ring.
                continue;
            };
            match data.standard.binary_search(&col) {
                Ok(pos) => out.coeffs[pos] += coeff,
                Err(_) => {
                    let expr = &data.reduction[&col];
                    for (pos, c) in expr.iter().enumerate() {
                        if !c.is_zero() {
                            out.coeffs[pos] += c * coeff;
                        }
                    }
                }
            }
        }
        out
    }

    /// The class of the facet variable `w_j` (0-based) in degree 1.
    pub fn facet_class(&self, j: usize) -> Class {
        use num_traits::One;
        self.class_from_terms(1, &[(Monomial::variable(self.facet_count, j), Rat::one())])
    }

    /// Cup product.  Classes of total degree above the top come back zero.
    pub fn cup(&self, a: &Class, b: &Class) -> Class {
        let degree = a.degree + b.degree;
        let mut out = self.zero(degree);
        if degree >= self.degrees.len() {
            return out;
        }
        let da = &self.degrees[a.degree];
        let db = &self.degrees[b.degree];
        let mut terms: Vec<(Monomial, Rat)> = Vec::new();
        for (ia, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ma = &da.monomials[da.standard[ia]];
            for (ib, cb) in b.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let mb = &db.monomials[db.standard[ib]];
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        let reduced = self.class_from_terms(degree, &terms);
        out.coeffs = reduced.coeffs;
        out
    }

    /// The class as (coefficient, monomial) pairs over the standard basis,
    /// zero coefficients omitted.
    pub fn express(&self, class: &Class) -> Vec<(Rat, Monomial)> {
        let Some(data) = self.degrees.get(class.degree) else {
            return Vec::new();
        };
        class
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), data.monomials[data.standard[i]].clone()))
            .collect()
    }

    /// The intersection pairing `H^d × H^{rank-d} → H^rank ≅ Q`: entry
    /// `(i, j)` is the coefficient of the top standard monomial in the cup
    /// product of the `i`-th and `j`-th standard basis classes.
    pub fn pairing_matrix(&self, degree: usize) -> Vec<Vec<Rat>> {
        use num_traits::One;
        let n = self.rank;
        assert!(degree <= n, "degree above the top");
        let rows = self.dims[degree] as usize;
        let cols = self.dims[n - degree] as usize;
        let mut out = vec![vec![Rat::zero(); cols]; rows];
        for (i, row) in out.iter_mut().enumerate() {
            let mut a = self.zero(degree);
            a.coeffs[i] = Rat::one();
            for (j, entry) in row.iter_mut().enumerate() {
                let mut b = self.zero(n - degree);
                b.coeffs[j] = Rat::one();
                let prod = self.cup(&a, &b);
                // dims[n] == 1, so the product has one coordinate.
                *entry = prod.coeffs[0].clone();
            }
        }
        out
    }
}

/// Cup product as a free function.
pub fn cup(ring: &CohomologyRing, a: &Class, b: &Class) -> Class {
    ring.cup(a, b)
}

/// All monomials of one degree whose support is a face, ascending in
/// graded lex order.
fn face_monomials(p: &SimplePolytope, degree: u32) -> Vec<Monomial> {
    let m = p.facet_count();
    let mut out = Vec::new();
    let mut exps = vec![0u32; m];
    let mut support: BTreeSet<usize> = BTreeSet::new();
    gen_face_monomials(p, degree, 0, &mut exps, &mut support, &mut out);
    out.sort();
    out
}

fn gen_face_monomials(
    p: &SimplePolytope,
    remaining: u32,
    j: usize,
    exps: &mut Vec<u32>,
    support: &mut BTreeSet<usize>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    if j == exps.len() {
        return;
    }
    // Exponent 0 for variable j.
    gen_face_monomials(p, remaining, j + 1, exps, support, out);
    // Positive exponents, only while the support stays a face.
    support.insert(j);
    if p.is_face_set(support) {
        for e in 1..=remaining {
            exps[j] = e;
            gen_face_monomials(p, remaining - e, j + 1, exps, support, out);
        }
        exps[j] = 0;
    }
    support.remove(&j);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_model;
    use crate::polytope::{build_polytope, shapes};
    use crate::zlattice::IntegerMatrix;
    use num_traits::One;

    fn iv(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn p112() -> CombinatorialModel {
        let p = build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[1, 1]), iv(&[1, -1]), iv(&[-1, 0])]);
        build_model(p, lambda).unwrap()
    }

    fn cp2() -> CombinatorialModel {
        let p = build_polytope(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[1, 0]), iv(&[0, 1]), iv(&[-1, -1])]);
        build_model(p, lambda).unwrap()
    }

    fn rat_i(x: i64) -> Rat {
        Rat::from_integer(Int::from(x))
    }

    #[test]
    fn monomial_order_is_graded_lex_with_w1_smallest() {
        let m = 3;
        let w1 = Monomial::variable(m, 0);
        let w2 = Monomial::variable(m, 1);
        let w3 = Monomial::variable(m, 2);
        assert!(Monomial::one(m) < w1);
        assert!(w1 < w2);
        assert!(w2 < w3);
        assert!(w3 < w1.mul(&w1));
        assert!(w1.mul(&w1) < w1.mul(&w2));
        assert!(w1.mul(&w2) < w2.mul(&w2));
    }

    #[test]
    fn monomial_display_is_one_based() {
        let m = 3;
        let mono = Monomial::new(vec![2, 0, 1]);
        assert_eq!(mono.to_string(), "w1^2*w3");
        assert_eq!(Monomial::one(m).to_string(), "1");
    }

    #[test]
    fn triangle_has_one_minimal_nonface() {
        let p = p112();
        let nf = minimal_nonfaces(p.polytope());
        assert_eq!(nf, vec![BTreeSet::from([0, 1, 2])]);
    }

    #[test]
    fn square_has_the_two_diagonal_nonfaces() {
        let p = shapes::polygon(4);
        let nf = minimal_nonfaces(&p);
        assert_eq!(nf, vec![BTreeSet::from([0, 2]), BTreeSet::from([1, 3])]);
    }

    #[test]
    fn pentagon_has_five_nonadjacent_pairs() {
        let p = shapes::polygon(5);
        let nf = minimal_nonfaces(&p);
        let expected: Vec<BTreeSet<usize>> = vec![
            BTreeSet::from([0, 2]),
            BTreeSet::from([0, 3]),
            BTreeSet::from([1, 3]),
            BTreeSet::from([1, 4]),
            BTreeSet::from([2, 4]),
        ];
        assert_eq!(nf, expected);
    }

    #[test]
    fn betti_numbers_follow_the_h_vector() {
        assert_eq!(betti_numbers(&shapes::polygon(3)), vec![1, 0, 1, 0, 1]);
        assert_eq!(betti_numbers(&shapes::polygon(4)), vec![1, 0, 2, 0, 1]);
        assert_eq!(
            betti_numbers(&shapes::cube()),
            vec![1, 0, 3, 0, 3, 0, 1]
        );
        assert_eq!(betti_numbers(&shapes::segment()), vec![1, 0, 1]);
    }

    #[test]
    fn face_monomials_of_the_triangle() {
        let p = shapes::polygon(3);
        assert_eq!(face_monomials(&p, 0).len(), 1);
        assert_eq!(face_monomials(&p, 1).len(), 3);
        // Degree 2: three squares plus three products of adjacent pairs.
        assert_eq!(face_monomials(&p, 2).len(), 6);
        // Degree 3 drops w1*w2*w3 (the empty intersection).
        assert_eq!(face_monomials(&p, 3).len(), 9);
    }

    #[test]
    fn p112_ring_dimensions_and_relations() {
        let model = p112();
        let ring = cohomology_ring(&model).unwrap();
        assert_eq!(ring.dims(), &[1, 1, 1]);

        // Standard basis in degree 1 is w1; the relations force w2 = w1
        // and w3 = 2*w1.
        let basis = ring.standard_basis(1);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].to_string(), "w1");
        let w2 = ring.facet_class(1);
        let w3 = ring.facet_class(2);
        assert_eq!(w2.coeffs, vec![rat_i(1)]);
        assert_eq!(w3.coeffs, vec![rat_i(2)]);
    }

    #[test]
    fn p112_generator_squares_to_the_top_and_cubes_to_zero() {
        let model = p112();
        let ring = cohomology_ring(&model).unwrap();
        let u = ring.facet_class(0);
        let u2 = ring.cup(&u, &u);
        assert!(!u2.is_zero());
        let u3 = ring.cup(&u, &u2);
        assert_eq!(u3.degree, 3);
        assert!(u3.is_zero());
    }

    #[test]
    fn cp2_relations_identify_all_generators() {
        let ring = cohomology_ring(&cp2()).unwrap();
        assert_eq!(ring.dims(), &[1, 1, 1]);
        let w = ring.facet_class(0);
        assert_eq!(ring.facet_class(1), w);
        assert_eq!(ring.facet_class(2), w);
        let w2 = ring.cup(&w, &w);
        assert_eq!(ring.express(&w2)[0].0, rat_i(1));
    }

    #[test]
    fn square_product_model_ring() {
        // S² × S² style model on the square: dims (1, 2, 1) and the two
        // generators square to zero but multiply to the top class.
        let lambda =
            IntegerMatrix::from_columns(&[iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 0]), iv(&[0, 1])]);
        let model = build_model(shapes::polygon(4), lambda).unwrap();
        let ring = cohomology_ring(&model).unwrap();
        assert_eq!(ring.dims(), &[1, 2, 1]);
        let a = ring.facet_class(0);
        let b = ring.facet_class(1);
        assert!(ring.cup(&a, &a).is_zero());
        assert!(ring.cup(&b, &b).is_zero());
        assert!(!ring.cup(&a, &b).is_zero());
    }

    #[test]
    fn pairing_is_nondegenerate_for_small_models() {
        for model in [p112(), cp2()] {
            let ring = cohomology_ring(&model).unwrap();
            for d in 0..=ring.rank() {
                let mat = ring.pairing_matrix(d);
                let mut rows: Vec<Vec<Rat>> = mat.clone();
                let order: Vec<usize> = (0..mat[0].len()).collect();
                let pivots = rational::rref_with_column_order(&mut rows, &order);
                assert_eq!(pivots.len(), ring.dims()[d] as usize);
            }
        }
    }

    #[test]
    fn ring_dimensions_match_h_vector_for_cube_model() {
        let lambda = IntegerMatrix::from_columns(&[
            iv(&[1, 0, 0]),
            iv(&[1, 1, 0]),
            iv(&[0, 1, 0]),
            iv(&[0, 1, 1]),
            iv(&[0, 0, 1]),
            iv(&[1, 0, 1]),
        ]);
        let model = build_model(shapes::cube(), lambda).unwrap();
        let ring = cohomology_ring(&model).unwrap();
        assert_eq!(ring.dims(), &[1, 3, 3, 1]);
        // Top-degree products of three independent facet classes are
        // nonzero.
        let w1 = ring.facet_class(0);
        let w3 = ring.facet_class(2);
        let w5 = ring.facet_class(4);
        let top = ring.cup(&ring.cup(&w1, &w3), &w5);
        assert!(!top.is_zero());
    }

    #[test]
    fn class_from_terms_drops_nonface_monomials() {
        let ring = cohomology_ring(&cp2()).unwrap();
        // w1*w2*w3 has the whole facet set as support, which is not a face.
        let mono = Monomial::new(vec![1, 1, 1]);
        let class = ring.class_from_terms(3, &[(mono, Rat::one())]);
        assert!(class.is_zero());
    }

    #[test]
    fn teardrop_ring() {
        let lambda = IntegerMatrix::from_columns(&[iv(&[2]), iv(&[-1])]);
        let model = build_model(shapes::segment(), lambda).unwrap();
        let ring = cohomology_ring(&model).unwrap();
        assert_eq!(ring.dims(), &[1, 1]);
        // 2*w1 = w2 read from the single linear form.
        let w1 = ring.facet_class(0);
        let w2 = ring.facet_class(1);
        assert_eq!(ring.cup(&w1, &w2), ring.zero(2));
        assert_eq!(
            w2.coeffs,
            vec![rat_i(2)]
        );
    }
}
