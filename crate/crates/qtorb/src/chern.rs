//! Vertex orientation signs, the top Chern number, and the almost complex
//! compatibility check.
//!
//! A convex realization of the polytope orients each vertex: the edges
//! leaving a vertex `v`, one per facet through `v` (the edge leaving facet
//! `i` is the one lying on all facets of `v` except `i`), form a frame
//! whose determinant sign is compared against the determinant of the
//! characteristic columns in the same facet order.  The product
//!
//! ```text
//! σ(v) = orientation · sign det(edge frame) · det(Λ_v)
//! ```
//!
//! is the signed order of the local group at `v`.  The *top Chern number*
//! of the associated torus-invariant stably complex structure is
//! `Σ_v 1/σ(v)`; for manifolds (all `|σ(v)| = 1`) it is the Euler
//! characteristic.  An invariant almost complex structure can exist only
//! when every `σ(v)` is positive for one of the two orientations; the check
//! reports which orientation works, if any.
//!
//! The *total Chern class* needs no realization: its degree-`j` part is the
//! `j`-th elementary symmetric polynomial in all facet classes, reduced in
//! the cohomology ring.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cohomology::{Class, CohomologyRing, Monomial};
use crate::model::CombinatorialModel;
use crate::polytope::{combinations, Realization};
use crate::zlattice::rational::{self, Rat};
use crate::zlattice::Int;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChernError {
    #[error("orientation must be +1 or -1, got {got}")]
    InvalidOrientation { got: i8 },
    #[error("edge frame at vertex {vertex} is degenerate (zero determinant)")]
    DegenerateFrame { vertex: usize },
}

/// The signed local-group orders `σ(v)`, one per vertex, for a fixed
/// orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSignTable {
    pub orientation: i8,
    pub signs: Vec<Int>,
}

/// Outcome of the almost complex necessary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexCheck {
    /// True when all vertex signs agree for some orientation.
    pub satisfied: bool,
    /// The orientation making every `σ(v)` positive, when one exists.
    pub compatible_orientation: Option<i8>,
}

/// Computes `σ(v)` for every vertex from a realization.
///
/// Requires vertex coordinates; the edge frames must be nondegenerate,
/// which every genuinely convex realization guarantees.
pub fn vertex_signs(
    model: &CombinatorialModel,
    realization: &Realization,
    orientation: i8,
) -> Result<VertexSignTable, ChernError> {
    if orientation != 1 && orientation != -1 {
        return Err(ChernError::InvalidOrientation { got: orientation });
    }
    let p = model.polytope();
    let n = p.dim();
    let mut signs = Vec::with_capacity(p.vertex_count());
    for v in 0..p.vertex_count() {
        // neighbors(v) is sorted by facet index, matching the column order
        // of the vertex matrix.
        let origin = realization.coordinates(v);
        let mut frame_rows: Vec<Vec<Rat>> = vec![Vec::with_capacity(n); n];
        for &(_, neighbor) in p.neighbors(v) {
            let target = realization.coordinates(neighbor);
            for (r, row) in frame_rows.iter_mut().enumerate() {
                row.push(&target[r] - &origin[r]);
            }
        }
        let frame_det = rational::det(&frame_rows);
        if frame_det.is_zero() {
            return Err(ChernError::DegenerateFrame { vertex: v });
        }
        let lambda_det = model.vertex_det(v);
        let mut sigma = lambda_det * Int::from(rational::sign(&frame_det) as i64);
        if orientation == -1 {
            sigma = -sigma;
        }
        signs.push(sigma);
    }
    Ok(VertexSignTable { orientation, signs })
}

/// The top Chern number `Σ_v 1/σ(v)` of the invariant stably complex
/// structure determined by the realization and orientation.
pub fn top_chern_number(table: &VertexSignTable) -> Rat {
    table
        .signs
        .iter()
        .map(|s| Rat::new(Int::one(), s.clone()))
        .sum()
}

/// Necessary condition for an invariant almost complex structure: all
/// vertex signs must share one sign.  Reports the orientation for which
/// they are all positive, when there is one.
pub fn almost_complex_necessary(table: &VertexSignTable) -> AlmostComplexCheck {
    let all_positive = table.signs.iter().all(|s| s.is_positive());
    let all_negative = table.signs.iter().all(|s| s.is_negative());
    let compatible_orientation = if all_positive {
        Some(table.orientation)
    } else if all_negative {
        Some(-table.orientation)
    } else {
        None
    };
    AlmostComplexCheck {
        satisfied: compatible_orientation.is_some(),
        compatible_orientation,
    }
}

/// The total Chern class `c_0 + c_1 + … + c_n` of the model: `c_j` is the
/// `j`-th elementary symmetric polynomial in the facet classes, reduced in
/// the ring.  Independent of any realization.
pub fn total_chern_class(model: &CombinatorialModel, ring: &CohomologyRing) -> Vec<Class> {
    let p = model.polytope();
    let n = p.dim();
    let m = p.facet_count();
    let facets: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut terms: Vec<(Monomial, Rat)> = Vec::new();
        for subset in combinations(&facets, j) {
            // Monomials with non-face support vanish; skip them early.
            let set = subset.iter().copied().collect();
            if !p.is_face_set(&set) {
                continue;
            }
            let mut exps = vec![0u32; m];
            for &i in &subset {
                exps[i] = 1;
            }
            terms.push((Monomial::new(exps), Rat::one()));
        }
        out.push(ring.class_from_terms(j, &terms));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cohomology_ring;
    use crate::model::build_model;
    use crate::polytope::{build_polytope, shapes, SimplePolytope};
    use crate::zlattice::IntegerMatrix;

    fn iv(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
    }

    fn rat_i(x: i64) -> Rat {
        Rat::from_integer(Int::from(x))
    }

    fn triangle_polytope() -> SimplePolytope {
        build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    fn p112_with_realization() -> (CombinatorialModel, Realization) {
        let p = triangle_polytope();
        let real = Realization::new(&p, vec![rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])], None).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[1, 1]), iv(&[1, -1]), iv(&[-1, 0])]);
        (build_model(p, lambda).unwrap(), real)
    }

    fn cp2_with_realization() -> (CombinatorialModel, Realization) {
        let p = build_polytope(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let real = Realization::new(&p, vec![rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])], None).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[1, 0]), iv(&[0, 1]), iv(&[-1, -1])]);
        (build_model(p, lambda).unwrap(), real)
    }

    fn teardrop_with_realization() -> (CombinatorialModel, Realization) {
        let p = shapes::segment();
        let real = Realization::new(&p, vec![rv(&[0]), rv(&[1])], None).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[2]), iv(&[-1])]);
        (build_model(p, lambda).unwrap(), real)
    }

    #[test]
    fn weighted_plane_signs_and_top_chern() {
        let (model, real) = p112_with_realization();
        let table = vertex_signs(&model, &real, 1).unwrap();
        assert_eq!(table.signs, iv(&[2, 1, 1]));
        assert_eq!(top_chern_number(&table), Rat::new(Int::from(5), Int::from(2)));
        let check = almost_complex_necessary(&table);
        assert!(check.satisfied);
        assert_eq!(check.compatible_orientation, Some(1));
    }

    #[test]
    fn projective_plane_signs_and_top_chern() {
        let (model, real) = cp2_with_realization();
        let table = vertex_signs(&model, &real, 1).unwrap();
        assert_eq!(table.signs, iv(&[1, 1, 1]));
        assert_eq!(top_chern_number(&table), rat_i(3));
    }

    #[test]
    fn teardrop_signs_and_top_chern() {
        let (model, real) = teardrop_with_realization();
        let table = vertex_signs(&model, &real, 1).unwrap();
        assert_eq!(table.signs, iv(&[2, 1]));
        assert_eq!(top_chern_number(&table), Rat::new(Int::from(3), Int::from(2)));
    }

    #[test]
    fn sphere_euler_characteristic() {
        let p = shapes::segment();
        let real = Realization::new(&p, vec![rv(&[0]), rv(&[1])], None).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[1]), iv(&[-1])]);
        let model = build_model(p, lambda).unwrap();
        let table = vertex_signs(&model, &real, 1).unwrap();
        assert_eq!(top_chern_number(&table), rat_i(2));
    }

    #[test]
    fn reversing_orientation_negates_signs_and_chern_number() {
        let (model, real) = cp2_with_realization();
        let plus = vertex_signs(&model, &real, 1).unwrap();
        let minus = vertex_signs(&model, &real, -1).unwrap();
        assert_eq!(minus.signs, iv(&[-1, -1, -1]));
        assert_eq!(top_chern_number(&minus), rat_i(-3));
        // The compatible orientation is reported absolutely.
        let check = almost_complex_necessary(&minus);
        assert!(check.satisfied);
        assert_eq!(check.compatible_orientation, Some(1));
        assert_eq!(
            almost_complex_necessary(&plus).compatible_orientation,
            Some(1)
        );
    }

    #[test]
    fn mixed_signs_fail_the_almost_complex_condition() {
        // Same polytope and realization as the projective plane, but the
        // third characteristic vector is negated.
        let p = build_polytope(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let real =
            Realization::new(&p, vec![rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])], None).unwrap();
        let lambda = IntegerMatrix::from_columns(&[iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])]);
        let model = build_model(p, lambda).unwrap();
        let table = vertex_signs(&model, &real, 1).unwrap();
        assert_eq!(table.signs, iv(&[1, -1, -1]));
        let check = almost_complex_necessary(&table);
        assert!(!check.satisfied);
        assert_eq!(check.compatible_orientation, None);
        // The top Chern number is still defined.
        assert_eq!(top_chern_number(&table), rat_i(-1));
    }

    #[test]
    fn sign_magnitude_is_the_local_group_order() {
        let (model, real) = p112_with_realization();
        let table = vertex_signs(&model, &real, 1).unwrap();
        for v in 0..model.polytope().vertex_count() {
            assert_eq!(table.signs[v].abs(), model.vertex_det(v).abs());
        }
    }

    #[test]
    fn degenerate_frame_is_reported() {
        let p = shapes::polygon(4);
        // Vertices 0, 1, 2 collinear: the frame at vertex 1 collapses.
        let real = Realization::new(
            &p,
            vec![rv(&[0, 0]), rv(&[1, 0]), rv(&[2, 0]), rv(&[0, 1])],
            None,
        )
        .unwrap();
        let lambda =
            IntegerMatrix::from_columns(&[iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 0]), iv(&[0, 1])]);
        let model = build_model(p, lambda).unwrap();
        assert_eq!(
            vertex_signs(&model, &real, 1).unwrap_err(),
            ChernError::DegenerateFrame { vertex: 1 }
        );
    }

    #[test]
    fn invalid_orientation_is_rejected() {
        let (model, real) = cp2_with_realization();
        assert_eq!(
            vertex_signs(&model, &real, 0).unwrap_err(),
            ChernError::InvalidOrientation { got: 0 }
        );
    }

    #[test]
    fn total_chern_class_of_the_projective_plane() {
        let (model, _) = cp2_with_realization();
        let ring = cohomology_ring(&model).unwrap();
        let c = total_chern_class(&model, &ring);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0].coeffs, vec![rat_i(1)]);
        assert_eq!(c[1].coeffs, vec![rat_i(3)]);
        assert_eq!(c[2].coeffs, vec![rat_i(3)]);
    }

    #[test]
    fn total_chern_class_of_the_weighted_plane() {
        let (model, _) = p112_with_realization();
        let ring = cohomology_ring(&model).unwrap();
        let c = total_chern_class(&model, &ring);
        assert_eq!(c[1].coeffs, vec![rat_i(4)]);
        assert_eq!(c[2].coeffs, vec![rat_i(5)]);
    }
}
