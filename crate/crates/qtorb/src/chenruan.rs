//! Chen–Ruan (orbifold) cohomology Betti tables.
//!
//! Every nontrivial element `g` of a local group `G_F` with *full support*
//! on the face `F` labels a twisted sector.  Writing the face columns as
//! `Λ_F` (facets of `F` in increasing order), `g` has a unique rational
//! solution `Λ_F·q = g`; taking fractional parts puts `q ∈ [0,1)^k`, and
//! the sector exists for this face exactly when every `q_i > 0` — elements
//! with a zero coordinate are sectors of the smaller face spanned by their
//! support.  This rule partitions the nontrivial elements of every local
//! group among the faces below it, so each sector is counted once.
//!
//! A sector supported on `F` is a copy of the orbifold attached to the
//! characteristic submodel of `F`, contributing its rational Betti numbers
//! shifted up by twice the *age* `ι(g) = Σ q_i`.  The shift `2ι` need not
//! be an integer, so the table is graded over the rationals.  Sectors at
//! vertices contribute a single generator in degree `2ι`.
//!
//! The table's total dimension always equals `Σ_v |G_v|` over the vertices:
//! the base contributes one generator per vertex of the polytope, and the
//! sector partition regroups the remaining `|G_v| − 1` per vertex.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::cohomology::betti_numbers;
use crate::model::CombinatorialModel;
use crate::polytope::Face;
use crate::zlattice::rational::{self, Rat};
use crate::zlattice::Int;

/// A twisted sector: a face together with a full-support local group
/// element in fractional coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub face: Face,
    /// Canonical integer representative `Λ_F·q` of the group element.
    pub rep: Vec<Int>,
    /// Fractional coordinates over the face columns, each in `(0,1)`.
    pub q: Vec<Rat>,
    /// The age `ι = Σ q_i`.
    pub iota: Rat,
    /// Degree shift `2ι` applied to the sector's cohomology.
    pub shift: Rat,
}

/// Betti numbers graded over rational degrees; only nonzero entries are
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChenRuanTable {
    entries: BTreeMap<Rat, i64>,
}

impl ChenRuanTable {
    fn add(&mut self, degree: Rat, count: i64) {
        if count != 0 {
            *self.entries.entry(degree).or_insert(0) += count;
        }
    }

    /// Nonzero entries, ascending by degree.
    pub fn entries(&self) -> &BTreeMap<Rat, i64> {
        &self.entries
    }

    pub fn get(&self, degree: &Rat) -> i64 {
        self.entries.get(degree).copied().unwrap_or(0)
    }

    /// Sum of all entries.
    pub fn total_dimension(&self) -> i64 {
        self.entries.values().sum()
    }
}

/// All twisted sectors of a model, in face order and, within a face, in
/// the enumeration order of its local group.
pub fn box_elements(model: &CombinatorialModel) -> Vec<Sector> {
    let mut sectors = Vec::new();
    for face in model.polytope().faces() {
        if face.codim == 0 {
            continue;
        }
        let data = model.local_group(face);
        if data.group.is_trivial() {
            continue;
        }
        let cols = &data.nf_generators;
        for rep in data.group.coset_reps().iter().skip(1) {
            let rhs: Vec<Rat> = rep.iter().map(rational::rat).collect();
            let sol = rational::solve(cols, &rhs)
                .expect("group elements lie in the rational span of the face columns");
            let q: Vec<Rat> = sol.iter().map(rational::fract).collect();
            if q.iter().any(|qi| qi.is_zero()) {
                // Supported on a proper subface; counted there.
                continue;
            }
            let canonical: Vec<Int> = (0..cols.rows())
                .map(|r| {
                    let mut acc = Rat::zero();
                    for (c, qi) in q.iter().enumerate() {
                        acc += rational::rat(&cols[(r, c)]) * qi;
                    }
                    debug_assert!(rational::is_integral(&acc));
                    acc.to_integer()
                })
                .collect();
            let iota: Rat = q.iter().sum();
            let shift = &iota + &iota;
            sectors.push(Sector {
                face: face.clone(),
                rep: canonical,
                q,
                iota,
                shift,
            });
        }
    }
    sectors
}

/// The Chen–Ruan Betti table: the Betti numbers of the underlying orbifold
/// plus, for every twisted sector, the Betti numbers of its face's
/// characteristic submodel shifted by `2ι`.
pub fn chen_ruan_betti(model: &CombinatorialModel) -> ChenRuanTable {
    let n = model.polytope().dim();
    let mut table = ChenRuanTable::default();
    for (d, b) in betti_numbers(model.polytope()).iter().enumerate() {
        table.add(Rat::from_integer(Int::from(d as i64)), *b);
    }
    for sector in box_elements(model) {
        if sector.face.codim == n {
            // A vertex sector is a point: one generator in degree 2ι.
            table.add(sector.shift.clone(), 1);
            continue;
        }
        let (sub, _) = model
            .characteristic_submodel(&sector.face)
            .expect("sector faces have positive dimension");
        for (d, b) in betti_numbers(sub.polytope()).iter().enumerate() {
            let degree = &sector.shift + Rat::from_integer(Int::from(d as i64));
            table.add(degree, *b);
        }
    }
    table
}

/// Sum of `|G_v|` over all vertices: the expected total dimension of the
/// Chen–Ruan table.
pub fn vertex_group_order_sum(model: &CombinatorialModel) -> Int {
    (0..model.polytope().vertex_count())
        .map(|v| model.vertex_det(v).abs())
        .sum()
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

    fn ri(x: i64) -> Rat {
        Rat::from_integer(Int::from(x))
    }

    fn rq(p: i64, q: i64) -> Rat {
        Rat::new(Int::from(p), Int::from(q))
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

    fn teardrop() -> CombinatorialModel {
        let lambda = IntegerMatrix::from_columns(&[iv(&[2]), iv(&[-1])]);
        build_model(shapes::segment(), lambda).unwrap()
    }

    fn quotient_triangle() -> CombinatorialModel {
        let lambda = IntegerMatrix::from_columns(&[iv(&[2, 0]), iv(&[0, 2]), iv(&[2, 2])]);
        build_model(shapes::polygon(3), lambda).unwrap()
    }

    fn table_from(pairs: &[(Rat, i64)]) -> ChenRuanTable {
        let mut t = ChenRuanTable::default();
        for (d, c) in pairs {
            t.add(d.clone(), *c);
        }
        t
    }

    #[test]
    fn weighted_plane_has_one_sector() {
        let sectors = box_elements(&p112());
        assert_eq!(sectors.len(), 1);
        let s = &sectors[0];
        assert_eq!(
            s.face.facet_set.iter().copied().collect::<Vec<_>>(),
            vec![0, 1]
        );
        assert_eq!(s.q, vec![rq(1, 2), rq(1, 2)]);
        assert_eq!(s.rep, iv(&[1, 0]));
        assert_eq!(s.iota, ri(1));
        assert_eq!(s.shift, ri(2));
    }

    #[test]
    fn weighted_plane_table() {
        let table = chen_ruan_betti(&p112());
        let expected = table_from(&[(ri(0), 1), (ri(2), 2), (ri(4), 1)]);
        assert_eq!(table, expected);
    }

    #[test]
    fn manifold_table_is_the_betti_table() {
        let table = chen_ruan_betti(&cp2());
        let expected = table_from(&[(ri(0), 1), (ri(2), 1), (ri(4), 1)]);
        assert_eq!(table, expected);
        assert!(box_elements(&cp2()).is_empty());
    }

    #[test]
    fn teardrop_table_has_a_fractional_age_sector() {
        let sectors = box_elements(&teardrop());
        assert_eq!(sectors.len(), 1);
        assert_eq!(sectors[0].q, vec![rq(1, 2)]);
        assert_eq!(sectors[0].shift, ri(1));
        let table = chen_ruan_betti(&teardrop());
        let expected = table_from(&[(ri(0), 1), (ri(1), 1), (ri(2), 1)]);
        assert_eq!(table, expected);
    }

    #[test]
    fn quotient_triangle_table() {
        let table = chen_ruan_betti(&quotient_triangle());
        let expected = table_from(&[
            (ri(0), 1),
            (ri(1), 3),
            (ri(2), 4),
            (ri(3), 3),
            (ri(4), 1),
        ]);
        assert_eq!(table, expected);
    }

    #[test]
    fn quotient_triangle_sector_census() {
        // Three facet sectors with age 1/2 and one full-support element at
        // each of the three vertices with age 1.
        let sectors = box_elements(&quotient_triangle());
        assert_eq!(sectors.len(), 6);
        let facet_sectors: Vec<_> = sectors.iter().filter(|s| s.face.codim == 1).collect();
        let vertex_sectors: Vec<_> = sectors.iter().filter(|s| s.face.codim == 2).collect();
        assert_eq!(facet_sectors.len(), 3);
        assert_eq!(vertex_sectors.len(), 3);
        for s in facet_sectors {
            assert_eq!(s.iota, rq(1, 2));
        }
        for s in vertex_sectors {
            assert_eq!(s.q, vec![rq(1, 2), rq(1, 2)]);
        }
    }

    #[test]
    fn sector_partition_counts_every_group_element_once() {
        for model in [p112(), quotient_triangle(), teardrop(), cp2()] {
            let sectors = box_elements(&model);
            for face in model.polytope().faces() {
                if face.codim == 0 {
                    continue;
                }
                let order = model.local_group(face).group.order().clone();
                let below = sectors
                    .iter()
                    .filter(|s| s.face.facet_set.is_subset(&face.facet_set))
                    .count();
                assert_eq!(Int::from(below as i64), order - Int::one());
            }
        }
    }

    #[test]
    fn canonical_representative_solves_back_to_q() {
        for model in [p112(), quotient_triangle(), teardrop()] {
            for s in box_elements(&model) {
                let data = model.local_group(&s.face);
                let rhs: Vec<Rat> = s.rep.iter().map(rational::rat).collect();
                let sol = rational::solve(&data.nf_generators, &rhs).unwrap();
                // The canonical representative already lies in the box:
                // solving returns q itself, fractional parts included.
                assert_eq!(sol, s.q);
            }
        }
    }

    #[test]
    fn total_dimension_is_the_vertex_group_order_sum() {
        for model in [p112(), quotient_triangle(), teardrop(), cp2()] {
            let table = chen_ruan_betti(&model);
            assert_eq!(
                Int::from(table.total_dimension()),
                vertex_group_order_sum(&model)
            );
        }
    }

    #[test]
    fn sector_coordinates_are_strictly_inside_the_unit_box() {
        for model in [p112(), quotient_triangle(), teardrop()] {
            for s in box_elements(&model) {
                assert_eq!(s.q.len(), s.face.codim);
                assert!(s.q.iter().all(|qi| qi > &Rat::zero() && qi < &ri(1)));
                assert!(s.iota > Rat::zero());
            }
        }
    }
}
