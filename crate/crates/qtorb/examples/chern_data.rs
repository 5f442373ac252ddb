//! Computes vertex signs, the top Chern number, the almost complex
//! necessary condition, and the total Chern class.
//!
//! A convex realization fixes, at every vertex, a frame of edge vectors
//! ordered by the facets defining the vertex.  Comparing its orientation
//! with the determinant of the characteristic columns yields a signed
//! integer sigma(v) per vertex; the top Chern number is the sum of the
//! reciprocals 1/sigma(v), and an almost complex structure compatible with
//! the torus action can only exist when every sigma(v) has the same sign.

use qtorb::zlattice::rational::rat;
use qtorb::{
    almost_complex_necessary, build_model, build_polytope, cohomology_ring, top_chern_number,
    total_chern_class, vertex_signs, CohomologyRing, Class, Int, IntegerMatrix, Realization,
};

fn class_string(ring: &CohomologyRing, class: &Class) -> String {
    let terms = ring.express(class);
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(c, m)| format!("{c}*{m}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn int_coords(coords: &[[i64; 2]]) -> Vec<Vec<qtorb::Rat>> {
    coords
        .iter()
        .map(|c| c.iter().map(|&x| rat(&Int::from(x))).collect())
        .collect()
}

fn main() {
    // A Hirzebruch surface: the trapezoid with vertices (0,0), (1,0),
    // (2,1), (0,1), facets numbered counterclockwise from the bottom edge.
    let trapezoid = build_polytope(
        2,
        4,
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
    .expect("quadrilateral");
    let lambda = IntegerMatrix::from_rows(&[vec![1, 0, -1, 0], vec![0, 1, 1, -1]]);
    let model = build_model(trapezoid.clone(), lambda).expect("valid model");
    let realization = Realization::new(
        &trapezoid,
        int_coords(&[[0, 0], [1, 0], [2, 1], [0, 1]]),
        None,
    )
    .expect("valid realization");

    let table = vertex_signs(&model, &realization, 1).expect("nondegenerate frames");
    println!("Hirzebruch surface:");
    println!("  vertex signs: {:?}", table.signs);
    println!("  top Chern number: {}", top_chern_number(&table));
    let check = almost_complex_necessary(&table);
    println!(
        "  almost complex condition satisfied: {} (orientation {:?})",
        check.satisfied, check.compatible_orientation
    );

    // The total Chern class, degree by degree, expressed over the standard
    // monomial basis of the cohomology ring.
    let ring = cohomology_ring(&model).expect("dimensions match the h-vector");
    for (j, cj) in total_chern_class(&model, &ring).iter().enumerate() {
        println!("  c_{j} = {}", class_string(&ring, cj));
    }
    println!();

    // An orbifold example: the teardrop (a segment with columns (2), (-1)).
    // The singular endpoint contributes sign 2, so the top Chern number is
    // the fraction 1/2 + 1/1 = 3/2.
    let segment = build_polytope(1, 2, vec![vec![0], vec![1]]).expect("segment");
    let model = build_model(segment.clone(), IntegerMatrix::from_rows(&[vec![2, -1]]))
        .expect("valid model");
    let realization = Realization::new(
        &segment,
        vec![vec![rat(&Int::from(0))], vec![rat(&Int::from(1))]],
        None,
    )
    .expect("valid realization");
    let table = vertex_signs(&model, &realization, 1).expect("nondegenerate frames");
    println!("teardrop:");
    println!("  vertex signs: {:?}", table.signs);
    println!("  top Chern number: {}", top_chern_number(&table));

    // Reversing the orientation flips every sign, so the condition reports
    // the opposite compatible orientation.
    let reversed = vertex_signs(&model, &realization, -1).expect("nondegenerate frames");
    let check = almost_complex_necessary(&reversed);
    println!(
        "  with orientation -1: signs {:?}, compatible orientation {:?}",
        reversed.signs, check.compatible_orientation
    );
}
