//! Builds an orbifold model from scratch and shows what validation means.
//!
//! A model is a simple polytope together with an integer matrix that has
//! one column per facet.  The model is valid when no column is zero and
//! the columns meeting at each vertex are linearly independent.  This
//! example constructs a triangle carrying the weighted projective plane
//! P(1,1,2) and then demonstrates the two ways a matrix can be rejected.

use qtorb::{build_model, build_polytope, IntegerMatrix};

fn main() {
    // A triangle: three facets, three vertices, each vertex on two facets.
    let triangle = build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]])
        .expect("a triangle is a valid simple polytope");
    println!(
        "polytope: dimension {}, {} facets, {} vertices",
        triangle.dim(),
        triangle.facet_count(),
        triangle.vertex_count()
    );
    println!("f-vector: {:?}", triangle.f_vector());
    println!("h-vector: {:?}", triangle.h_vector());
    println!();

    // The characteristic matrix is given by rows; its columns, one per
    // facet, are (1,1), (1,-1) and (-1,0).  This is the standard model of
    // the weighted projective plane P(1,1,2).
    let lambda = IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]);
    println!("characteristic matrix: {lambda}");
    let model =
        build_model(triangle.clone(), lambda).expect("columns at every vertex are independent");
    for v in 0..triangle.vertex_count() {
        println!(
            "vertex {} on facets {:?}: det {}",
            v,
            triangle.vertex_facet_list(v),
            model.vertex_det(v)
        );
    }
    println!("primitive columns: {}", model.is_primitive());
    println!("underlying space is a manifold: {}", model.is_manifold());
    println!();

    // A zero column is rejected outright.
    let zero_column = IntegerMatrix::from_rows(&[vec![1, 0, -1], vec![1, 0, 0]]);
    match build_model(triangle.clone(), zero_column) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    // So are columns that become dependent at a vertex: here facets 0 and 1
    // meet at vertex 0 but their columns (1,1) and (2,2) are parallel.
    let dependent = IntegerMatrix::from_rows(&[vec![1, 2, -1], vec![1, 2, 0]]);
    match build_model(triangle, dependent) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
