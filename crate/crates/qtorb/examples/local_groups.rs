//! Computes the local isotropy group at every face of a model.
//!
//! Each face F of the polytope spans a sublattice N(F) generated by the
//! characteristic columns of the facets containing F.  The local group at
//! F is the finite abelian quotient N*(F)/N(F) of its saturation; it is
//! trivial exactly at the smooth points of the underlying space.

use qtorb::{build_model, build_polytope, FiniteAbelianGroup, IntegerMatrix};

fn group_name(g: &FiniteAbelianGroup) -> String {
    if g.is_trivial() {
        "trivial".to_string()
    } else {
        g.invariant_factors()
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn main() {
    // The weighted projective plane P(1,1,2): one singular vertex.
    let triangle = build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]])
        .expect("triangle");
    let lambda = IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]);
    let model = build_model(triangle, lambda).expect("valid model");

    println!("local groups of P(1,1,2), face by face:");
    for face in model.polytope().faces() {
        let data = model.local_group(face);
        println!(
            "  facets {:?} (codim {}): {}",
            face.facet_set,
            face.codim,
            group_name(&data.group)
        );
    }
    println!();

    // The singular set is the collection of faces with nontrivial group.
    let singular = model.singular_faces();
    println!("singular faces: {}", singular.len());
    for data in &singular {
        println!(
            "  facets {:?}: {} (group order {})",
            data.face.facet_set,
            group_name(&data.group),
            data.group.order()
        );
        println!("    span basis: {}", data.nf_generators);
        println!("    saturation basis: {}", data.saturation_basis);
    }
    println!();

    // A model whose every facet is singular: doubling all columns of the
    // triangle produces Z/2 on each facet and an order-4 group at each
    // vertex.
    let triangle = build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]])
        .expect("triangle");
    let doubled = IntegerMatrix::from_rows(&[vec![2, 0, 2], vec![0, 2, 2]]);
    let model = build_model(triangle, doubled).expect("valid model");
    println!("a model singular along every face:");
    for data in model.singular_faces() {
        println!(
            "  facets {:?} (codim {}): {}",
            data.face.facet_set,
            data.face.codim,
            group_name(&data.group)
        );
    }
}
