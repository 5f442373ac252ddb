//! Presents the rational cohomology ring and computes cup products in it.
//!
//! The ring is the polynomial algebra on one generator per facet, modulo
//! the face ideal (products of facets that share no face vanish) and one
//! linear form per row of the characteristic matrix.  A greedy echelon
//! computation picks a monomial basis in each degree; every class is then
//! expressed over that basis.

use qtorb::{
    build_model, build_polytope, cohomology_ring, minimal_nonfaces, CohomologyRing, Class,
    IntegerMatrix,
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

fn main() {
    // The weighted projective plane P(1,1,2).
    let triangle = build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]])
        .expect("triangle");
    let lambda = IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]);
    let model = build_model(triangle, lambda).expect("valid model");
    let ring = cohomology_ring(&model).expect("dimensions match the h-vector");

    println!("cohomology ring of P(1,1,2)");
    println!("  dims of H^0, H^2, H^4, ...: {:?}", ring.dims());
    for d in 0..=ring.rank() {
        let basis: Vec<String> = ring
            .standard_basis(d)
            .iter()
            .map(|m| m.to_string())
            .collect();
        println!("  basis of H^{}: [{}]", 2 * d, basis.join(", "));
    }
    println!(
        "  minimal nonfaces (products forced to zero): {:?}",
        minimal_nonfaces(model.polytope())
    );
    println!();

    // Every facet class reduces to a multiple of the surviving generator.
    for j in 0..model.polytope().facet_count() {
        let class = ring.facet_class(j);
        println!(
            "  w{} reduces to {}",
            j + 1,
            class_string(&ring, &class)
        );
    }
    println!();

    // Cup products are computed in the quotient: here w2 * w3 lands in the
    // top degree as 2*w1^2, and any product beyond the top degree is zero.
    let w2 = ring.facet_class(1);
    let w3 = ring.facet_class(2);
    let product = ring.cup(&w2, &w3);
    println!("  w2 * w3 = {}", class_string(&ring, &product));
    let top = ring.cup(&ring.facet_class(0), &product);
    println!("  w1 * w2 * w3 = {} (degree exceeds the rank)", class_string(&ring, &top));
    println!();

    // The Poincare pairing on the middle degree is nondegenerate; its
    // matrix is the coefficient of each product over the top-degree basis.
    let pairing: Vec<Vec<String>> = ring
        .pairing_matrix(1)
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    println!("  pairing matrix in degree 1: {pairing:?}");
}
