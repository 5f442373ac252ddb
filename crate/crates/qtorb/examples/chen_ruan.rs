//! Computes twisted sectors and the Chen-Ruan Betti table.
//!
//! Every face F with a nontrivial local group contributes one sector per
//! group element that acts with full support on the normal directions of
//! F.  A sector shifts the Betti numbers of the face's induced model by
//! twice its age; summing the shifted tables over all sectors, together
//! with the table of the underlying space, gives the Chen-Ruan Betti
//! numbers, graded over the rationals.

use qtorb::{
    box_elements, build_model, build_polytope, chen_ruan_betti, vertex_group_order_sum,
    CombinatorialModel, IntegerMatrix,
};

fn describe(name: &str, model: &CombinatorialModel) {
    println!("{name}:");
    let sectors = box_elements(model);
    println!("  twisted sectors: {}", sectors.len());
    for s in &sectors {
        let q: Vec<String> = s.q.iter().map(|x| x.to_string()).collect();
        println!(
            "    face {:?}: rep {:?}, q [{}], age {}, degree shift {}",
            s.face.facet_set,
            s.rep,
            q.join(", "),
            s.iota,
            s.shift
        );
    }
    let table = chen_ruan_betti(model);
    print!("  Chen-Ruan Betti table:");
    for (degree, count) in table.entries() {
        print!(" {degree}:{count}");
    }
    println!();
    println!(
        "  total dimension {} = sum of vertex group orders {}",
        table.total_dimension(),
        vertex_group_order_sum(model)
    );
    println!();
}

fn main() {
    // The teardrop: one Z/2 vertex, whose sector has fractional age 1/2
    // and lands in (real) degree 1.
    let segment = build_polytope(1, 2, vec![vec![0], vec![1]]).expect("segment");
    let teardrop = build_model(segment, IntegerMatrix::from_rows(&[vec![2, -1]]))
        .expect("valid model");
    describe("teardrop", &teardrop);

    // The weighted projective plane P(1,1,2): a single singular vertex
    // with one sector of age 1.
    let triangle = || {
        build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).expect("triangle")
    };
    let p112 = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]),
    )
    .expect("valid model");
    describe("P(1,1,2)", &p112);

    // The (Z/2)^2 quotient of CP^2 is singular along every face: three
    // facet sectors carrying segment models and three vertex pairs.
    let quotient = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![2, 0, 2], vec![0, 2, 2]]),
    )
    .expect("valid model");
    describe("CP^2 / (Z/2)^2", &quotient);
}
