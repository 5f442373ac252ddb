//! Decides whether two models over the same polytope differ only by a
//! change of basis of the ambient lattice (optionally with per-facet sign
//! flips), and recovers the transformation when they do.

use qtorb::{build_model, build_polytope, model_equivalent, IntegerMatrix, SimplePolytope};

fn triangle() -> SimplePolytope {
    build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).expect("triangle")
}

fn main() {
    // CP^2 with columns (1,0), (0,1), (-1,-1).
    let cp2 = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 0, -1], vec![0, 1, -1]]),
    )
    .expect("valid model");

    // The same model written in a sheared basis: every column multiplied
    // by theta = [1 1; 0 1].
    let sheared = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 1, -2], vec![0, 1, -1]]),
    )
    .expect("valid model");
    match model_equivalent(&cp2, &sheared, false).expect("same polytope") {
        Some(eq) => println!(
            "sheared copy: equivalent via theta = {} with signs {:?}",
            eq.theta, eq.signs
        ),
        None => println!("sheared copy: not equivalent"),
    }

    // Negating one column is not a lattice change of basis, but it is
    // allowed once per-facet sign flips are admitted.
    let flipped = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]),
    )
    .expect("valid model");
    match model_equivalent(&cp2, &flipped, false).expect("same polytope") {
        Some(_) => unreachable!(),
        None => println!("flipped column, strict: not equivalent"),
    }
    match model_equivalent(&cp2, &flipped, true).expect("same polytope") {
        Some(eq) => println!(
            "flipped column, with sign flips: theta = {} and signs {:?}",
            eq.theta, eq.signs
        ),
        None => println!("flipped column, with sign flips: not equivalent"),
    }

    // P(1,1,2) is genuinely different from CP^2: no transformation works.
    let p112 = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]),
    )
    .expect("valid model");
    match model_equivalent(&cp2, &p112, true).expect("same polytope") {
        Some(_) => unreachable!(),
        None => println!("P(1,1,2) vs CP^2: not equivalent, even with sign flips"),
    }

    // Different polytopes cannot be compared at all.
    let square = qtorb::polytope::shapes::polygon(4);
    let square_model = build_model(
        square,
        IntegerMatrix::from_rows(&[vec![1, 0, -1, 0], vec![0, 1, 0, -1]]),
    )
    .expect("valid model");
    match model_equivalent(&cp2, &square_model, false) {
        Err(e) => println!("triangle vs square: {e}"),
        Ok(_) => unreachable!(),
    }
}
