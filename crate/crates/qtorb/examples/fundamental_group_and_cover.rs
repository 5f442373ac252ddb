//! Computes the orbifold fundamental group, the universal orbifold cover,
//! and the global quotient decision.
//!
//! The group is the finite abelian quotient of the ambient lattice by the
//! sublattice spanned by all characteristic columns.  Rewriting the matrix
//! in a basis of that sublattice yields the universal cover model; the
//! original model is a global quotient (of a manifold by a finite group)
//! exactly when the cover is a manifold.

use qtorb::{build_model, build_polytope, CombinatorialModel, FiniteAbelianGroup, IntegerMatrix};

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

fn describe(name: &str, model: &CombinatorialModel) {
    println!("{name}:");
    println!("  characteristic matrix: {}", model.char_matrix());
    println!("  fundamental group: {}", group_name(&model.pi1_orb()));
    let (cover, basis) = model.universal_cover_model();
    println!("  cover sublattice basis (columns): {basis}");
    println!("  cover characteristic matrix: {}", cover.char_matrix());
    println!("  cover is a manifold: {}", cover.is_manifold());
    println!("  model is a manifold: {}", model.is_manifold());
    println!("  model is a global quotient: {}", model.is_global_quotient());
    println!();
}

fn main() {
    let triangle = || {
        build_polytope(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).expect("triangle")
    };

    // Complex projective space: already simply connected and smooth.
    let cp2 = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 0, -1], vec![0, 1, -1]]),
    )
    .expect("valid model");
    describe("CP^2", &cp2);

    // Doubling every column gives fundamental group (Z/2)^2, and the cover
    // turns out to be CP^2 itself: the model is a global quotient of a
    // manifold even though it is not one.
    let quotient = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![2, 0, 2], vec![0, 2, 2]]),
    )
    .expect("valid model");
    describe("CP^2 / (Z/2)^2", &quotient);

    // The weighted projective plane P(1,1,2) is simply connected but its
    // own universal cover: the singular vertex survives, so it is not a
    // global quotient.
    let p112 = build_model(
        triangle(),
        IntegerMatrix::from_rows(&[vec![1, 1, -1], vec![1, -1, 0]]),
    )
    .expect("valid model");
    describe("P(1,1,2)", &p112);

    // Taking the cover twice changes nothing: the cover is its own cover.
    let (cover, _) = quotient.universal_cover_model();
    let (cover_again, basis) = cover.universal_cover_model();
    println!(
        "cover of the cover has basis {basis} and the same matrix: {}",
        cover_again.char_matrix() == cover.char_matrix()
    );
}
