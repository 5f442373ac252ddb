//! Computes f-vectors, h-vectors and rational Betti numbers, and checks
//! the h-vector against the index distribution of a generic functional.
//!
//! For these spaces the rational cohomology is concentrated in even
//! degrees with b_{2k} equal to the k-th entry of the polytope's h-vector,
//! so the Betti numbers depend only on the combinatorics.  A convex
//! realization gives an independent route to the same numbers: counting,
//! at each vertex, the neighbours on which a generic linear functional is
//! smaller.

use qtorb::polytope::shapes;
use qtorb::zlattice::rational::rat;
use qtorb::{betti_numbers, index_vector, Int, Realization};

fn main() {
    let prism = shapes::product(&shapes::polygon(3), &shapes::segment());
    let cases = [
        ("triangle", shapes::polygon(3)),
        ("pentagon", shapes::polygon(5)),
        ("cube", shapes::cube()),
        ("triangular prism", prism),
    ];
    for (name, p) in &cases {
        println!("{name}:");
        println!("  f-vector: {:?}", p.f_vector());
        println!("  h-vector: {:?}  (palindromic)", p.h_vector());
        println!("  Betti numbers b_0..b_{}: {:?}", 2 * p.dim(), betti_numbers(p));
        println!();
    }

    // The unit square, with the functional x + 2y.  Vertex v has index k
    // when exactly k of its neighbours have a smaller functional value;
    // the distribution of indices reproduces the h-vector (1, 2, 1).
    let square = shapes::polygon(4);
    let coords = [[0, 0], [1, 0], [1, 1], [0, 1]]
        .iter()
        .map(|c| c.iter().map(|&x| rat(&Int::from(x))).collect())
        .collect();
    let functional = vec![rat(&Int::from(1)), rat(&Int::from(2))];
    let realization =
        Realization::new(&square, coords, Some(functional)).expect("valid realization");
    let indices = index_vector(&square, &realization).expect("functional is generic");
    println!("square with functional x + 2y:");
    println!("  vertex indices: {indices:?}");
    let mut counts = vec![0i64; square.dim() + 1];
    for &k in &indices {
        counts[k] += 1;
    }
    println!("  index distribution: {counts:?}");
    println!("  h-vector:           {:?}", square.h_vector());
}
