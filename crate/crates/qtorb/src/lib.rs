//! Exact computation of topological invariants of quasitoric orbifolds.
//!
//! A quasitoric orbifold of dimension `2n` is encoded by a *combinatorial
//! model*: a simple `n`-polytope `P` with facets `F_1, …, F_m` together with
//! an integer `n × m` characteristic matrix `Λ` whose column `λ_i` is the
//! isotropy vector attached to `F_i`.  The model is valid when the columns
//! indexed by the facets meeting at any vertex are linearly independent.
//!
//! From that data alone this crate computes, in exact arithmetic (arbitrary
//! precision integers and rationals, no floating point anywhere):
//!
//! * local isotropy groups of faces and the singular strata ([`model`]),
//! * the orbifold fundamental group, the universal orbifold cover, and the
//!   manifold / global-quotient decisions ([`model`]),
//! * rational Betti numbers and the rational cohomology ring as a quotient
//!   of the face ring by linear relations ([`cohomology`]),
//! * vertex orientation signs, the top Chern number, and the necessary
//!   condition for an invariant almost complex structure ([`chern`]),
//! * Chen–Ruan (orbifold) cohomology Betti tables, including twisted
//!   sectors with rational degree shifts ([`chenruan`]).
//!
//! The combinatorial backbone (faces, h-vectors, edge graphs) lives in
//! [`polytope`]; the integer-lattice algorithms (Smith and Hermite normal
//! forms, kernels, saturations, finite quotient groups) live in
//! [`zlattice`].  The [`cli`] module reads model files from JSON and
//! produces deterministic text or JSON reports; the `qtorb` binary is a
//! thin wrapper around it.
//!
//! The `examples/` directory of this crate is the guided tour: one runnable
//! example per capability (`cargo run -p qtorb --example <name>`).

#![forbid(unsafe_code)]

pub mod chenruan;
pub mod chern;
pub mod cli;
pub mod cohomology;
pub mod model;
pub mod polytope;
pub mod zlattice;

pub use chenruan::{box_elements, chen_ruan_betti, vertex_group_order_sum, ChenRuanTable, Sector};
pub use chern::{
    almost_complex_necessary, top_chern_number, total_chern_class, vertex_signs,
    AlmostComplexCheck, ChernError, VertexSignTable,
};
pub use cohomology::{
    betti_numbers, cohomology_ring, cup, linear_forms, minimal_nonfaces, Class, CohomologyRing,
    Monomial, RingError,
};
pub use model::{
    build_model, model_equivalent, CombinatorialModel, Equivalence, LocalGroupData, ModelError,
};
pub use polytope::{build_polytope, index_vector, Face, Realization, SimplePolytope};
pub use zlattice::{
    hnf, kernel_basis, quotient_group, saturation, smith_normal_form, FiniteAbelianGroup, Int,
    IntegerMatrix, Rat, SmithDecomposition,
};
