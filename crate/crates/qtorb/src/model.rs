//! Combinatorial models of quasitoric orbifolds and their lattice data.
//!
//! A model is a simple `n`-polytope together with an `n × m` integer
//! characteristic matrix `Λ`; column `λ_i` is attached to facet `F_i`.
//! Validity means the columns meeting at each vertex are linearly
//! independent (nonzero determinant) and no column is zero.
//!
//! For a face `F` with facet set `I(F)`, write `N(F)` for the sublattice
//! generated by `{λ_i : i ∈ I(F)}` and `N*(F)` for its saturation.  The
//! local isotropy group of `F` is the finite abelian quotient
//! `G_F = N*(F)/N(F)`; the model describes a manifold exactly when every
//! vertex group is trivial (all vertex determinants ±1).
//!
//! The orbifold fundamental group is `Z^n / N̂`, where `N̂` is the
//! sublattice generated by all columns; the universal orbifold cover is the
//! same polytope with `Λ` rewritten in a canonical (Hermite) basis of `N̂`.
//! The model is a global quotient exactly when its universal cover is a
//! manifold.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::polytope::{build_polytope, Face, PolytopeError, SimplePolytope};
use crate::zlattice::rational::{self, Rat};
use crate::zlattice::{
    hnf, quotient_group, saturation, smith_normal_form, FiniteAbelianGroup, Int, IntegerMatrix,
    LatticeError,
};

/// Errors from model construction and model-level operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("characteristic matrix is {rows}×{cols}, expected {expected_rows}×{expected_cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("characteristic vector of facet {facet} is zero")]
    ZeroColumn { facet: usize },
    #[error(
        "characteristic vectors at vertex {vertex} (facets {facets:?}) are dependent: determinant 0"
    )]
    DependentAtVertex { vertex: usize, facets: Vec<usize> },
    #[error("face {facets:?} is a vertex: its characteristic submodel would be a point")]
    VertexSubmodel { facets: Vec<usize> },
    #[error("face {facets:?} does not belong to this polytope")]
    UnknownFace { facets: Vec<usize> },
    #[error("models live on different polytopes")]
    PolytopeMismatch,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A validated pair (simple polytope, characteristic matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialModel {
    polytope: SimplePolytope,
    rank: usize,
    char_matrix: IntegerMatrix,
}

/// The local isotropy group of a face together with the lattices that
/// define it.
#[derive(Clone, Debug)]
pub struct LocalGroupData {
    pub face: Face,
    /// Basis (as columns) of `N(F)`, the span of the face's columns.
    pub nf_generators: IntegerMatrix,
    /// Canonical basis (as columns) of the saturation `N*(F)`.
    pub saturation_basis: IntegerMatrix,
    /// The quotient `N*(F)/N(F)`.
    pub group: FiniteAbelianGroup,
}

/// The result of a successful model equivalence search: a unimodular
/// change of basis `θ` and a sign per facet with `θ·λ_i = ε_i·λ'_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub theta: IntegerMatrix,
    pub signs: Vec<i8>,
}

/// Validates a characteristic matrix against a polytope.
///
/// `char_matrix` must be `dim × facet_count`; every column must be nonzero
/// and the columns meeting at each vertex must have nonzero determinant.
pub fn build_model(
    polytope: SimplePolytope,
    char_matrix: IntegerMatrix,
) -> Result<CombinatorialModel, ModelError> {
    let n = polytope.dim();
    let m = polytope.facet_count();
    if char_matrix.rows() != n || char_matrix.cols() != m {
        return Err(ModelError::ShapeMismatch {
            rows: char_matrix.rows(),
            cols: char_matrix.cols(),
            expected_rows: n,
            expected_cols: m,
        });
    }
    for j in 0..m {
        if char_matrix.column(j).iter().all(Int::is_zero) {
            return Err(ModelError::ZeroColumn { facet: j });
        }
    }
    for v in 0..polytope.vertex_count() {
        let facets = polytope.vertex_facet_list(v);
        let mat = char_matrix.select_columns(&facets);
        if mat.det().is_zero() {
            return Err(ModelError::DependentAtVertex { vertex: v, facets });
        }
    }
    Ok(CombinatorialModel {
        rank: n,
        polytope,
        char_matrix,
    })
}

impl CombinatorialModel {
    pub fn polytope(&self) -> &SimplePolytope {
        &self.polytope
    }

    /// Rank of the ambient lattice (equals the polytope dimension).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn char_matrix(&self) -> &IntegerMatrix {
        &self.char_matrix
    }

    /// The characteristic vector of facet `i` (column `λ_i`).
    pub fn lambda(&self, facet: usize) -> Vec<Int> {
        self.char_matrix.column(facet)
    }

    /// The `n × n` matrix of the columns at vertex `v`, facets in
    /// increasing index order.
    pub fn vertex_matrix(&self, v: usize) -> IntegerMatrix {
        self.char_matrix
            .select_columns(&self.polytope.vertex_facet_list(v))
    }

    /// Determinant of the columns at vertex `v`.
    pub fn vertex_det(&self, v: usize) -> Int {
        self.vertex_matrix(v).det()
    }

    /// The submatrix of columns indexed by a face's facet set, in
    /// increasing facet order.
    pub fn face_columns(&self, face: &Face) -> IntegerMatrix {
        let idx: Vec<usize> = face.facet_set.iter().copied().collect();
        if idx.is_empty() {
            IntegerMatrix::zero(self.rank, 0)
        } else {
            self.char_matrix.select_columns(&idx)
        }
    }

    /// The local isotropy group `G_F = N*(F)/N(F)` of a face.
    ///
    /// The codimension-0 face has trivial group by convention.
    pub fn local_group(&self, face: &Face) -> LocalGroupData {
        let nf = self.face_columns(face);
        if face.codim == 0 {
            return LocalGroupData {
                face: face.clone(),
                nf_generators: nf,
                saturation_basis: IntegerMatrix::zero(self.rank, 0),
                group: FiniteAbelianGroup::trivial(self.rank),
            };
        }
        let gens: Vec<Vec<Int>> = nf.columns();
        let sat = saturation(&gens, self.rank);
        let group = quotient_group(&sat, &nf)
            .expect("saturation has the same rank as the face columns");
        LocalGroupData {
            face: face.clone(),
            nf_generators: nf,
            saturation_basis: sat,
            group,
        }
    }

    /// Faces with nontrivial local group, in face order (codimension, then
    /// facet set).  These form the singular locus of the orbifold.
    pub fn singular_faces(&self) -> Vec<LocalGroupData> {
        self.polytope
            .faces()
            .iter()
            .filter(|f| f.codim > 0)
            .map(|f| self.local_group(f))
            .filter(|data| !data.group.is_trivial())
            .collect()
    }

    /// True when every column is primitive (content 1).
    pub fn is_primitive(&self) -> bool {
        (0..self.char_matrix.cols()).all(|j| {
            let col = self.char_matrix.column(j);
            column_content(&col).is_one()
        })
    }

    /// The orbifold fundamental group `Z^n / N̂`, where `N̂` is generated
    /// by all characteristic vectors.
    pub fn pi1_orb(&self) -> FiniteAbelianGroup {
        quotient_group(&IntegerMatrix::identity(self.rank), &self.char_matrix)
            .expect("characteristic vectors span a full-rank sublattice")
    }

    /// The universal orbifold cover: the same polytope with the
    /// characteristic vectors rewritten in the canonical Hermite basis of
    /// `N̂`.  Returns the cover model and the basis (as columns) of `N̂` in
    /// the original coordinates.
    pub fn universal_cover_model(&self) -> (CombinatorialModel, IntegerMatrix) {
        let rows = self.char_matrix.transpose();
        let (h, _) = hnf(&rows);
        let basis_rows: Vec<Vec<Int>> = (0..h.rows())
            .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| h.row(i).to_vec())
            .collect();
        assert_eq!(
            basis_rows.len(),
            self.rank,
            "characteristic vectors always span a full-rank sublattice"
        );
        let basis = IntegerMatrix::from_int_rows(&basis_rows).transpose();
        let mut new_cols: Vec<Vec<Int>> = Vec::with_capacity(self.char_matrix.cols());
        for j in 0..self.char_matrix.cols() {
            let col = self.char_matrix.column(j);
            let coords = rational::solve_int(&basis, &col)
                .expect("every column lies in the span of the basis");
            let ints: Vec<Int> = coords
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "column outside its own lattice");
                    c.to_integer()
                })
                .collect();
            new_cols.push(ints);
        }
        let cover = build_model(
            self.polytope.clone(),
            IntegerMatrix::from_columns(&new_cols),
        )
        .expect("rewriting in a basis of N̂ preserves validity");
        (cover, basis)
    }

    /// True when all vertex determinants are ±1, i.e. every local group is
    /// trivial and the model describes a manifold.
    pub fn is_manifold(&self) -> bool {
        (0..self.polytope.vertex_count()).all(|v| self.vertex_det(v).abs().is_one())
    }

    /// True when the universal orbifold cover is a manifold.
    pub fn is_global_quotient(&self) -> bool {
        self.universal_cover_model().0.is_manifold()
    }

    /// The characteristic submodel of a face `F` of codimension `k`:
    /// the face as a simple `(n-k)`-polytope whose facets are the facets of
    /// `P` cutting `F` properly, with characteristic vectors the images of
    /// their `λ_j` under the projection `Z^n → Z^n / N*(F)` written in a
    /// canonical basis.
    ///
    /// Errors on vertices (codimension `n`); returns a clone of the model
    /// for the codimension-0 face.  The second return value lists, per new
    /// facet, the original facet index.
    pub fn characteristic_submodel(
        &self,
        face: &Face,
    ) -> Result<(CombinatorialModel, Vec<usize>), ModelError> {
        let n = self.rank;
        let k = face.codim;
        if k == 0 {
            return Ok((self.clone(), (0..self.polytope.facet_count()).collect()));
        }
        if k == n {
            return Err(ModelError::VertexSubmodel {
                facets: face.facet_set.iter().copied().collect(),
            });
        }
        if self.polytope.face_with_facets(&face.facet_set).is_none() {
            return Err(ModelError::UnknownFace {
                facets: face.facet_set.iter().copied().collect(),
            });
        }

        // Facets of the sub-polytope: facets j ∉ I(F) with I(F) ∪ {j} a face.
        let mut sub_facets: Vec<usize> = Vec::new();
        for j in 0..self.polytope.facet_count() {
            if face.facet_set.contains(&j) {
                continue;
            }
            let mut bigger = face.facet_set.clone();
            bigger.insert(j);
            if self.polytope.is_face_set(&bigger) {
                sub_facets.push(j);
            }
        }

        // Vertices of F, relabelled into the sub-facet indexing.
        let facet_index = |orig: usize| sub_facets.iter().position(|&f| f == orig);
        let mut sub_vertices: Vec<Vec<usize>> = Vec::new();
        for &v in &face.vertex_set {
            let rest: Vec<usize> = self
                .polytope
                .vertex_facet_list(v)
                .into_iter()
                .filter(|f| !face.facet_set.contains(f))
                .map(|f| facet_index(f).expect("vertex facet cuts the face properly"))
                .collect();
            sub_vertices.push(rest);
        }
        let sub_polytope = build_polytope(n - k, sub_facets.len(), sub_vertices)?;

        // Projection Z^n → Z^n/N*(F) in a canonical basis: diagonalize the
        // saturation basis S (whose invariant factors are all 1) as
        // U·S·V = [I_k; 0]; the last n-k coordinates of U·x present the
        // quotient.
        let data = self.local_group(face);
        let snf = smith_normal_form(&data.saturation_basis);
        debug_assert!(snf
            .diagonal()
            .iter()
            .all(|d| d.is_one()));
        let u = &snf.u;
        let mut cols: Vec<Vec<Int>> = Vec::with_capacity(sub_facets.len());
        for &j in &sub_facets {
            let img = u.mul_vec(&self.char_matrix.column(j));
            cols.push(img[k..].to_vec());
        }
        let sub_model = build_model(sub_polytope, IntegerMatrix::from_columns(&cols))?;
        Ok((sub_model, sub_facets))
    }
}

/// The gcd of a column's entries (content), nonnegative.
fn column_content(col: &[Int]) -> Int {
    use num_integer::Integer as _;
    col.iter()
        .fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// Searches for a lattice isomorphism between two models on the same
/// polytope: a unimodular `θ` with `θ·λ_i = ε_i·λ'_i` for every facet,
/// where all `ε_i = +1` unless `allow_sign_flips` is set.
///
/// The candidate `θ` is solved from the columns at one vertex and verified
/// against every facet; with sign flips the search runs over the sign
/// patterns of that vertex's facets only, since all other signs are then
/// forced.  Returns `Ok(None)` when no equivalence exists.
pub fn model_equivalent(
    m1: &CombinatorialModel,
    m2: &CombinatorialModel,
    allow_sign_flips: bool,
) -> Result<Option<Equivalence>, ModelError> {
    if !same_polytope(m1.polytope(), m2.polytope()) {
        return Err(ModelError::PolytopeMismatch);
    }
    let n = m1.rank();
    let m = m1.polytope().facet_count();
    let base_facets = m1.polytope().vertex_facet_list(0);
    let a = m1.char_matrix().select_columns(&base_facets);
    let b = m2.char_matrix().select_columns(&base_facets);

    let patterns: usize = if allow_sign_flips { 1 << n } else { 1 };
    'pattern: for bits in 0..patterns {
        // θ · a = b · diag(ε) on the base vertex.
        let mut target_cols: Vec<Vec<Int>> = Vec::with_capacity(n);
        for (pos, _) in base_facets.iter().enumerate() {
            let mut col = b.column(pos);
            if bits >> pos & 1 == 1 {
                for x in col.iter_mut() {
                    *x = -x.clone();
                }
            }
            target_cols.push(col);
        }
        // Solve θᵀ from aᵀ·θᵀ = target ᵀ, one row of θ at a time.
        let at = a.transpose();
        let mut theta_rows: Vec<Vec<Int>> = Vec::with_capacity(n);
        for r in 0..n {
            let rhs: Vec<Rat> = target_cols
                .iter()
                .map(|col| rational::rat(&col[r]))
                .collect();
            let Some(sol) = rational::solve(&at, &rhs) else {
                continue 'pattern;
            };
            if !sol.iter().all(rational::is_integral) {
                continue 'pattern;
            }
            theta_rows.push(sol.iter().map(|x| x.to_integer()).collect());
        }
        let theta = IntegerMatrix::from_int_rows(&theta_rows);
        if !theta.det().abs().is_one() {
            continue;
        }
        // Verify globally, fixing the sign of every facet.
        let mut signs: Vec<i8> = vec![0; m];
        for (pos, &f) in base_facets.iter().enumerate() {
            signs[f] = if bits >> pos & 1 == 1 { -1 } else { 1 };
        }
        let mut ok = true;
        for (f, slot) in signs.iter_mut().enumerate() {
            let image = theta.mul_vec(&m1.lambda(f));
            let target = m2.lambda(f);
            if image == target {
                if *slot == 0 {
                    *slot = 1;
                } else if *slot == -1 {
                    ok = false;
                    break;
                }
            } else if allow_sign_flips
                && image.iter().zip(&target).all(|(x, y)| *x == -y.clone())
            {
                if *slot == 0 {
                    *slot = -1;
                } else if *slot == 1 {
                    ok = false;
                    break;
                }
            } else {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(Equivalence { theta, signs }));
        }
    }
    Ok(None)
}

/// Polytope identity for equivalence purposes: same dimension, same facet
/// count, same family of vertex facet-sets.
fn same_polytope(p: &SimplePolytope, q: &SimplePolytope) -> bool {
    if p.dim() != q.dim() || p.facet_count() != q.facet_count() {
        return false;
    }
    let mut a: Vec<&BTreeSet<usize>> = (0..p.vertex_count())
        .map(|v| p.vertex_facet_set(v))
        .collect();
    let mut b: Vec<&BTreeSet<usize>> = (0..q.vertex_count())
        .map(|v| q.vertex_facet_set(v))
        .collect();
    a.sort();
    b.sort();
    a == b
}
