//! Simple polytopes given by their vertex–facet incidence.
//!
//! A simple `n`-polytope is encoded purely combinatorially: each vertex is
//! the intersection of exactly `n` facets, so the input is one `n`-element
//! facet set per vertex.  Faces of codimension `k` correspond to `k`-subsets
//! of facet indices that occur inside some vertex set; edges are the
//! `(n-1)`-subsets, and each must be shared by exactly two vertices.
//!
//! An optional [`Realization`] attaches exact rational coordinates to the
//! vertices (used for orientation signs) and a generic linear functional
//! (used for the Morse-style index count that recovers the h-vector).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::zlattice::rational::Rat;

/// Errors from polytope construction and realization checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("vertex {vertex} has {got} distinct facets, expected {expected}")]
    VertexFacetCount {
        vertex: usize,
        got: usize,
        expected: usize,
    },
    #[error("vertex {vertex} references facet {facet}, but only {facet_count} facets exist")]
    FacetIndexOutOfRange {
        vertex: usize,
        facet: usize,
        facet_count: usize,
    },
    #[error("facet {facet} does not appear in any vertex")]
    UnusedFacet { facet: usize },
    #[error("vertices {first} and {second} have identical facet sets")]
    DuplicateVertex { first: usize, second: usize },
    #[error("facet subset {subset:?} lies in {count} vertices, expected exactly 2")]
    BadEdge { subset: Vec<usize>, count: usize },
    #[error("the vertex-edge graph is disconnected")]
    Disconnected,
    #[error("polytope must have at least one vertex")]
    NoVertices,
    #[error("dimension must be at least 1")]
    DimensionZero,
    #[error("realization has {got} coordinate vectors for {expected} vertices")]
    CoordinateCount { got: usize, expected: usize },
    #[error("coordinate vector for vertex {vertex} has length {got}, expected {expected}")]
    CoordinateLength {
        vertex: usize,
        got: usize,
        expected: usize,
    },
    #[error("functional has length {got}, expected {expected}")]
    FunctionalLength { got: usize, expected: usize },
    #[error("realization carries no linear functional")]
    MissingFunctional,
    #[error("functional is not generic: vertices {first} and {second} share value {value}")]
    NonGenericFunctional {
        first: usize,
        second: usize,
        value: Rat,
    },
}

/// A face of a simple polytope: the set of facets containing it.
///
/// Codimension equals the size of `facet_set`; the codimension-0 face (the
/// polytope itself) has the empty facet set.  `vertex_set` lists the
/// vertices lying on the face, in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub facet_set: BTreeSet<usize>,
    pub codim: usize,
    pub vertex_set: Vec<usize>,
}

/// A simple polytope with labelled facets, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolytope {
    dim: usize,
    facet_count: usize,
    vertex_facets: Vec<BTreeSet<usize>>,
    /// Per vertex, the neighbor across each facet: `(facet, neighbor)`
    /// sorted by facet index.  Neighbor across facet `i` shares all facets
    /// except `i`.
    vertex_neighbors: Vec<Vec<(usize, usize)>>,
    faces: Vec<Face>,
}

impl SimplePolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_facets.len()
    }

    /// The facet set of a vertex (always `dim` elements).
    pub fn vertex_facet_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.vertex_facets[v]
    }

    /// Facet indices of a vertex in increasing order.
    pub fn vertex_facet_list(&self, v: usize) -> Vec<usize> {
        self.vertex_facets[v].iter().copied().collect()
    }

    /// For vertex `v`, the pairs `(facet, neighbor)` sorted by facet index:
    /// `neighbor` is the unique vertex sharing all facets of `v` except
    /// `facet`.  The edge from `v` to `neighbor` is the one leaving the
    /// facet `facet`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.vertex_neighbors[v]
    }

    /// All faces, sorted by codimension and then lexicographically by facet
    /// set.  Includes the codimension-0 face (empty facet set) and the
    /// vertices (codimension `dim`).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces of one codimension.
    pub fn faces_of_codim(&self, codim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.codim == codim)
    }

    /// The face with the given facet set, if that set is a face.
    pub fn face_with_facets(&self, facets: &BTreeSet<usize>) -> Option<&Face> {
        self.faces
            .iter()
            .find(|f| f.codim == facets.len() && &f.facet_set == facets)
    }

    /// Face counts by codimension: `f[k]` is the number of codimension-`k`
    /// faces, so `f[0] = 1` and `f[dim]` is the vertex count.
    pub fn f_vector(&self) -> Vec<i64> {
        let mut f = vec![0i64; self.dim + 1];
        for face in &self.faces {
            f[face.codim] += 1;
        }
        f
    }

    /// The h-vector `(h_0, …, h_n)`, read off from the identity
    /// `Σ_k f_k (t-1)^{n-k} = Σ_i h_i t^{n-i}` where `f_k` counts
    /// codimension-`k` faces.
    pub fn h_vector(&self) -> Vec<i64> {
        let n = self.dim;
        let f = self.f_vector();
        // Accumulate coefficients of the polynomial in t, degree n … 0.
        let mut coeffs = vec![0i64; n + 1]; // coeffs[i] = coefficient of t^(n-i)
        for (k, &fk) in f.iter().enumerate() {
            // (t-1)^(n-k) = Σ_j C(n-k, j) t^(n-k-j) (-1)^j
            let deg = n - k;
            for j in 0..=deg {
                let c = binomial(deg, j) * if j % 2 == 0 { 1 } else { -1 };
                // term degree is deg - j = n - (k + j)
                coeffs[k + j] += fk * c;
            }
        }
        coeffs
    }

    /// True when `subset` is the facet set of some face.
    pub fn is_face_set(&self, subset: &BTreeSet<usize>) -> bool {
        if subset.is_empty() {
            return true;
        }
        self.vertex_facets
            .iter()
            .any(|vf| subset.is_subset(vf))
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

/// Builds and validates a simple polytope from its vertex–facet incidence.
///
/// Checks, in order: every vertex names exactly `dim` distinct facets in
/// range; every facet is used; no two vertices share a facet set; every
/// `(dim-1)`-subset of a vertex set lies in exactly two vertices (so edges
/// are well defined and the graph is `dim`-regular); the vertex-edge graph
/// is connected.
pub fn build_polytope(
    dim: usize,
    facet_count: usize,
    vertex_facets: Vec<Vec<usize>>,
) -> Result<SimplePolytope, PolytopeError> {
    if dim == 0 {
        return Err(PolytopeError::DimensionZero);
    }
    if vertex_facets.is_empty() {
        return Err(PolytopeError::NoVertices);
    }

    let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(vertex_facets.len());
    for (v, list) in vertex_facets.iter().enumerate() {
        let set: BTreeSet<usize> = list.iter().copied().collect();
        if set.len() != dim || list.len() != dim {
            return Err(PolytopeError::VertexFacetCount {
                vertex: v,
                got: set.len(),
                expected: dim,
            });
        }
        if let Some(&facet) = set.iter().find(|&&f| f >= facet_count) {
            return Err(PolytopeError::FacetIndexOutOfRange {
                vertex: v,
                facet,
                facet_count,
            });
        }
        sets.push(set);
    }

    let mut used = vec![false; facet_count];
    for set in &sets {
        for &f in set {
            used[f] = true;
        }
    }
    if let Some(facet) = used.iter().position(|u| !u) {
        return Err(PolytopeError::UnusedFacet { facet });
    }

    let mut seen: BTreeMap<&BTreeSet<usize>, usize> = BTreeMap::new();
    for (v, set) in sets.iter().enumerate() {
        if let Some(&first) = seen.get(set) {
            return Err(PolytopeError::DuplicateVertex { first, second: v });
        }
        seen.insert(set, v);
    }

    // Each (dim-1)-subset of a vertex set keys one edge and must occur in
    // exactly two vertices.
    let mut edge_map: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
    for (v, set) in sets.iter().enumerate() {
        for &drop in set {
            let mut key = set.clone();
            key.remove(&drop);
            edge_map.entry(key).or_default().push(v);
        }
    }
    for (subset, vs) in &edge_map {
        if vs.len() != 2 {
            return Err(PolytopeError::BadEdge {
                subset: subset.iter().copied().collect(),
                count: vs.len(),
            });
        }
    }

    let mut vertex_neighbors: Vec<Vec<(usize, usize)>> = vec![Vec::new(); sets.len()];
    for (v, set) in sets.iter().enumerate() {
        for &drop in set {
            let mut key = set.clone();
            key.remove(&drop);
            let pair = &edge_map[&key];
            let other = if pair[0] == v { pair[1] } else { pair[0] };
            vertex_neighbors[v].push((drop, other));
        }
        vertex_neighbors[v].sort();
    }

    // Connectivity of the vertex-edge graph.
    let mut visited = vec![false; sets.len()];
    let mut queue = VecDeque::from([0usize]);
    visited[0] = true;
    while let Some(v) = queue.pop_front() {
        for &(_, u) in &vertex_neighbors[v] {
            if !visited[u] {
                visited[u] = true;
                queue.push_back(u);
            }
        }
    }
    if visited.iter().any(|&b| !b) {
        return Err(PolytopeError::Disconnected);
    }

    let faces = enumerate_faces(dim, &sets);

    Ok(SimplePolytope {
        dim,
        facet_count,
        vertex_facets: sets,
        vertex_neighbors,
        faces,
    })
}

/// Enumerates all faces: for each codimension `k`, the `k`-subsets of facet
/// indices contained in at least one vertex set, plus the codimension-0
/// face with the empty facet set.
fn enumerate_faces(dim: usize, sets: &[BTreeSet<usize>]) -> Vec<Face> {
    let mut by_set: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
    by_set.insert(BTreeSet::new(), (0..sets.len()).collect());
    for (v, set) in sets.iter().enumerate() {
        let elems: Vec<usize> = set.iter().copied().collect();
        for k in 1..=dim {
            for combo in combinations(&elems, k) {
                by_set
                    .entry(combo.into_iter().collect())
                    .or_default()
                    .push(v);
            }
        }
    }
    let mut faces: Vec<Face> = by_set
        .into_iter()
        .map(|(facet_set, mut vertex_set)| {
            vertex_set.sort_unstable();
            vertex_set.dedup();
            Face {
                codim: facet_set.len(),
                facet_set,
                vertex_set,
            }
        })
        .collect();
    faces.sort_by(|a, b| {
        a.codim
            .cmp(&b.codim)
            .then_with(|| a.facet_set.cmp(&b.facet_set))
    });
    faces
}

/// All `k`-element subsets of `items`, in lexicographic order.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // Advance the index vector.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exact rational coordinates for the vertices of a polytope, with an
/// optional linear functional used for index counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    coordinates: Vec<Vec<Rat>>,
    functional: Option<Vec<Rat>>,
}

impl Realization {
    /// Validates vector lengths against the polytope.
    pub fn new(
        polytope: &SimplePolytope,
        coordinates: Vec<Vec<Rat>>,
        functional: Option<Vec<Rat>>,
    ) -> Result<Self, PolytopeError> {
        if coordinates.len() != polytope.vertex_count() {
            return Err(PolytopeError::CoordinateCount {
                got: coordinates.len(),
                expected: polytope.vertex_count(),
            });
        }
        for (v, c) in coordinates.iter().enumerate() {
            if c.len() != polytope.dim() {
                return Err(PolytopeError::CoordinateLength {
                    vertex: v,
                    got: c.len(),
                    expected: polytope.dim(),
                });
            }
        }
        if let Some(phi) = &functional {
            if phi.len() != polytope.dim() {
                return Err(PolytopeError::FunctionalLength {
                    got: phi.len(),
                    expected: polytope.dim(),
                });
            }
        }
        Ok(Realization {
            coordinates,
            functional,
        })
    }

    pub fn coordinates(&self, v: usize) -> &[Rat] {
        &self.coordinates[v]
    }

    pub fn functional(&self) -> Option<&[Rat]> {
        self.functional.as_deref()
    }

    fn value(&self, phi: &[Rat], v: usize) -> Rat {
        phi.iter()
            .zip(&self.coordinates[v])
            .map(|(a, x)| a * x)
            .fold(Rat::from_integer(0.into()), |s, t| s + t)
    }
}

/// The Morse-style index of every vertex under the realization's
/// functional: `index(v)` counts the neighbors `u` with `φ(u) < φ(v)`.
///
/// Fails when the realization has no functional or when two vertices share
/// a value (naming the tied pair).  The returned vector is indexed by
/// vertex; its multiset equals the h-vector for genuine polytopes.
pub fn index_vector(
    polytope: &SimplePolytope,
    realization: &Realization,
) -> Result<Vec<usize>, PolytopeError> {
    let phi = realization
        .functional()
        .ok_or(PolytopeError::MissingFunctional)?
        .to_vec();
    let values: Vec<Rat> = (0..polytope.vertex_count())
        .map(|v| realization.value(&phi, v))
        .collect();
    for a in 0..values.len() {
        for b in a + 1..values.len() {
            if values[a] == values[b] {
                return Err(PolytopeError::NonGenericFunctional {
                    first: a,
                    second: b,
                    value: values[a].clone(),
                });
            }
        }
    }
    Ok((0..polytope.vertex_count())
        .map(|v| {
            polytope
                .neighbors(v)
                .iter()
                .filter(|&&(_, u)| values[u] < values[v])
                .count()
        })
        .collect())
}

/// Convenience constructors for the polytopes used across tests, examples,
/// and sample models.
pub mod shapes {
    use super::*;

    /// The segment: 1-polytope with two facets (its endpoints).
    pub fn segment() -> SimplePolytope {
        build_polytope(1, 2, vec![vec![0], vec![1]]).expect("segment is valid")
    }

    /// The `m`-gon with facets (edges) labelled cyclically: edge `i` joins
    /// vertex `i` to vertex `i+1`, so vertex `i` lies on edges `i-1` and `i`.
    pub fn polygon(m: usize) -> SimplePolytope {
        assert!(m >= 3, "polygon needs at least 3 edges");
        let verts = (0..m).map(|i| vec![(i + m - 1) % m, i]).collect();
        build_polytope(2, m, verts).expect("polygon is valid")
    }

    /// The 3-cube with facet pairs (0,1), (2,3), (4,5) along the axes;
    /// vertex `(x,y,z) ∈ {0,1}³` lies on facets `x`, `2+y`, `4+z`.
    pub fn cube() -> SimplePolytope {
        let mut verts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    verts.push(vec![x, 2 + y, 4 + z]);
                }
            }
        }
        build_polytope(3, 6, verts).expect("cube is valid")
    }

    /// The combinatorial product of two simple polytopes: dimensions add,
    /// facets are the disjoint union, vertices are pairs.
    pub fn product(p: &SimplePolytope, q: &SimplePolytope) -> SimplePolytope {
        let mut verts = Vec::new();
        for v in 0..p.vertex_count() {
            for w in 0..q.vertex_count() {
                let mut set = p.vertex_facet_list(v);
                set.extend(q.vertex_facet_list(w).iter().map(|f| f + p.facet_count()));
                verts.push(set);
            }
        }
        build_polytope(
            p.dim() + q.dim(),
            p.facet_count() + q.facet_count(),
            verts,
        )
        .expect("product of simple polytopes is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn qv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn triangle() -> SimplePolytope {
        shapes::polygon(3)
    }

    #[test]
    fn triangle_has_expected_face_counts() {
        let p = triangle();
        assert_eq!(p.f_vector(), vec![1, 3, 3]);
        assert_eq!(p.faces().len(), 7);
    }

    #[test]
    fn cube_face_counts() {
        let p = shapes::cube();
        assert_eq!(p.f_vector(), vec![1, 6, 12, 8]);
    }

    #[test]
    fn segment_is_valid() {
        let p = shapes::segment();
        assert_eq!(p.vertex_count(), 2);
        assert_eq!(p.f_vector(), vec![1, 2]);
        assert_eq!(p.neighbors(0), &[(0, 1)]);
    }

    #[test]
    fn h_vectors_of_small_polytopes() {
        assert_eq!(triangle().h_vector(), vec![1, 1, 1]);
        assert_eq!(shapes::polygon(4).h_vector(), vec![1, 2, 1]);
        assert_eq!(shapes::cube().h_vector(), vec![1, 3, 3, 1]);
        assert_eq!(shapes::segment().h_vector(), vec![1, 1]);
    }

    #[test]
    fn h_vector_sums_to_vertex_count_and_is_symmetric() {
        for p in [
            triangle(),
            shapes::polygon(4),
            shapes::polygon(5),
            shapes::polygon(6),
            shapes::cube(),
            shapes::product(&triangle(), &shapes::segment()),
        ] {
            let h = p.h_vector();
            assert_eq!(
                h.iter().sum::<i64>(),
                p.vertex_count() as i64,
                "h-vector sum"
            );
            let mut rev = h.clone();
            rev.reverse();
            assert_eq!(h, rev, "Dehn-Sommerville symmetry");
            assert_eq!(h[0], 1);
        }
    }

    #[test]
    fn vertex_with_wrong_facet_count_is_rejected() {
        let err = build_polytope(2, 3, vec![vec![0, 0], vec![0, 1], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            PolytopeError::VertexFacetCount {
                vertex: 0,
                got: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn duplicate_vertices_are_rejected() {
        let err =
            build_polytope(2, 3, vec![vec![0, 1], vec![0, 1], vec![1, 2]]).unwrap_err();
        assert_eq!(err, PolytopeError::DuplicateVertex { first: 0, second: 1 });
    }

    #[test]
    fn oversubscribed_edge_is_rejected() {
        // Subset {0} would lie in three vertices.
        let err = build_polytope(2, 4, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2]])
            .unwrap_err();
        match err {
            PolytopeError::BadEdge { subset, count } => {
                assert_eq!(subset, vec![0]);
                assert_eq!(count, 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unused_facet_is_rejected() {
        let err = build_polytope(2, 4, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap_err();
        assert_eq!(err, PolytopeError::UnusedFacet { facet: 3 });
    }

    #[test]
    fn disconnected_skeleton_is_rejected() {
        let err = build_polytope(
            2,
            6,
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![3, 4],
                vec![4, 5],
                vec![3, 5],
            ],
        )
        .unwrap_err();
        assert_eq!(err, PolytopeError::Disconnected);
    }

    #[test]
    fn neighbors_cross_single_facets() {
        let p = triangle();
        // Vertex 0 lies on facets {0, 2}; leaving facet 0 keeps facet 2 and
        // lands on vertex 2, leaving facet 2 keeps facet 0 and lands on
        // vertex 1.
        assert_eq!(p.neighbors(0), &[(0, 2), (2, 1)]);
    }

    #[test]
    fn index_vector_on_unit_square() {
        let p = shapes::polygon(4);
        // polygon(4) vertex v lies on edges {v-1, v}: realize as the unit
        // square walked counterclockwise.
        let r = Realization::new(
            &p,
            vec![qv(&[0, 0]), qv(&[1, 0]), qv(&[1, 1]), qv(&[0, 1])],
            Some(qv(&[1, 2])),
        )
        .unwrap();
        assert_eq!(index_vector(&p, &r).unwrap(), vec![0, 1, 2, 1]);
    }

    #[test]
    fn index_vector_multiset_matches_h_vector() {
        let p = shapes::polygon(4);
        let r = Realization::new(
            &p,
            vec![qv(&[0, 0]), qv(&[1, 0]), qv(&[1, 1]), qv(&[0, 1])],
            Some(qv(&[1, 2])),
        )
        .unwrap();
        let idx = index_vector(&p, &r).unwrap();
        let mut counts = vec![0i64; p.dim() + 1];
        for i in idx {
            counts[i] += 1;
        }
        assert_eq!(counts, p.h_vector());
    }

    #[test]
    fn non_generic_functional_names_the_tie() {
        let p = shapes::polygon(4);
        let r = Realization::new(
            &p,
            vec![qv(&[0, 0]), qv(&[1, 0]), qv(&[1, 1]), qv(&[0, 1])],
            Some(qv(&[1, 0])),
        )
        .unwrap();
        let err = index_vector(&p, &r).unwrap_err();
        match err {
            PolytopeError::NonGenericFunctional { first, second, .. } => {
                // Vertices 0 and 3 share x = 0; 1 and 2 share x = 1.
                assert_eq!((first, second), (0, 3));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn negating_the_functional_reverses_indices() {
        let p = shapes::cube();
        let coords: Vec<Vec<Rat>> = (0..8)
            .map(|v| qv(&[(v >> 2) & 1, (v >> 1) & 1, v & 1]))
            .collect();
        let phi = qv(&[1, 2, 4]);
        let neg: Vec<Rat> = phi.iter().map(|x| -x.clone()).collect();
        let r1 = Realization::new(&p, coords.clone(), Some(phi)).unwrap();
        let r2 = Realization::new(&p, coords, Some(neg)).unwrap();
        let i1 = index_vector(&p, &r1).unwrap();
        let i2 = index_vector(&p, &r2).unwrap();
        for v in 0..8 {
            assert_eq!(i1[v] + i2[v], p.dim());
        }
    }

    #[test]
    fn faces_are_sorted_and_complete() {
        let p = shapes::cube();
        let faces = p.faces();
        assert_eq!(faces[0].codim, 0);
        assert_eq!(faces[0].vertex_set.len(), 8);
        let codims: Vec<usize> = faces.iter().map(|f| f.codim).collect();
        let mut sorted = codims.clone();
        sorted.sort_unstable();
        assert_eq!(codims, sorted);
        // Every codim-1 face of the cube is a square with 4 vertices.
        for f in p.faces_of_codim(1) {
            assert_eq!(f.vertex_set.len(), 4);
        }
    }

    #[test]
    fn combination_enumeration() {
        assert_eq!(
            combinations(&[1, 2, 3], 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(&[1, 2], 0), vec![Vec::<i32>::new()]);
        assert!(combinations(&[1], 2).is_empty());
    }
}
