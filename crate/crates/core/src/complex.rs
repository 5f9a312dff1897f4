//! Finite abstract simplicial complexes with face/coface incidence tables.
//!
//! A complex is stored as one table of vertex tuples per dimension, each
//! table sorted lexicographically. Simplices are addressed by
//! [`SimplexId`] (dimension plus index into that dimension's table), so
//! identifiers are stable and ordering them agrees with a dimension-major,
//! lexicographic scan of the complex.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Vertex labels are arbitrary non-negative integers; they need not be
/// contiguous.
pub type VertexId = u64;

/// Address of a simplex: its dimension and its index in that dimension's
/// lexicographically sorted table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

impl SimplexId {
    pub fn new(dim: usize, index: usize) -> Self {
        SimplexId { dim, index }
    }
}

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.dim, self.index)
    }
}

/// Errors from [`SimplicialComplex::build`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("input contains no simplices")]
    EmptyComplex,
    /// Raised for a repeated vertex within one tuple, and for an empty
    /// tuple (there is no empty simplex in this representation).
    #[error("degenerate simplex {0:?}")]
    DegenerateSimplex(Vec<VertexId>),
}

/// An immutable simplicial complex, closed under taking faces.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    /// `tables[d][i]` is the ascending vertex tuple of simplex `d/i`.
    tables: Vec<Vec<Box<[VertexId]>>>,
    /// `faces[d][i][j]` is the face of `d/i` obtained by dropping its
    /// `j`-th vertex. Empty for `d == 0`.
    faces: Vec<Vec<Vec<SimplexId>>>,
    /// Immediate cofaces of each simplex, ascending by index.
    cofaces: Vec<Vec<Vec<SimplexId>>>,
}

impl SimplicialComplex {
    /// Builds the downward closure of the given simplices.
    ///
    /// Tuples may arrive unsorted, duplicated, or non-maximal; the result
    /// is canonical either way. Rejects empty tuples and tuples with a
    /// repeated vertex.
    pub fn build(maximal: &[Vec<VertexId>]) -> Result<Self, ComplexError> {
        if maximal.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let mut top = 0;
        for tuple in maximal {
            if tuple.is_empty() {
                return Err(ComplexError::DegenerateSimplex(tuple.clone()));
            }
            top = top.max(tuple.len() - 1);
        }

        let mut per_dim: Vec<BTreeSet<Box<[VertexId]>>> = vec![BTreeSet::new(); top + 1];
        for tuple in maximal {
            let mut v = tuple.clone();
            v.sort_unstable();
            if v.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DegenerateSimplex(tuple.clone()));
            }
            per_dim[v.len() - 1].insert(v.into_boxed_slice());
        }

        // Downward closure, one dimension at a time.
        for d in (1..=top).rev() {
            let upper: Vec<Box<[VertexId]>> = per_dim[d].iter().cloned().collect();
            for tuple in upper {
                for j in 0..tuple.len() {
                    let mut face: Vec<VertexId> = Vec::with_capacity(tuple.len() - 1);
                    face.extend_from_slice(&tuple[..j]);
                    face.extend_from_slice(&tuple[j + 1..]);
                    per_dim[d - 1].insert(face.into_boxed_slice());
                }
            }
        }

        let tables: Vec<Vec<Box<[VertexId]>>> =
            per_dim.into_iter().map(|set| set.into_iter().collect()).collect();

        // Face ids by binary search in the (sorted) lower table, cofaces by
        // transposition. Coface lists come out ascending because simplices
        // are visited in table order.
        let mut faces: Vec<Vec<Vec<SimplexId>>> = Vec::with_capacity(top + 1);
        let mut cofaces: Vec<Vec<Vec<SimplexId>>> =
            tables.iter().map(|t| vec![Vec::new(); t.len()]).collect();
        faces.push(vec![Vec::new(); tables[0].len()]);
        for d in 1..=top {
            let mut dim_faces = Vec::with_capacity(tables[d].len());
            for (i, tuple) in tables[d].iter().enumerate() {
                let id = SimplexId::new(d, i);
                let mut list = Vec::with_capacity(tuple.len());
                let mut face: Vec<VertexId> = Vec::with_capacity(tuple.len() - 1);
                for j in 0..tuple.len() {
                    face.clear();
                    face.extend_from_slice(&tuple[..j]);
                    face.extend_from_slice(&tuple[j + 1..]);
                    let idx = tables[d - 1]
                        .binary_search_by(|probe| probe.as_ref().cmp(face.as_slice()))
                        .expect("closure contains every face");
                    list.push(SimplexId::new(d - 1, idx));
                    cofaces[d - 1][idx].push(id);
                }
                dim_faces.push(list);
            }
            faces.push(dim_faces);
        }

        Ok(SimplicialComplex { tables, faces, cofaces })
    }

    /// Top dimension of the full complex.
    pub fn dimension(&self) -> usize {
        self.tables.len() - 1
    }

    /// Number of simplices per dimension.
    pub fn table_sizes(&self) -> Vec<usize> {
        self.tables.iter().map(|t| t.len()).collect()
    }

    pub fn num_simplices(&self, dim: usize) -> usize {
        self.tables.get(dim).map_or(0, |t| t.len())
    }

    /// Total number of simplices.
    pub fn len(&self) -> usize {
        self.tables.iter().map(|t| t.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        false // `build` rejects empty input
    }

    /// Ascending vertex tuple of `id`.
    pub fn vertices(&self, id: SimplexId) -> &[VertexId] {
        &self.tables[id.dim][id.index]
    }

    /// Immediate faces of `id`, in omitted-vertex order (`faces(id)[j]`
    /// drops the `j`-th vertex). Empty for vertices.
    pub fn faces(&self, id: SimplexId) -> &[SimplexId] {
        &self.faces[id.dim][id.index]
    }

    /// Immediate cofaces of `id`, ascending by index.
    pub fn cofaces(&self, id: SimplexId) -> &[SimplexId] {
        &self.cofaces[id.dim][id.index]
    }

    /// Sign `(-1)^i` of the face map dropping the `i`-th vertex of `tau`.
    ///
    /// Panics if `i` exceeds the dimension of `tau`.
    pub fn boundary_sign(&self, tau: SimplexId, i: usize) -> i32 {
        assert!(
            i <= tau.dim,
            "face position {i} out of range for a {}-simplex",
            tau.dim
        );
        if i.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Looks up a simplex by its ascending vertex tuple.
    pub fn lookup(&self, vertices: &[VertexId]) -> Option<SimplexId> {
        if vertices.is_empty() {
            return None;
        }
        let d = vertices.len() - 1;
        let table = self.tables.get(d)?;
        table
            .binary_search_by(|probe| probe.as_ref().cmp(vertices))
            .ok()
            .map(|i| SimplexId::new(d, i))
    }

    /// All simplex ids in dimension-major, lexicographic order.
    pub fn iter_ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.tables
            .iter()
            .enumerate()
            .flat_map(|(d, t)| (0..t.len()).map(move |i| SimplexId::new(d, i)))
    }

    /// Renders a simplex as `(v0 v1 ...)` for messages and reports.
    pub fn format_simplex(&self, id: SimplexId) -> String {
        let verts: Vec<String> = self.vertices(id).iter().map(|v| v.to_string()).collect();
        format!("({})", verts.join(" "))
    }
}
