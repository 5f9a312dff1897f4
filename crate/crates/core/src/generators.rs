//! Deterministic example families, used by the command line and the
//! benchmark harness.
//!
//! Scalable families take a level: the triangulated sphere, ball and
//! disk refine by edge subdivision (each triangle splits into four),
//! while the simplex boundary and the cone over it grow in dimension.
//! The fixed families are small complexes with interesting singular
//! sets and take level 0 only.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::complex::{SimplicialComplex, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// The 2-sphere: octahedron boundary, subdivided `level` times.
    Sphere2,
    /// The solid 3-ball: cone over `Sphere2` at the same level.
    Ball3,
    /// A 2-disk: the `level`-subdivided octahedron boundary with one
    /// triangle removed.
    Disk2,
    /// Boundary of the `level`-simplex, a sphere of dimension level - 1.
    SimplexBoundary,
    /// Cone over the boundary of the `level`-simplex, a solid ball whose
    /// apex has codimension `level`.
    Cone,
    /// Nine triangles whose singular set is two circles joined along an
    /// edge.
    TwoCircles,
    /// Subdivided octahedron boundary with two antipodal vertices glued,
    /// so one vertex has a figure-eight neighborhood.
    PinchedSphere,
    /// Hexagonal annulus with one inner and one outer vertex glued.
    PinchedAnnulus,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Sphere2,
        Family::Ball3,
        Family::Disk2,
        Family::SimplexBoundary,
        Family::Cone,
        Family::TwoCircles,
        Family::PinchedSphere,
        Family::PinchedAnnulus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sphere2 => "sphere2",
            Family::Ball3 => "ball3",
            Family::Disk2 => "disk2",
            Family::SimplexBoundary => "simplex-boundary",
            Family::Cone => "cone",
            Family::TwoCircles => "two-circles",
            Family::PinchedSphere => "pinched-sphere",
            Family::PinchedAnnulus => "pinched-annulus",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    pub fn level_range(self) -> RangeInclusive<usize> {
        match self {
            Family::Sphere2 | Family::Ball3 | Family::Disk2 => 0..=8,
            Family::SimplexBoundary | Family::Cone => 1..=12,
            Family::TwoCircles | Family::PinchedSphere | Family::PinchedAnnulus => 0..=0,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("family {family} takes levels {}..={}, got {level}",
            family.level_range().start(), family.level_range().end())]
    InvalidLevel { family: Family, level: usize },
}

fn octahedron() -> Vec<[VertexId; 3]> {
    // Antipodal pairs {0,1}, {2,3}, {4,5}; in particular 0 and 1 share
    // no edge, which the pinched sphere relies on.
    let mut out = Vec::new();
    for &a in &[0, 1] {
        for &b in &[2, 3] {
            for &c in &[4, 5] {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// One round of edge subdivision. Midpoints are numbered from
/// `num_vertices` up, in lexicographic edge order.
fn subdivide(
    triangles: &[[VertexId; 3]],
    num_vertices: VertexId,
) -> (Vec<[VertexId; 3]>, VertexId) {
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for t in triangles {
        edges.insert((t[0].min(t[1]), t[0].max(t[1])));
        edges.insert((t[0].min(t[2]), t[0].max(t[2])));
        edges.insert((t[1].min(t[2]), t[1].max(t[2])));
    }
    let midpoint: BTreeMap<(VertexId, VertexId), VertexId> = edges
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, num_vertices + i as VertexId))
        .collect();
    let mid = |a: VertexId, b: VertexId| midpoint[&(a.min(b), a.max(b))];
    let mut out = Vec::with_capacity(4 * triangles.len());
    for &[a, b, c] in triangles {
        let (ab, ac, bc) = (mid(a, b), mid(a, c), mid(b, c));
        out.push([a, ab, ac]);
        out.push([b, ab, bc]);
        out.push([c, ac, bc]);
        out.push([ab, bc, ac]);
    }
    let next = num_vertices + midpoint.len() as VertexId;
    (out, next)
}

fn subdivided(mut triangles: Vec<[VertexId; 3]>, level: usize) -> Vec<[VertexId; 3]> {
    let mut num_vertices = triangles
        .iter()
        .flatten()
        .max()
        .map_or(0, |&v| v + 1);
    for _ in 0..level {
        let (next, nv) = subdivide(&triangles, num_vertices);
        triangles = next;
        num_vertices = nv;
    }
    triangles
}

fn sphere2(level: usize) -> Vec<Vec<VertexId>> {
    subdivided(octahedron(), level)
        .into_iter()
        .map(|t| t.to_vec())
        .collect()
}

/// Cones a pure list of maximal simplices: the apex joins every one.
fn coned(mut maximal: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    let apex = maximal.iter().flatten().max().map_or(0, |&v| v + 1);
    for t in &mut maximal {
        t.push(apex);
    }
    maximal
}

fn simplex_boundary(level: usize) -> Vec<Vec<VertexId>> {
    let verts: Vec<VertexId> = (0..=level as VertexId).collect();
    (0..verts.len())
        .map(|skip| {
            let mut t = verts.clone();
            t.remove(skip);
            t
        })
        .collect()
}

fn two_circles() -> Vec<Vec<VertexId>> {
    vec![
        vec![0, 1, 3],
        vec![0, 2, 3],
        vec![1, 3, 5],
        vec![2, 3, 4],
        vec![2, 4, 6],
        vec![3, 4, 5],
        vec![4, 5, 7],
        vec![4, 6, 7],
        vec![3, 4, 8],
    ]
}

/// Sphere with two points glued: subdivide the octahedron once, then
/// identify vertex 1 with vertex 0. The two vertices are antipodal, so
/// their stars are disjoint and no simplices collapse; the glued vertex
/// gets a wedge of two circles as its link.
fn pinched_sphere() -> Vec<Vec<VertexId>> {
    sphere2(1)
        .into_iter()
        .map(|t| {
            t.into_iter()
                .map(|v| match v {
                    1 => 0,
                    v if v > 1 => v - 1,
                    v => v,
                })
                .collect()
        })
        .collect()
}

/// Hexagonal annulus (outer ring 0..6, inner ring glued from 6..) with
/// inner vertex opposite the seam identified with outer vertex 0.
fn pinched_annulus() -> Vec<Vec<VertexId>> {
    let outer = |j: u64| j % 6;
    let inner = |j: u64| 6 + j % 6;
    let mut tris = Vec::new();
    for j in 0..6 {
        tris.push(vec![outer(j), outer(j + 1), inner(j)]);
        tris.push(vec![outer(j + 1), inner(j), inner(j + 1)]);
    }
    // Identify inner vertex 9 (opposite the outer base point) with outer
    // vertex 0, then close the gap in the numbering.
    tris.into_iter()
        .map(|t| {
            t.into_iter()
                .map(|v| match v {
                    9 => 0,
                    v if v > 9 => v - 1,
                    v => v,
                })
                .collect()
        })
        .collect()
}

/// Maximal simplices of a family member, deterministically numbered.
pub fn maximal_simplices(family: Family, level: usize) -> Result<Vec<Vec<VertexId>>, GenError> {
    if !family.level_range().contains(&level) {
        return Err(GenError::InvalidLevel { family, level });
    }
    Ok(match family {
        Family::Sphere2 => sphere2(level),
        Family::Ball3 => coned(sphere2(level)),
        Family::Disk2 => {
            // Refine the sphere, then cut one triangle, leaving a disk
            // with a three-edge boundary circle around the hole.
            let mut tris: Vec<Vec<VertexId>> = subdivided(octahedron(), level)
                .into_iter()
                .map(|t| {
                    let mut t = t.to_vec();
                    t.sort_unstable();
                    t
                })
                .collect();
            tris.sort_unstable();
            tris.pop();
            tris
        }
        Family::SimplexBoundary => simplex_boundary(level),
        Family::Cone => coned(simplex_boundary(level)),
        Family::TwoCircles => two_circles(),
        Family::PinchedSphere => pinched_sphere(),
        Family::PinchedAnnulus => pinched_annulus(),
    })
}

/// Builds the complex for a family member.
pub fn generate(family: Family, level: usize) -> Result<SimplicialComplex, GenError> {
    let maximal = maximal_simplices(family, level)?;
    Ok(SimplicialComplex::build(&maximal).expect("generated families are valid complexes"))
}
