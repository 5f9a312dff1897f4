//! The partial order on strata and hom-set component counts.
//!
//! A stratum `a` lies below `b` when some simplex of `a` is a face of a
//! simplex of `b`. Direct relations come from immediate face pairs that
//! cross strata; the full order is their transitive closure. Since `pi`
//! strictly increases across such pairs the relation is antisymmetric.
//!
//! For comparable strata, `hom_component_count` counts the connected
//! components of the sections between them: pairs (sigma, tau) with
//! sigma in the lower stratum a face of tau in the upper one, two pairs
//! being adjacent when both coordinates are comparable in the complex.
//! This distinguishes, say, the two essentially different ways an exit
//! path can leave a pinch point into the surrounding surface.

use crate::complex::SimplexId;
use crate::stratify::{Stratification, StratumId};
use crate::uf::DisjointSets;

/// The strata partial order, stored as a dense strict-relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataPoset {
    n: usize,
    lt: Vec<bool>,
}

impl StrataPoset {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Strict comparison: `a` lies below `b`.
    pub fn lt(&self, a: StratumId, b: StratumId) -> bool {
        self.lt[a.0 * self.n + b.0]
    }

    pub fn leq(&self, a: StratumId, b: StratumId) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: StratumId, b: StratumId) -> bool {
        self.leq(a, b) || self.lt(b, a)
    }

    /// All strict relations (lower, upper), lexicographically sorted.
    pub fn relations(&self) -> Vec<(StratumId, StratumId)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt[a * self.n + b] {
                    out.push((StratumId(a), StratumId(b)));
                }
            }
        }
        out
    }
}

/// Builds the strata poset of a stratification.
pub fn strata_poset(s: &Stratification) -> StrataPoset {
    let n = s.strata().len();
    let mut lt = vec![false; n * n];
    let c = s.complex();
    for tau in c.iter_ids() {
        let upper = s.stratum_of(tau);
        for &face in c.faces(tau) {
            let lower = s.stratum_of(face);
            if lower != upper {
                lt[lower.0 * n + upper.0] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if lt[i * n + k] {
                for j in 0..n {
                    if lt[k * n + j] {
                        lt[i * n + j] = true;
                    }
                }
            }
        }
    }
    StrataPoset { n, lt }
}

/// Component count of the sections between two strata.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomCount {
    pub source: StratumId,
    pub target: StratumId,
    pub count: usize,
}

fn is_subset(small: &[u64], big: &[u64]) -> bool {
    // Vertex tuples are sorted, so a two-pointer sweep suffices.
    let mut it = big.iter();
    'outer: for v in small {
        for w in it.by_ref() {
            if w == v {
                continue 'outer;
            }
            if w > v {
                return false;
            }
        }
        return false;
    }
    true
}

fn simplices_comparable(c: &crate::complex::SimplicialComplex, x: SimplexId, y: SimplexId) -> bool {
    let (vx, vy) = (c.vertices(x), c.vertices(y));
    if vx.len() <= vy.len() {
        is_subset(vx, vy)
    } else {
        is_subset(vy, vx)
    }
}

/// Counts the connected components of the sections from `source` to
/// `target`: pairs (sigma, tau) with sigma a member of `source` and a
/// face of tau in `target`, glued when both coordinates are comparable.
/// A single coordinatewise-comparable step factors through the
/// componentwise order via the mixed pair, so this matches components of
/// the section poset. The count is zero when the strata are incomparable.
pub fn hom_component_count(s: &Stratification, source: StratumId, target: StratumId) -> HomCount {
    let c = s.complex();
    let lower = s.members(source);
    let upper = s.members(target);
    let mut pairs: Vec<(SimplexId, SimplexId)> = Vec::new();
    for &sigma in &lower {
        for &tau in &upper {
            if is_subset(c.vertices(sigma), c.vertices(tau)) {
                pairs.push((sigma, tau));
            }
        }
    }
    let mut ds = DisjointSets::new(pairs.len());
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if simplices_comparable(c, pairs[i].0, pairs[j].0)
                && simplices_comparable(c, pairs[i].1, pairs[j].1)
            {
                ds.union(i, j);
            }
        }
    }
    let count = if pairs.is_empty() { 0 } else { ds.class_count() };
    HomCount { source, target, count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::stratify::canonical_stratification;

    fn two_circles_triangles() -> Vec<Vec<u64>> {
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

    /// Hexagonal annulus with one inner vertex glued to one outer vertex.
    /// Vertex 0 is the pinch point; the outer circle minus the pinch is
    /// one 1-stratum, the inner circle minus the pinch the other.
    fn pinched_annulus_triangles() -> Vec<Vec<u64>> {
        vec![
            vec![0, 1, 6],
            vec![1, 6, 7],
            vec![1, 2, 7],
            vec![2, 7, 8],
            vec![2, 3, 8],
            vec![0, 3, 8],
            vec![0, 3, 4],
            vec![0, 4, 9],
            vec![4, 5, 9],
            vec![5, 9, 10],
            vec![0, 5, 10],
            vec![0, 6, 10],
        ]
    }

    #[test]
    fn two_circles_poset() {
        let c = SimplicialComplex::build(&two_circles_triangles()).unwrap();
        let s = canonical_stratification(c, true);
        let poset = strata_poset(&s);
        assert_eq!(
            poset.relations(),
            vec![
                (StratumId(2), StratumId(0)),
                (StratumId(3), StratumId(0)),
                (StratumId(3), StratumId(1)),
            ]
        );
        assert!(poset.lt(StratumId(3), StratumId(1)));
        assert!(!poset.lt(StratumId(1), StratumId(3)));
        assert!(poset.leq(StratumId(1), StratumId(1)));
        assert!(!poset.comparable(StratumId(0), StratumId(1)));
    }

    #[test]
    fn lone_triangle_has_one_relation() {
        let c = SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap();
        let s = canonical_stratification(c, true);
        let poset = strata_poset(&s);
        assert_eq!(poset.relations(), vec![(StratumId(1), StratumId(0))]);
    }

    #[test]
    fn closed_surface_has_no_relations() {
        let mut tris = Vec::new();
        for &a in &[0u64, 1] {
            for &b in &[2u64, 3] {
                for &c in &[4u64, 5] {
                    tris.push(vec![a, b, c]);
                }
            }
        }
        let c = SimplicialComplex::build(&tris).unwrap();
        let s = canonical_stratification(c, true);
        assert!(strata_poset(&s).relations().is_empty());
    }

    #[test]
    fn closure_crosses_dimension_gaps() {
        // A triangle with a whisker edge at vertex 2. The junction vertex
        // relates to the triangle interior only through the closure, via
        // the boundary arc.
        let c = SimplicialComplex::build(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let s = canonical_stratification(c, true);
        assert_eq!(s.strata().len(), 5);
        let poset = strata_poset(&s);
        let junction = s.stratum_of(s.complex().lookup(&[2]).unwrap());
        let interior = s.stratum_of(s.complex().lookup(&[0, 1, 2]).unwrap());
        assert!(poset.lt(junction, interior));
        assert_eq!(poset.relations().len(), 5);
    }

    #[test]
    fn pinched_annulus_strata_and_poset() {
        let c = SimplicialComplex::build(&pinched_annulus_triangles()).unwrap();
        assert_eq!(c.table_sizes(), vec![11, 24, 12]);
        let s = canonical_stratification(c, true);
        let sizes: Vec<(usize, usize)> =
            s.strata().iter().map(|r| (r.top_dim, r.member_count())).collect();
        assert_eq!(sizes, vec![(2, 24), (1, 11), (1, 11), (0, 1)]);
        let pinch = s.complex().lookup(&[0]).unwrap();
        assert_eq!(s.stratum_of(pinch), StratumId(3));
        let poset = strata_poset(&s);
        assert_eq!(
            poset.relations(),
            vec![
                (StratumId(1), StratumId(0)),
                (StratumId(2), StratumId(0)),
                (StratumId(3), StratumId(0)),
                (StratumId(3), StratumId(1)),
                (StratumId(3), StratumId(2)),
            ]
        );
    }

    #[test]
    fn pinched_annulus_hom_counts() {
        let c = SimplicialComplex::build(&pinched_annulus_triangles()).unwrap();
        let s = canonical_stratification(c, true);
        let surface = StratumId(0);
        let outer = StratumId(1);
        let inner = StratumId(2);
        let pinch = StratumId(3);
        // Two ways out of the pinch along either circle, two into the
        // surface, but each circle maps into the surface in one way.
        assert_eq!(hom_component_count(&s, pinch, outer).count, 2);
        assert_eq!(hom_component_count(&s, pinch, inner).count, 2);
        assert_eq!(hom_component_count(&s, pinch, surface).count, 2);
        assert_eq!(hom_component_count(&s, outer, surface).count, 1);
        assert_eq!(hom_component_count(&s, inner, surface).count, 1);
        // Incomparable strata have no sections; a stratum maps to itself
        // in one component.
        assert_eq!(hom_component_count(&s, outer, inner).count, 0);
        assert_eq!(hom_component_count(&s, pinch, pinch).count, 1);
        let hc = hom_component_count(&s, pinch, surface);
        assert_eq!((hc.source, hc.target), (pinch, surface));
    }
}
