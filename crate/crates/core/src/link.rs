//! Small links: the live cofaces of a simplex, bucketed by relative
//! dimension.
//!
//! The local structure around a simplex is read off its upward closure.
//! Collecting cofaces to a bounded relative dimension is enough for every
//! membership test, so the traversal takes a depth cap; a full-depth count
//! variant backs Euler characteristic checks.

use std::collections::HashSet;

use crate::complex::{SimplexId, SimplicialComplex};
use crate::uf::DisjointSets;
use crate::view::ComplexView;

/// Live cofaces of one simplex. `bucket(i)` holds the cofaces of relative
/// dimension `i + 1`, sorted by table index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallLink {
    buckets: Vec<Vec<SimplexId>>,
}

impl SmallLink {
    pub fn depth(&self) -> usize {
        self.buckets.len()
    }

    pub fn bucket(&self, i: usize) -> &[SimplexId] {
        &self.buckets[i]
    }

    pub fn bucket_sizes(&self) -> Vec<usize> {
        self.buckets.iter().map(|b| b.len()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.iter().all(|b| b.is_empty())
    }

    /// Connected components of the link graph (relative-dimension-1
    /// cofaces as nodes, relative-dimension-2 cofaces as edges). Zero for
    /// an empty link. Requires depth >= 2 unless the link is that shallow.
    pub fn component_count(&self, view: &ComplexView<'_>) -> usize {
        link_component_count(self, view)
    }
}

/// Collects the live cofaces of `sigma` up to relative dimension `depth`.
///
/// Every coface is reachable from an immediate one through live
/// intermediate cofaces (the live set is downward closed), so a single
/// upward traversal with revisit suppression is exhaustive.
pub fn get_small_link(view: &ComplexView<'_>, sigma: SimplexId, depth: usize) -> SmallLink {
    assert!(depth >= 1, "small link depth must be at least 1");
    debug_assert!(view.is_alive(sigma));
    let mut buckets: Vec<Vec<SimplexId>> = vec![Vec::new(); depth];
    let mut seen: HashSet<SimplexId> = HashSet::new();
    let mut stack: Vec<SimplexId> = Vec::new();
    for &cf in view.live_cofaces(sigma) {
        if seen.insert(cf) {
            stack.push(cf);
        }
    }
    while let Some(tau) = stack.pop() {
        let rel = tau.dim - sigma.dim;
        buckets[rel - 1].push(tau);
        if rel < depth {
            for &up in view.live_cofaces(tau) {
                if seen.insert(up) {
                    stack.push(up);
                }
            }
        }
    }
    for bucket in &mut buckets {
        bucket.sort_unstable();
    }
    SmallLink { buckets }
}

/// Positions (within `tau`'s vertex tuple) of the vertices not belonging
/// to `sigma`. Both tuples are ascending and `sigma` is a face of `tau`.
pub(crate) fn relative_positions(
    complex: &SimplicialComplex,
    tau: SimplexId,
    sigma: SimplexId,
) -> Vec<usize> {
    let tv = complex.vertices(tau);
    let sv = complex.vertices(sigma);
    let mut out = Vec::with_capacity(tv.len() - sv.len());
    let mut si = 0;
    for (pos, &v) in tv.iter().enumerate() {
        if si < sv.len() && sv[si] == v {
            si += 1;
        } else {
            out.push(pos);
        }
    }
    debug_assert_eq!(si, sv.len(), "sigma is not a face of tau");
    out
}

/// Connected components of the link graph of `sl` (see
/// [`SmallLink::component_count`]).
pub fn link_component_count(sl: &SmallLink, view: &ComplexView<'_>) -> usize {
    let nodes = sl.bucket(0);
    if nodes.is_empty() {
        return 0;
    }
    let mut ds = DisjointSets::new(nodes.len());
    if sl.depth() >= 2 {
        let complex = view.base();
        for &kappa in sl.bucket(1) {
            // Exactly two faces of kappa still contain the center simplex
            // (each drops one of kappa's two relative vertices), and only
            // those can appear among the link nodes.
            let mut endpoints = [usize::MAX; 2];
            let mut found = 0;
            for &face in complex.faces(kappa) {
                if let Ok(idx) = nodes.binary_search(&face) {
                    endpoints[found] = idx;
                    found += 1;
                    if found == 2 {
                        break;
                    }
                }
            }
            debug_assert_eq!(found, 2, "a rel-2 coface joins exactly two rel-1 nodes");
            ds.union(endpoints[0], endpoints[1]);
        }
    }
    ds.class_count()
}

/// Counts live cofaces of `sigma` per relative dimension with no depth
/// cap. Entry `i` counts relative dimension `i + 1`; the result is empty
/// for an empty link.
pub fn link_counts_full(view: &ComplexView<'_>, sigma: SimplexId) -> Vec<usize> {
    let mut counts: Vec<usize> = Vec::new();
    let mut seen: HashSet<SimplexId> = HashSet::new();
    let mut stack: Vec<SimplexId> = Vec::new();
    for &cf in view.live_cofaces(sigma) {
        if seen.insert(cf) {
            stack.push(cf);
        }
    }
    while let Some(tau) = stack.pop() {
        let rel = tau.dim - sigma.dim;
        if counts.len() < rel {
            counts.resize(rel, 0);
        }
        counts[rel - 1] += 1;
        for &up in view.live_cofaces(tau) {
            if seen.insert(up) {
                stack.push(up);
            }
        }
    }
    counts
}

/// Alternating sum of per-relative-dimension counts.
pub fn euler_characteristic(counts: &[usize]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}
