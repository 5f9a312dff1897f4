//! Chain complexes of small links and their integral homology.
//!
//! The cofaces of a simplex, bucketed by relative dimension, form an
//! abstract simplicial complex on the relative vertex tuples. Its chain
//! complex uses the standard alternating signs taken by position within
//! the relative tuple, which keeps the double boundary zero regardless of
//! where the center simplex's vertices interleave. Homology in degree 0 is
//! unreduced: a nonempty connected link has betti 1 in degree 0.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::complex::SimplexId;
use crate::link::{get_small_link, relative_positions, SmallLink};
use crate::matrix::{smith_normal_form, IntMatrix, SnfResult};
use crate::view::ComplexView;

/// A finitely generated abelian group presented as betti number plus
/// torsion coefficients (each greater than one, in divisor-chain order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    /// The requested degree needs chain groups beyond the complex's depth.
    /// Hitting this from a membership test means a miscomputed depth cap.
    #[error("degree {degree} homology needs chain depth {} but the complex has depth {depth}", degree + 1)]
    InsufficientDepth { degree: usize, depth: usize },
}

/// Chain complex of a small link. Chain degree `i` is free on the cofaces
/// of relative dimension `i + 1`; columns and rows follow the bucket order
/// (table order, hence lexicographic within a dimension).
#[derive(Clone, Debug)]
pub struct LinkChainComplex {
    sizes: Vec<usize>,
    /// `boundaries[i]` maps chain degree `i + 1` to degree `i`.
    boundaries: Vec<IntMatrix>,
}

impl LinkChainComplex {
    /// Number of chain degrees stored (the traversal depth).
    pub fn depth(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, degree: usize) -> usize {
        self.sizes.get(degree).copied().unwrap_or(0)
    }

    /// The boundary map out of chain degree `j`, `None` when `j` is zero
    /// (degree 0 has no boundary) or beyond the stored depth.
    pub fn boundary(&self, j: usize) -> Option<&IntMatrix> {
        if j == 0 {
            None
        } else {
            self.boundaries.get(j - 1)
        }
    }

    /// Builds the chain complex from an already collected small link.
    pub fn from_small_link(
        view: &ComplexView<'_>,
        sigma: SimplexId,
        sl: &SmallLink,
    ) -> LinkChainComplex {
        let complex = view.base();
        let depth = sl.depth();
        let sizes: Vec<usize> = (0..depth).map(|i| sl.bucket(i).len()).collect();
        let mut boundaries = Vec::with_capacity(depth.saturating_sub(1));
        for j in 1..depth {
            let lower = sl.bucket(j - 1);
            let upper = sl.bucket(j);
            let mut m = IntMatrix::zeros(lower.len(), upper.len());
            for (col, &tau) in upper.iter().enumerate() {
                for (l, &pos) in relative_positions(complex, tau, sigma).iter().enumerate() {
                    let face = complex.faces(tau)[pos];
                    let row = lower
                        .binary_search(&face)
                        .expect("face of a link member is a link member");
                    m.add_to(row, col, if l % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(m);
        }
        LinkChainComplex { sizes, boundaries }
    }
}

/// Collects the small link of `sigma` to `max_rel_dim` and assembles its
/// chain complex.
pub fn link_chain_complex(
    view: &ComplexView<'_>,
    sigma: SimplexId,
    max_rel_dim: usize,
) -> LinkChainComplex {
    let sl = get_small_link(view, sigma, max_rel_dim);
    LinkChainComplex::from_small_link(view, sigma, &sl)
}

/// Integral homology of `cc` in the requested degrees.
///
/// Degree `i` needs the boundary maps in and out of chain degree `i`; the
/// top stored degree treats its missing outgoing-from-above map as zero,
/// which is exact when the traversal depth covered the whole link.
pub fn link_homology(
    cc: &LinkChainComplex,
    degrees: &[usize],
) -> Result<BTreeMap<usize, HomologyGroup>, HomologyError> {
    let depth = cc.depth();
    let mut snf_cache: BTreeMap<usize, SnfResult> = BTreeMap::new();
    let mut snf_of = |j: usize, cc: &LinkChainComplex| -> SnfResult {
        snf_cache.entry(j).or_insert_with(|| smith_normal_form(cc.boundary(j).unwrap())).clone()
    };

    let mut out = BTreeMap::new();
    for &i in degrees {
        if i >= depth {
            return Err(HomologyError::InsufficientDepth { degree: i, depth });
        }
        let rank_out = if i == 0 { 0 } else { snf_of(i, cc).rank };
        let (rank_in, torsion) = if i + 1 < depth {
            let s = snf_of(i + 1, cc);
            (s.rank, s.nontrivial_divisors())
        } else {
            (0, Vec::new())
        };
        let betti = cc.size(i) as i64 - rank_out as i64 - rank_in as i64;
        assert!(betti >= 0, "rank excess in degree {i}: double boundary is not zero");
        out.insert(i, HomologyGroup { betti: betti as usize, torsion });
    }
    Ok(out)
}

/// Tests whether the live link of `sigma` has the integral homology of an
/// `m`-sphere: betti 1 in degrees 0 and `m` (betti 2 in degree 0 when
/// `m == 0`), zero elsewhere, and no torsion anywhere.
///
/// `m` must be `top_dim - dim(sigma) - 1` for the current view, so that no
/// live coface lies beyond relative dimension `m + 1` and the depth-capped
/// traversal sees the entire link.
pub fn is_sphere_link_oracle(view: &ComplexView<'_>, sigma: SimplexId, m: usize) -> bool {
    let cc = link_chain_complex(view, sigma, m + 1);
    let mut rank_out = 0usize;
    for i in 0..=m {
        let (rank_in, torsion_free) = match cc.boundary(i + 1) {
            Some(b) => {
                let s = smith_normal_form(b);
                (s.rank, s.nontrivial_divisors().is_empty())
            }
            None => (0, true),
        };
        let betti = cc.size(i) as i64 - rank_out as i64 - rank_in as i64;
        let expected: i64 = if m == 0 {
            2
        } else if i == 0 || i == m {
            1
        } else {
            0
        };
        if betti != expected || !torsion_free {
            return false;
        }
        rank_out = rank_in;
    }
    true
}
