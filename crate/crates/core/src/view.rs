//! Live-subcomplex views.
//!
//! Each stratification level works on the simplices not yet assigned to a
//! stratum. A [`ComplexView`] records that live set as per-dimension masks
//! over an immutable base complex, together with the restriction of every
//! coface list to live simplices. The live set is always downward closed
//! (live simplices have live faces), so a view is itself a complex.

use crate::complex::{SimplexId, SimplicialComplex};

/// A downward-closed set of live simplices over a base complex.
#[derive(Clone, Debug)]
pub struct ComplexView<'a> {
    base: &'a SimplicialComplex,
    alive: Vec<Vec<bool>>,
    live_cofaces: Vec<Vec<Vec<SimplexId>>>,
    live_per_dim: Vec<usize>,
}

impl<'a> ComplexView<'a> {
    /// View with every simplex live.
    pub fn fresh(base: &'a SimplicialComplex) -> Self {
        let alive: Vec<Vec<bool>> =
            (0..=base.dimension()).map(|d| vec![true; base.num_simplices(d)]).collect();
        let live_cofaces: Vec<Vec<Vec<SimplexId>>> = (0..=base.dimension())
            .map(|d| (0..base.num_simplices(d)).map(|i| base.cofaces(SimplexId::new(d, i)).to_vec()).collect())
            .collect();
        let live_per_dim = (0..=base.dimension()).map(|d| base.num_simplices(d)).collect();
        ComplexView { base, alive, live_cofaces, live_per_dim }
    }

    pub fn base(&self) -> &'a SimplicialComplex {
        self.base
    }

    /// Dimension of the largest live simplex, `None` when nothing is live.
    pub fn top_dim(&self) -> Option<usize> {
        self.live_per_dim.iter().rposition(|&n| n > 0)
    }

    pub fn is_alive(&self, id: SimplexId) -> bool {
        self.alive[id.dim][id.index]
    }

    /// Live immediate cofaces of a live simplex, ascending by index.
    pub fn live_cofaces(&self, id: SimplexId) -> &[SimplexId] {
        &self.live_cofaces[id.dim][id.index]
    }

    pub fn live_count(&self) -> usize {
        self.live_per_dim.iter().sum()
    }

    pub fn live_count_in_dim(&self, dim: usize) -> usize {
        self.live_per_dim.get(dim).copied().unwrap_or(0)
    }

    /// Live simplices of codimension `k` relative to the current top
    /// dimension, in table order. Requires `k <= top_dim`.
    pub fn codim_simplices(&self, k: usize) -> Vec<SimplexId> {
        let n = self.top_dim().expect("codim_simplices on an empty view");
        assert!(k <= n, "codimension {k} exceeds current top dimension {n}");
        let d = n - k;
        self.live_in_dim(d).collect()
    }

    /// Live simplices of dimension `d`, in table order.
    pub fn live_in_dim(&self, d: usize) -> impl Iterator<Item = SimplexId> + '_ {
        self.alive
            .get(d)
            .into_iter()
            .flat_map(move |mask| {
                mask.iter()
                    .enumerate()
                    .filter(|(_, &a)| a)
                    .map(move |(i, _)| SimplexId::new(d, i))
            })
    }

    /// All live simplices in dimension-major table order.
    pub fn live_ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.alive.len()).flat_map(move |d| self.live_in_dim(d))
    }

    /// New view with every simplex matching `dead` removed.
    ///
    /// The caller must remove an upward-closed set (every live coface of a
    /// removed simplex is removed too); this is checked in debug builds by
    /// re-verifying downward closure.
    pub fn remove_marked(&self, dead: impl Fn(SimplexId) -> bool) -> ComplexView<'a> {
        let mut alive = self.alive.clone();
        let mut live_per_dim = vec![0usize; alive.len()];
        for (d, mask) in alive.iter_mut().enumerate() {
            for (i, slot) in mask.iter_mut().enumerate() {
                if *slot && dead(SimplexId::new(d, i)) {
                    *slot = false;
                }
                if *slot {
                    live_per_dim[d] += 1;
                }
            }
        }
        let live_cofaces: Vec<Vec<Vec<SimplexId>>> = (0..alive.len())
            .map(|d| {
                (0..alive[d].len())
                    .map(|i| {
                        if !alive[d][i] {
                            return Vec::new();
                        }
                        self.live_cofaces[d][i]
                            .iter()
                            .copied()
                            .filter(|cf| alive[cf.dim][cf.index])
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let next = ComplexView { base: self.base, alive, live_cofaces, live_per_dim };
        debug_assert!(next.is_downward_closed(), "removal was not upward closed");
        next
    }

    fn is_downward_closed(&self) -> bool {
        self.live_ids().all(|id| self.base.faces(id).iter().all(|&f| self.is_alive(f)))
    }
}
