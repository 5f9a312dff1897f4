//! The canonical stratification driver and its per-codimension passes.
//!
//! Each level works on the live view at its current top dimension `n`.
//! Codimension 0 and 1 are handled together: maximal runs grown from
//! codimension-1 simplices with exactly two live cofaces become strata,
//! and leftover top-dimensional simplices become singleton strata. Higher
//! codimensions absorb a simplex into the unique stratum covering all of
//! its live cofaces when its link passes a homology-sphere test:
//!
//! * codimension 2: link connectivity (skipped with `strict = false`);
//! * codimension 3: Euler characteristic 2, plus connectivity when strict;
//! * codimension 4 and up: connectivity, vanishing of degree-1 integral
//!   homology, then vanishing in low degrees up to the middle dimension,
//!   where Poincaré duality lets either the complementary degrees be
//!   skipped (odd link dimension) or an Euler characteristic comparison
//!   stand in for the middle degree (even link dimension).
//!
//! Once a level's sweeps reach a fixed point the assigned simplices are
//! removed and the next lower top dimension is processed. The result maps
//! every simplex to a stratum; `pi` is the stratum's top dimension.

use std::fmt;

use crate::complex::{SimplexId, SimplicialComplex, VertexId};
use crate::homology::{is_sphere_link_oracle, link_homology, LinkChainComplex};
use crate::link::{euler_characteristic, get_small_link, link_component_count, link_counts_full};
use crate::uf::DisjointSets;
use crate::view::ComplexView;

/// Identifier of a stratum, dense from zero in discovery order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StratumId(pub usize);

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bookkeeping for one stratum: the level that created it and how many
/// members it holds per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumRecord {
    pub id: StratumId,
    pub top_dim: usize,
    pub member_count_per_dim: Vec<usize>,
}

impl StratumRecord {
    pub fn member_count(&self) -> usize {
        self.member_count_per_dim.iter().sum()
    }
}

/// Allocator and registry for strata.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrataSet {
    records: Vec<StratumRecord>,
}

impl StrataSet {
    pub fn new() -> Self {
        StrataSet::default()
    }

    pub fn allocate(&mut self, top_dim: usize) -> StratumId {
        let id = StratumId(self.records.len());
        self.records.push(StratumRecord {
            id,
            top_dim,
            member_count_per_dim: vec![0; top_dim + 1],
        });
        id
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[StratumRecord] {
        &self.records
    }

    pub fn top_dim(&self, id: StratumId) -> usize {
        self.records[id.0].top_dim
    }

    fn record_member(&mut self, id: StratumId, dim: usize) {
        self.records[id.0].member_count_per_dim[dim] += 1;
    }
}

/// Partial (during a run) or total (afterwards) map from simplices to
/// strata. Mirrors the complex's tables; a simplex is assigned at most
/// once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    slots: Vec<Vec<Option<StratumId>>>,
    assigned: usize,
}

impl Assignment {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let slots = (0..=complex.dimension())
            .map(|d| vec![None; complex.num_simplices(d)])
            .collect();
        Assignment { slots, assigned: 0 }
    }

    pub fn get(&self, id: SimplexId) -> Option<StratumId> {
        self.slots[id.dim][id.index]
    }

    pub fn is_assigned(&self, id: SimplexId) -> bool {
        self.get(id).is_some()
    }

    pub fn assigned_count(&self) -> usize {
        self.assigned
    }

    fn set(&mut self, id: SimplexId, sid: StratumId) {
        let slot = &mut self.slots[id.dim][id.index];
        assert!(slot.is_none(), "simplex {id} assigned twice");
        *slot = Some(sid);
        self.assigned += 1;
    }

    /// All assigned simplices with their strata, in table order.
    pub fn iter_assigned(&self) -> impl Iterator<Item = (SimplexId, StratumId)> + '_ {
        self.slots.iter().enumerate().flat_map(|(d, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(i, s)| s.map(|sid| (SimplexId::new(d, i), sid)))
        })
    }
}

fn assign(a: &mut Assignment, strata: &mut StrataSet, id: SimplexId, sid: StratumId) {
    a.set(id, sid);
    strata.record_member(sid, id.dim);
}

/// The stratum shared by every live coface of `sigma`, if the cofaces are
/// all assigned and agree. `None` when `sigma` has no live cofaces, when
/// any live coface is unassigned, or when two cofaces disagree.
pub fn unique_stratum_among_cofaces(
    view: &ComplexView<'_>,
    a: &Assignment,
    sigma: SimplexId,
) -> Option<StratumId> {
    let cofaces = view.live_cofaces(sigma);
    let mut found: Option<StratumId> = None;
    for &cf in cofaces {
        let sid = a.get(cf)?;
        match found {
            None => found = Some(sid),
            Some(prev) if prev != sid => return None,
            Some(_) => {}
        }
    }
    found
}

/// Creates this level's strata: maximal runs grown from codimension-1
/// simplices with exactly two live cofaces, then singleton strata for the
/// remaining top-dimensional simplices. Runs are grown depth-first, so
/// two runs never merge through a shared coface and a codimension-1
/// simplex bordering two would-be runs simply joins whichever reached it
/// first.
pub fn codim_zero_one_pass(view: &ComplexView<'_>, a: &mut Assignment, strata: &mut StrataSet) {
    let Some(n) = view.top_dim() else { return };
    if n >= 1 {
        for seed in view.codim_simplices(1) {
            if a.is_assigned(seed) || view.live_cofaces(seed).len() != 2 {
                continue;
            }
            let sid = strata.allocate(n);
            let mut stack = vec![seed];
            while let Some(cur) = stack.pop() {
                if a.is_assigned(cur) || view.live_cofaces(cur).len() != 2 {
                    continue;
                }
                assign(a, strata, cur, sid);
                for &cf in view.live_cofaces(cur) {
                    if !a.is_assigned(cf) {
                        assign(a, strata, cf, sid);
                        stack.extend_from_slice(view.base().faces(cf));
                    }
                }
            }
        }
    }
    for top in view.codim_simplices(0) {
        if !a.is_assigned(top) {
            let sid = strata.allocate(n);
            assign(a, strata, top, sid);
        }
    }
}

/// Codimension-2 membership: unique coface stratum, plus link
/// connectivity when `strict`. Returns the number of simplices assigned.
pub fn codim_two_pass(
    view: &ComplexView<'_>,
    a: &mut Assignment,
    strata: &mut StrataSet,
    strict: bool,
) -> usize {
    let mut assigned = 0;
    for sigma in view.codim_simplices(2) {
        if a.is_assigned(sigma) {
            continue;
        }
        let Some(sid) = unique_stratum_among_cofaces(view, a, sigma) else { continue };
        if strict {
            let sl = get_small_link(view, sigma, 2);
            if link_component_count(&sl, view) != 1 {
                continue;
            }
        }
        assign(a, strata, sigma, sid);
        assigned += 1;
    }
    assigned
}

/// Codimension-3 membership: unique coface stratum and link Euler
/// characteristic 2, plus link connectivity when `strict`. Returns the
/// number of simplices assigned.
pub fn codim_three_pass(
    view: &ComplexView<'_>,
    a: &mut Assignment,
    strata: &mut StrataSet,
    strict: bool,
) -> usize {
    let mut assigned = 0;
    for sigma in view.codim_simplices(3) {
        if a.is_assigned(sigma) {
            continue;
        }
        let Some(sid) = unique_stratum_among_cofaces(view, a, sigma) else { continue };
        // Depth 3 is the full link here, so bucket sizes give its Euler
        // characteristic.
        let sl = get_small_link(view, sigma, 3);
        let chi = euler_characteristic(&sl.bucket_sizes());
        if chi != 2 {
            continue;
        }
        if strict && link_component_count(&sl, view) != 1 {
            continue;
        }
        assign(a, strata, sigma, sid);
        assigned += 1;
    }
    assigned
}

/// General membership test for codimension `k >= 2`: unique coface
/// stratum, link connectivity, then the duality-shortened homology
/// ladder. Agrees with the specialized codimension-2/3 passes in strict
/// mode. Returns the number of simplices assigned.
pub fn codim_general_pass(
    view: &ComplexView<'_>,
    a: &mut Assignment,
    strata: &mut StrataSet,
    k: usize,
) -> usize {
    assert!(k >= 2, "codimensions 0 and 1 have their own pass");
    let m = k - 1; // dimension of the sphere the link must resemble
    let depth = k.div_ceil(2) + 1;
    let mut assigned = 0;
    for sigma in view.codim_simplices(k) {
        if a.is_assigned(sigma) {
            continue;
        }
        let Some(sid) = unique_stratum_among_cofaces(view, a, sigma) else { continue };
        let sl = get_small_link(view, sigma, depth);
        if link_component_count(&sl, view) != 1 {
            continue;
        }
        let ok = match m {
            1 => true,
            2 => euler_characteristic(&sl.bucket_sizes()) == 2,
            _ => {
                let cc = LinkChainComplex::from_small_link(view, sigma, &sl);
                let mut degrees: Vec<usize> = vec![1];
                if m % 2 == 1 {
                    // Odd-dimensional link: degrees above (k/2 - 1) are
                    // covered by duality.
                    degrees.extend(2..k / 2);
                } else {
                    degrees.extend(2..m / 2);
                }
                let homology = link_homology(&cc, &degrees)
                    .expect("duality ladder stays within the collected depth");
                let low_degrees_vanish = homology.values().all(|g| g.is_zero());
                if m % 2 == 1 {
                    low_degrees_vanish
                } else {
                    // Even-dimensional link: the middle degree reduces to
                    // an Euler characteristic comparison.
                    low_degrees_vanish
                        && euler_characteristic(&link_counts_full(view, sigma)) == 2
                }
            }
        };
        if ok {
            assign(a, strata, sigma, sid);
            assigned += 1;
        }
    }
    assigned
}

/// Removes every assigned simplex from `view`, after checking that
/// nothing assigned at the current level has already been removed.
pub fn remove_assigned<'a>(
    view: &ComplexView<'a>,
    a: &Assignment,
    strata: &StrataSet,
) -> ComplexView<'a> {
    let n = view.top_dim().expect("remove_assigned on an empty view");
    for (id, sid) in a.iter_assigned() {
        assert!(
            strata.top_dim(sid) != n || view.is_alive(id),
            "internal consistency: {id} was assigned at level {n} but is already dead"
        );
    }
    view.remove_marked(|id| a.is_assigned(id))
}

/// Which pass handles codimensions 2 and 3.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dispatch {
    /// Combinatorial shortcuts at codimension 2 and 3, the homology
    /// ladder above.
    Specialized,
    /// Everything at codimension 2 and up through the homology ladder.
    /// Implies the connectivity check, so only meaningful in strict mode;
    /// used to cross-validate the shortcuts.
    GeneralOnly,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StratifyOptions {
    /// Require link connectivity in the codimension-2/3 shortcuts. On by
    /// default; disabling it lets a simplex whose link splits into
    /// several components (a pinch point) be absorbed into a stratum.
    pub strict: bool,
    pub dispatch: Dispatch,
}

impl Default for StratifyOptions {
    fn default() -> Self {
        StratifyOptions { strict: true, dispatch: Dispatch::Specialized }
    }
}

/// Computes the canonical stratification with the default dispatch.
pub fn canonical_stratification(complex: SimplicialComplex, strict: bool) -> Stratification {
    canonical_stratification_with(
        complex,
        StratifyOptions { strict, ..StratifyOptions::default() },
    )
}

/// Computes the canonical stratification: top-down levels, each saturated
/// by ascending-codimension sweeps until a fixed point.
pub fn canonical_stratification_with(
    complex: SimplicialComplex,
    opts: StratifyOptions,
) -> Stratification {
    let mut strata = StrataSet::new();
    let mut a = Assignment::new(&complex);
    {
        let mut view = ComplexView::fresh(&complex);
        while let Some(n) = view.top_dim() {
            codim_zero_one_pass(&view, &mut a, &mut strata);
            loop {
                let mut changed = 0;
                for k in 2..=n {
                    changed += match opts.dispatch {
                        Dispatch::Specialized => match k {
                            2 => codim_two_pass(&view, &mut a, &mut strata, opts.strict),
                            3 => codim_three_pass(&view, &mut a, &mut strata, opts.strict),
                            _ => codim_general_pass(&view, &mut a, &mut strata, k),
                        },
                        Dispatch::GeneralOnly => {
                            codim_general_pass(&view, &mut a, &mut strata, k)
                        }
                    };
                }
                if changed == 0 {
                    break;
                }
            }
            view = remove_assigned(&view, &a, &strata);
        }
    }
    let out = Stratification::assemble(complex, a, strata);
    debug_assert_eq!(out.validate(), Ok(()));
    out
}

/// A total stratification of a complex.
#[derive(Clone, Debug)]
pub struct Stratification {
    complex: SimplicialComplex,
    assignment: Assignment,
    strata: Vec<StratumRecord>,
    pi: Vec<Vec<usize>>,
}

impl Stratification {
    fn assemble(complex: SimplicialComplex, assignment: Assignment, strata: StrataSet) -> Self {
        let records = strata.records;
        let pi: Vec<Vec<usize>> = (0..=complex.dimension())
            .map(|d| {
                (0..complex.num_simplices(d))
                    .map(|i| {
                        let sid = assignment
                            .get(SimplexId::new(d, i))
                            .expect("stratification must be total");
                        records[sid.0].top_dim
                    })
                    .collect()
            })
            .collect();
        Stratification { complex, assignment, strata: records, pi }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn strata(&self) -> &[StratumRecord] {
        &self.strata
    }

    pub fn stratum_of(&self, id: SimplexId) -> StratumId {
        self.assignment.get(id).expect("stratification is total")
    }

    /// Top dimension of the stratum containing `id`.
    pub fn pi(&self, id: SimplexId) -> usize {
        self.pi[id.dim][id.index]
    }

    /// Members of one stratum, in table order.
    pub fn members(&self, sid: StratumId) -> Vec<SimplexId> {
        self.assignment
            .iter_assigned()
            .filter(|&(_, s)| s == sid)
            .map(|(id, _)| id)
            .collect()
    }

    /// Checks the structural invariants: totality, record tallies,
    /// monotonicity of `pi` along faces, and that strata are exactly the
    /// connected components of the `pi` fibers.
    pub fn validate(&self) -> Result<(), String> {
        let c = &self.complex;

        let mut tallies: Vec<Vec<usize>> = self
            .strata
            .iter()
            .map(|r| vec![0usize; r.top_dim + 1])
            .collect();
        for id in c.iter_ids() {
            let sid = self
                .assignment
                .get(id)
                .ok_or_else(|| format!("{id} is unassigned"))?;
            let record = &self.strata[sid.0];
            if id.dim > record.top_dim {
                return Err(format!(
                    "{id} of dimension {} lies in a stratum of top dimension {}",
                    id.dim, record.top_dim
                ));
            }
            tallies[sid.0][id.dim] += 1;
        }
        for (record, tally) in self.strata.iter().zip(&tallies) {
            if &record.member_count_per_dim != tally {
                return Err(format!(
                    "stratum {} counts {:?} do not match members {:?}",
                    record.id, record.member_count_per_dim, tally
                ));
            }
            if record.member_count() == 0 {
                return Err(format!("stratum {} is empty", record.id));
            }
            let top_members = record.member_count_per_dim[record.top_dim];
            if top_members == 0 {
                return Err(format!(
                    "stratum {} has no member of its top dimension {}",
                    record.id, record.top_dim
                ));
            }
        }

        // Monotonicity, and fiber components versus strata.
        let offsets: Vec<usize> = {
            let mut acc = 0;
            (0..=c.dimension())
                .map(|d| {
                    let o = acc;
                    acc += c.num_simplices(d);
                    o
                })
                .collect()
        };
        let flat = |id: SimplexId| offsets[id.dim] + id.index;
        let mut ds = DisjointSets::new(c.len());
        for tau in c.iter_ids() {
            for &face in c.faces(tau) {
                if self.pi(face) > self.pi(tau) {
                    return Err(format!(
                        "pi decreases along face {face} < {tau}: {} > {}",
                        self.pi(face),
                        self.pi(tau)
                    ));
                }
                if self.pi(face) == self.pi(tau) {
                    if self.stratum_of(face) != self.stratum_of(tau) {
                        return Err(format!(
                            "{face} and {tau} share a fiber but not a stratum"
                        ));
                    }
                    ds.union(flat(face), flat(tau));
                }
            }
        }
        let mut stratum_root: Vec<Option<usize>> = vec![None; self.strata.len()];
        for id in c.iter_ids() {
            let sid = self.stratum_of(id);
            let root = ds.find(flat(id));
            match stratum_root[sid.0] {
                None => stratum_root[sid.0] = Some(root),
                Some(r) if r != root => {
                    return Err(format!("stratum {sid} is not connected"));
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

/// Where and how a stratification disagrees with the homology-sphere
/// membership criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDivergence {
    pub simplex_vertices: Vec<VertexId>,
    pub level: usize,
    /// True when the simplex was absorbed but its link fails the test;
    /// false when it was left out despite qualifying.
    pub was_assigned: bool,
}

impl fmt::Display for OracleDivergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> =
            self.simplex_vertices.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "oracle divergence at level {}: simplex ({}) {}",
            self.level,
            verts.join(" "),
            if self.was_assigned {
                "was assigned but its link is not a homology sphere"
            } else {
                "was left unassigned despite a qualifying link"
            }
        )
    }
}

/// Replays a finished stratification level by level against the direct
/// homology-sphere oracle.
///
/// At each level, a simplex below the top dimension was assigned exactly
/// when its stratum's top dimension equals the level. Every such simplex
/// must pass the oracle, and every simplex left unassigned whose live
/// cofaces all ended up in one stratum of this level must fail it.
/// Returns the first divergence in level-descending, then table, order.
pub fn verify_with_oracle(s: &Stratification) -> Result<(), OracleDivergence> {
    let complex = s.complex();
    let mut view = ComplexView::fresh(complex);
    while let Some(n) = view.top_dim() {
        let unique_final_stratum = |view: &ComplexView<'_>, sigma: SimplexId| {
            let cofaces = view.live_cofaces(sigma);
            let mut found: Option<StratumId> = None;
            for &cf in cofaces {
                if s.pi(cf) != n {
                    return None;
                }
                let sid = s.stratum_of(cf);
                match found {
                    None => found = Some(sid),
                    Some(prev) if prev != sid => return None,
                    Some(_) => {}
                }
            }
            found
        };

        let live: Vec<SimplexId> = view.live_ids().collect();
        for sigma in live {
            if sigma.dim == n {
                debug_assert_eq!(s.pi(sigma), n, "top-dimensional simplex left behind");
                continue;
            }
            let m = n - sigma.dim - 1;
            let assigned_here = s.pi(sigma) == n;
            let divergence = if assigned_here {
                !is_sphere_link_oracle(&view, sigma, m)
            } else {
                unique_final_stratum(&view, sigma).is_some()
                    && is_sphere_link_oracle(&view, sigma, m)
            };
            if divergence {
                return Err(OracleDivergence {
                    simplex_vertices: complex.vertices(sigma).to_vec(),
                    level: n,
                    was_assigned: assigned_here,
                });
            }
        }
        view = view.remove_marked(|id| s.pi(id) == n);
    }
    Ok(())
}
