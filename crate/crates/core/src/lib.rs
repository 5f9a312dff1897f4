//! Canonical stratification of finite abstract simplicial complexes.
//!
//! A stratification labels every simplex with the dimension of the stratum
//! it belongs to, splitting the complex into manifold-like pieces glued
//! along singular sets. This crate computes the canonical (coarsest such)
//! stratification by a top-down sweep: at each dimension it detects the
//! simplices whose local structure looks like that of a manifold point,
//! groups them into strata, removes them, and recurses on what is left.
//!
//! The manifold test is homological. The upward closure of a simplex (its
//! "small link") must have the reduced integral homology of a sphere of the
//! appropriate dimension. Low codimensions admit purely combinatorial
//! shortcuts (coface counts, connectivity, Euler characteristic); higher
//! codimensions run a bounded ladder of homology checks backed by an exact
//! integer Smith normal form.
//!
//! The crate also derives the face-relation poset of the strata and counts
//! exit-path classes between strata, provides reference generators for
//! spheres, balls, disks and several singular examples, and parses a plain
//! text input format. The `canstrat` binary in the companion crate wraps
//! all of this in a CLI.

pub mod complex;
pub mod generators;
pub mod homology;
pub mod io;
pub mod link;
pub mod matrix;
pub mod poset;
pub mod stratify;
mod uf;
pub mod view;

pub use complex::{ComplexError, SimplexId, SimplicialComplex, VertexId};
pub use homology::{
    is_sphere_link_oracle, link_chain_complex, link_homology, HomologyError, HomologyGroup,
    LinkChainComplex,
};
pub use io::{format_simplices, parse_input, InputError};
pub use link::{get_small_link, link_component_count, link_counts_full, SmallLink};
pub use matrix::{smith_normal_form, IntMatrix, SnfResult};
pub use poset::{hom_component_count, strata_poset, HomCount, StrataPoset};
pub use stratify::{
    canonical_stratification, canonical_stratification_with, codim_general_pass,
    codim_three_pass, codim_two_pass, codim_zero_one_pass, remove_assigned,
    unique_stratum_among_cofaces, verify_with_oracle, Assignment, Dispatch, OracleDivergence,
    StrataSet, Stratification, StratifyOptions, StratumId, StratumRecord,
};
pub use view::ComplexView;
