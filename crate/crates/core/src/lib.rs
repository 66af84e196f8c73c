//! Exact combinatorial models of Segal-style infinite loop space machines.
//!
//! Everything here is finite and decidable: groups come with multiplication
//! tables, spaces are based G-simplicial sets materialized up to a degree
//! bound, and index categories are truncated at an object bound.  All of the
//! structural statements exercised by the verification suites (isomorphisms,
//! comparison maps, coherence diagrams, homotopies) are checked by exhaustive
//! equality on stored data, and homology of machine outputs is computed over
//! the integers by Smith normal form.

pub(crate) mod util;

pub mod fingroups;
pub mod simplicial;
pub mod indexdiagrams;
pub mod barmachine;
pub mod monoidal;
pub mod homology;
