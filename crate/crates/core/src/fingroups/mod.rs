//! Finite groups, permutation actions, based finite sets and their maps, and
//! the hom-sets of the truncated index categories.

mod group;
mod perm;
mod basedmap;
mod graphsub;
mod homs;

pub use basedmap::{compose_based, smash_based, transpose_map, BasedMap};
pub use graphsub::{graph_of_action, graph_subgroups, subgroups, GraphSubgroup};
pub use group::{FinGroup, GSetAction};
pub use homs::{conjugation_action, enumerate_homs, CatTag, HomCache};
pub use perm::Permutation;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not {0} x {0}")]
    BadTableShape(usize),
    #[error("entry out of range in multiplication table")]
    EntryOutOfRange,
    #[error("0 is not a two-sided identity")]
    NoIdentity,
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("permutation image is not a bijection")]
    NotBijective,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("map image value {0} exceeds target arity {1}")]
    ImageOutOfRange(usize, usize),
    #[error("perms do not define a homomorphism at ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("group too large for subgroup enumeration: order {0} exceeds bound {1}")]
    SubgroupBound(usize, usize),
}
