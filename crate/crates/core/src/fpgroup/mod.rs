//! Finitely presented groups: coset enumeration, low-index subgroups,
//! torsion and deck-group computations, and maps onto finite permutation
//! groups.
//!
//! Words are evaluated left to right: in `a b` the generator `a` acts first.

mod coset;
mod lowindex;
mod perm;
mod permgroup;
mod presentation;
mod quotient;
mod record;
mod word;

use thiserror::Error;

pub use coset::coset_enumerate;
pub use lowindex::{
    dedup_by_isomorphism, low_index_search, low_index_subgroups, LowIndexOptions, LowIndexOutcome, DEFAULT_NODE_BUDGET,
    MAX_SEARCH_INDEX,
};
pub use perm::Perm;
pub use permgroup::{enumerate_elements, group_order, is_transitive, orbit, StabilizerChain};
pub use presentation::GroupPresentation;
pub use quotient::{kernel_record, verify_quotient_map, FiniteQuotientMap, KERNEL_ELEMENT_LIMIT};
pub use record::{word_eval, RecordJson, SubgroupRecord};
pub use word::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator index {0} out of range for {1} generators")]
    BadIndex(usize, usize),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(u32, usize),
    #[error("not a permutation")]
    NotAPermutation,
    #[error("relator reduces to the empty word")]
    EmptyRelator,
    #[error("expected {expected} generator images, found {found}")]
    WrongImageCount { expected: usize, found: usize },
    #[error("relator {index} ({relator}) does not act trivially")]
    RelatorViolated { index: usize, relator: String },
    #[error("action is not transitive")]
    NotTransitive,
    #[error("presentation declares no generator orders")]
    MissingOrders,
    #[error("coset table overflow: more than {0} cosets")]
    Overflow(usize),
    #[error("search exceeded node budget of {0}")]
    ResourceLimit(u64),
    #[error("index bound {0} exceeds the supported maximum {1}")]
    IndexTooLarge(usize, usize),
    #[error("images generate a group of order {found}, expected {expected}")]
    NotSurjective { expected: u128, found: u128 },
    #[error("quotient map has not been verified as surjective")]
    NotVerified,
}
