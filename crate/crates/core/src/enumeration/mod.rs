//! Isomorph-free generation of the graph classes the extremal checks range
//! over, canonical forms and automorphism orbits.

pub mod canonical;
pub mod generate;
pub mod structured;

pub use canonical::{
    are_isomorphic, canonical, canonical_graph, canonical_key, CanonicalForm, CanonicalKey, CANON_LIMIT,
};
pub use generate::{enumerate, EnumLimits, EnumScope, Enumerator, GraphStream};
pub use structured::{
    all_profiles, claim_one_bound, forest_profiles, prune_order_bound, structured_candidates, ComplementProfile,
    OrderBound, StructuredCandidate,
};
