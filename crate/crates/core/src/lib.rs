//! Exact computations with partial ordered actions of finite ordered
//! groupoids and inverse semigroups on finite-dimensional algebras over a
//! prime field: validation, restriction, globalization, minimal
//! globalization, skew rings and Morita contexts.

pub mod action;
pub mod algebra;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod globalization;
pub mod groupoid;
pub mod linalg;
pub mod linmap;
pub mod morita;
pub mod report;
pub mod semigroup;
pub mod semigroup_action;
pub mod skew;
pub mod subspace;

pub use action::{general_restriction, standard_restriction, POAction};
pub use algebra::{Algebra, Identity};
pub use equivalence::{search_equivalence, verify_equivalence, EquivalenceWitness, SearchOutcome};
pub use error::{Error, Result};
pub use field::PrimeModulus;
pub use globalization::{
    build_globalization, build_minimal_globalization, globalize_inverse_semigroup_action, verify_semigroup_globalization, Construction,
    Globalization, SemigroupGlobalization,
};
pub use groupoid::OrderedGroupoid;
pub use linmap::LinMap;
pub use morita::{morita_context, morita_context_inv_sgp, MoritaDims, MoritaReport};
pub use report::{Clause, Report, Violation};
pub use semigroup::{esn_to_groupoid, esn_to_semigroup, InverseSemigroup};
pub use semigroup_action::InvSgpAction;
pub use skew::{build_inv_sgp_skew, build_inv_sgp_skew_ring, build_ordered_skew, build_skew, skew_unit, OrderedSkewRing, SkewRing};
pub use subspace::Subspace;
