//! Ground truth by brute force: the algebras `Λ'(S)` and `Λ(S)` from their
//! presentations, and the odd-partition poset.

pub mod algebra;
pub mod cache;
pub mod echelon;
pub mod poset;

pub use algebra::{
    apply_map, binomial, build_component, map_generator_indices, Algebra, BuildOptions, Generators,
    GradedComponent, Kind, Monomial, QuotientMap,
};
pub use poset::{homology_trace, poset_character};
