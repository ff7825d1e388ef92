//! Projective points, linear subspaces, projectivities, Möbius
//! parameterizations of P^1, general-position predicates, and seeded
//! sampling of configurations.
//!
//! Subspaces are stored as row spans in reduced row echelon form, so two
//! subspaces are equal exactly when their stored matrices are identical.
//! The empty subspace has zero rows and projective dimension -1.

mod maps;
mod point;
mod position;
mod sample;
mod subspace;

pub use maps::{MoebiusMap, ProjMap};
pub use point::ProjPoint;
pub use position::in_general_position;
pub use sample::{ConfigRequest, Configuration, ItemSpec, Sampler, RETRY_BUDGET};
pub use subspace::{meet, span, span_points, LinSubspace, SpanItem};
