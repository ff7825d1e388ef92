//! Rational normal curves, scrolls as swept ruling planes, membership and
//! fiber computation, determinantal quadric ideals, Fano components with
//! finite-field line enumeration, and verified broken-scroll chains.

mod broken;
mod curve;
mod fano;
mod quadric;
mod scroll;

pub use broken::{BrokenScroll, CheckResult, Component, EmbeddedScroll, Gluing, VerifyReport};
pub use curve::{rnc_through_points, RatCurveParam, RncResult};
pub use fano::{enumerate_lines_fp, fano_components, lines_in_projective_space, FanoComponent, FanoKind};
pub use quadric::QuadricSet;
pub use scroll::{
    degree_by_slicing, scroll_meets_subspace, scrolls_equal, segre_from_config, MembershipReport,
    Scroll,
};
