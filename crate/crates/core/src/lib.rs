//! Exact projective geometry over Q and prime fields: rational normal
//! curves and scrolls, Segre configurations through prescribed lines and
//! planes, Schubert plane problems, finite-field Fano enumeration, and a
//! recursive degeneration pipeline that produces fully verified
//! interpolation witnesses.
//!
//! Everything is computed in exact arithmetic (arbitrary-precision
//! rationals or a prime field F_p with p < 2^31). No floating point
//! appears anywhere; every incidence claim made by a constructed object
//! is checked syntactically.

pub mod error;
pub mod exactlin;
pub mod interp;
pub mod projgeom;
pub mod rng;
pub mod scrollcore;

pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, ParamPoint, Poly2, RrefResult, Scalar};
pub use projgeom::{LinSubspace, MoebiusMap, ProjMap, ProjPoint, Sampler};
pub use rng::SplitMix64;
pub use scrollcore::{
    BrokenScroll, Component, EmbeddedScroll, Gluing, QuadricSet, RatCurveParam, Scroll,
    VerifyReport,
};

pub use interp::{InterpTask, WitnessTree};
