//! Exact scalar, polynomial, and matrix arithmetic over Q and F_p.
//!
//! This is the substrate for every geometric operation: arbitrary-precision
//! rationals (always stored reduced, denominator positive) or residues in a
//! prime field with p < 2^31, dense matrices with reduced row echelon form
//! and kernel computation, and homogeneous binary forms in (s, t) with gcd
//! and projective root extraction.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{Matrix, RrefResult};
pub use poly::{minors, ParamPoint, Poly2, Roots};
pub use scalar::{canonicalize_vector, common_field, parse_scalar, Field, Scalar};
