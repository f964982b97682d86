//! Good semigroups of `ℕ^d`: validation, metrics, the track calculus of
//! `ℕ²`, enumeration by genus and Wilf-inequality checks.

pub mod analysis;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod metrics;
mod plane;
pub mod point;
pub mod semigroup;
pub mod tracks;

pub use error::{Error, Result, ValidationError};
pub use point::{Point, Point2, INF};
pub use semigroup::{
    delta_sets, finite_maximals, infinite_maximals, infinity_projection, membership,
    parse_semigroup, validate, DeltaSets, GoodSemigroup, Projection,
};
