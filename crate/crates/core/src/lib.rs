//! Numerics for the bean function `𝔅(z) = sqrt(1 + tanh z) = sqrt(2/(1 + e^{-2z}))`.
//!
//! `𝔅` maps the unit disk conformally onto a bean-shaped region
//! `{w : |log(w²/(2−w²))| < 2}`. This crate evaluates the function and its
//! inverse, samples the boundary curve of the region, computes the sharp
//! bounds, inscribed/enclosing disks and inclusion thresholds attached to it,
//! the lower bounds on `|β|` in the associated differential-subordination
//! results, and the catalog of sharp radii for subordination to the bean
//! region, each with a numeric containment certificate.
//!
//! Everything is a pure function of its inputs; no global state, no
//! randomness outside the fixed-seed verification suite in [`verify`].

pub mod bean;
pub mod constants;
pub mod error;
pub mod extremal;
pub mod geometry;
pub mod radii;
pub mod series;
pub mod solve;
pub mod subordination;
pub mod verify;

pub use bean::{eval_bean, in_bean_region, inverse_bean};
pub use error::{Error, Result};
pub use geometry::{
    boundary_point, contains_curve, convexity_radius, distance_sq_to_boundary, enclosing_radius,
    inclusion_thresholds, inscribed_radius, janowski_subordination_test, minimax_center,
    modulus_extremum_angle, sharp_bounds, BoundSet, BoundaryPoint, Disk, InclusionThresholds,
};
pub use radii::{ClassId, RadiusResult};
pub use series::{bean_series, series_exp_integrate, PowerSeries, RationalSeries};
pub use solve::{extremize, smallest_root, Interval, Sense, SolveConfig};
pub use subordination::{
    beta_bound_mixed, beta_bound_power, beta_bound_sqrt, r0_constant, r0_predicate,
    verify_sufficiency, BetaQuery, BoundFamily,
};

/// Complex double used throughout.
pub type Complex = num::complex::Complex64;
