//! Robust validity checking of linear hexahedral and quadrilateral elements.
//!
//! The Jacobian determinant of a trilinear hexahedron is a triquadratic
//! polynomial. It is sampled at the 8 corners and 12 edge midpoints as
//! tetrahedral volumes, expanded in the order-2 Bezier basis, and bounded
//! through adaptive subdivision until the sign is certified.
//!
//! ```
//! use hexvalid::{check_hex, CheckConfig, HexNodes, Status};
//!
//! let cube = HexNodes::unit_cube();
//! let verdict = check_hex(&cube, &CheckConfig::default());
//! assert_eq!(verdict.status, Status::Valid);
//! ```

pub mod baselines;
pub mod bezier;
pub mod checker;
pub mod cli;
pub mod counterexamples;
pub mod dataset;
pub mod error;
pub mod geometry;
pub mod sampling;

#[cfg(test)]
mod testutil;

pub use bezier::BezierCoeffs27;
pub use checker::{
    check_hex, check_quad, min_jacobian_bounds, recursive_subdivision, CheckConfig, MinJacobianSearch, Status,
    ValidityVerdict, Witness,
};
pub use error::{Error, Result};
pub use geometry::{HexNodes, Point2, Point3, QuadNodes, Vec3};
pub use sampling::{jacobian_det_at, sample_20, RefPoint, SampleVector20};
