//! Numerical differential geometry of four-dimensional graph submanifolds of
//! flat eight-dimensional Euclidean space.
//!
//! A map `f: R^4 -> R^4` (or `R^3`) induces the graph immersion
//! `Γ_f(x) = (x, f(x))` whose image is a four-dimensional submanifold of
//! `R^8`. This crate computes, from exact jets of `f`:
//!
//! * the induced metric, the pullback of the ambient Kähler form, and the
//!   two Kähler angles with their eigenstructure ([`point`]);
//! * the closed-form angle coefficients that package the same angles as
//!   roots of a quadratic ([`coeffs`]);
//! * Cayley calibration four-forms, calibration defects, and the pairing
//!   matrix between self-dual tangent and normal two-form bases
//!   ([`calibration`]);
//! * second fundamental form, mean curvature, tangent and normal curvature
//!   tensors, and the eight characteristic-class densities ([`curvature`]);
//! * the transgression three-form whose exterior derivative measures the
//!   difference of the two anti-self-dual Pontryagin densities ([`eta`]);
//! * grid scans, Laplace–Beltrami residuals, transgression residuals, and
//!   tube integrals ([`fields`]).
//!
//! The built-in example maps live in [`catalog`]; arbitrary polynomial maps
//! are supported through [`polynomial`].

pub mod ambient;
pub mod calibration;
pub mod catalog;
pub mod coeffs;
pub mod curvature;
pub mod error;
pub mod eta;
pub mod fields;
pub mod jet;
pub mod numerics;
pub mod point;
pub mod polynomial;
pub mod quaternion;

/// 4x4 real matrix over chart or frame indices.
pub type Mat4 = nalgebra::Matrix4<f64>;
/// 3x3 real matrix (self-dual basis pairings).
pub type Mat3 = nalgebra::Matrix3<f64>;
/// Vector in the four-dimensional chart.
pub type Vec4 = nalgebra::Vector4<f64>;
/// Vector in the eight-dimensional ambient space.
pub type Vec8 = nalgebra::SVector<f64, 8>;
/// 8x8 real matrix over ambient indices.
pub type Mat8 = nalgebra::SMatrix<f64, 8, 8>;

pub use error::{GeomError, Result};
pub use jet::{ChartPoint, ImmersionSpec, Jet3};
pub use point::{classify_point, point_geometry, Classification, PointGeometry, Tolerances};
