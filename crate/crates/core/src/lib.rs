//! Hyperbolic surfaces from shear coordinates and the Thurston-metric toolkit built on them.
//!
//! The crate is organised bottom-up:
//!
//! * [`hyp2`] — upper half-plane kernel (points, geodesics, `PSL(2, R)`).
//! * [`shear`] — ideal triangulations with shears, holonomy, lengths, stretch paths.
//! * [`slopes`] — simple closed curves as rational slopes, Farey distance.
//! * [`thurston`] — length-ratio bounds, systoles, shadows, twisting, audits.
//! * [`horizon`] — horizontality certificates in the universal cover.
//!
//! Every geometric type is generic over a [`Real`] scalar (`f32` or `f64`); the
//! aliases below fix the scalar for the common cases.

pub mod error;
pub mod horizon;
pub mod hyp2;
pub mod shear;
pub mod slopes;
pub mod thurston;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type HPoint64 = hyp2::HPoint<f64>;
pub type HPoint32 = hyp2::HPoint<f32>;
pub type Geodesic64 = hyp2::Geodesic<f64>;
pub type Geodesic32 = hyp2::Geodesic<f32>;
pub type MoebiusMap64 = hyp2::MoebiusMap<f64>;
pub type MoebiusMap32 = hyp2::MoebiusMap<f32>;
pub type ShearSurface64 = shear::ShearSurface<f64>;
pub type ShearSurface32 = shear::ShearSurface<f32>;
pub type StretchPath64 = shear::StretchPath<f64>;
pub type StretchPath32 = shear::StretchPath<f32>;
pub type HorizontalityCertificate64 = horizon::HorizontalityCertificate<f64>;
pub type HorizontalityCertificate32 = horizon::HorizontalityCertificate<f32>;
