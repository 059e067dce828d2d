//! Thurston-metric estimates: length-ratio lower bounds, systoles and the shadow map,
//! relative twisting, and coarse audits of shadow sequences.

mod catalog;
mod ratio;
mod shadow;
mod systole;
mod twist;

pub use catalog::{catalog, slope_length, SlopeCatalog};
pub use ratio::{sup_length_ratio, RatioReport};
pub use shadow::{
    quasigeodesic_audit, shadow_csv, shadow_lipschitz_audit, shadow_path, CoarseConstants, LipschitzReport,
    LipschitzViolation, QuasiGeodesicReport, SHADOW_CSV_HEADER,
};
pub use systole::{systoles, ShadowSample};
pub use twist::{twist, twist_from_lift, TwistMethod, TwistReport, TwistTarget};
