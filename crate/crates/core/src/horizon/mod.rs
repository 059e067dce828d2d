//! Horizontality in the universal cover.
//!
//! A curve `α` is `(n, L)`-horizontal when, for some short anchor curve `γ` and some leaf `λ`
//! of the stretch lamination, there are lifts `γ̃₁ … γ̃ₙ` crossing a lift `λ̃` at points
//! `p₁ … pₙ` (in order, consecutive ones at least `L` apart) and a lift `α̃` crossing every
//! `γ̃ᵢ` at a point `qᵢ` within `ε_B` of `pᵢ`.
//!
//! Everything is computed in the standard frame of one triangle: [`leaf_strip`] walks the
//! developed triangles along `λ̃`, [`gamma_crossings`] collects the lifts of `γ` through them,
//! and [`check_horizontal`] tries the lifts of `α` read off the same strip. The search is
//! one-sided: a certificate is a proof, a failure only says nothing was found up to the depth.

mod certificate;
mod search;
mod walk;

pub use certificate::{CertificateCheck, HorizontalityCertificate, WitnessPoint};
pub use search::{
    check_horizontal, fellow_travel_length, fellow_travel_search, persistence_experiment, FellowTraveller,
    HorizontalQuery, Horizontality, PersistenceReport, PersistenceSummary, Window,
};
pub use walk::{gamma_crossings, leaf_copies, leaf_crossings, leaf_lift, leaf_strip, GammaCrossing, Leaf, StripCopy};
