//! Closed-form invariants of balls and ellipsoids in `T*ℝⁿ`: projector
//! stalks, their barcodes, the invariant `S_T`, and a non-squeezing check.

mod domain;
mod eigen;
mod invariant;
mod nonsqueeze;
mod stalks;

pub use domain::DomainSpec;
pub use eigen::{eigen_count, eigen_count_sq, EXCLUSION_BAND};
pub use invariant::{domain_barcode, inclusion_cone_rank, sheaf_invariant, transfer_is_iso};
pub use nonsqueeze::{nonsqueeze_check, NonsqueezeVerdict};
pub use stalks::{ball_stalk, ellipsoid_stalk};
