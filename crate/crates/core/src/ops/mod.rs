//! Operations on sheaves over a point: convolution, internal hom, `RHom`,
//! torsion and capacities.

pub mod convolution;
pub mod hom;
pub mod oracle;
pub mod torsion;

pub use convolution::{adjoint, convolve, convolve_np, hom_star};
pub use hom::{rhom_sheaf, rhom_total};
pub use oracle::{stalk_oracle, stalk_oracle_barcodes, FiberCut, OracleKind};
pub use torsion::{capacity, capacity_prime, capacity_prime_of_hom, tau_rank, torsion};

use crate::barcode::GradedBarcode;
use crate::value::PiRational;

/// Translate all endpoints by `c`.
pub fn shift_t(f: &GradedBarcode, c: &PiRational) -> GradedBarcode {
    f.shift_t(c)
}

/// Add `k` to every degree.
pub fn shift_deg(f: &GradedBarcode, k: i64) -> GradedBarcode {
    f.shift_deg(k)
}
