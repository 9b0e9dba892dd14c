//! Barcodes of functions on finite simplicial complexes.

pub mod complex;
pub mod front;
pub mod persistence;
pub mod sheaf_route;

pub use complex::{SimplicialComplex, VertexFunction};
pub use front::{front_capacity, front_hom_star, FrontRegion};
pub use persistence::{c0_two_critical_bound, sublevel_barcode, superlevel_barcode};
pub use sheaf_route::{relative_cohomology, sheaf_model, sheaf_route_barcode};
