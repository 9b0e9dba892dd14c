//! Exact calculus for constructible sheaves on the real line, presented as
//! graded barcodes.
//!
//! Values are exact: endpoints are `q·π + s` with rational `q`, `s`, and
//! all case splits are decided by exact comparison. The crate is `no_std`
//! and needs only `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod barcode;
pub mod error;
pub mod field;
pub mod interval;
pub mod metrics;
pub mod microlocal;
pub mod morse;
pub mod ops;
pub mod strat;
pub mod symplectic;
pub mod value;

pub use barcode::{canonicalize, Convention, GradedBar, GradedBarcode, HomSpace};
pub use error::{Error, Result};
pub use field::Field;
pub use interval::{Endpoint, Interval};
pub use value::{Ext, PiRational};
