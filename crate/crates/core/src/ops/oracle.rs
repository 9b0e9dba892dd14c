//! Fiberwise stalk oracle for convolution-type operations.
//!
//! The stalk at `t` of a convolution of interval sheaves is the cohomology
//! of the line with coefficients in `k_C`, where `C` is the cut of the
//! product `I × J` by the antidiagonal `t₁ + t₂ = t`.

use alloc::format;

use crate::barcode::{GradedBarcode, HomSpace};
use crate::error::{Error, Result};
use crate::interval::{Endpoint, Interval};
use crate::value::PiRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutMode {
    /// `H*(ℝ; k_C)`
    Ordinary,
    /// `H*_c(ℝ; k_C)`
    CompactSupport,
}

/// The set `C ⊆ ℝ` cut out in one fiber, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCut {
    pub interval: Option<Interval>,
    pub mode: CutMode,
}

impl FiberCut {
    /// Cohomology of `k_C`. A compact `C` gives `k`; for compact supports
    /// an open `C` gives `k[−1]`; for ordinary cohomology a bounded open
    /// `C` gives `k[−1]` and a closed `C` gives `k`; everything else
    /// vanishes.
    pub fn cohomology(&self) -> HomSpace {
        let Some(c) = &self.interval else {
            return HomSpace::zero();
        };
        let closed_end = |e: &Endpoint| e.is_closed();
        let closed_or_inf = |e: &Endpoint| e.is_closed() || !e.is_finite();
        let open_end = |e: &Endpoint| !e.is_closed();
        match self.mode {
            CutMode::CompactSupport => {
                if closed_end(c.lo()) && closed_end(c.hi()) {
                    HomSpace::k(0)
                } else if open_end(c.lo()) && open_end(c.hi()) {
                    HomSpace::k(1)
                } else {
                    HomSpace::zero()
                }
            }
            CutMode::Ordinary => {
                if closed_or_inf(c.lo()) && closed_or_inf(c.hi()) {
                    HomSpace::k(0)
                } else if c.lo().is_finite()
                    && c.hi().is_finite()
                    && open_end(c.lo())
                    && open_end(c.hi())
                {
                    HomSpace::k(1)
                } else {
                    HomSpace::zero()
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleKind {
    Proper,
    NonProper,
    /// `Hom*(k_I, k_J)`: the first factor is replaced by its adjoint.
    HomStar,
}

/// The cut `I ∩ (t − J)` with the cohomology mode of `kind`.
pub fn fiber_cut(kind: OracleKind, i: &Interval, j: &Interval, t: &PiRational) -> FiberCut {
    let shifted = j.reflect().shift(t);
    FiberCut {
        interval: i.intersect(&shifted),
        mode: match kind {
            OracleKind::Proper => CutMode::CompactSupport,
            _ => CutMode::Ordinary,
        },
    }
}

/// Stalk at `t` of `k_I ∗ k_J`, `k_I ∗_np k_J` or `Hom*(k_I, k_J)`. The
/// non-proper kinds are exact away from the endpoint events.
pub fn stalk_oracle(
    kind: OracleKind,
    i: &Interval,
    j: &Interval,
    t: &PiRational,
) -> Result<HomSpace> {
    match kind {
        OracleKind::HomStar => {
            if !i.is_left_closed_type() {
                return Err(Error::NotTamarkin(format!("first factor {i}")));
            }
            // adjoint: [a,b) in degree 0 becomes [−b,−a) in degree −1
            let adj = Interval::half_open(i.hi_value().neg(), i.lo_value().neg())
                .expect("nonempty");
            Ok(fiber_cut(OracleKind::NonProper, &adj, j, t)
                .cohomology()
                .shift(-1))
        }
        _ => Ok(fiber_cut(kind, i, j, t).cohomology()),
    }
}

/// [`stalk_oracle`] summed over all bar pairs of two barcodes.
pub fn stalk_oracle_barcodes(
    kind: OracleKind,
    f: &GradedBarcode,
    g: &GradedBarcode,
    t: &PiRational,
) -> Result<HomSpace> {
    let mut out = HomSpace::zero();
    for x in f.bars() {
        for y in g.bars() {
            let h = stalk_oracle(kind, &x.interval, &y.interval, t)?;
            let shift = match kind {
                OracleKind::HomStar => y.degree - x.degree,
                _ => x.degree + y.degree,
            };
            for (d, n) in h.iter() {
                out.add(d + shift, n * x.multiplicity * y.multiplicity);
            }
        }
    }
    Ok(out)
}
