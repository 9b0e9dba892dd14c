//! Regions bounded by two fronts over a sampled base, `F|_x = k_{[−t₋(x), t₊(x))}`.

use alloc::format;
use alloc::vec::Vec;

use crate::barcode::{GradedBar, GradedBarcode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::interval::Interval;
use crate::morse::complex::{SimplicialComplex, VertexFunction};
use crate::morse::persistence::superlevel_barcode;
use crate::value::{Ext, PiRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontRegion {
    pub xs: Vec<PiRational>,
    pub t_minus: Vec<PiRational>,
    pub t_plus: Vec<PiRational>,
}

impl FrontRegion {
    pub fn new(xs: Vec<PiRational>, t_minus: Vec<PiRational>, t_plus: Vec<PiRational>) -> Result<Self> {
        if xs.len() != t_minus.len() || xs.len() != t_plus.len() {
            return Err(Error::Precondition("front samples have different lengths".into()));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("sample grid must increase".into()));
        }
        let zero = PiRational::zero();
        if t_minus.iter().chain(&t_plus).any(|t| *t < zero) {
            return Err(Error::Precondition("front heights must be non-negative".into()));
        }
        Ok(Self { xs, t_minus, t_plus })
    }

    /// Fiber widths `t₋ + t₊`.
    pub fn widths(&self) -> Vec<PiRational> {
        self.t_minus
            .iter()
            .zip(&self.t_plus)
            .map(|(a, b)| a.clone() + b.clone())
            .collect()
    }

    /// Samples with a nonempty fiber.
    pub fn support(&self) -> Vec<usize> {
        let zero = PiRational::zero();
        self.widths()
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > zero)
            .map(|(i, _)| i)
            .collect()
    }
}

/// `Rπ_* Hom*(F, F)` for a front region: with `g = t₋ + t₊`, each bar
/// `[l,u)` of the superlevel barcode of `g` (cut to `t ≥ 0`) contributes
/// `k_{[l,u)}` in degree −1 and `k_{[−u,−l)}` in degree 0.
pub fn front_hom_star(front: &FrontRegion) -> Result<GradedBarcode> {
    if front.support().is_empty() {
        return Err(Error::EmptySupport);
    }
    // path graph on the samples, padded by a zero-width sample at each end
    let mut values = Vec::with_capacity(front.xs.len() + 2);
    values.push(PiRational::zero());
    values.extend(front.widths());
    values.push(PiRational::zero());
    let n = values.len();
    let edges: Vec<Vec<usize>> = (0..n - 1).map(|i| alloc::vec![i, i + 1]).collect();
    let path = SimplicialComplex::from_maximal(n, &edges)
        .map_err(|e| Error::Precondition(format!("{e}")))?;
    let sup = superlevel_barcode(&path, &VertexFunction::new(values), Field::default())?;
    let zero = Ext::Fin(PiRational::zero());
    let mut bars = Vec::new();
    for bar in sup.bars().iter().filter(|b| b.degree == 0) {
        let lo = core::cmp::max(bar.interval.lo_value().clone(), zero.clone());
        let hi = bar.interval.hi_value().clone();
        if let Some(up) = Interval::half_open(lo.clone(), hi.clone()) {
            let down = Interval::half_open(hi.neg(), lo.neg()).expect("nonempty");
            bars.push(GradedBar::with_multiplicity(up, -1, bar.multiplicity));
            bars.push(GradedBar::with_multiplicity(down, 0, bar.multiplicity));
        }
    }
    Ok(GradedBarcode::new(bars))
}

/// `max (t₋ + t₊)`, zero for an empty front.
pub fn front_capacity(front: &FrontRegion) -> PiRational {
    front.widths().into_iter().max().unwrap_or_else(PiRational::zero).max(PiRational::zero())
}
