//! Cones of barcode morphisms and the torsion bound on interleaving.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::barcode::{GradedBar, GradedBarcode};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::metrics::matching::interleaving_distance;
use crate::ops::torsion;
use crate::value::Ext;

/// A morphism `V → W` given by which bar of `W` each bar of `V` maps onto.
/// Indices refer to [`GradedBarcode::expanded`]; unlisted bars map to or
/// receive zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismPlan {
    pub pairs: Vec<(usize, usize)>,
}

impl MorphismPlan {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Self { pairs }
    }

    /// Pairs equal bars in order: the identity of a barcode.
    pub fn identity(b: &GradedBarcode) -> Self {
        Self::new((0..b.len() as usize).map(|k| (k, k)).collect())
    }

    fn validate(&self, v: &[(&Interval, i64)], w: &[(&Interval, i64)]) -> Result<()> {
        let mut used_v = vec![false; v.len()];
        let mut used_w = vec![false; w.len()];
        for &(i, j) in &self.pairs {
            let (Some((x, dx)), Some((y, dy))) = (v.get(i), w.get(j)) else {
                return Err(Error::InvalidPlan(format!("index pair ({i}, {j}) out of range")));
            };
            if core::mem::replace(&mut used_v[i], true) || core::mem::replace(&mut used_w[j], true)
            {
                return Err(Error::InvalidPlan(format!("bar used twice in ({i}, {j})")));
            }
            if dx != dy {
                return Err(Error::InvalidPlan(format!("({i}, {j}) changes degree")));
            }
            let (a, b, c, d) = (x.lo_value(), x.hi_value(), y.lo_value(), y.hi_value());
            if !(x.is_left_closed_type() && y.is_left_closed_type()) {
                return Err(Error::InvalidPlan(format!("({i}, {j}) is not of type [a,b)")));
            }
            if !(c <= a && a <= d && d <= b) {
                return Err(Error::InvalidPlan(format!("no morphism {x} → {y}")));
            }
        }
        Ok(())
    }
}

/// `Cone(f) ≃ coker(f)[−1] ⊕ ker(f)`: a matched `[a,b) → [c,d)` leaves
/// kernel `[d,b)` and cokernel `[c,a)`.
pub fn cone_of_morphism(
    v: &GradedBarcode,
    w: &GradedBarcode,
    plan: &MorphismPlan,
) -> Result<GradedBarcode> {
    let vs: Vec<(&Interval, i64)> = v.expanded().collect();
    let ws: Vec<(&Interval, i64)> = w.expanded().collect();
    plan.validate(&vs, &ws)?;
    let mut out = Vec::new();
    let mut matched_v = vec![false; vs.len()];
    let mut matched_w = vec![false; ws.len()];
    for &(i, j) in &plan.pairs {
        matched_v[i] = true;
        matched_w[j] = true;
        let ((x, deg), (y, _)) = (vs[i], ws[j]);
        if let Some(ker) = Interval::half_open(y.hi_value().clone(), x.hi_value().clone()) {
            out.push(GradedBar::new(ker, deg));
        }
        if let Some(coker) = Interval::half_open(y.lo_value().clone(), x.lo_value().clone()) {
            out.push(GradedBar::new(coker, deg + 1));
        }
    }
    for (k, &(x, d)) in vs.iter().enumerate() {
        if !matched_v[k] {
            out.push(GradedBar::new(x.clone(), d));
        }
    }
    for (k, &(y, d)) in ws.iter().enumerate() {
        if !matched_w[k] {
            out.push(GradedBar::new(y.clone(), d + 1));
        }
    }
    Ok(GradedBarcode::new(out))
}

/// The torsion of the cone bounds the interleaving distance. Returns the
/// bound and whether the distance respects it.
pub fn torsion_bound_check(
    v: &GradedBarcode,
    w: &GradedBarcode,
    plan: &MorphismPlan,
) -> Result<(Ext, bool)> {
    let bound = torsion(&cone_of_morphism(v, w, plan)?);
    let holds = interleaving_distance(v, w) <= bound;
    Ok((bound, holds))
}
