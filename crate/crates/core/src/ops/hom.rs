//! `RHom` and the sheaf-valued `RℋHom` between barcodes.

use alloc::format;
use alloc::vec::Vec;

use crate::barcode::{GradedBar, GradedBarcode, HomSpace};
use crate::error::{Error, Result};
use crate::interval::{Endpoint, Interval};
use crate::value::Ext;

/// `RHom(k_{[a,b)}, k_{[c,d)})`: `k` if `a ≤ c < b ≤ d`, `k[−1]` if
/// `c < a ≤ d < b`, zero otherwise. Infinite ends compare as extended
/// values.
pub fn rhom_pair(i: &Interval, j: &Interval) -> Option<i64> {
    let (a, b, c, d) = (i.lo_value(), i.hi_value(), j.lo_value(), j.hi_value());
    if a <= c && c < b && b <= d {
        Some(0)
    } else if c < a && a <= d && d < b {
        Some(1)
    } else {
        None
    }
}

/// Graded dimensions of `RHom(F, G)`.
pub fn rhom_total(f: &GradedBarcode, g: &GradedBarcode) -> Result<HomSpace> {
    f.require_tamarkin()?;
    g.require_tamarkin()?;
    let mut out = HomSpace::zero();
    for x in f.bars() {
        for y in g.bars() {
            if let Some(shift) = rhom_pair(&x.interval, &y.interval) {
                out.add(y.degree - x.degree + shift, x.multiplicity * y.multiplicity);
            }
        }
    }
    Ok(out)
}

fn closed_closed(lo: Ext, hi: Ext) -> Interval {
    Interval::new(Endpoint::new(lo, true), Endpoint::new(hi, true)).expect("nonempty")
}

/// `RℋHom(k_{[a,b)}, k_{[c,d)})` for a finite left end `a` and finite `c`,
/// as bars with their degree shift.
pub fn rhom_sheaf_pair(i: &Interval, j: &Interval) -> Result<Option<(Interval, i64)>> {
    let (a, b, c, d) = (i.lo_value(), i.hi_value(), j.lo_value(), j.hi_value());
    if !i.is_left_closed_type() || !a.is_finite() {
        return Err(Error::UnsupportedPair(format!("source bar {i}")));
    }
    if !j.is_left_closed_type() || !c.is_finite() {
        return Err(Error::UnsupportedPair(format!("target bar {j}")));
    }
    let ray_target = |c: &Ext| -> Option<(Interval, i64)> {
        if c >= b {
            None
        } else if a <= c {
            Some((closed_closed(c.clone(), b.clone()), 0))
        } else {
            Some((Interval::half_open_right(a.clone(), b.clone())?, 0))
        }
    };
    if d >= b {
        return Ok(ray_target(c));
    }
    // d < b, so d is finite.
    Ok(if a <= c {
        Some((Interval::half_open(c.clone(), d.clone()).expect("c < d"), 0))
    } else if a < d {
        Some((Interval::try_new(Endpoint::new(a.clone(), false), Endpoint::new(d.clone(), false)).expect("a < d"), 0))
    } else if a == d {
        Some((Interval::point(a.finite().unwrap().clone()), 1))
    } else {
        None
    })
}

/// The sheaf `RℋHom(F, G)` as a barcode. Sources must be bars `[a,b)` or
/// `[a,∞)`, targets `[c,d)` or `[c,∞)`.
pub fn rhom_sheaf(f: &GradedBarcode, g: &GradedBarcode) -> Result<GradedBarcode> {
    let mut out = Vec::new();
    for x in f.bars() {
        for y in g.bars() {
            if let Some((i, shift)) = rhom_sheaf_pair(&x.interval, &y.interval)? {
                out.push(GradedBar::with_multiplicity(
                    i,
                    y.degree - x.degree + shift,
                    x.multiplicity * y.multiplicity,
                ));
            }
        }
    }
    Ok(GradedBarcode::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn co(a: i64, b: i64) -> Interval {
        Interval::closed_open(a, b).unwrap()
    }

    fn one(i: Interval) -> GradedBarcode {
        GradedBarcode::single(i)
    }

    #[test]
    fn total_examples() {
        assert_eq!(rhom_total(&one(co(0, 2)), &one(co(1, 3))).unwrap(), HomSpace::k(0));
        assert_eq!(
            rhom_total(&one(Interval::ray_from(0)), &one(Interval::ray_below(0))).unwrap(),
            HomSpace::k(1)
        );
        assert!(rhom_total(&one(co(0, 1)), &one(co(2, 3))).unwrap().is_zero());
    }

    #[test]
    fn sheaf_examples() {
        assert_eq!(
            rhom_sheaf(&one(co(0, 2)), &one(Interval::ray_from(1))).unwrap(),
            one(Interval::closed(1, 2).unwrap())
        );
        assert_eq!(
            rhom_sheaf(&one(co(0, 2)), &one(Interval::ray_from(-1))).unwrap(),
            one(Interval::open_closed(0, 2).unwrap())
        );
        assert_eq!(
            rhom_sheaf(&one(co(1, 3)), &one(co(0, 1))).unwrap(),
            GradedBarcode::from_intervals([(Interval::point(1), 1)])
        );
        assert!(rhom_sheaf(&one(Interval::ray_below(0)), &one(co(0, 1))).is_err());
    }
}
