//! Convolution, non-proper convolution, the adjoint and the internal hom.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::{max, min};

use crate::barcode::{GradedBar, GradedBarcode};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::value::Ext;

/// Proper convolution of two bars `[a,b)`, `[c,d)` (degree-0 factors).
///
/// For finite ends this is `k_{[a+c, min(a+d,b+c))} ⊕ k_{[max(a+d,b+c), b+d)}[−1]`;
/// infinite ends are handled by extended arithmetic, and the degree-0 part
/// only exists when both left ends are finite.
pub fn convolve_pair(i: &Interval, j: &Interval) -> Vec<(Interval, i64)> {
    let (a, b, c, d) = (i.lo_value(), i.hi_value(), j.lo_value(), j.hi_value());
    let mut out = Vec::with_capacity(2);
    if a.is_finite() && c.is_finite() {
        let hi = min(a.add_high(d), b.add_high(c));
        if let Some(bar) = Interval::half_open(a.add_low(c), hi) {
            out.push((bar, 0));
        }
    }
    let lo = max(a.add_low(d), b.add_low(c));
    if let Some(bar) = Interval::half_open(lo, b.add_high(d)) {
        out.push((bar, 1));
    }
    out
}

/// Non-proper convolution of two bars of type `[a,b)`.
pub fn convolve_np_pair(i: &Interval, j: &Interval) -> Vec<(Interval, i64)> {
    let (a, b, c, d) = (i.lo_value(), i.hi_value(), j.lo_value(), j.hi_value());
    let mut out = Vec::with_capacity(2);
    let hi = min(a.add_high(d), b.add_high(c));
    if let Some(bar) = Interval::half_open(a.add_low(c), hi) {
        out.push((bar, 0));
    }
    if b.is_finite() && d.is_finite() {
        let lo = max(a.add_low(d), b.add_low(c));
        if let Some(bar) = Interval::half_open(lo, b.add_high(d)) {
            out.push((bar, 1));
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Kind {
    Proper,
    NonProper,
}

fn bilinear(f: &GradedBarcode, g: &GradedBarcode, kind: Kind) -> Result<GradedBarcode> {
    for bar in f.bars().iter().chain(g.bars()) {
        let i = &bar.interval;
        if !(i.is_left_closed_type() || i.is_singleton()) {
            let msg = format!("bar {} in degree {}", i, bar.degree);
            return Err(match kind {
                Kind::Proper => Error::NotTamarkin(msg),
                Kind::NonProper => Error::UnsupportedPair(msg),
            });
        }
    }
    let mut out = Vec::new();
    for x in f.bars() {
        for y in g.bars() {
            let mult = x.multiplicity * y.multiplicity;
            let degree = x.degree + y.degree;
            let pieces = match (x.interval.is_singleton(), y.interval.is_singleton()) {
                (true, _) => {
                    let s = x.interval.lo_value().finite().unwrap();
                    alloc::vec![(y.interval.shift(s), 0)]
                }
                (false, true) => {
                    let s = y.interval.lo_value().finite().unwrap();
                    alloc::vec![(x.interval.shift(s), 0)]
                }
                _ => match kind {
                    Kind::Proper => convolve_pair(&x.interval, &y.interval),
                    Kind::NonProper => convolve_np_pair(&x.interval, &y.interval),
                },
            };
            out.extend(
                pieces
                    .into_iter()
                    .map(|(i, d)| GradedBar::with_multiplicity(i, degree + d, mult)),
            );
        }
    }
    Ok(GradedBarcode::new(out))
}

/// `F ∗ G`. Bars must be of type `[a,b)`; singletons `{s}` act as
/// translation by `s`.
pub fn convolve(f: &GradedBarcode, g: &GradedBarcode) -> Result<GradedBarcode> {
    bilinear(f, g, Kind::Proper)
}

/// `F ∗_np G`, the convolution with pushforward instead of proper
/// pushforward.
pub fn convolve_np(f: &GradedBarcode, g: &GradedBarcode) -> Result<GradedBarcode> {
    bilinear(f, g, Kind::NonProper)
}

/// `k_{[a,b)}` in degree `d` goes to `k_{[−b,−a)}` in degree `−d−1`.
pub fn adjoint(f: &GradedBarcode) -> Result<GradedBarcode> {
    f.require_tamarkin()?;
    Ok(GradedBarcode::new(f.bars().iter().map(|bar| {
        let i = &bar.interval;
        let reflected = Interval::half_open(i.hi_value().neg(), i.lo_value().neg())
            .expect("reflection of a nonempty bar");
        GradedBar::with_multiplicity(reflected, -bar.degree - 1, bar.multiplicity)
    })))
}

/// The internal hom `Hom*(F, G) = adjoint(F) ∗_np G`.
pub fn hom_star(f: &GradedBarcode, g: &GradedBarcode) -> Result<GradedBarcode> {
    g.require_tamarkin()?;
    convolve_np(&adjoint(f)?, g)
}

/// `Hom*(k_{[a,b)}, k_{[c,d)})` for finite ends:
/// `k_{[c−b, min(d−b, c−a))}[1] ⊕ k_{[max(d−b, c−a), d−a)}`.
pub fn hom_star_finite_pair(i: &Interval, j: &Interval) -> Vec<(Interval, i64)> {
    let v = |e: &Ext| e.finite().cloned().expect("finite ends");
    let (a, b, c, d) = (v(i.lo_value()), v(i.hi_value()), v(j.lo_value()), v(j.hi_value()));
    let mut out = Vec::new();
    let first_hi = min(d.clone() - b.clone(), c.clone() - a.clone());
    if let Some(bar) = Interval::half_open(Ext::Fin(c.clone() - b.clone()), Ext::Fin(first_hi)) {
        out.push((bar, -1));
    }
    let second_lo = max(d.clone() - b, c - a.clone());
    if let Some(bar) = Interval::half_open(Ext::Fin(second_lo), Ext::Fin(d - a)) {
        out.push((bar, 0));
    }
    out
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
    fn example_pair_and_units() {
        let got = convolve(&one(co(0, 1)), &one(co(0, 2))).unwrap();
        let want = GradedBarcode::from_intervals([(co(0, 1), 0), (co(2, 3), 1)]);
        assert_eq!(got, want);
        let f = one(co(0, 1));
        assert_eq!(convolve(&f, &one(Interval::point(0))).unwrap(), f);
        assert_eq!(convolve(&f, &one(Interval::ray_from(0))).unwrap(), f);
    }

    #[test]
    fn half_lines() {
        let got = convolve(&one(Interval::ray_below(2)), &one(Interval::ray_from(0))).unwrap();
        assert_eq!(got, GradedBarcode::from_intervals([(Interval::ray_from(2), 1)]));
        let np = convolve_np(&one(Interval::ray_below(1)), &one(Interval::ray_from(0))).unwrap();
        assert_eq!(np, one(Interval::ray_below(1)));
        assert!(convolve(&one(Interval::open(0, 1).unwrap()), &f_unit()).is_err());
    }

    fn f_unit() -> GradedBarcode {
        one(Interval::ray_from(0))
    }

    #[test]
    fn adjoint_and_hom() {
        let adj = adjoint(&one(co(0, 2))).unwrap();
        assert_eq!(adj, GradedBarcode::from_intervals([(co(-2, 0), -1)]));
        assert_eq!(adjoint(&adj).unwrap(), one(co(0, 2)));
        assert_eq!(
            adjoint(&f_unit()).unwrap(),
            GradedBarcode::from_intervals([(Interval::ray_below(0), -1)])
        );
        assert_eq!(
            hom_star(&f_unit(), &f_unit()).unwrap(),
            GradedBarcode::from_intervals([(Interval::ray_below(0), -1)])
        );
        assert_eq!(
            hom_star(&one(co(0, 2)), &one(co(0, 2))).unwrap(),
            GradedBarcode::from_intervals([(co(-2, 0), -1), (co(0, 2), 0)])
        );
        assert_eq!(
            hom_star(&one(co(0, 1)), &one(co(0, 3))).unwrap(),
            GradedBarcode::from_intervals([(co(-1, 0), -1), (co(2, 3), 0)])
        );
    }

    #[test]
    fn finite_pair_formula_agrees() {
        for a in -3..3 {
            for b in a + 1..4 {
                for c in -3..3 {
                    for d in c + 1..4 {
                        let closed = GradedBarcode::from_intervals(hom_star_finite_pair(
                            &co(a, b),
                            &co(c, d),
                        ));
                        let via = hom_star(&one(co(a, b)), &one(co(c, d))).unwrap();
                        assert_eq!(closed, via, "[{a},{b}) vs [{c},{d})");
                    }
                }
            }
        }
    }
}
