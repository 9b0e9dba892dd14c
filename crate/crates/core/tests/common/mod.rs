#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use tamarkin_core::{GradedBar, GradedBarcode, Interval};

pub fn co(a: i64, b: i64) -> Interval {
    Interval::closed_open(a, b).unwrap()
}

/// A bar `[a,b)` with integer ends in `[−20, 20]`, length at most 20. With
/// `infinite` set, one end in four is replaced by an infinite one.
pub fn random_bar(rng: &mut StdRng, infinite: bool) -> Interval {
    let a = rng.gen_range(-20..20);
    let b = (a + rng.gen_range(1..=20)).min(20);
    match if infinite { rng.gen_range(0..8) } else { 7 } {
        0 => Interval::ray_from(a),
        1 => Interval::ray_below(b),
        _ => co(a, b),
    }
}

/// A bar with a finite left end.
pub fn random_anchored_bar(rng: &mut StdRng) -> Interval {
    let a = rng.gen_range(-20..20);
    if rng.gen_range(0..4) == 0 {
        Interval::ray_from(a)
    } else {
        co(a, (a + rng.gen_range(1..=20)).min(20))
    }
}

pub fn random_barcode(rng: &mut StdRng, max_bars: usize, degrees: i64, infinite: bool) -> GradedBarcode {
    let n = rng.gen_range(0..=max_bars);
    GradedBarcode::new((0..n).map(|_| GradedBar::new(random_bar(rng, infinite), rng.gen_range(0..degrees))))
}

/// Small bars for the exhaustive searches: ends in `[0, 8]`.
pub fn small_barcode(rng: &mut StdRng, max_bars: usize, infinite: bool) -> GradedBarcode {
    let n = rng.gen_range(0..=max_bars);
    GradedBarcode::new((0..n).map(|_| {
        let a = rng.gen_range(0..8);
        let i = if infinite && rng.gen_range(0..5) == 0 {
            Interval::ray_from(a)
        } else {
            co(a, rng.gen_range(a + 1..=8))
        };
        GradedBar::new(i, 0)
    }))
}

/// One to `max_bars` bars with ends in `[−6, 6]`, in degrees 0 and 1, so
/// that random triples interact often.
pub fn dense_barcode(rng: &mut StdRng, max_bars: usize) -> GradedBarcode {
    let n = rng.gen_range(1..=max_bars);
    GradedBarcode::new((0..n).map(|_| {
        let a = rng.gen_range(-6..6);
        let i = match rng.gen_range(0..6) {
            0 => Interval::ray_from(a),
            1 => Interval::ray_below(a),
            _ => co(a, rng.gen_range(a + 1..=6)),
        };
        GradedBar::new(i, rng.gen_range(0..2))
    }))
}
