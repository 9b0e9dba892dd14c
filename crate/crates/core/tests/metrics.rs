//! Distances: isometry against the exhaustive search, metric axioms and
//! the torsion bound.

mod common;

use common::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tamarkin_core::metrics::{bottleneck, brute_interleave, delta_matched};
use tamarkin_core::value::rat;
use tamarkin_core::{Ext, GradedBarcode, PiRational};

fn two_degrees(rng: &mut StdRng) -> GradedBarcode {
    let a = small_barcode(rng, 4, true);
    let b = small_barcode(rng, 3, true).shift_deg(1);
    a.direct_sum(&b)
}

#[test]
fn bottleneck_agrees_with_exhaustive_interleaving() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..100 {
        let (x, y) = (two_degrees(&mut rng), two_degrees(&mut rng));
        let d = bottleneck(&x, &y);
        // every half-integer threshold in range, plus the distance itself
        for k in 0..=18 {
            let delta = PiRational::from(rat(k, 2));
            assert_eq!(
                brute_interleave(&x, &y, &delta).unwrap(),
                delta_matched(&x, &y, &delta).0,
                "{x} vs {y} at {delta}"
            );
        }
        if let Ext::Fin(d) = d {
            assert!(brute_interleave(&x, &y, &d).unwrap());
            if !d.is_zero() {
                let below = d - PiRational::from(rat(1, 1000));
                assert!(!brute_interleave(&x, &y, &below).unwrap(), "{x} vs {y}");
            }
        }
    }
}

#[test]
fn metric_axioms() {
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..200 {
        let x = random_barcode(&mut rng, 5, 2, true);
        let y = random_barcode(&mut rng, 5, 2, true);
        let z = random_barcode(&mut rng, 5, 2, true);
        assert_eq!(bottleneck(&x, &y), bottleneck(&y, &x));
        assert_eq!(bottleneck(&x, &x), Ext::fin(0));
        let (xy, yz, xz) = (bottleneck(&x, &y), bottleneck(&y, &z), bottleneck(&x, &z));
        assert!(xz <= xy.add_high(&yz), "{x} {y} {z}");
    }
}

#[test]
fn torsion_is_twice_distance_to_zero() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..100 {
        let f = random_barcode(&mut rng, 6, 2, false);
        let t = tamarkin_core::ops::torsion(&f);
        let d = bottleneck(&f, &GradedBarcode::empty());
        assert_eq!(t, d.scale(&rat(2, 1)), "{f}");
    }
}
