//! Closed-form tables against the cellular and fiberwise oracles.

mod common;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tamarkin_core::ops::{
    convolve, convolve_np, hom_star, rhom_sheaf, rhom_total, stalk_oracle_barcodes, OracleKind,
};
use tamarkin_core::strat::{global_sections_oracle, rhom_oracle, rhom_sheaf_oracle};
use tamarkin_core::value::rat;
use tamarkin_core::{Field, GradedBarcode, PiRational};

fn sample_ts(f: &GradedBarcode, rng: &mut StdRng, n: usize) -> Vec<PiRational> {
    let spec = f.spec();
    (0..n)
        .map(|_| {
            let t = PiRational::from(rat(rng.gen_range(-1000..1000), 16) + rat(1, 32));
            debug_assert!(!spec.contains(&t));
            t
        })
        .collect()
}

#[test]
fn rhom_total_matches_cellular_oracle() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..500 {
        let f = GradedBarcode::single(random_bar(&mut rng, true)).shift_deg(rng.gen_range(0..2));
        let g = GradedBarcode::single(random_bar(&mut rng, true)).shift_deg(rng.gen_range(0..2));
        assert_eq!(
            rhom_total(&f, &g).unwrap(),
            rhom_oracle(&f, &g, Field::default()),
            "{f} {g}"
        );
    }
}

#[test]
fn rhom_sheaf_matches_cellular_oracle() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..500 {
        let f = GradedBarcode::single(random_anchored_bar(&mut rng));
        let g = GradedBarcode::single(random_anchored_bar(&mut rng)).shift_deg(rng.gen_range(0..2));
        let h = rhom_sheaf(&f, &g).unwrap();
        for (t, stalk) in rhom_sheaf_oracle(&f, &g, Field::default()) {
            assert_eq!(h.stalk(&t), stalk, "{f} {g} at {t}: {h}");
        }
        assert_eq!(
            global_sections_oracle(&h, Field::default()),
            rhom_total(&f, &g).unwrap(),
            "{f} {g}"
        );
    }
}

#[test]
fn convolution_tables_match_fiber_oracle() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..200 {
        let f = random_barcode(&mut rng, 2, 2, true);
        let g = random_barcode(&mut rng, 2, 2, true);
        let p = convolve(&f, &g).unwrap();
        let np = convolve_np(&f, &g).unwrap();
        let h = hom_star(&f, &g).unwrap();
        for t in sample_ts(&p, &mut rng, 50) {
            assert_eq!(p.stalk(&t), stalk_oracle_barcodes(OracleKind::Proper, &f, &g, &t).unwrap(), "{f} * {g} at {t}");
            assert_eq!(np.stalk(&t), stalk_oracle_barcodes(OracleKind::NonProper, &f, &g, &t).unwrap(), "{f} *np {g} at {t}");
            assert_eq!(h.stalk(&t), stalk_oracle_barcodes(OracleKind::HomStar, &f, &g, &t).unwrap(), "Hom*({f}, {g}) at {t}");
        }
    }
}
