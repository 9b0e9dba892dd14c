//! Both barcode routes, reduction correctness and stability.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tamarkin_core::field::{Field, Matrix};
use tamarkin_core::metrics::interleaving_distance;
use tamarkin_core::morse::complex::{cycle, torus};
use tamarkin_core::morse::{
    relative_cohomology, sheaf_route_barcode, sublevel_barcode, superlevel_barcode,
    SimplicialComplex, VertexFunction,
};
use tamarkin_core::value::rat;
use tamarkin_core::{Ext, HomSpace, PiRational};

fn random_values(rng: &mut StdRng, n: usize, range: i64) -> VertexFunction {
    VertexFunction::new((0..n).map(|_| rng.gen_range(-range..=range).into()).collect())
}

#[test]
fn routes_agree_on_circle_and_torus() {
    let mut rng = StdRng::seed_from_u64(31);
    for p in [2, 3] {
        let f = Field::new(p).unwrap();
        let circle = cycle(12);
        for _ in 0..50 {
            let h = random_values(&mut rng, 12, 10);
            assert_eq!(
                sheaf_route_barcode(&circle, &h, f).unwrap(),
                superlevel_barcode(&circle, &h, f).unwrap()
            );
        }
        let t = torus(4);
        for _ in 0..5 {
            let h = random_values(&mut rng, 16, 6);
            assert_eq!(
                sheaf_route_barcode(&t, &h, f).unwrap(),
                superlevel_barcode(&t, &h, f).unwrap()
            );
        }
    }
}

/// Betti numbers of the subcomplex `{f < t}` by ranks of boundary
/// matrices, independent of the reduction.
fn sublevel_betti(k: &SimplicialComplex, f: &VertexFunction, t: &PiRational, field: Field) -> HomSpace {
    let inside = |s: &Vec<usize>| s.iter().all(|&v| f.values[v] < *t);
    let by_dim: Vec<Vec<&Vec<usize>>> =
        (0..=2).map(|q| k.of_dim(q).filter(|s| inside(s)).collect()).collect();
    let boundary_rank = |q: usize| -> usize {
        if q == 0 || q > 2 || by_dim[q].is_empty() {
            return 0;
        }
        let m: Matrix = by_dim[q - 1]
            .iter()
            .map(|row| {
                by_dim[q]
                    .iter()
                    .map(|s| {
                        let pos = s.iter().filter(|v| !row.contains(v)).count() == 1
                            && row.iter().all(|v| s.contains(v));
                        if !pos {
                            return 0;
                        }
                        let i = s.iter().position(|v| !row.contains(v)).unwrap();
                        if i % 2 == 0 { 1 } else { field.reduce(-1) }
                    })
                    .collect()
            })
            .collect();
        field.rank(&m)
    };
    HomSpace::from_pairs((0..=2).map(|q| {
        let z = by_dim[q].len() - boundary_rank(q);
        (q as i64, (z - boundary_rank(q + 1)) as u64)
    }))
}

#[test]
fn bar_counts_match_betti_numbers() {
    let mut rng = StdRng::seed_from_u64(32);
    let f = Field::new(3).unwrap();
    for round in 0..50 {
        let k = if round % 2 == 0 { cycle(12) } else { torus(4) };
        let h = random_values(&mut rng, k.n_vertices(), 8);
        let b = sublevel_barcode(&k, &h, f).unwrap();
        for t in -9..=9 {
            let t = PiRational::from(rat(2 * t + 1, 2));
            assert_eq!(b.stalk(&t), sublevel_betti(&k, &h, &t, f), "round {round} t {t}");
        }
    }
}

#[test]
fn sublevel_stability() {
    let mut rng = StdRng::seed_from_u64(33);
    let k = torus(4);
    for _ in 0..100 {
        let f = random_values(&mut rng, 16, 10);
        let g = VertexFunction::new(
            f.values.iter().map(|v| v.clone() + rng.gen_range(-3..=3).into()).collect(),
        );
        let sup = f
            .values
            .iter()
            .zip(&g.values)
            .map(|(a, b)| (a.clone() - b.clone()).abs())
            .max()
            .unwrap();
        let d = interleaving_distance(
            &sublevel_barcode(&k, &f, Field::default()).unwrap(),
            &sublevel_barcode(&k, &g, Field::default()).unwrap(),
        );
        assert!(d <= Ext::Fin(sup));
    }
}

#[test]
fn constant_function_gives_total_betti_many_bars() {
    let f = Field::default();
    let zero = |n| VertexFunction::new(vec![PiRational::zero(); n]);
    assert_eq!(sheaf_route_barcode(&cycle(12), &zero(12), f).unwrap().len(), 2);
    assert_eq!(sheaf_route_barcode(&torus(4), &zero(16), f).unwrap().len(), 4);
    assert_eq!(
        relative_cohomology(&torus(4), &zero(16), &PiRational::from(-1), f).unwrap(),
        HomSpace::from_pairs([(0, 1), (1, 2), (2, 1)])
    );
}
