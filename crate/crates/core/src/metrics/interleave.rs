//! Exhaustive search for δ-interleavings of small interval-decomposable
//! persistence modules over `F_2`.

use alloc::format;
use alloc::vec::Vec;

use crate::barcode::GradedBarcode;
use crate::error::{Error, Result};
use crate::value::{Ext, PiRational};

/// Largest number of bars per side and degree accepted by
/// [`brute_interleave`].
pub const MAX_BARS: usize = 4;

/// `Hom(I_{[a,b)}, I_{[c,d)}) ≠ 0` iff `c ≤ a < d ≤ b`.
fn hom_nonzero(i: &(Ext, Ext), j: &(Ext, Ext)) -> bool {
    let ((a, b), (c, d)) = (i, j);
    c <= a && a < d && d <= b
}

fn shifted(i: &(Ext, Ext), by: &PiRational) -> (Ext, Ext) {
    let neg = -by.clone();
    (i.0.shift(&neg), i.1.shift(&neg))
}

/// Solve `A x = b` over `F_2`, rows given as `(mask, rhs)`.
fn solvable(mut rows: Vec<(u32, bool)>) -> bool {
    let mut r = 0;
    for bit in 0..32 {
        let Some(p) = (r..rows.len()).find(|&k| rows[k].0 >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row.0 >> bit & 1 == 1 {
                row.0 ^= pivot.0;
                row.1 ^= pivot.1;
            }
        }
        r += 1;
    }
    rows[r..].iter().all(|&(_, rhs)| !rhs)
}

fn interleaved_one_degree(vs: &[(Ext, Ext)], ws: &[(Ext, Ext)], delta: &PiRational) -> bool {
    let (n, m) = (vs.len(), ws.len());
    let two = delta.clone() + delta.clone();
    // Allowed entries of F: V_i → W_j[δ] and G: W_j → V_k[δ].
    let f_slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| hom_nonzero(&vs[i], &shifted(&ws[j], delta)))
        .collect();
    let g_slots: Vec<(usize, usize)> = (0..m)
        .flat_map(|j| (0..n).map(move |k| (j, k)))
        .filter(|&(j, k)| hom_nonzero(&ws[j], &shifted(&vs[k], delta)))
        .collect();
    // The (k,i) entries of G∘F that are constrained: those where
    // Hom(V_i, V_k[2δ]) ≠ 0. Likewise for F∘G on W.
    let v_checks: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .filter(|&(i, k)| hom_nonzero(&vs[i], &shifted(&vs[k], &two)))
        .collect();
    let w_checks: Vec<(usize, usize)> = (0..m)
        .flat_map(|j| (0..m).map(move |l| (j, l)))
        .filter(|&(j, l)| hom_nonzero(&ws[j], &shifted(&ws[l], &two)))
        .collect();
    for f_bits in 0u32..(1 << f_slots.len()) {
        let f = |i: usize, j: usize| -> bool {
            f_slots
                .iter()
                .position(|&s| s == (i, j))
                .is_some_and(|p| f_bits >> p & 1 == 1)
        };
        let mut rows = Vec::new();
        // (G∘F)_{ki} = Σ_j G_{kj} F_{ji}
        for &(i, k) in &v_checks {
            let mut mask = 0u32;
            for (p, &(j, kk)) in g_slots.iter().enumerate() {
                if kk == k && f(i, j) {
                    mask |= 1 << p;
                }
            }
            rows.push((mask, i == k));
        }
        // (F∘G)_{lj} = Σ_k F_{lk} G_{kj}
        for &(j, l) in &w_checks {
            let mut mask = 0u32;
            for (p, &(jj, k)) in g_slots.iter().enumerate() {
                if jj == j && f(k, l) {
                    mask |= 1 << p;
                }
            }
            rows.push((mask, j == l));
        }
        if solvable(rows) {
            return true;
        }
    }
    false
}

fn ends(b: &GradedBarcode, degree: i64) -> Vec<(Ext, Ext)> {
    b.expanded()
        .filter(|&(_, d)| d == degree)
        .map(|(i, _)| (i.lo_value().clone(), i.hi_value().clone()))
        .collect()
}

/// Whether the persistence modules with barcodes `b1`, `b2` admit a
/// δ-interleaving `F: V → W[δ]`, `G: W → V[δ]` with `G∘F` and `F∘G` the
/// canonical `2δ`-shift maps. Searches every `F` and solves for `G`.
pub fn brute_interleave(b1: &GradedBarcode, b2: &GradedBarcode, delta: &PiRational) -> Result<bool> {
    for bar in b1.bars().iter().chain(b2.bars()) {
        if !bar.interval.is_left_closed_type() {
            return Err(Error::NotTamarkin(format!("bar {}", bar.interval)));
        }
    }
    let mut degrees = b1.degrees();
    degrees.extend(b2.degrees());
    degrees.sort_unstable();
    degrees.dedup();
    for &d in &degrees {
        let (vs, ws) = (ends(b1, d), ends(b2, d));
        if vs.len() > MAX_BARS || ws.len() > MAX_BARS {
            return Err(Error::InstanceTooLarge(format!(
                "degree {d}: {} and {} bars, at most {MAX_BARS} supported",
                vs.len(),
                ws.len()
            )));
        }
    }
    Ok(degrees
        .into_iter()
        .all(|d| interleaved_one_degree(&ends(b1, d), &ends(b2, d), delta)))
}
