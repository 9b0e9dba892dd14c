//! Lower-star persistence by boundary-matrix reduction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::barcode::{GradedBar, GradedBarcode};
use crate::error::Result;
use crate::field::Field;
use crate::interval::Interval;
use crate::morse::complex::{faces, SimplicialComplex, VertexFunction};
use crate::value::{Ext, PiRational};

/// Simplices in lower-star order: by the rank of their top vertex, then
/// dimension, then the ranks of the remaining vertices. Vertex ranks
/// order by value with ties broken by index.
fn lower_star_order<'a>(k: &'a SimplicialComplex, f: &VertexFunction) -> Vec<&'a Vec<usize>> {
    let mut by_value: Vec<usize> = (0..k.n_vertices()).collect();
    by_value.sort_by(|&a, &b| f.values[a].cmp(&f.values[b]).then(a.cmp(&b)));
    let mut rank = alloc::vec![0usize; k.n_vertices()];
    for (r, &v) in by_value.iter().enumerate() {
        rank[v] = r;
    }
    let mut order: Vec<&Vec<usize>> = k.simplices().iter().collect();
    order.sort_by_cached_key(|s| {
        let mut ranks: Vec<usize> = s.iter().map(|&v| rank[v]).collect();
        ranks.sort_unstable_by_key(|&r| Reverse(r));
        (ranks[0], s.len(), ranks)
    });
    order
}

type Column = Vec<(usize, u64)>;

/// `col ← col − c·other` on sorted sparse columns.
fn axpy(field: Field, col: &Column, c: u64, other: &Column) -> Column {
    let mut out = Vec::with_capacity(col.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < other.len() {
        let take_left = j == other.len() || (i < col.len() && col[i].0 < other[j].0);
        let take_right = i == col.len() || (j < other.len() && other[j].0 < col[i].0);
        if take_left {
            out.push(col[i]);
            i += 1;
        } else if take_right {
            out.push((other[j].0, field.neg(field.mul(c, other[j].1))));
            j += 1;
        } else {
            let v = field.sub(col[i].1, field.mul(c, other[j].1));
            if v != 0 {
                out.push((col[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Persistence pairs `(birth, death)` and unpaired births, as positions in
/// the filtration.
pub(crate) fn reduce(field: Field, boundary: Vec<Column>) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = boundary.len();
    let mut cols: Vec<Column> = boundary;
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs = Vec::new();
    for j in 0..n {
        while let Some(&(low, c)) = cols[j].last() {
            let Some(&k) = owner.get(&low) else { break };
            let ck = cols[k].last().unwrap().1;
            let factor = field.mul(c, field.inv(ck));
            cols[j] = axpy(field, &cols[j], factor, &cols[k]);
        }
        if let Some(&(low, _)) = cols[j].last() {
            owner.insert(low, j);
            pairs.push((low, j));
        }
    }
    let mut paired = alloc::vec![false; n];
    for &(b, d) in &pairs {
        paired[b] = true;
        paired[d] = true;
    }
    let essential = (0..n).filter(|&j| !paired[j]).collect();
    (pairs, essential)
}

/// Barcode of the sublevel filtration `{f < t}` in homological degrees,
/// bars of type `[a,b)`; essential classes give `[a,∞)`.
pub fn sublevel_barcode(
    k: &SimplicialComplex,
    f: &VertexFunction,
    field: Field,
) -> Result<GradedBarcode> {
    f.check(k)?;
    let order = lower_star_order(k, f);
    let position: BTreeMap<&[usize], usize> =
        order.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let value = |s: &[usize]| -> PiRational {
        s.iter().map(|&v| f.values[v].clone()).max().unwrap()
    };
    let boundary: Vec<Column> = order
        .iter()
        .map(|s| {
            let mut col: Column = faces(s)
                .iter()
                .enumerate()
                .map(|(i, face)| (position[face.as_slice()], if i % 2 == 0 { 1 } else { field.neg(1) }))
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    let (pairs, essential) = reduce(field, boundary);
    let mut bars = Vec::new();
    for (b, d) in pairs {
        let (vb, vd) = (value(order[b]), value(order[d]));
        if vb < vd {
            let i = Interval::closed_open(vb, vd).expect("positive length");
            bars.push(GradedBar::new(i, order[b].len() as i64 - 1));
        }
    }
    for e in essential {
        bars.push(GradedBar::new(Interval::ray_from(value(order[e])), order[e].len() as i64 - 1));
    }
    Ok(GradedBarcode::new(bars))
}

/// Barcode of the superlevel filtration `{h ≥ t}`, whose maps run from
/// larger to smaller `t`, completed to bars of type `[a,b)`: the sublevel
/// bars of `−h` reflected through zero.
pub fn superlevel_barcode(
    k: &SimplicialComplex,
    h: &VertexFunction,
    field: Field,
) -> Result<GradedBarcode> {
    let sub = sublevel_barcode(k, &h.negate(), field)?;
    Ok(sub.map_intervals(|i| {
        Interval::half_open(i.hi_value().neg(), i.lo_value().neg()).expect("nonempty")
    }))
}

/// Half the longest finite bar: the best `C⁰` distance from `f` to a
/// function with two critical points, read off its sublevel barcode.
pub fn c0_two_critical_bound(b: &GradedBarcode) -> PiRational {
    b.bars()
        .iter()
        .filter_map(|bar| match bar.interval.length() {
            Ext::Fin(l) => Some(l),
            _ => None,
        })
        .max()
        .unwrap_or_else(PiRational::zero)
        .scale(&crate::value::rat(1, 2))
}
