//! δ-matchings and the bottleneck distance.

use alloc::vec;
use alloc::vec::Vec;

use crate::barcode::GradedBarcode;
use crate::interval::Interval;
use crate::value::{rat, Ext, PiRational};

/// A partial bijection between the bars of two barcodes, indexed by
/// position in [`GradedBarcode::expanded`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub erased_left: Vec<usize>,
    pub erased_right: Vec<usize>,
}

/// `max(|a−c|, |b−d|)` over the finite ends, or `None` when an infinite
/// end faces a finite one.
fn pair_cost(x: &Interval, y: &Interval) -> Option<Ext> {
    let end = |p: &Ext, q: &Ext| -> Option<PiRational> {
        match (p, q) {
            (Ext::Fin(p), Ext::Fin(q)) => Some((p.clone() - q.clone()).abs()),
            (Ext::NegInf, Ext::NegInf) | (Ext::PosInf, Ext::PosInf) => Some(PiRational::zero()),
            _ => None,
        }
    };
    let lo = end(x.lo_value(), y.lo_value())?;
    let hi = end(x.hi_value(), y.hi_value())?;
    Some(Ext::Fin(core::cmp::max(lo, hi)))
}

/// Cost of erasing a bar: half its length.
fn erase_cost(x: &Interval) -> Ext {
    x.length().scale(&rat(1, 2))
}

/// Maximum bipartite matching by augmenting paths. `adj[l]` lists the
/// right vertices adjacent to `l`; returns the partner of each left vertex.
fn max_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(l, adj, &mut seen, &mut owner);
    }
    let mut partner = vec![None; adj.len()];
    for (r, o) in owner.into_iter().enumerate() {
        if let Some(l) = o {
            partner[l] = Some(r);
        }
    }
    partner
}

/// Single-degree feasibility at threshold `delta`; indices are local.
fn match_one_degree(xs: &[&Interval], ys: &[&Interval], delta: &Ext) -> Option<Matching> {
    let (n, m) = (xs.len(), ys.len());
    // Left: xs then a diagonal copy of each y. Right: ys then a diagonal
    // copy of each x.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            if pair_cost(x, y).is_some_and(|c| c <= *delta) {
                adj[i].push(j);
            }
        }
        if erase_cost(x) <= *delta {
            adj[i].push(m + i);
        }
    }
    for (j, y) in ys.iter().enumerate() {
        if erase_cost(y) <= *delta {
            adj[n + j].push(j);
        }
        adj[n + j].extend(m..m + n);
    }
    let partner = max_matching(&adj, n + m);
    if partner.iter().any(Option::is_none) {
        return None;
    }
    let mut out = Matching::default();
    for (i, p) in partner.iter().take(n).enumerate() {
        match p {
            Some(j) if *j < m => out.pairs.push((i, *j)),
            _ => out.erased_left.push(i),
        }
    }
    for (j, p) in partner.iter().skip(n).enumerate() {
        if p.is_some_and(|r| r == j) {
            out.erased_right.push(j);
        }
    }
    Some(out)
}

fn by_degree(b: &GradedBarcode) -> Vec<(i64, Vec<(usize, &Interval)>)> {
    let mut groups: Vec<(i64, Vec<(usize, &Interval)>)> = Vec::new();
    for (k, (i, d)) in b.expanded().enumerate() {
        match groups.last_mut() {
            Some((deg, v)) if *deg == d => v.push((k, i)),
            _ => groups.push((d, vec![(k, i)])),
        }
    }
    groups
}

fn feasible(b1: &GradedBarcode, b2: &GradedBarcode, delta: &Ext) -> Option<Matching> {
    let g1 = by_degree(b1);
    let g2 = by_degree(b2);
    let mut degrees: Vec<i64> = g1.iter().chain(&g2).map(|(d, _)| *d).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let empty = Vec::new();
    let mut out = Matching::default();
    for d in degrees {
        let xs = g1.iter().find(|(e, _)| *e == d).map_or(&empty, |(_, v)| v);
        let ys = g2.iter().find(|(e, _)| *e == d).map_or(&empty, |(_, v)| v);
        let xi: Vec<&Interval> = xs.iter().map(|(_, i)| *i).collect();
        let yi: Vec<&Interval> = ys.iter().map(|(_, i)| *i).collect();
        let m = match_one_degree(&xi, &yi, delta)?;
        out.pairs
            .extend(m.pairs.iter().map(|&(i, j)| (xs[i].0, ys[j].0)));
        out.erased_left.extend(m.erased_left.iter().map(|&i| xs[i].0));
        out.erased_right.extend(m.erased_right.iter().map(|&j| ys[j].0));
    }
    Some(out)
}

/// Whether the barcodes are δ-matched: a partial matching with endpoint
/// displacement at most δ, erasing only bars of length at most 2δ,
/// degree by degree. Returns a witness when they are.
pub fn delta_matched(
    b1: &GradedBarcode,
    b2: &GradedBarcode,
    delta: &PiRational,
) -> (bool, Option<Matching>) {
    let m = feasible(b1, b2, &Ext::Fin(delta.clone()));
    (m.is_some(), m)
}

/// All values at which feasibility can change.
fn candidates(b1: &GradedBarcode, b2: &GradedBarcode) -> Vec<PiRational> {
    let mut out = vec![PiRational::zero()];
    let bars1: Vec<(&Interval, i64)> = b1.expanded().collect();
    let bars2: Vec<(&Interval, i64)> = b2.expanded().collect();
    for (x, _) in bars1.iter().chain(&bars2) {
        if let Ext::Fin(c) = erase_cost(x) {
            out.push(c);
        }
    }
    for (x, dx) in &bars1 {
        for (y, dy) in &bars2 {
            if dx != dy {
                continue;
            }
            for (p, q) in [(x.lo_value(), y.lo_value()), (x.hi_value(), y.hi_value())] {
                if let (Ext::Fin(p), Ext::Fin(q)) = (p, q) {
                    out.push((p.clone() - q.clone()).abs());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Bottleneck distance with a witness matching; infinite when no finite
/// threshold admits a matching.
pub fn bottleneck_with_witness(b1: &GradedBarcode, b2: &GradedBarcode) -> (Ext, Option<Matching>) {
    let cands = candidates(b1, b2);
    let last = Ext::Fin(cands.last().cloned().unwrap_or_else(PiRational::zero));
    if feasible(b1, b2, &last).is_none() {
        return (Ext::PosInf, None);
    }
    // Smallest feasible candidate.
    let (mut lo, mut hi) = (0, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(b1, b2, &Ext::Fin(cands[mid].clone())).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let d = Ext::Fin(cands[lo].clone());
    let witness = feasible(b1, b2, &d);
    (d, witness)
}

pub fn bottleneck(b1: &GradedBarcode, b2: &GradedBarcode) -> Ext {
    bottleneck_with_witness(b1, b2).0
}

/// The interleaving distance, which equals the bottleneck distance.
pub fn interleaving_distance(b1: &GradedBarcode, b2: &GradedBarcode) -> Ext {
    bottleneck(b1, b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(i: Interval) -> GradedBarcode {
        GradedBarcode::single(i)
    }

    #[test]
    fn delta_matching_examples() {
        let a = one(Interval::closed_open(0, 4).unwrap());
        let b = one(Interval::closed_open(rat(1, 2), rat(21, 5)).unwrap());
        let (ok, w) = delta_matched(&a, &b, &rat(1, 2).into());
        assert!(ok);
        assert_eq!(w.unwrap().pairs, [(0, 0)]);
        assert!(delta_matched(&a, &a, &PiRational::zero()).0);
        let c = one(Interval::closed_open(0, 1).unwrap());
        let e = GradedBarcode::empty();
        assert!(delta_matched(&c, &e, &rat(1, 2).into()).0);
        assert!(!delta_matched(&c, &e, &rat(1, 4).into()).0);
    }

    #[test]
    fn bottleneck_examples() {
        let x = one(Interval::open_closed(1, 2).unwrap());
        let y = one(Interval::open_closed(1, 3).unwrap());
        assert_eq!(bottleneck(&x, &y), Ext::fin(1));
        assert_eq!(bottleneck(&x, &x), Ext::fin(0));
        let inf = one(Interval::ray_from(0));
        let fin = one(Interval::closed_open(0, 1).unwrap());
        assert_eq!(bottleneck(&inf, &fin), Ext::PosInf);
        // degrees are matched separately
        let shifted = fin.shift_deg(1);
        assert_eq!(bottleneck(&fin, &shifted), Ext::Fin(rat(1, 2).into()));
    }
}
