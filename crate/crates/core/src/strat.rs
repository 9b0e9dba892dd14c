//! Stratified presentations of constructible sheaves on the line.
//!
//! [`StratModel`] is the reduced quiver presentation of a sheaf whose bars
//! are all of type `[a,b)`: stalks on the open strata and the
//! right-to-left transition maps between neighbouring strata. [`Cells`]
//! and [`CellularSheaf`] give the full cellular presentation, used to
//! compute `Hom`/`Ext` and derived sheaf-hom stalks by plain linear
//! algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::barcode::{GradedBar, GradedBarcode, HomSpace};
use crate::error::{Error, Result};
use crate::field::{Field, Matrix};
use crate::interval::Interval;
use crate::value::{Ext, PiRational};

/// Stalks and transition maps of a sheaf on the line stratified by
/// `λ₁ < … < λ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratModel {
    pub field: Field,
    pub critical: Vec<PiRational>,
    /// Stalks on the `k+1` open strata, left to right.
    pub open_dims: Vec<HomSpace>,
    /// Stalks at the `k` critical points.
    pub point_dims: Vec<HomSpace>,
    /// Per degree, `maps[d][i]` sends the stalk on stratum `i+1` to the
    /// stalk on stratum `i`.
    pub maps: BTreeMap<i64, Vec<Matrix>>,
}

pub(crate) fn sample_points(critical: &[PiRational]) -> Vec<PiRational> {
    let k = critical.len();
    if k == 0 {
        return vec![PiRational::zero()];
    }
    let one = PiRational::from_int(1);
    let mut out = Vec::with_capacity(k + 1);
    out.push(critical[0].clone() - one.clone());
    for w in critical.windows(2) {
        out.push(w[0].midpoint(&w[1]));
    }
    out.push(critical[k - 1].clone() + one);
    out
}

impl StratModel {
    /// The quiver presentation of a barcode whose bars are all of type
    /// `[a,b)`. Transition maps are identities on bars alive at both
    /// sample points.
    pub fn from_barcode(b: &GradedBarcode, field: Field) -> Result<Self> {
        b.require_tamarkin()?;
        let critical = b.spec();
        let samples = sample_points(&critical);
        let open_dims: Vec<HomSpace> = samples.iter().map(|s| b.stalk(s)).collect();
        let point_dims: Vec<HomSpace> = critical.iter().map(|c| b.stalk(c)).collect();
        let mut maps = BTreeMap::new();
        for degree in b.degrees() {
            // Bars of this degree, expanded, with their index in each stalk.
            let bars: Vec<&Interval> = b
                .expanded()
                .filter(|&(_, d)| d == degree)
                .map(|(i, _)| i)
                .collect();
            let index_at = |s: &PiRational| -> Vec<Option<usize>> {
                let mut next = 0;
                bars.iter()
                    .map(|i| {
                        i.contains(s).then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            };
            let indices: Vec<Vec<Option<usize>>> = samples.iter().map(index_at).collect();
            let mut ms = Vec::with_capacity(critical.len());
            for i in 0..critical.len() {
                let rows = open_dims[i].get(degree) as usize;
                let cols = open_dims[i + 1].get(degree) as usize;
                let mut m = Field::zeros(rows, cols);
                for bar in 0..bars.len() {
                    if let (Some(r), Some(c)) = (indices[i][bar], indices[i + 1][bar]) {
                        m[r][c] = 1;
                    }
                }
                ms.push(m);
            }
            maps.insert(degree, ms);
        }
        Ok(Self {
            field,
            critical,
            open_dims,
            point_dims,
            maps,
        })
    }

    fn validate(&self) -> Result<()> {
        let k = self.critical.len();
        if self.critical.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedModel("critical values not increasing".into()));
        }
        if self.open_dims.len() != k + 1 || self.point_dims.len() != k {
            return Err(Error::MalformedModel("wrong number of strata".into()));
        }
        for (i, p) in self.point_dims.iter().enumerate() {
            if *p != self.open_dims[i + 1] {
                return Err(Error::MalformedModel(format!(
                    "stalk at critical point {} differs from the stratum to its right",
                    i + 1
                )));
            }
        }
        let mut degrees: Vec<i64> = self
            .open_dims
            .iter()
            .flat_map(|h| h.iter().map(|(d, _)| d))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            if k > 0 && !self.maps.contains_key(&d) {
                return Err(Error::MalformedModel(format!("no maps in degree {d}")));
            }
        }
        for (d, ms) in &self.maps {
            if ms.len() != k {
                return Err(Error::MalformedModel(format!("degree {d}: wrong map count")));
            }
            for (i, m) in ms.iter().enumerate() {
                let rows = self.open_dims[i].get(*d) as usize;
                let cols = self.open_dims[i + 1].get(*d) as usize;
                if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                    return Err(Error::MalformedModel(format!(
                        "degree {d}: map {i} is not {rows}x{cols}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Interval decomposition by inclusion–exclusion of composite ranks.
    pub fn decompose(&self) -> Result<GradedBarcode> {
        self.validate()?;
        let f = self.field;
        let k = self.critical.len();
        let lambda = |i: usize| -> Ext {
            if i == 0 {
                Ext::NegInf
            } else if i == k + 1 {
                Ext::PosInf
            } else {
                Ext::Fin(self.critical[i - 1].clone())
            }
        };
        let mut bars = Vec::new();
        let mut degrees: Vec<i64> = self
            .open_dims
            .iter()
            .flat_map(|h| h.iter().map(|(d, _)| d))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            let dim = |i: usize| self.open_dims[i].get(d) as usize;
            // rank[i][j] = rank of the composite from stratum j down to i.
            let mut rank = vec![vec![0usize; k + 1]; k + 1];
            for i in 0..=k {
                let mut comp = Field::identity(dim(i));
                rank[i][i] = dim(i);
                for j in i + 1..=k {
                    comp = f.matmul(&comp, &self.maps[&d][j - 1], dim(j));
                    rank[i][j] = f.rank(&comp);
                }
            }
            let r = |i: isize, j: usize| -> isize {
                if i < 0 || j > k {
                    0
                } else {
                    rank[i as usize][j] as isize
                }
            };
            for i in 0..=k {
                for j in i..=k {
                    let m = r(i as isize, j) - r(i as isize - 1, j) - r(i as isize, j + 1)
                        + r(i as isize - 1, j + 1);
                    if m < 0 {
                        return Err(Error::MalformedModel("negative multiplicity".into()));
                    }
                    if m > 0 {
                        let interval = Interval::half_open(lambda(i), lambda(j + 1))
                            .expect("strata are nonempty");
                        bars.push(GradedBar::with_multiplicity(interval, d, m as u64));
                    }
                }
            }
        }
        Ok(GradedBarcode::new(bars))
    }
}

/// The cells of the stratification `λ₁ < … < λ_k`: open strata `e_0..e_k`
/// and points `v_1..v_k`, indexed left to right (`e_i` is `2i`, `v_i` is
/// `2i−1`).
#[derive(Clone, Debug)]
pub struct Cells {
    critical: Vec<PiRational>,
    samples: Vec<PiRational>,
}

impl Cells {
    pub fn new(mut critical: Vec<PiRational>) -> Self {
        critical.sort();
        critical.dedup();
        let samples = sample_points(&critical);
        Self { critical, samples }
    }

    /// Cells of the coarsest stratification adapted to all given barcodes.
    pub fn adapted(barcodes: &[&GradedBarcode]) -> Self {
        Self::new(barcodes.iter().flat_map(|b| b.spec()).collect())
    }

    pub fn len(&self) -> usize {
        2 * self.critical.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_point(cell: usize) -> bool {
        cell % 2 == 1
    }

    /// A point of the line lying in the cell.
    pub fn sample(&self, cell: usize) -> PiRational {
        if Self::is_point(cell) {
            self.critical[cell / 2].clone()
        } else {
            self.samples[cell / 2].clone()
        }
    }

    /// Face relations `v_i → e_{i−1}`, `v_i → e_i`.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        (0..self.critical.len())
            .flat_map(|i| {
                let v = 2 * i + 1;
                [(v, v - 1), (v, v + 1)]
            })
            .collect()
    }

    /// The open star of a cell: the cell and the open strata it bounds.
    pub fn star(&self, cell: usize) -> Vec<usize> {
        if Self::is_point(cell) {
            vec![cell - 1, cell, cell + 1]
        } else {
            vec![cell]
        }
    }

    /// Cells whose union is the open ray `(−∞, c)`.
    pub fn below(&self, c: &PiRational) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| {
                if Self::is_point(x) {
                    self.critical[x / 2] < *c
                } else {
                    // An open stratum lies below c iff its left end does.
                    x == 0 || self.critical[x / 2 - 1] < *c
                }
            })
            .collect()
    }
}

/// A representation of the cell poset: a vector space per cell and a
/// linear map along each face relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellularSheaf {
    pub dims: Vec<usize>,
    /// `(source, target, matrix)` with the matrix `dims[target] × dims[source]`.
    pub maps: Vec<(usize, usize, Matrix)>,
}

impl CellularSheaf {
    /// The constant sheaf `k` on the cells of `interval`, zero elsewhere.
    /// Every endpoint of `interval` must be a critical value of `cells`.
    pub fn interval(cells: &Cells, interval: &Interval) -> Self {
        Self::direct_sum(cells, &[interval])
    }

    /// Direct sum of interval sheaves, one summand per entry.
    pub fn direct_sum(cells: &Cells, intervals: &[&Interval]) -> Self {
        let member: Vec<Vec<bool>> = intervals
            .iter()
            .map(|i| (0..cells.len()).map(|x| i.contains(&cells.sample(x))).collect())
            .collect();
        let index = |x: usize| -> Vec<Option<usize>> {
            let mut next = 0;
            member
                .iter()
                .map(|m| {
                    m[x].then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let dims = (0..cells.len())
            .map(|x| member.iter().filter(|m| m[x]).count())
            .collect::<Vec<_>>();
        let maps = cells
            .arrows()
            .into_iter()
            .map(|(s, t)| {
                let mut m = Field::zeros(dims[t], dims[s]);
                for (a, b) in index(s).into_iter().zip(index(t)) {
                    if let (Some(a), Some(b)) = (a, b) {
                        m[b][a] = 1;
                    }
                }
                (s, t, m)
            })
            .collect();
        Self { dims, maps }
    }

    /// `(dim Hom, dim Ext¹)` computed on the full subposet spanned by
    /// `subset`; higher Ext vanishes since the poset has height one.
    pub fn ext(field: Field, f: &Self, g: &Self, subset: &[usize]) -> (usize, usize) {
        // Unknowns: one block φ_x ∈ Hom(F_x, G_x) per cell in the subset.
        let mut offset = BTreeMap::new();
        let mut n = 0;
        for &x in subset {
            offset.insert(x, n);
            n += f.dims[x] * g.dims[x];
        }
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut codim = 0;
        for ((s, t, fa), (s2, t2, ga)) in f.maps.iter().zip(&g.maps) {
            debug_assert_eq!((s, t), (s2, t2));
            if !(offset.contains_key(s) && offset.contains_key(t)) {
                continue;
            }
            let (fs, ft, gs, gt) = (f.dims[*s], f.dims[*t], g.dims[*s], g.dims[*t]);
            codim += gt * fs;
            // (G_α φ_s − φ_t F_α)[r][c] for r < gt, c < fs.
            for r in 0..gt {
                for c in 0..fs {
                    let mut row = vec![0u64; n];
                    for q in 0..gs {
                        let coef = ga[r][q];
                        if coef != 0 {
                            let idx = offset[s] + q * fs + c;
                            row[idx] = field.add(row[idx], coef);
                        }
                    }
                    for q in 0..ft {
                        let coef = fa[q][c];
                        if coef != 0 {
                            let idx = offset[t] + r * ft + q;
                            row[idx] = field.sub(row[idx], coef);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let rank = if n == 0 { 0 } else { field.rank(&rows) };
        (n - rank, codim - rank)
    }
}

/// Cellular presentation of a barcode, one representation per degree.
fn graded(cells: &Cells, b: &GradedBarcode) -> BTreeMap<i64, CellularSheaf> {
    b.degrees()
        .into_iter()
        .map(|d| {
            let intervals: Vec<&Interval> =
                b.expanded().filter(|&(_, e)| e == d).map(|(i, _)| i).collect();
            (d, CellularSheaf::direct_sum(cells, &intervals))
        })
        .collect()
}

fn graded_ext(
    field: Field,
    cells: &Cells,
    f: &GradedBarcode,
    g: &GradedBarcode,
    subset: &[usize],
) -> HomSpace {
    let (fs, gs) = (graded(cells, f), graded(cells, g));
    let mut out = HomSpace::zero();
    for (i, fi) in &fs {
        for (j, gj) in &gs {
            let (h0, h1) = CellularSheaf::ext(field, fi, gj, subset);
            out.add(j - i, h0 as u64);
            out.add(j - i + 1, h1 as u64);
        }
    }
    out
}

/// Graded dimensions of `RHom(F, G)` from the cellular presentation.
pub fn rhom_oracle(f: &GradedBarcode, g: &GradedBarcode, field: Field) -> HomSpace {
    let cells = Cells::adapted(&[f, g]);
    let all: Vec<usize> = (0..cells.len()).collect();
    graded_ext(field, &cells, f, g, &all)
}

/// Stalks of the derived sheaf hom `RℋHom(F, G)`, one per cell, each
/// paired with a sample point of the cell.
pub fn rhom_sheaf_oracle(
    f: &GradedBarcode,
    g: &GradedBarcode,
    field: Field,
) -> Vec<(PiRational, HomSpace)> {
    let cells = Cells::adapted(&[f, g]);
    (0..cells.len())
        .map(|x| (cells.sample(x), graded_ext(field, &cells, f, g, &cells.star(x))))
        .collect()
}

/// Graded dimensions of `RΓ((−∞, c); F)`.
pub fn ray_sections_oracle(f: &GradedBarcode, c: &PiRational, field: Field) -> HomSpace {
    let mut cells = Cells::adapted(&[f]);
    cells = Cells::new(cells.critical.iter().cloned().chain([c.clone()]).collect());
    let below = cells.below(c);
    let constant = GradedBarcode::single(Interval::line());
    graded_ext(field, &cells, &constant, f, &below)
}

/// Graded dimensions of `RΓ(ℝ; F)`.
pub fn global_sections_oracle(f: &GradedBarcode, field: Field) -> HomSpace {
    rhom_oracle(&GradedBarcode::single(Interval::line()), f, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn co(a: i64, b: i64) -> Interval {
        Interval::closed_open(a, b).unwrap()
    }

    fn f2() -> Field {
        Field::default()
    }

    #[test]
    fn from_barcode_shapes() {
        let m = StratModel::from_barcode(&GradedBarcode::single(Interval::ray_from(0)), f2())
            .unwrap();
        assert_eq!(m.critical.len(), 1);
        assert_eq!(m.open_dims[0], HomSpace::zero());
        assert_eq!(m.open_dims[1], HomSpace::k(0));
        assert_eq!(f2().rank(&m.maps[&0][0]), 0);

        let b = GradedBarcode::from_intervals([(co(0, 2), 0), (co(1, 3), 0)]);
        let m = StratModel::from_barcode(&b, f2()).unwrap();
        assert_eq!(m.open_dims[2].get(0), 2);
        assert_eq!(f2().rank(&m.maps[&0][1]), 1);
        assert_eq!(f2().rank(&m.maps[&0][2]), 1);
        assert_eq!(m.decompose().unwrap(), b);
    }

    #[test]
    fn decompose_hand_models() {
        // One stratum of dimension 1, all maps zero.
        let model = StratModel {
            field: f2(),
            critical: vec![0.into(), 1.into()],
            open_dims: vec![HomSpace::zero(), HomSpace::k(0), HomSpace::zero()],
            point_dims: vec![HomSpace::k(0), HomSpace::zero()],
            maps: BTreeMap::from([(0, vec![Field::zeros(0, 1), Field::zeros(1, 0)])]),
        };
        assert_eq!(
            model.decompose().unwrap(),
            GradedBarcode::single(co(0, 1))
        );
        // Identity maps everywhere with dimension 1 on the right.
        let model = StratModel {
            field: f2(),
            critical: vec![0.into(), 1.into()],
            open_dims: vec![HomSpace::zero(), HomSpace::k(0), HomSpace::k(0)],
            point_dims: vec![HomSpace::k(0), HomSpace::k(0)],
            maps: BTreeMap::from([(0, vec![Field::zeros(0, 1), vec![vec![1]]])]),
        };
        assert_eq!(
            model.decompose().unwrap(),
            GradedBarcode::single(Interval::ray_from(0))
        );
        let mut bad = model.clone();
        bad.maps.get_mut(&0).unwrap()[1] = vec![vec![1, 0]];
        assert!(bad.decompose().is_err());
    }

    #[test]
    fn cellular_ext_small_cases() {
        let one = |i: Interval| GradedBarcode::single(i);
        // Hom(k_[0,2), k_[1,3)) = k
        assert_eq!(
            rhom_oracle(&one(co(0, 2)), &one(co(1, 3)), f2()),
            HomSpace::k(0)
        );
        // RHom(k_[0,∞), k_(−∞,0)) = k[−1]
        assert_eq!(
            rhom_oracle(&one(Interval::ray_from(0)), &one(Interval::ray_below(0)), f2()),
            HomSpace::k(1)
        );
        // RΓ(ℝ; k_(0,1)) = k[−1]
        assert_eq!(
            global_sections_oracle(&one(Interval::open(0, 1).unwrap()), f2()),
            HomSpace::k(1)
        );
        // RℋHom(k_[1,3), k_[0,1)) is k at 1 in degree 1 and zero elsewhere.
        for (t, h) in rhom_sheaf_oracle(&one(co(1, 3)), &one(co(0, 1)), f2()) {
            if t == PiRational::from(1) {
                assert_eq!(h, HomSpace::k(1));
            } else {
                assert!(h.is_zero(), "t = {t}: {h}");
            }
        }
        assert!(ray_sections_oracle(&one(co(0, 1)), &2.into(), f2()).is_zero());
        assert_eq!(
            ray_sections_oracle(&one(co(0, 3)), &1.into(), f2()),
            HomSpace::k(0)
        );
    }
}
