//! Graded barcodes, graded dimension vectors and the elementary queries on
//! them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::value::{Ext, PiRational};

/// Graded dimension vector: degree to dimension, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomSpace {
    dims: BTreeMap<i64, u64>,
}

impl HomSpace {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `k` in a single degree.
    pub fn k(degree: i64) -> Self {
        let mut h = Self::zero();
        h.add(degree, 1);
        h
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut h = Self::zero();
        for (d, n) in pairs {
            h.add(d, n);
        }
        h
    }

    pub fn add(&mut self, degree: i64, n: u64) {
        if n > 0 {
            *self.dims.entry(degree).or_insert(0) += n;
        }
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&d, &n)| (d, n))
    }

    pub fn dims(&self) -> &BTreeMap<i64, u64> {
        &self.dims
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::from_pairs(self.iter().map(|(d, n)| (d + k, n)))
    }

    pub fn sum(&self, other: &HomSpace) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()))
    }
}

impl fmt::Display for HomSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{n}")?;
        }
        f.write_str("}")
    }
}

/// An interval with a cohomological degree and a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedBar {
    pub interval: Interval,
    pub degree: i64,
    pub multiplicity: u64,
}

impl GradedBar {
    pub fn new(interval: Interval, degree: i64) -> Self {
        Self {
            interval,
            degree,
            multiplicity: 1,
        }
    }

    pub fn with_multiplicity(interval: Interval, degree: i64, multiplicity: u64) -> Self {
        Self {
            interval,
            degree,
            multiplicity,
        }
    }

    fn key_cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.interval.cmp(&other.interval))
    }
}

/// Endpoint convention of a barcode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Every bar is of type `[a,b)`.
    LeftClosed,
    /// Every bar is of type `(a,b]`.
    RightClosed,
    Mixed,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::LeftClosed => "left-closed",
            Convention::RightClosed => "right-closed",
            Convention::Mixed => "mixed",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "left-closed" | "[)" => Ok(Convention::LeftClosed),
            "right-closed" | "(]" => Ok(Convention::RightClosed),
            "mixed" => Ok(Convention::Mixed),
            other => Err(Error::Parse(format!("unknown convention `{other}`"))),
        }
    }
}

/// A finite multiset of graded bars, always held in canonical form: sorted
/// by `(degree, lo, hi)` with equal bars merged.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedBarcode {
    bars: Vec<GradedBar>,
}

impl GradedBarcode {
    pub fn new(bars: impl IntoIterator<Item = GradedBar>) -> Self {
        Self {
            bars: canonical_bars(bars),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// One bar in degree 0.
    pub fn single(interval: Interval) -> Self {
        Self::new([GradedBar::new(interval, 0)])
    }

    pub fn from_intervals(intervals: impl IntoIterator<Item = (Interval, i64)>) -> Self {
        Self::new(intervals.into_iter().map(|(i, d)| GradedBar::new(i, d)))
    }

    pub fn bars(&self) -> &[GradedBar] {
        &self.bars
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Number of bars counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.bars.iter().map(|b| b.multiplicity).sum()
    }

    /// Bars expanded by multiplicity, in canonical order.
    pub fn expanded(&self) -> impl Iterator<Item = (&Interval, i64)> + '_ {
        self.bars.iter().flat_map(|b| {
            core::iter::repeat_n((&b.interval, b.degree), b.multiplicity as usize)
        })
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.bars.iter().map(|b| b.degree).collect();
        ds.dedup();
        ds
    }

    /// The bars of one degree, as a degree-0 barcode.
    pub fn in_degree(&self, degree: i64) -> GradedBarcode {
        Self {
            bars: self
                .bars
                .iter()
                .filter(|b| b.degree == degree)
                .map(|b| GradedBar {
                    degree: 0,
                    ..b.clone()
                })
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &GradedBarcode) -> GradedBarcode {
        Self::new(self.bars.iter().chain(other.bars.iter()).cloned())
    }

    /// Every bar has type `[a,b)`, `[a,∞)`, `(−∞,b)` or is the whole line.
    pub fn is_tamarkin(&self) -> bool {
        self.bars.iter().all(|b| b.interval.is_left_closed_type())
    }

    pub fn require_tamarkin(&self) -> Result<()> {
        match self.bars.iter().find(|b| !b.interval.is_left_closed_type()) {
            None => Ok(()),
            Some(b) => Err(Error::NotTamarkin(format!(
                "bar {} in degree {}",
                b.interval, b.degree
            ))),
        }
    }

    pub fn convention(&self) -> Convention {
        if self.bars.iter().all(|b| b.interval.is_left_closed_type()) {
            Convention::LeftClosed
        } else if self.bars.iter().all(|b| b.interval.is_right_closed_type()) {
            Convention::RightClosed
        } else {
            Convention::Mixed
        }
    }

    pub fn stalk(&self, t: &PiRational) -> HomSpace {
        HomSpace::from_pairs(
            self.bars
                .iter()
                .filter(|b| b.interval.contains(t))
                .map(|b| (b.degree, b.multiplicity)),
        )
    }

    /// Sorted distinct finite endpoint values.
    pub fn spec(&self) -> Vec<PiRational> {
        let mut out: Vec<PiRational> = self
            .bars
            .iter()
            .flat_map(|b| [b.interval.lo_value(), b.interval.hi_value()])
            .filter_map(|e| e.finite().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Sections over `(−∞, c)`: bars `[a,b)` with `a < c ≤ b`.
    pub fn ray_sections(&self, c: &PiRational) -> Result<HomSpace> {
        self.require_tamarkin()?;
        let c = Ext::Fin(c.clone());
        Ok(HomSpace::from_pairs(
            self.bars
                .iter()
                .filter(|b| *b.interval.lo_value() < c && c <= *b.interval.hi_value())
                .map(|b| (b.degree, b.multiplicity)),
        ))
    }

    pub fn shift_t(&self, c: &PiRational) -> GradedBarcode {
        self.map_intervals(|i| i.shift(c))
    }

    pub fn shift_deg(&self, k: i64) -> GradedBarcode {
        Self {
            bars: self
                .bars
                .iter()
                .map(|b| GradedBar {
                    degree: b.degree + k,
                    ..b.clone()
                })
                .collect(),
        }
    }

    /// Image under `t ↦ −t`. Swaps `[a,b)` and `(−b,−a]` types.
    pub fn reflect(&self) -> GradedBarcode {
        self.map_intervals(Interval::reflect)
    }

    /// Moves a homogeneous barcode to the target convention by reflecting
    /// `t ↦ −t` when the conventions differ. The identity when they agree.
    pub fn convert_convention(&self, target: Convention) -> Result<GradedBarcode> {
        if target == Convention::Mixed {
            return Err(Error::MixedConvention);
        }
        let fits = |c: Convention| match c {
            Convention::LeftClosed => self.bars.iter().all(|b| b.interval.is_left_closed_type()),
            Convention::RightClosed => {
                self.bars.iter().all(|b| b.interval.is_right_closed_type())
            }
            Convention::Mixed => false,
        };
        if fits(target) {
            return Ok(self.clone());
        }
        let other = match target {
            Convention::LeftClosed => Convention::RightClosed,
            _ => Convention::LeftClosed,
        };
        if fits(other) {
            Ok(self.reflect())
        } else {
            Err(Error::MixedConvention)
        }
    }

    pub fn map_intervals(&self, f: impl Fn(&Interval) -> Interval) -> GradedBarcode {
        Self::new(self.bars.iter().map(|b| GradedBar {
            interval: f(&b.interval),
            ..b.clone()
        }))
    }
}

fn canonical_bars(bars: impl IntoIterator<Item = GradedBar>) -> Vec<GradedBar> {
    let mut bars: Vec<GradedBar> = bars.into_iter().filter(|b| b.multiplicity > 0).collect();
    bars.sort_by(GradedBar::key_cmp);
    let mut out: Vec<GradedBar> = Vec::with_capacity(bars.len());
    for bar in bars {
        match out.last_mut() {
            Some(last) if last.degree == bar.degree && last.interval == bar.interval => {
                last.multiplicity += bar.multiplicity;
            }
            _ => out.push(bar),
        }
    }
    out
}

/// Re-sorts and merges. Barcodes are kept canonical on construction, so
/// this is the identity on any `GradedBarcode` value.
pub fn canonicalize(b: &GradedBarcode) -> GradedBarcode {
    GradedBarcode::new(b.bars.iter().cloned())
}

impl FromIterator<GradedBar> for GradedBarcode {
    fn from_iter<T: IntoIterator<Item = GradedBar>>(iter: T) -> Self {
        Self::new(iter)
    }
}

impl fmt::Display for GradedBarcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.bars.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}deg{}", b.interval, b.degree)?;
            if b.multiplicity > 1 {
                write!(f, " x{}", b.multiplicity)?;
            }
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::rat;

    fn co(a: i64, b: i64) -> Interval {
        Interval::closed_open(a, b).unwrap()
    }

    #[test]
    fn canonical_merge_and_order() {
        let b = GradedBarcode::from_intervals([(co(0, 1), 0), (co(0, 1), 0)]);
        assert_eq!(b.bars().len(), 1);
        assert_eq!(b.bars()[0].multiplicity, 2);
        let b = GradedBarcode::from_intervals([(co(2, 3), 1), (co(0, 1), 0)]);
        assert_eq!(b.bars()[0].interval, co(0, 1));
        assert_eq!(canonicalize(&b), b);
        assert!(GradedBarcode::empty().is_empty());
    }

    #[test]
    fn stalks_and_spec() {
        let b = GradedBarcode::single(co(0, 2));
        assert_eq!(b.stalk(&0.into()), HomSpace::k(0));
        assert_eq!(b.stalk(&2.into()), HomSpace::zero());
        let oc = GradedBarcode::from_intervals([(Interval::open_closed(0, 2).unwrap(), 1)]);
        assert_eq!(oc.stalk(&0.into()), HomSpace::zero());
        let b = GradedBarcode::from_intervals([(co(0, 2), 0), (Interval::ray_from(1), 0)]);
        assert_eq!(b.spec(), [0.into(), 1.into(), 2.into()]);
        let b = GradedBarcode::new([GradedBar::with_multiplicity(co(0, 2), 0, 3)]);
        assert_eq!(b.spec(), [0.into(), 2.into()]);
    }

    #[test]
    fn ray_sections_rule() {
        let up = GradedBarcode::single(Interval::ray_from(0));
        assert_eq!(up.ray_sections(&1.into()).unwrap(), HomSpace::k(0));
        let short = GradedBarcode::single(co(0, 1));
        assert!(short.ray_sections(&2.into()).unwrap().is_zero());
        let long = GradedBarcode::single(co(0, 3));
        assert_eq!(long.ray_sections(&1.into()).unwrap(), HomSpace::k(0));
        let bad = GradedBarcode::single(Interval::open_closed(0, 1).unwrap());
        assert!(bad.ray_sections(&1.into()).is_err());
    }

    #[test]
    fn conventions() {
        let oc = GradedBarcode::single(Interval::open_closed(1, 2).unwrap());
        assert_eq!(oc.convention(), Convention::RightClosed);
        assert_eq!(oc.convert_convention(Convention::RightClosed).unwrap(), oc);
        assert_eq!(
            oc.convert_convention(Convention::LeftClosed).unwrap(),
            GradedBarcode::single(co(-2, -1))
        );
        assert_eq!(oc.reflect(), GradedBarcode::single(co(-2, -1)));
        let mixed = oc.direct_sum(&GradedBarcode::single(co(0, 1)));
        assert_eq!(
            mixed.convert_convention(Convention::LeftClosed),
            Err(Error::MixedConvention)
        );
        let e = GradedBarcode::empty();
        assert_eq!(e.convert_convention(Convention::RightClosed).unwrap(), e);
    }

    #[test]
    fn shifts() {
        let f = GradedBarcode::single(co(0, 1));
        assert_eq!(f.shift_t(&2.into()), GradedBarcode::single(co(2, 3)));
        assert_eq!(f.shift_t(&0.into()), f);
        let half = PiRational::from(rat(1, 2));
        assert_eq!(
            f.shift_t(&half).shift_t(&half),
            f.shift_t(&1.into())
        );
        assert_eq!(f.shift_deg(2).bars()[0].degree, 2);
    }
}
