//! Intervals of the real line with exact endpoints and explicit open/closed
//! flags.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::value::{Ext, PiRational};

/// One end of an interval. Infinite ends are always open.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    value: Ext,
    closed: bool,
}

impl Endpoint {
    pub fn new(value: Ext, closed: bool) -> Self {
        let closed = closed && value.is_finite();
        Self { value, closed }
    }

    pub fn closed(value: impl Into<PiRational>) -> Self {
        Self::new(Ext::Fin(value.into()), true)
    }

    pub fn open(value: impl Into<PiRational>) -> Self {
        Self::new(Ext::Fin(value.into()), false)
    }

    pub fn neg_inf() -> Self {
        Self::new(Ext::NegInf, false)
    }

    pub fn pos_inf() -> Self {
        Self::new(Ext::PosInf, false)
    }

    pub fn value(&self) -> &Ext {
        &self.value
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    fn shifted(&self, by: &PiRational) -> Self {
        Self::new(self.value.shift(by), self.closed)
    }

    fn negated(&self) -> Self {
        Self::new(self.value.neg(), self.closed)
    }
}

/// A nonempty interval. Singletons `{a}` are stored as `[a,a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Endpoint,
    hi: Endpoint,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Result<Self> {
        match lo.value.cmp(&hi.value) {
            Ordering::Less => Ok(Self { lo, hi }),
            Ordering::Equal if lo.closed && hi.closed => Ok(Self { lo, hi }),
            _ => Err(Error::EmptyInterval(format!(
                "{}{}, {}{}",
                if lo.closed { '[' } else { '(' },
                lo.value,
                hi.value,
                if hi.closed { ']' } else { ')' }
            ))),
        }
    }

    /// Like [`Interval::new`] but returns `None` for an empty interval.
    pub fn try_new(lo: Endpoint, hi: Endpoint) -> Option<Self> {
        Self::new(lo, hi).ok()
    }

    /// `[lo, hi)` on the extended line: a `−∞` lower end is open, a `+∞`
    /// upper end is open. `None` when empty.
    pub fn half_open(lo: Ext, hi: Ext) -> Option<Self> {
        Self::try_new(Endpoint::new(lo, true), Endpoint::new(hi, false))
    }

    /// `(lo, hi]` on the extended line.
    pub fn half_open_right(lo: Ext, hi: Ext) -> Option<Self> {
        Self::try_new(Endpoint::new(lo, false), Endpoint::new(hi, true))
    }

    /// `[a, b)` with finite ends.
    pub fn closed_open(a: impl Into<PiRational>, b: impl Into<PiRational>) -> Result<Self> {
        Self::new(Endpoint::closed(a), Endpoint::open(b))
    }

    pub fn open_closed(a: impl Into<PiRational>, b: impl Into<PiRational>) -> Result<Self> {
        Self::new(Endpoint::open(a), Endpoint::closed(b))
    }

    pub fn closed(a: impl Into<PiRational>, b: impl Into<PiRational>) -> Result<Self> {
        Self::new(Endpoint::closed(a), Endpoint::closed(b))
    }

    pub fn open(a: impl Into<PiRational>, b: impl Into<PiRational>) -> Result<Self> {
        Self::new(Endpoint::open(a), Endpoint::open(b))
    }

    pub fn point(a: impl Into<PiRational>) -> Self {
        let a = a.into();
        Self {
            lo: Endpoint::closed(a.clone()),
            hi: Endpoint::closed(a),
        }
    }

    /// `[a, ∞)`.
    pub fn ray_from(a: impl Into<PiRational>) -> Self {
        Self {
            lo: Endpoint::closed(a),
            hi: Endpoint::pos_inf(),
        }
    }

    /// `(−∞, b)`.
    pub fn ray_below(b: impl Into<PiRational>) -> Self {
        Self {
            lo: Endpoint::neg_inf(),
            hi: Endpoint::open(b),
        }
    }

    pub fn line() -> Self {
        Self {
            lo: Endpoint::neg_inf(),
            hi: Endpoint::pos_inf(),
        }
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn lo_value(&self) -> &Ext {
        &self.lo.value
    }

    pub fn hi_value(&self) -> &Ext {
        &self.hi.value
    }

    pub fn is_singleton(&self) -> bool {
        self.lo.value == self.hi.value
    }

    pub fn contains(&self, t: &PiRational) -> bool {
        let t = Ext::Fin(t.clone());
        let above = match self.lo.value.cmp(&t) {
            Ordering::Less => true,
            Ordering::Equal => self.lo.closed,
            Ordering::Greater => false,
        };
        let below = match t.cmp(&self.hi.value) {
            Ordering::Less => true,
            Ordering::Equal => self.hi.closed,
            Ordering::Greater => false,
        };
        above && below
    }

    /// Type `[a,b)`: lower end closed or `−∞`, upper end open or `+∞`.
    /// These are exactly the bars of sheaves whose singular support lies in
    /// `{τ ≥ 0}`.
    pub fn is_left_closed_type(&self) -> bool {
        (self.lo.closed || !self.lo.is_finite())
            && (!self.hi.closed)
            && !self.is_singleton()
    }

    /// Type `(a,b]`: lower end open or `−∞`, upper end closed or `+∞`.
    pub fn is_right_closed_type(&self) -> bool {
        (!self.lo.closed) && (self.hi.closed || !self.hi.is_finite()) && !self.is_singleton()
    }

    /// Length `hi − lo`, infinite for unbounded intervals.
    pub fn length(&self) -> Ext {
        self.hi.value.distance_up(&self.lo.value)
    }

    pub fn shift(&self, by: &PiRational) -> Self {
        Self {
            lo: self.lo.shifted(by),
            hi: self.hi.shifted(by),
        }
    }

    /// Image under `t ↦ −t`; endpoint flags travel with their values.
    pub fn reflect(&self) -> Self {
        Self {
            lo: self.hi.negated(),
            hi: self.lo.negated(),
        }
    }

    /// Same underlying endpoints with both flags flipped, used when moving
    /// a `(a,b]` bar to `[a,b)` and back.
    pub fn with_flags(&self, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        Self::new(
            Endpoint::new(self.lo.value.clone(), lo_closed),
            Endpoint::new(self.hi.value.clone(), hi_closed),
        )
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = match self.lo.value.cmp(&other.lo.value) {
            Ordering::Greater => self.lo.clone(),
            Ordering::Less => other.lo.clone(),
            Ordering::Equal => Endpoint::new(
                self.lo.value.clone(),
                self.lo.closed && other.lo.closed,
            ),
        };
        let hi = match self.hi.value.cmp(&other.hi.value) {
            Ordering::Less => self.hi.clone(),
            Ordering::Greater => other.hi.clone(),
            Ordering::Equal => Endpoint::new(
                self.hi.value.clone(),
                self.hi.closed && other.hi.closed,
            ),
        };
        Interval::try_new(lo, hi)
    }

    /// Whether this interval is compact (both ends finite and closed).
    pub fn is_compact(&self) -> bool {
        self.lo.closed && self.hi.closed
    }

    pub fn notation(&self) -> String {
        format!("{self}")
    }
}

impl Ord for Interval {
    /// Lower end first (closed before open), then upper end (open before
    /// closed).
    fn cmp(&self, other: &Self) -> Ordering {
        self.lo
            .value
            .cmp(&other.lo.value)
            .then_with(|| other.lo.closed.cmp(&self.lo.closed))
            .then_with(|| self.hi.value.cmp(&other.hi.value))
            .then_with(|| self.hi.closed.cmp(&other.hi.closed))
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            return write!(f, "{{{}}}", self.lo.value);
        }
        write!(
            f,
            "{}{},{}{}",
            if self.lo.closed { '[' } else { '(' },
            self.lo.value,
            self.hi.value,
            if self.hi.closed { ']' } else { ')' }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_respects_flags() {
        let i = Interval::closed_open(0, 2).unwrap();
        assert!(i.contains(&0.into()));
        assert!(!i.contains(&2.into()));
        let j = Interval::open_closed(0, 2).unwrap();
        assert!(!j.contains(&0.into()));
        assert!(j.contains(&2.into()));
        assert!(Interval::point(3).contains(&3.into()));
        assert!(Interval::line().contains(&(-1000).into()));
    }

    #[test]
    fn emptiness() {
        assert!(Interval::closed_open(1, 1).is_err());
        assert!(Interval::open(1, 1).is_err());
        assert!(Interval::closed(2, 1).is_err());
        assert!(Interval::closed(1, 1).unwrap().is_singleton());
        // infinite ends are forced open
        let e = Endpoint::new(Ext::PosInf, true);
        assert!(!e.is_closed());
    }

    #[test]
    fn types() {
        assert!(Interval::closed_open(0, 1).unwrap().is_left_closed_type());
        assert!(Interval::ray_from(0).is_left_closed_type());
        assert!(Interval::ray_below(0).is_left_closed_type());
        assert!(Interval::line().is_left_closed_type());
        assert!(Interval::line().is_right_closed_type());
        assert!(!Interval::point(0).is_left_closed_type());
        assert!(!Interval::open(0, 1).unwrap().is_left_closed_type());
        assert!(Interval::open_closed(0, 1).unwrap().is_right_closed_type());
    }

    #[test]
    fn reflect_and_intersect() {
        let i = Interval::open_closed(1, 2).unwrap();
        assert_eq!(i.reflect(), Interval::closed_open(-2, -1).unwrap());
        let a = Interval::closed_open(0, 2).unwrap();
        let b = Interval::open_closed(1, 3).unwrap();
        assert_eq!(a.intersect(&b), Some(Interval::open(1, 2).unwrap()));
        let c = Interval::closed_open(2, 3).unwrap();
        assert_eq!(a.intersect(&c), None);
        let d = Interval::closed(2, 3).unwrap();
        let e = Interval::closed(0, 2).unwrap();
        assert_eq!(d.intersect(&e), Some(Interval::point(2)));
    }
}
