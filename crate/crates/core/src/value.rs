//! Exact scalars of the form `q·π + s` with `q, s` rational, and their
//! extension by `±∞`.
//!
//! Almost every value in the calculus is a plain rational (`q = 0`); the
//! symbolic `π` part only appears in the ball/ellipsoid layer, where action
//! values are multiples of `πr²`. Comparisons between values with different
//! `π` coefficients refine a certified enclosure of `π` until the sign is
//! decided. Since `π` is irrational this always terminates.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Builds a rational from a numerator and denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-7/2"` or a decimal literal such as `"1.25"`.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let s = text.trim();
    let bad = || Error::Parse(alloc::format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() && whole_digits.is_empty() {
            return Err(bad());
        }
        if !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let whole_val = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(whole_digits).map_err(|_| bad())?
        };
        let frac_val = if frac.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(frac).map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let mut value = BigRational::new(whole_val * &scale + frac_val, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    BigInt::from_str(s)
        .map(BigRational::from_integer)
        .map_err(|_| bad())
}

/// Lossy conversion used only for plotting and numeric oracles.
pub fn rational_to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: fall back to a scaled division.
        let n = value.numer().bits() as i64;
        let d = value.denom().bits() as i64;
        let shift = (n - d).clamp(-1000, 1000);
        let scaled = if shift >= 0 {
            value / BigRational::from_integer(BigInt::one() << shift as usize)
        } else {
            value * BigRational::from_integer(BigInt::one() << (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(0.0) * libm::exp2(shift as f64)
    })
}

/// Sum of `16·atan(1/5) − 4·atan(1/239)` in fixed point with `bits`
/// fractional bits, as a pair `(lo, hi)` of numerators over `2^bits`.
fn pi_enclosure(bits: usize) -> (BigInt, BigInt) {
    let guard = bits + 16;
    let (a5, n5) = atan_inv(5, guard);
    let (a239, n239) = atan_inv(239, guard);
    let approx = a5 * 16 - a239 * 4;
    // per-term truncation error is below 3 ulps, the omitted tail below 2
    let err = BigInt::from(16 * (4 * n5 + 8) + 4 * (4 * n239 + 8));
    let lo = (&approx - &err) >> 16usize;
    let hi = ((&approx + &err) >> 16usize) + 1;
    (lo, hi)
}

fn atan_inv(x: u32, bits: usize) -> (BigInt, usize) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = (BigInt::one() << bits) / &x;
    let mut sum = term.clone();
    let mut k: usize = 1;
    loop {
        term /= &x2;
        if term.is_zero() {
            break;
        }
        let piece = &term / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= piece;
        } else {
            sum += piece;
        }
        k += 1;
    }
    (sum, k)
}

/// Certified rational enclosure `lo < π < hi` of width at most `2^-bits`
/// (plus a few ulps).
pub fn pi_bounds(bits: usize) -> (BigRational, BigRational) {
    let (lo, hi) = pi_enclosure(bits);
    let den = BigInt::one() << bits;
    (
        BigRational::new(lo, den.clone()),
        BigRational::new(hi, den),
    )
}

/// Exact value `pi·π + rat`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiRational {
    pub pi: BigRational,
    pub rat: BigRational,
}

impl PiRational {
    pub fn new(pi: BigRational, rat: BigRational) -> Self {
        Self { pi, rat }
    }

    pub fn rational(rat: BigRational) -> Self {
        Self {
            pi: BigRational::zero(),
            rat,
        }
    }

    pub fn pi_multiple(pi: BigRational) -> Self {
        Self {
            pi,
            rat: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(int(n))
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.pi.is_zero() && self.rat.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.pi.is_zero()
    }

    /// The rational value, if there is no `π` part.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            pi: &self.pi * factor,
            rat: &self.rat * factor,
        }
    }

    /// Sign of the value, decided exactly.
    pub fn signum(&self) -> Ordering {
        if self.pi.is_zero() {
            return self.rat.cmp(&BigRational::zero());
        }
        // sign of pi·π + rat, refining the π enclosure until decided
        let mut bits = 64;
        loop {
            let (lo, hi) = pi_bounds(bits);
            let (low, high) = if self.pi.is_positive() {
                (&self.pi * &lo + &self.rat, &self.pi * &hi + &self.rat)
            } else {
                (&self.pi * &hi + &self.rat, &self.pi * &lo + &self.rat)
            };
            if low.is_positive() {
                return Ordering::Greater;
            }
            if high.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    /// Largest integer `m` with `m ≤ self / unit`, for a positive `unit`.
    pub fn floor_div(&self, unit: &PiRational) -> BigInt {
        debug_assert_eq!(unit.signum(), Ordering::Greater);
        let estimate = self.to_f64() / unit.to_f64();
        let mut m = if estimate.is_finite() {
            BigInt::from(libm::floor(estimate) as i64)
        } else {
            BigInt::zero()
        };
        let times = |m: &BigInt| unit.scale(&BigRational::from_integer(m.clone()));
        while times(&m) > *self {
            m -= 1;
        }
        while times(&(&m + 1)) <= *self {
            m += 1;
        }
        m
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.pi) * core::f64::consts::PI + rational_to_f64(&self.rat)
    }

    /// Midpoint of two values.
    pub fn midpoint(&self, other: &Self) -> Self {
        (self.clone() + other.clone()).scale(&rat(1, 2))
    }
}

impl From<BigRational> for PiRational {
    fn from(value: BigRational) -> Self {
        Self::rational(value)
    }
}

impl From<i64> for PiRational {
    fn from(value: i64) -> Self {
        Self::from_int(value)
    }
}

impl Ord for PiRational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.pi == other.pi {
            return self.rat.cmp(&other.rat);
        }
        (self.clone() - other.clone()).signum()
    }
}

impl PartialOrd for PiRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: Self) -> Self {
        Self {
            pi: self.pi + rhs.pi,
            rat: self.rat + rhs.rat,
        }
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: Self) -> Self {
        Self {
            pi: self.pi - rhs.pi,
            rat: self.rat - rhs.rat,
        }
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> Self {
        Self {
            pi: -self.pi,
            rat: -self.rat,
        }
    }
}

impl Mul<&BigRational> for &PiRational {
    type Output = PiRational;
    fn mul(self, rhs: &BigRational) -> PiRational {
        self.scale(rhs)
    }
}

fn fmt_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        alloc::format!("{}/{}", value.numer(), value.denom())
    }
}

impl fmt::Display for PiRational {
    /// `"3/2"`, `"2pi"`, `"1/2pi+3"`, `"-pi-1"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi.is_zero() {
            return f.write_str(&fmt_rational(&self.rat));
        }
        let coeff = if self.pi.is_one() {
            String::new()
        } else if self.pi == -BigRational::one() {
            String::from("-")
        } else {
            fmt_rational(&self.pi)
        };
        write!(f, "{coeff}pi")?;
        if self.rat.is_positive() {
            write!(f, "+{}", fmt_rational(&self.rat))?;
        } else if self.rat.is_negative() {
            write!(f, "{}", fmt_rational(&self.rat))?;
        }
        Ok(())
    }
}

impl FromStr for PiRational {
    type Err = Error;

    /// Accepts plain rationals and decimals, and `π`-literals such as
    /// `"3pi"`, `"pi"`, `"-pi"`, `"1/2pi"`, `"2pi+1"`, `"pi-3/4"`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.replace('π', "pi");
        let Some(idx) = s.find("pi") else {
            return parse_rational(&s).map(PiRational::rational);
        };
        let (coeff, rest) = (&s[..idx], &s[idx + 2..]);
        let coeff = match coeff {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            c => parse_rational(c.trim_end_matches('*'))?,
        };
        let offset = if rest.is_empty() {
            BigRational::zero()
        } else if let Some(r) = rest.strip_prefix('+') {
            parse_rational(r)?
        } else if rest.starts_with('-') {
            parse_rational(rest)?
        } else {
            return Err(Error::Parse(alloc::format!("bad pi literal: {text:?}")));
        };
        Ok(PiRational::new(coeff, offset))
    }
}

/// A point of the extended line `{−∞} ∪ (ℚ + ℚπ) ∪ {+∞}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(PiRational),
    PosInf,
}

impl Ext {
    pub fn fin(value: impl Into<PiRational>) -> Self {
        Ext::Fin(value.into())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn finite(&self) -> Option<&PiRational> {
        match self {
            Ext::Fin(v) => Some(v),
            _ => None,
        }
    }

    pub fn neg(&self) -> Ext {
        match self {
            Ext::NegInf => Ext::PosInf,
            Ext::PosInf => Ext::NegInf,
            Ext::Fin(v) => Ext::Fin(-v.clone()),
        }
    }

    /// Sum where an indeterminate `−∞ + ∞` resolves to `−∞`.
    pub fn add_low(&self, other: &Ext) -> Ext {
        match (self, other) {
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ext::NegInf,
            (Ext::PosInf, _) | (_, Ext::PosInf) => Ext::PosInf,
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.clone() + b.clone()),
        }
    }

    /// Sum where an indeterminate `−∞ + ∞` resolves to `+∞`.
    pub fn add_high(&self, other: &Ext) -> Ext {
        match (self, other) {
            (Ext::PosInf, _) | (_, Ext::PosInf) => Ext::PosInf,
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ext::NegInf,
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.clone() + b.clone()),
        }
    }

    /// `self − other` for `self ≥ other`; infinite whenever either side is.
    pub fn distance_up(&self, other: &Ext) -> Ext {
        match (self, other) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.clone() - b.clone()),
            _ => Ext::PosInf,
        }
    }

    pub fn shift(&self, by: &PiRational) -> Ext {
        match self {
            Ext::Fin(v) => Ext::Fin(v.clone() + by.clone()),
            other => other.clone(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Ext {
        match self {
            Ext::Fin(v) => Ext::Fin(v.scale(factor)),
            Ext::PosInf if factor.is_negative() => Ext::NegInf,
            Ext::NegInf if factor.is_negative() => Ext::PosInf,
            other => other.clone(),
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => f.write_str("-inf"),
            Ext::PosInf => f.write_str("+inf"),
            Ext::Fin(v) => v.fmt(f),
        }
    }
}

impl FromStr for Ext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "-inf" | "-∞" => Ok(Ext::NegInf),
            "+inf" | "inf" | "∞" | "+∞" => Ok(Ext::PosInf),
            other => other.parse().map(Ext::Fin),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_enclosure_brackets_known_digits() {
        let (lo, hi) = pi_bounds(128);
        let digits = parse_rational("3.14159265358979323846264338327950288419716939937510").unwrap();
        assert!(lo < digits && digits < hi);
        assert!(&hi - &lo < rat(1, 1_000_000_000_000_000_000));
    }

    #[test]
    fn mixed_comparisons() {
        let pi = PiRational::pi_multiple(int(1));
        assert!(pi > PiRational::rational(rat(314, 100)));
        assert!(pi < PiRational::rational(rat(315, 100)));
        // 355/113 is famously close to π but above it
        assert!(pi < PiRational::rational(rat(355, 113)));
        assert!(PiRational::pi_multiple(int(2)) > PiRational::from_int(6));
        assert_eq!(
            PiRational::new(int(1), int(1)).cmp(&PiRational::new(int(1), int(1))),
            Ordering::Equal
        );
    }

    #[test]
    fn parse_and_display() {
        for text in ["3", "-7/2", "2pi", "pi", "-pi", "1/2pi+3", "pi-3/4"] {
            let v: PiRational = text.parse().unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert_eq!("1.2".parse::<PiRational>().unwrap(), PiRational::rational(rat(6, 5)));
        assert_eq!("3π".parse::<PiRational>().unwrap(), PiRational::pi_multiple(int(3)));
        assert!("abc".parse::<PiRational>().is_err());
        assert!("1/0".parse::<PiRational>().is_err());
    }

    #[test]
    fn floor_div_counts_bins() {
        let unit = PiRational::pi_multiple(int(1));
        assert_eq!(PiRational::from_int(4).floor_div(&unit), BigInt::from(1));
        assert_eq!(PiRational::from_int(3).floor_div(&unit), BigInt::from(0));
        assert_eq!(PiRational::pi_multiple(int(2)).floor_div(&unit), BigInt::from(2));
        assert_eq!(PiRational::zero().floor_div(&unit), BigInt::from(0));
    }

    #[test]
    fn extended_sums() {
        assert_eq!(Ext::NegInf.add_low(&Ext::PosInf), Ext::NegInf);
        assert_eq!(Ext::NegInf.add_high(&Ext::PosInf), Ext::PosInf);
        assert_eq!(Ext::fin(2).add_low(&Ext::fin(3)), Ext::fin(5));
        assert!(Ext::NegInf < Ext::fin(-1000) && Ext::fin(1000) < Ext::PosInf);
    }
}
