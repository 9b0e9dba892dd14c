//! Singular support of interval sheaves `k_I` on the line.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::interval::Interval;
use crate::value::{Ext, PiRational};

/// Covector directions in a fiber of `T*ℝ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Covectors {
    /// `{τ ≥ 0}`
    NonNegative,
    /// `{τ ≤ 0}`
    NonPositive,
    /// The whole fiber.
    All,
}

impl fmt::Display for Covectors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Covectors::NonNegative => "ℝ≥0",
            Covectors::NonPositive => "ℝ≤0",
            Covectors::All => "ℝ",
        })
    }
}

/// `SS(k_I)`: the zero section over the closure of `I` together with a
/// closed ray at each finite endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularSupport {
    /// Closure of the interval; the zero section lies over it.
    pub zero_section: (Ext, Ext),
    pub rays: Vec<(PiRational, Covectors)>,
    /// `false` for the types other than `[a,b)`, `[a,∞)`, whose ray
    /// directions depend on the sign convention for the conormal.
    pub convention_free: bool,
}

impl SingularSupport {
    pub fn is_in_upper_half(&self) -> bool {
        self.rays.iter().all(|(_, c)| *c == Covectors::NonNegative)
    }
}

impl fmt::Display for SingularSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = &self.zero_section;
        let lo_br = if lo.is_finite() { '[' } else { '(' };
        let hi_br = if hi.is_finite() { ']' } else { ')' };
        if lo == hi {
            write!(f, "0_{{{lo}}}")?;
        } else {
            write!(f, "0_{lo_br}{lo},{hi}{hi_br}")?;
        }
        for (x, c) in &self.rays {
            write!(f, " ∪ {{{x}}}×{c}")?;
        }
        Ok(())
    }
}

/// Singular support of `k_I`. With the convention that `k_{[a,b)}` has
/// `SS ⊆ {τ ≥ 0}`: a closed left end and an open right end contribute
/// `ℝ≥0`, an open left end and a closed right end contribute `ℝ≤0`, and a
/// point contributes the whole fiber.
pub fn ss_describe(i: &Interval) -> SingularSupport {
    let zero_section = (i.lo_value().clone(), i.hi_value().clone());
    let mut rays = Vec::new();
    if i.is_singleton() {
        let a = i.lo_value().finite().expect("singletons are finite").clone();
        rays.push((a, Covectors::All));
    } else {
        if let Some(a) = i.lo_value().finite() {
            let dir = if i.lo().is_closed() {
                Covectors::NonNegative
            } else {
                Covectors::NonPositive
            };
            rays.push((a.clone(), dir));
        }
        if let Some(b) = i.hi_value().finite() {
            let dir = if i.hi().is_closed() {
                Covectors::NonPositive
            } else {
                Covectors::NonNegative
            };
            rays.push((b.clone(), dir));
        }
    }
    SingularSupport {
        zero_section,
        rays,
        convention_free: i.is_left_closed_type(),
    }
}

/// Text form of [`ss_describe`].
pub fn ss_text(i: &Interval) -> String {
    alloc::format!("{}", ss_describe(i))
}
