use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::barcode::{GradedBar, GradedBarcode, HomSpace};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::ops::rhom_total;
use crate::value::PiRational;

use super::domain::DomainSpec;
use super::eigen::{eigen_count, eigen_count_sq};
use super::stalks::require_nonnegative;

/// Barcode of the projector sheaf of `d` on `[0, tmax)`: one bar per stratum
/// between consecutive spectral values. Neighbouring stalks sit in
/// different degrees, so every bar closes at the next spectral value. The
/// last bar is cut at `tmax`.
pub fn domain_barcode(d: &DomainSpec, tmax: &PiRational) -> Result<GradedBarcode> {
    d.validate()?;
    let spec = d.spec(tmax);
    let mut bars = Vec::with_capacity(spec.len());
    for (k, s) in spec.iter().enumerate() {
        let end = spec.get(k + 1).unwrap_or(tmax);
        let bar = Interval::closed_open(s.clone(), end.clone())?;
        bars.push(GradedBar::new(bar, d.stalk_degree(s)?));
    }
    Ok(GradedBarcode::new(bars))
}

/// `S_T(d)`: graded dimensions of `RHom(F(d), k_{[T,∞)}[−n])`, reported
/// with the sign that puts the ball's answer in degree `2mn`.
pub fn sheaf_invariant(d: &DomainSpec, t: &PiRational) -> Result<HomSpace> {
    require_nonnegative(t)?;
    d.validate()?;
    // Bars past T + max action cannot contain T.
    let reach = d.actions().into_iter().max().expect("at least one action");
    let bars = domain_barcode(d, &(t.clone() + reach))?;
    let target = GradedBarcode::from_intervals([(Interval::ray_from(t.clone()), i64::from(d.dim()))]);
    let h = rhom_total(&bars, &target)?;
    Ok(HomSpace::from_pairs(h.iter().map(|(deg, k)| (-deg, k))))
}

/// Whether the transfer map `S_{T2}(d) → S_{T1}(d)` is an isomorphism,
/// i.e. whether `[T1, T2]` misses the spectrum (which contains 0).
pub fn transfer_is_iso(d: &DomainSpec, t1: &PiRational, t2: &PiRational) -> Result<bool> {
    d.validate()?;
    require_nonnegative(t1)?;
    if t1 > t2 {
        return Err(Error::Precondition(format!("T1 = {t1} exceeds T2 = {t2}")));
    }
    for unit in d.actions() {
        // some multiple of unit in [t1, t2] iff ⌈t1/unit⌉ ≤ ⌊t2/unit⌋
        let ceil1 = -(-t1.clone()).floor_div(&unit);
        if ceil1 <= t2.floor_div(&unit) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stalk at `T` of the cone of `F(cB(r)) → F(B(r))` in dimension `n`,
/// computed from eigenvalue counts with `m` steps.
pub fn inclusion_cone_rank(
    r: &BigRational,
    c: &BigRational,
    t: &PiRational,
    n: u32,
    m: usize,
) -> Result<HomSpace> {
    if !c.is_positive() || *c > BigRational::one() {
        return Err(Error::Precondition(format!("scale c = {c} not in (0,1]")));
    }
    let m1 = eigen_count(t, r, m)?;
    let mc = eigen_count_sq(t, &(c * r * r), m)?;
    match mc.cmp(&m1) {
        Ordering::Equal => Ok(HomSpace::zero()),
        Ordering::Greater => Ok(HomSpace::k(i64::from(n) * (mc - m1) as i64)),
        Ordering::Less => Err(Error::Precondition(format!(
            "smaller ball has fewer positive eigenvalues ({mc} < {m1})"
        ))),
    }
}
