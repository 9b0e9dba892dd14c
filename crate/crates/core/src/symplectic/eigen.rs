//! The eigenvalue count behind the ball projector stalk.
//!
//! Discretizing the generating function of the ball flow at time
//! `a = −T/(r²M)` into `M` steps gives a quadratic form whose eigenvalues
//! are `λ_k = (cos θ_k − cos x) / sin x` with `θ_k = 2πk/M` and
//! `x = 2T/(r²M)`. The number of positive eigenvalues is `2m + 1` when
//! `T ∈ (mπr², (m+1)πr²)`, whatever `M` is.

use alloc::format;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::value::{int, rat, PiRational};

use super::stalks::require_nonnegative;

/// Relative half-width, in units of `πr²`, of the band around spectral
/// values where the count is refused.
pub const EXCLUSION_BAND: f64 = 1e-6;

/// A sign is trusted only when both factors of `cos θ − cos x` are at least
/// this far from zero. Each factor is a `sin` of an argument below `2π`, so
/// its absolute error is a few ulps, far below this margin.
const CERTIFIED_MARGIN: f64 = 1e-10;

/// Positive eigenvalues of the discretized ball generating function for a
/// ball of radius `r`.
pub fn eigen_count(t: &PiRational, r: &BigRational, m: usize) -> Result<usize> {
    eigen_count_sq(t, &(r * r), m)
}

/// As [`eigen_count`], with the squared radius given directly; `cB(r)` has
/// squared radius `cr²`.
pub fn eigen_count_sq(t: &PiRational, r_sq: &BigRational, m: usize) -> Result<usize> {
    require_nonnegative(t)?;
    if !r_sq.is_positive() {
        return Err(Error::Precondition(format!("r² = {r_sq} must be positive")));
    }
    if m < 2 {
        return Err(Error::Precondition(format!("M = {m} must be at least 2")));
    }
    let unit = PiRational::pi_multiple(r_sq.clone());
    // Nearest multiple of πr², decided exactly.
    let half = unit.scale(&rat(1, 2));
    let k = (t.clone() + half).floor_div(&unit);
    let gap = (t.clone() - unit.scale(&BigRational::from_integer(k))).abs();
    let band = unit.scale(&(BigRational::one() / int(1_000_000)));
    if gap < band {
        return Err(Error::NearSpectralValue(format!("{t}")));
    }
    // x < π, i.e. 2T < πr²M, keeps sin x > 0.
    let limit = unit.scale(&BigRational::from_integer((m as i64).into()));
    if (t.clone() + t.clone()).cmp(&limit) != Ordering::Less {
        return Err(Error::CoarseDiscretization(format!(
            "M = {m} steps are too few for T = {t}"
        )));
    }
    let x = 2.0 * t.to_f64() / (crate::value::rational_to_f64(r_sq) * m as f64);
    let mut count = 0;
    for k in 0..m {
        let theta = 2.0 * PI * k as f64 / m as f64;
        // cos θ − cos x = 2 sin((x+θ)/2) sin((x−θ)/2), accurate near zero.
        let (p, q) = (libm::sin((x + theta) / 2.0), libm::sin((x - theta) / 2.0));
        if p.abs() < CERTIFIED_MARGIN || q.abs() < CERTIFIED_MARGIN {
            return Err(Error::NearSpectralValue(format!("{t}")));
        }
        let lambda = 2.0 * p * q / libm::sin(x);
        if lambda > 0.0 {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let one = int(1);
        assert_eq!(eigen_count(&1.into(), &one, 16).unwrap(), 1);
        assert_eq!(eigen_count(&4.into(), &one, 32).unwrap(), 3);
        for m in [8, 16, 32, 64] {
            assert_eq!(eigen_count(&4.into(), &one, m).unwrap(), 3);
            assert_eq!(eigen_count(&10.into(), &one, m).unwrap(), 7);
        }
    }

    #[test]
    fn refusals() {
        let one = int(1);
        let pi = PiRational::pi_multiple(int(1));
        assert!(matches!(eigen_count(&pi, &one, 16), Err(Error::NearSpectralValue(_))));
        assert!(matches!(eigen_count(&0.into(), &one, 16), Err(Error::NearSpectralValue(_))));
        // 2T ≥ πM
        assert!(matches!(eigen_count(&20.into(), &one, 8), Err(Error::CoarseDiscretization(_))));
        assert!(eigen_count(&(-1).into(), &one, 8).is_err());
    }
}
