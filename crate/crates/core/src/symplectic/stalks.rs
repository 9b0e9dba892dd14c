use alloc::format;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::barcode::HomSpace;
use crate::error::{Error, Result};
use crate::value::PiRational;

use super::domain::DomainSpec;

pub(crate) fn require_nonnegative(t: &PiRational) -> Result<()> {
    if t.signum() == Ordering::Less {
        return Err(Error::Precondition(format!("T = {t} is negative")));
    }
    Ok(())
}

/// Index `m` of the half-open bin `[m·unit, (m+1)·unit)` holding `t`.
pub(crate) fn bin(t: &PiRational, unit: &PiRational) -> i64 {
    t.floor_div(unit).to_i64().expect("bin index fits in i64")
}

/// Stalk of the ball projector at `T`: `k` in degree `n(2m+1)` where
/// `T ∈ [mπr², (m+1)πr²)`.
pub fn ball_stalk(n: u32, r: &BigRational, t: &PiRational) -> Result<HomSpace> {
    DomainSpec::Ball { n, r: r.clone() }.stalk(t)
}

/// Stalk of the projector of `E(r, R, …, R)` at `T`: `k` in degree
/// `2(n−1)m_R + 2m_r − n` with `m = ⌊T/πρ²⌋ + 1`.
pub fn ellipsoid_stalk(
    n: u32,
    r: &BigRational,
    big_r: &BigRational,
    t: &PiRational,
) -> Result<HomSpace> {
    DomainSpec::Ellipsoid {
        n,
        r: r.clone(),
        big_r: big_r.clone(),
    }
    .stalk(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::{int, parse_rational, rat};

    #[test]
    fn ball_examples() {
        let one = int(1);
        assert_eq!(ball_stalk(1, &one, &1.into()).unwrap(), HomSpace::k(1));
        assert_eq!(ball_stalk(2, &one, &4.into()).unwrap(), HomSpace::k(6));
        assert_eq!(ball_stalk(1, &one, &0.into()).unwrap(), HomSpace::k(1));
        // closed on the left: T = π starts the second bin
        let pi = PiRational::pi_multiple(int(1));
        assert_eq!(ball_stalk(1, &one, &pi).unwrap(), HomSpace::k(3));
        assert!(ball_stalk(1, &one, &(-1).into()).is_err());
        assert!(ball_stalk(1, &int(0), &1.into()).is_err());
    }

    #[test]
    fn ellipsoid_examples() {
        let (one, three) = (int(1), int(3));
        assert_eq!(ellipsoid_stalk(2, &one, &three, &4.into()).unwrap(), HomSpace::k(4));
        let t = PiRational::rational(parse_rational("0.1").unwrap());
        assert_eq!(ellipsoid_stalk(2, &one, &three, &t).unwrap(), HomSpace::k(2));
        assert!(ellipsoid_stalk(1, &one, &three, &t).is_err());
        assert!(ellipsoid_stalk(2, &three, &one, &t).is_err());
        for n in 2..5 {
            for k in 0..30 {
                let t = PiRational::rational(rat(k, 3));
                let r = rat(3, 4);
                assert_eq!(
                    ellipsoid_stalk(n, &r, &r, &t).unwrap(),
                    ball_stalk(n, &r, &t).unwrap()
                );
            }
        }
    }
}
