use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::barcode::HomSpace;
use crate::error::{Error, Result};
use crate::value::PiRational;

use super::stalks::{bin, require_nonnegative};

/// A ball `B(r)`, an ellipsoid `E(r, R, …, R)` with `n − 1` large radii,
/// or a scaled ball `cB(r)` of area `cπr²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainSpec {
    Ball { n: u32, r: BigRational },
    Ellipsoid { n: u32, r: BigRational, big_r: BigRational },
    ScaledBall { c: BigRational, n: u32, r: BigRational },
}

impl DomainSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |x: &BigRational, what: &str| {
            if x.is_positive() {
                Ok(())
            } else {
                Err(Error::Precondition(format!("{what} = {x} must be positive")))
            }
        };
        if self.dim() == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        match self {
            Self::Ball { r, .. } => positive(r, "r"),
            Self::Ellipsoid { n, r, big_r } => {
                positive(r, "r")?;
                positive(big_r, "R")?;
                if *n < 2 {
                    return Err(Error::Precondition("ellipsoid needs n ≥ 2".into()));
                }
                if r > big_r {
                    return Err(Error::Precondition(format!("r = {r} exceeds R = {big_r}")));
                }
                Ok(())
            }
            Self::ScaledBall { c, r, .. } => {
                positive(r, "r")?;
                if !c.is_positive() || *c > BigRational::one() {
                    return Err(Error::Precondition(format!("scale c = {c} not in (0,1]")));
                }
                Ok(())
            }
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            Self::Ball { n, .. } | Self::Ellipsoid { n, .. } | Self::ScaledBall { n, .. } => *n,
        }
    }

    /// The basic actions whose multiples make up the spectrum: `πr²` for a
    /// ball, `πr²` and `πR²` for an ellipsoid.
    pub fn actions(&self) -> Vec<PiRational> {
        let area = |r: &BigRational| PiRational::pi_multiple(r * r);
        match self {
            Self::Ball { r, .. } => vec![area(r)],
            Self::Ellipsoid { r, big_r, .. } => vec![area(r), area(big_r)],
            Self::ScaledBall { c, r, .. } => vec![PiRational::pi_multiple(c * r * r)],
        }
    }

    /// Spectral values in `[0, tmax)`, sorted.
    pub fn spec(&self, tmax: &PiRational) -> Vec<PiRational> {
        let mut out = Vec::new();
        for unit in self.actions() {
            let mut k = BigRational::zero();
            loop {
                let s = unit.scale(&k);
                if s >= *tmax {
                    break;
                }
                out.push(s);
                k += BigRational::one();
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Cohomological degree of the projector stalk at `t`.
    pub fn stalk_degree(&self, t: &PiRational) -> Result<i64> {
        self.validate()?;
        require_nonnegative(t)?;
        let n = i64::from(self.dim());
        let units = self.actions();
        Ok(match self {
            Self::Ball { .. } | Self::ScaledBall { .. } => n * (2 * bin(t, &units[0]) + 1),
            Self::Ellipsoid { .. } => {
                let (m_r, m_big) = (bin(t, &units[0]) + 1, bin(t, &units[1]) + 1);
                2 * (n - 1) * m_big + 2 * m_r - n
            }
        })
    }

    pub fn stalk(&self, t: &PiRational) -> Result<HomSpace> {
        Ok(HomSpace::k(self.stalk_degree(t)?))
    }
}
