//! Torsion, the shift-morphism ranks and capacities.

use core::cmp::{max, min};

use crate::barcode::{GradedBarcode, HomSpace};
use crate::error::Result;
use crate::ops::convolution::hom_star;
use crate::value::{Ext, PiRational};

/// Supremum of bar lengths: infinite if any bar is unbounded, zero for the
/// empty barcode.
pub fn torsion(f: &GradedBarcode) -> Ext {
    f.bars()
        .iter()
        .map(|b| b.interval.length())
        .max()
        .unwrap_or(Ext::Fin(PiRational::zero()))
}

/// Rank of `τ_c : F → T_c F` per degree: the bars longer than `c`.
pub fn tau_rank(f: &GradedBarcode, c: &PiRational) -> HomSpace {
    let c = Ext::Fin(c.clone());
    HomSpace::from_pairs(
        f.bars()
            .iter()
            .filter(|b| b.interval.length() > c)
            .map(|b| (b.degree, b.multiplicity)),
    )
}

/// `c(F)`: the torsion of `Hom*(F, F)`.
pub fn capacity(f: &GradedBarcode) -> Result<Ext> {
    Ok(torsion(&hom_star(f, f)?))
}

/// `c'(F)`: the supremum over bars `[α,β)` of `Hom*(F, F)` with
/// `α < 0 ≤ β` of `min(−α, β−α)`.
pub fn capacity_prime(f: &GradedBarcode) -> Result<Ext> {
    Ok(capacity_prime_of_hom(&hom_star(f, f)?))
}

/// [`capacity_prime`] from an already computed self-hom `H = Hom*(F, F)`.
pub fn capacity_prime_of_hom(h: &GradedBarcode) -> Ext {
    let zero = Ext::Fin(PiRational::zero());
    h.bars()
        .iter()
        .filter(|b| *b.interval.lo_value() < zero && zero <= *b.interval.hi_value())
        .map(|b| {
            let (alpha, beta) = (b.interval.lo_value(), b.interval.hi_value());
            min(alpha.neg(), beta.distance_up(alpha))
        })
        .fold(zero.clone(), max)
}
