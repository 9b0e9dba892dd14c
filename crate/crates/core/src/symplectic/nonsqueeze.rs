use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Signed;

use crate::barcode::HomSpace;
use crate::error::{Error, Result};
use crate::value::{int, rat, PiRational};

use super::domain::DomainSpec;
use super::invariant::{inclusion_cone_rank, sheaf_invariant};

/// Steps used for the eigenvalue counts in the cone argument.
const CONE_STEPS: usize = 32;

/// Outcome of [`nonsqueeze_check`]. When the invariant obstructs, `witness`
/// holds the chosen `T` and both invariants at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonsqueezeVerdict {
    pub obstructed: bool,
    pub witness: Option<PiRational>,
    pub ball_invariant: Option<HomSpace>,
    pub ellipsoid_invariant: Option<HomSpace>,
    pub trace: Vec<String>,
}

impl NonsqueezeVerdict {
    pub fn label(&self) -> &'static str {
        if self.obstructed {
            "OBSTRUCTED"
        } else {
            "NOT-OBSTRUCTED-BY-THIS-INVARIANT"
        }
    }
}

/// Decides whether `S_T` rules out a symplectic embedding
/// `B(r1) → E(r2, R, …, R)` in `ℝ^{2n}`.
///
/// For `r1 > r2` it takes `T = π(r1² + r2²)/2`, compares `S_T` of both
/// domains, and checks via the mapping cone of `B(r1) ⊂ B(R†)` that the
/// restriction from a large ball is nonzero. An embedding would factor that
/// restriction through `S_T(E)`, which then must have a degree-0 part.
pub fn nonsqueeze_check(
    n: u32,
    r1: &BigRational,
    r2: &BigRational,
    big_r: &BigRational,
) -> Result<NonsqueezeVerdict> {
    if n < 2 || !r1.is_positive() || !r2.is_positive() {
        return Err(Error::Precondition("need n ≥ 2 and positive radii".into()));
    }
    if big_r <= r1.max(r2) {
        return Err(Error::Precondition(format!(
            "R = {big_r} must exceed both radii {r1}, {r2}"
        )));
    }
    let mut trace = Vec::new();
    if r1 <= r2 {
        trace.push(format!(
            "r1 = {r1} ≤ r2 = {r2}: the window (πr2², πr1²) is empty, no T to test"
        ));
        return Ok(NonsqueezeVerdict {
            obstructed: false,
            witness: None,
            ball_invariant: None,
            ellipsoid_invariant: None,
            trace,
        });
    }
    let t = PiRational::pi_multiple((r1 * r1 + r2 * r2) * rat(1, 2));
    trace.push(format!("choose T = {t} in (π·{}, π·{})", r2 * r2, r1 * r1));

    let ball = DomainSpec::Ball { n, r: r1.clone() };
    let s_ball = sheaf_invariant(&ball, &t)?;
    trace.push(format!("S_T(B({r1})) = {s_ball}  (T below πr1², first bin)"));

    let ell = DomainSpec::Ellipsoid {
        n,
        r: r2.clone(),
        big_r: big_r.clone(),
    };
    let s_ell = sheaf_invariant(&ell, &t)?;
    trace.push(format!(
        "S_T(E({r2}, {big_r}, …)) = {s_ell}  (πr2² < T < πR²)"
    ));

    let dagger = big_r * int(2);
    let big = DomainSpec::Ball { n, r: dagger.clone() };
    let s_big = sheaf_invariant(&big, &t)?;
    trace.push(format!("S_T(B({dagger})) = {s_big} for the ball B(R†) containing everything"));

    let composite_zero = s_ell.get(0) == 0;
    trace.push(if composite_zero {
        String::from("S_T(E) has no degree-0 part, so S_T(B(R†)) → S_T(E) → S_T(B(r1)) is zero")
    } else {
        String::from("S_T(E) has a degree-0 part; the composite may be nonzero")
    });

    let c = (r1 * r1) / (&dagger * &dagger);
    let cone = inclusion_cone_rank(&dagger, &c, &t, n, CONE_STEPS)?;
    trace.push(format!(
        "Cone(F(B({r1})) → F(B({dagger})))_T = {cone}, rank {} ≤ 1",
        cone.total()
    ));
    let restriction_nonzero = cone.total() < s_ball.total() + s_big.total();
    trace.push(if restriction_nonzero {
        String::from("a zero restriction S_T(B(R†)) → S_T(B(r1)) would give a cone of rank 2, so it is nonzero")
    } else {
        String::from("the cone rank does not rule out a zero restriction")
    });

    let obstructed = composite_zero && restriction_nonzero && !s_ball.is_zero();
    trace.push(String::from(if obstructed {
        "contradiction: no embedding B(r1) → E(r2, R, …, R)"
    } else {
        "no contradiction from S_T"
    }));
    Ok(NonsqueezeVerdict {
        obstructed,
        witness: Some(t),
        ball_invariant: Some(s_ball),
        ellipsoid_invariant: Some(s_ell),
        trace,
    })
}
