use serde::{Deserialize, Serialize};

use super::{CensusError, RamProfile};
use crate::poly::Poly;
use crate::ratfunc::{ProjPoint, RatFunc};

/// A nonconstant rational function, viewed as a self-map of the projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMap(RatFunc);

impl RatMap {
    pub fn new(f: RatFunc) -> Result<RatMap, CensusError> {
        if f.is_constant() {
            return Err(CensusError::ConstantMap);
        }
        Ok(RatMap(f))
    }

    pub fn as_ratfunc(&self) -> &RatFunc {
        &self.0
    }

    pub fn into_ratfunc(self) -> RatFunc {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Ascending coefficient encodings of numerator and denominator.
    pub fn coefficient_lists(&self) -> (Vec<u32>, Vec<u32>) {
        (self.0.numerator().values(), self.0.denominator().values())
    }

    pub fn eval(&self, point: ProjPoint) -> ProjPoint {
        self.0.eval(point)
    }

    /// `N' D - N D'` for `f = N / D`.
    pub fn wronskian(&self) -> Poly {
        let n = self.0.numerator();
        let d = self.0.denominator();
        &(&n.derivative() * d) - &(n * &d.derivative())
    }
}

impl std::fmt::Display for RatMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamOrder {
    pub order: usize,
    /// `p` divides the order, or the order is at least `p`.
    pub wild: bool,
}

fn lead_index(p: &Poly) -> usize {
    p.degree().unwrap_or(0)
}

/// Local degree of `f` at `point`.
pub fn ram_order(f: &RatMap, point: ProjPoint) -> RamOrder {
    let field = f.0.field();
    let p = field.characteristic() as usize;
    let n = f.0.numerator();
    let d = f.0.denominator();
    let order = match point {
        ProjPoint::Finite(a) => {
            if d.eval(a).is_zero() {
                d.root_multiplicity(a).expect("nonzero denominator")
            } else {
                let c = n.eval(a) / d.eval(a);
                (n - &d.scale(c))
                    .root_multiplicity(a)
                    .expect("nonconstant map")
            }
        }
        ProjPoint::Infinity => {
            let (dn, dd) = (lead_index(n), lead_index(d));
            if n.is_zero() || dn != dd {
                dn.abs_diff(dd)
            } else {
                let c = n.leading().unwrap() / d.leading().unwrap();
                let diff = n - &d.scale(c);
                dd - diff.degree().expect("nonconstant map")
            }
        }
    };
    RamOrder {
        order,
        wild: order % p == 0 || order >= p,
    }
}

pub fn is_separable(f: &RatMap) -> bool {
    !f.wronskian().is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileCheck {
    pub matches: bool,
    pub wild: bool,
}

/// Exact ramification `e_i` at each marked point, all tame, and degree
/// `d`; by Riemann-Hurwitz the map is then unramified elsewhere.
pub fn check_profile(f: &RatMap, profile: &RamProfile) -> Result<ProfileCheck, CensusError> {
    let field = f.0.field();
    let points = profile.points_in(field)?;
    if !is_separable(f) {
        return Ok(ProfileCheck {
            matches: false,
            wild: true,
        });
    }
    let mut matches = f.degree() as u64 == profile.degree();
    let mut wild = false;
    for (&pt, &e) in points.iter().zip(profile.orders()) {
        let r = ram_order(f, pt);
        wild |= r.wild;
        matches &= r.order == e as usize;
    }
    matches &= !wild;
    if !matches && !wild {
        wild = ProjPoint::all(field).any(|pt| ram_order(f, pt).wild);
    }
    Ok(ProfileCheck { matches, wild })
}

/// Ramification read off the Wronskian instead of local expansions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiemannHurwitzAudit {
    /// Contribution `e - 1` seen at each marked point, in profile order.
    pub marked: Vec<usize>,
    /// Degree of the Wronskian left after removing the marked factors.
    pub unmarked_degree: usize,
    /// `2d - 2 - deg W`, the contribution at infinity.
    pub at_infinity: usize,
    /// Sum of all contributions.
    pub total: usize,
    pub expected: usize,
    pub consistent: bool,
}

pub fn riemann_hurwitz_audit(
    f: &RatMap,
    profile: &RamProfile,
) -> Result<RiemannHurwitzAudit, CensusError> {
    let field = f.0.field();
    let points = profile.points_in(field)?;
    let d = f.degree();
    let expected = 2 * d - 2;
    let w = f.wronskian();
    let Some(deg_w) = w.degree() else {
        return Ok(RiemannHurwitzAudit {
            marked: vec![],
            unmarked_degree: 0,
            at_infinity: 0,
            total: 0,
            expected,
            consistent: false,
        });
    };
    let at_infinity = expected.saturating_sub(deg_w);
    let mut residual = w;
    let mut marked = Vec::with_capacity(points.len());
    let mut consistent = deg_w <= expected;
    for (&pt, &e) in points.iter().zip(profile.orders()) {
        let seen = match pt {
            ProjPoint::Finite(a) => {
                let m = residual.root_multiplicity(a).unwrap_or(0);
                residual = residual
                    .exact_div(&Poly::linear(a).pow(m as u32))
                    .expect("factor divides");
                m
            }
            ProjPoint::Infinity => at_infinity,
        };
        consistent &= seen + 1 == e as usize;
        marked.push(seen);
    }
    if !points.contains(&ProjPoint::Infinity) {
        consistent &= at_infinity == 0;
    }
    let unmarked_degree = residual.degree().unwrap_or(0);
    consistent &= unmarked_degree == 0;
    let total = marked.iter().sum::<usize>()
        + unmarked_degree
        + if points.contains(&ProjPoint::Infinity) {
            0
        } else {
            at_infinity
        };
    consistent &= total == expected;
    Ok(RiemannHurwitzAudit {
        marked,
        unmarked_degree,
        at_infinity,
        total,
        expected,
        consistent,
    })
}
