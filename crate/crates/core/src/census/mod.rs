//! Brute-force census of self-maps of `P^1` over `F_{p^k}` with prescribed
//! tame ramification, counted up to post-composition by `PGL_2(F_{p^k})`.
//!
//! Candidates are organized by critical-value pattern. Marked points are
//! grouped into fibers; the first three fibers are sent to `0`, `∞`, `1`
//! and any further fibers to distinct values in `F \ {0, 1}`. Within a
//! branch the numerator and denominator are
//! `prod_{fiber 0} (t - s)^e · a(t)` and `prod_{fiber ∞} (t - s)^e · b(t)`,
//! and the remaining conditions are linear in the coefficients of `a, b`.
//! Each projective kernel vector is a candidate, filtered by
//! [`check_profile`] and reduced to its [`pgl2_canonical`] form.

mod canonical;
mod linear;
mod map;

pub use canonical::{pgl2_canonical, pgl2_canonical_with_stabilizer};
pub use map::{
    check_profile, is_separable, ram_order, riemann_hurwitz_audit, ProfileCheck, RamOrder, RatMap,
    RiemannHurwitzAudit,
};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::error::AlgebraError;
use crate::field::{FieldElement, GaloisField};
use crate::moebius::Moebius;
use crate::poly::Poly;
use crate::ratfunc::{PointLabel, ProjPoint, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("profile violates Riemann–Hurwitz parity: sum of (e_i - 1) is {0}")]
    Parity(u64),
    #[error("ramification profile needs at least one marked point")]
    Empty,
    #[error("{points} points but {orders} orders")]
    LengthMismatch { points: usize, orders: usize },
    #[error("marked point {0} appears twice")]
    DuplicatePoint(PointLabel),
    #[error("ramification order must be at least 1")]
    ZeroOrder,
    #[error("order {order} at {point} is not tame for p = {p}")]
    NotTame {
        point: PointLabel,
        order: u32,
        p: u32,
    },
    #[error("every point of P^1 over F_{0} is marked; no point is left to move infinity to")]
    NoFreePoint(u32),
    #[error("a constant function is not a self-map")]
    ConstantMap,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Marked points with required ramification orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamProfile {
    points: Vec<PointLabel>,
    orders: Vec<u32>,
}

impl RamProfile {
    pub fn new(points: Vec<PointLabel>, orders: Vec<u32>) -> Result<RamProfile, CensusError> {
        if points.len() != orders.len() {
            return Err(CensusError::LengthMismatch {
                points: points.len(),
                orders: orders.len(),
            });
        }
        if points.is_empty() {
            return Err(CensusError::Empty);
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(CensusError::DuplicatePoint(*p));
            }
        }
        if orders.contains(&0) {
            return Err(CensusError::ZeroOrder);
        }
        let excess: u64 = orders.iter().map(|&e| e as u64 - 1).sum();
        if excess % 2 == 1 {
            return Err(CensusError::Parity(excess));
        }
        Ok(RamProfile { points, orders })
    }

    pub fn points(&self) -> &[PointLabel] {
        &self.points
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// `(sum (e_i - 1) + 2) / 2`.
    pub fn degree(&self) -> u64 {
        (self.orders.iter().map(|&e| e as u64 - 1).sum::<u64>() + 2) / 2
    }

    pub fn points_in(&self, field: &'static GaloisField) -> Result<Vec<ProjPoint>, CensusError> {
        Ok(self
            .points
            .iter()
            .map(|p| p.in_field(field))
            .collect::<Result<_, _>>()?)
    }

    fn check_tame(&self, p: u32) -> Result<(), CensusError> {
        match self.points.iter().zip(&self.orders).find(|(_, &e)| e >= p) {
            Some((&point, &order)) => Err(CensusError::NotTame { point, order, p }),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum CensusStatus {
    Complete,
    /// The search needs `required` steps but only `budget` were allowed.
    Incomplete {
        required: u64,
        budget: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub map: RatMap,
    pub stabilizer: usize,
}

impl Serialize for RatMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (num, den) = self.coefficient_lists();
        let mut st = s.serialize_struct("RatMap", 2)?;
        st.serialize_field("numerator", &num)?;
        st.serialize_field("denominator", &den)?;
        st.end()
    }
}

impl Serialize for Representative {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (num, den) = self.map.coefficient_lists();
        let mut st = s.serialize_struct("Representative", 3)?;
        st.serialize_field("numerator", &num)?;
        st.serialize_field("denominator", &den)?;
        st.serialize_field("stabilizer", &self.stabilizer)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub p: u32,
    pub k: u32,
    pub profile: RamProfile,
    pub degree: u64,
    pub status: CensusStatus,
    /// `None` unless the search ran to completion.
    pub orbit_count: Option<usize>,
    /// Sorted canonical forms, one per orbit.
    pub representatives: Vec<Representative>,
    /// Number of maps over the field with the profile, `sum (q^3 - q) / |Stab|`.
    pub raw_count: Option<u64>,
    pub branches: u64,
    pub candidates: u64,
    pub wild_rejections: u64,
}

impl CensusResult {
    pub fn is_complete(&self) -> bool {
        self.status == CensusStatus::Complete
    }
}

#[derive(Clone, Debug)]
struct Branch {
    /// Fiber index of each marked point.
    fiber_of: Vec<usize>,
    fibers: usize,
    /// Number of value assignments for fibers beyond the third.
    assignments: u64,
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    // restricted growth strings
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            go(i + 1, max.max(b), cur, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut cur, &mut out);
    }
    out
}

fn falling(base: u64, count: usize) -> u64 {
    (0..count as u64).fold(1u64, |acc, i| acc.saturating_mul(base.saturating_sub(i)))
}

fn branches_for(orders: &[u32], d: u64, q: u64) -> Vec<Branch> {
    set_partitions(orders.len())
        .into_iter()
        .filter_map(|fiber_of| {
            let fibers = fiber_of.iter().max().map_or(0, |m| m + 1);
            let mut sums = vec![0u64; fibers];
            for (&b, &e) in fiber_of.iter().zip(orders) {
                sums[b] += e as u64;
            }
            if sums.iter().any(|&s| s > d) {
                return None;
            }
            let assignments = if fibers > 3 {
                falling(q - 2, fibers - 3)
            } else {
                1
            };
            (assignments > 0).then_some(Branch {
                fiber_of,
                fibers,
                assignments,
            })
        })
        .collect()
}

/// Values of the fibers for the `index`-th assignment of a branch.
fn fiber_values(field: &'static GaloisField, fibers: usize, mut index: u64) -> Vec<ProjPoint> {
    let mut values = vec![
        ProjPoint::Finite(field.zero()),
        ProjPoint::Infinity,
        ProjPoint::Finite(field.one()),
    ];
    values.truncate(fibers);
    let mut free: Vec<FieldElement> = field.elements().skip(2).collect();
    for _ in 3..fibers {
        let i = (index % free.len() as u64) as usize;
        index /= free.len() as u64;
        values.push(ProjPoint::Finite(free.remove(i)));
    }
    values
}

/// First `e` coefficients of `f` expanded in powers of `t - s`.
fn taylor(f: &Poly, s: FieldElement, e: usize) -> Vec<FieldElement> {
    let field = f.field();
    let mut cur = f.coeffs().to_vec();
    let mut out = Vec::with_capacity(e);
    for _ in 0..e {
        let mut acc = field.zero();
        let mut quot = vec![field.zero(); cur.len().saturating_sub(1)];
        for i in (0..cur.len()).rev() {
            acc = acc * s + cur[i];
            if i > 0 {
                quot[i - 1] = acc;
            }
        }
        out.push(acc);
        cur = quot;
    }
    out
}

struct Setup {
    num_factor: Poly,
    den_factor: Poly,
    num_len: usize,
    den_len: usize,
    kernel: Vec<Vec<FieldElement>>,
}

fn branch_system(
    field: &'static GaloisField,
    points: &[FieldElement],
    orders: &[u32],
    d: usize,
    branch: &Branch,
    values: &[ProjPoint],
) -> Setup {
    let factor = |fiber: usize| {
        points
            .iter()
            .zip(orders)
            .zip(&branch.fiber_of)
            .filter(|(_, &b)| b == fiber)
            .fold(Poly::one(field), |acc, ((&s, &e), _)| {
                &acc * &Poly::linear(s).pow(e)
            })
    };
    let num_factor = factor(0);
    let den_factor = if branch.fibers > 1 {
        factor(1)
    } else {
        Poly::one(field)
    };
    let num_len = d + 1 - num_factor.degree().unwrap();
    let den_len = d + 1 - den_factor.degree().unwrap();
    let cols = num_len + den_len;
    let mut rows = Vec::new();
    for ((&s, &e), &b) in points.iter().zip(orders).zip(&branch.fiber_of) {
        if b < 2 {
            continue;
        }
        let ProjPoint::Finite(c) = values[b] else {
            unreachable!("only fiber 1 sits over infinity")
        };
        let e = e as usize;
        let columns: Vec<Vec<FieldElement>> = (0..num_len)
            .map(|j| taylor(&(&num_factor * &Poly::monomial(field.one(), j)), s, e))
            .chain((0..den_len).map(|j| taylor(&(&den_factor * &Poly::monomial(-c, j)), s, e)))
            .collect();
        for r in 0..e {
            rows.push(columns.iter().map(|col| col[r]).collect());
        }
    }
    let kernel = linear::kernel(field, rows, cols);
    Setup {
        num_factor,
        den_factor,
        num_len,
        den_len,
        kernel,
    }
}

#[derive(Default)]
struct Tally {
    found: BTreeMap<RatMap, usize>,
    candidates: u64,
    wild: u64,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.found.extend(other.found);
        self.candidates += other.candidates;
        self.wild += other.wild;
        self
    }
}

/// Orbit census for `profile` over `F_{p^k}`.
///
/// `budget` bounds the number of branches plus projective candidates; the
/// bound is checked before any candidate is examined, and an exceeded
/// budget yields [`CensusStatus::Incomplete`] with no count.
pub fn census(
    p: u64,
    k: u32,
    profile: &RamProfile,
    budget: u64,
) -> Result<CensusResult, CensusError> {
    let field = GaloisField::get(p, k)?;
    let p32 = field.characteristic();
    profile.check_tame(p32)?;
    let points = profile.points_in(field)?;
    let d = profile.degree();
    let q = field.order() as u64;

    // move a marked infinity to a finite point by pre-composition with t -> 1/(t - c)
    let relocate = if points.contains(&ProjPoint::Infinity) {
        let c = field
            .elements()
            .find(|c| !points.contains(&ProjPoint::Finite(*c)))
            .ok_or(CensusError::NoFreePoint(field.order()))?;
        Moebius::new(field.zero(), field.one(), field.one(), -c)?
    } else {
        Moebius::identity(field)
    };
    // g = f ∘ relocate^{-1} is ramified at relocate(P_i), and f = g ∘ relocate
    let moved: Vec<FieldElement> = points
        .iter()
        .map(|&pt| {
            relocate
                .apply(pt)
                .finite()
                .expect("no marked point is sent to infinity")
        })
        .collect();
    let moved_profile = RamProfile {
        points: moved
            .iter()
            .map(|&s| ProjPoint::Finite(s).to_label())
            .collect(),
        orders: profile.orders.clone(),
    };

    let branches = branches_for(&profile.orders, d, q);
    let branch_total = branches
        .iter()
        .fold(0u64, |acc, b| acc.saturating_add(b.assignments));
    let mut result = CensusResult {
        p: p32,
        k,
        profile: profile.clone(),
        degree: d,
        status: CensusStatus::Complete,
        orbit_count: None,
        representatives: Vec::new(),
        raw_count: None,
        branches: branch_total,
        candidates: 0,
        wild_rejections: 0,
    };
    if branch_total > budget {
        result.status = CensusStatus::Incomplete {
            required: branch_total,
            budget,
        };
        return Ok(result);
    }

    let work: Vec<(usize, u64)> = branches
        .iter()
        .enumerate()
        .flat_map(|(i, b)| (0..b.assignments).map(move |j| (i, j)))
        .collect();
    let systems: Vec<(usize, Vec<ProjPoint>, Setup)> = work
        .par_iter()
        .filter_map(|&(i, j)| {
            let values = fiber_values(field, branches[i].fibers, j);
            let setup = branch_system(
                field,
                &moved,
                &profile.orders,
                d as usize,
                &branches[i],
                &values,
            );
            (!setup.kernel.is_empty()).then_some((i, values, setup))
        })
        .collect();
    let candidate_total = systems.iter().fold(0u64, |acc, (_, _, s)| {
        acc.saturating_add(linear::projective_size(q, s.kernel.len()))
    });
    let required = branch_total.saturating_add(candidate_total);
    if required > budget {
        result.status = CensusStatus::Incomplete { required, budget };
        return Ok(result);
    }

    let tally = systems
        .par_iter()
        .map(|(_, _, setup)| {
            let mut t = Tally::default();
            for v in linear::projective_points(field, &setup.kernel) {
                t.candidates += 1;
                let a = Poly::new(field, v[..setup.num_len].to_vec());
                let b = Poly::new(
                    field,
                    v[setup.num_len..setup.num_len + setup.den_len].to_vec(),
                );
                let (num, den) = (&setup.num_factor * &a, &setup.den_factor * &b);
                if den.is_zero() {
                    continue;
                }
                let Ok(g) = RatMap::new(RatFunc::new(num, den).expect("nonzero denominator"))
                else {
                    continue;
                };
                let check =
                    check_profile(&g, &moved_profile).expect("relocated points lie in the field");
                if check.wild {
                    t.wild += 1;
                }
                if check.matches {
                    let f = RatMap::new(relocate.pre(g.as_ratfunc()))
                        .expect("pre-composition keeps the degree");
                    let (canon, stab) = pgl2_canonical_with_stabilizer(&f);
                    t.found.insert(canon, stab);
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let group = q * q * q - q;
    result.candidates = tally.candidates;
    result.wild_rejections = tally.wild;
    result.raw_count = Some(tally.found.values().map(|&s| group / s as u64).sum());
    result.orbit_count = Some(tally.found.len());
    result.representatives = tally
        .found
        .into_iter()
        .map(|(map, stabilizer)| Representative { map, stabilizer })
        .collect();
    Ok(result)
}

/// Census results over several extension degrees.
#[derive(Clone, Debug, Serialize)]
pub struct CensusSweep {
    pub results: Vec<CensusResult>,
    /// `count(k) <= count(k')` whenever `k` divides `k'` and both are complete.
    pub monotone: bool,
    /// Count at the largest complete `k`, when some proper divisor of it
    /// in the sweep gives the same count.
    pub stabilized: Option<usize>,
}

/// Runs [`census`] for each `k` in `degrees`. Counts can only grow along
/// subfield inclusions `F_{p^k} ⊂ F_{p^k'}`, i.e. when `k | k'`.
pub fn census_sweep(
    p: u64,
    degrees: &[u32],
    profile: &RamProfile,
    budget: u64,
) -> Result<CensusSweep, CensusError> {
    let results = degrees
        .iter()
        .map(|&k| census(p, k, profile, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let complete: Vec<(u32, usize)> = results
        .iter()
        .filter_map(|r| r.orbit_count.map(|c| (r.k, c)))
        .collect();
    let monotone = complete
        .iter()
        .all(|&(k, c)| complete.iter().all(|&(k2, c2)| k2 % k != 0 || c <= c2));
    let stabilized = complete
        .iter()
        .max_by_key(|(k, _)| *k)
        .and_then(|&(top, c)| {
            complete
                .iter()
                .any(|&(k, c2)| k < top && top % k == 0 && c2 == c)
                .then_some(c)
        });
    Ok(CensusSweep {
        results,
        monotone,
        stabilized,
    })
}
