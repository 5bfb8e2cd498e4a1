//! Rank-2 logarithmic connections `∇ = d/dt + A(t)` on the trivialized
//! affine chart of `P^1` over `F_p`.
//!
//! The connection acts on column vectors, `∇(s) = s' + A s`. The underlying
//! bundle is declared as `O(a) ⊕ O(b)` with `a ≥ b`; the first basis vector
//! spans the `O(a)` summand. All marked points are finite.

mod random;
mod subbundle;

pub use random::{random_connection, random_scalar_twist};
pub use subbundle::{saturated_line_subbundles, LineSubbundle};

use std::fmt;

use thiserror::Error;

use crate::error::AlgebraError;
use crate::field::{FieldElement, GaloisField};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

/// A 2x2 matrix, row-major.
pub type Matrix2<T> = [[T; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error("connections are defined over a prime field, got F_{p}^{k}")]
    NotPrimeField { p: u32, k: u32 },
    #[error("marked point {0} is listed twice")]
    DuplicatePoint(u32),
    #[error("entry A[{row}][{col}] = {entry} is not logarithmic: {reason}")]
    NotLogarithmic {
        row: usize,
        col: usize,
        entry: String,
        reason: String,
    },
    #[error("splitting type ({a}, {b}) must satisfy a >= b")]
    SplittingOrder { a: i64, b: i64 },
    #[error("{0} is not a marked point")]
    NotMarked(u32),
    #[error("semistable; Kodaira-Spencer undefined for level 0 convention")]
    Semistable,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Connection data: prime field, marked points, matrix `A(t)` and declared
/// splitting type `(a, b)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LogConnection {
    field: &'static GaloisField,
    points: Vec<FieldElement>,
    matrix: Matrix2<RatFunc>,
    splitting: (i64, i64),
}

impl LogConnection {
    /// Validates the logarithmic condition: every entry has at most simple
    /// poles, all of them at marked points.
    pub fn new(
        points: Vec<FieldElement>,
        matrix: Matrix2<RatFunc>,
        splitting: (i64, i64),
    ) -> Result<LogConnection, ConnectionError> {
        let field = matrix[0][0].field();
        if !field.is_prime_field() {
            return Err(ConnectionError::NotPrimeField {
                p: field.characteristic(),
                k: field.degree(),
            });
        }
        for (i, a) in points.iter().enumerate() {
            if points[..i].contains(a) {
                return Err(ConnectionError::DuplicatePoint(a.value()));
            }
        }
        let (a, b) = splitting;
        if a < b {
            return Err(ConnectionError::SplittingOrder { a, b });
        }
        let divisor = Poly::from_roots(field, &points);
        for (row, entries) in matrix.iter().enumerate() {
            for (col, entry) in entries.iter().enumerate() {
                if !entry.denominator().divides(&divisor) {
                    let reason = match entry
                        .denominator()
                        .roots()
                        .iter()
                        .find(|r| entry.pole_order(**r) > 1)
                    {
                        Some(r) => format!("pole of order {} at {r}", entry.pole_order(*r)),
                        None => "pole away from the marked points".to_string(),
                    };
                    return Err(ConnectionError::NotLogarithmic {
                        row,
                        col,
                        entry: entry.to_string(),
                        reason,
                    });
                }
            }
        }
        Ok(LogConnection {
            field,
            points,
            matrix,
            splitting,
        })
    }

    pub fn field(&self) -> &'static GaloisField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn matrix(&self) -> &Matrix2<RatFunc> {
        &self.matrix
    }

    pub fn splitting(&self) -> (i64, i64) {
        self.splitting
    }

    /// `A + c·I` for a scalar function `c`, keeping points and splitting.
    pub fn twisted(&self, c: &RatFunc) -> Result<LogConnection, ConnectionError> {
        let mut m = self.matrix.clone();
        m[0][0] = &m[0][0] + c;
        m[1][1] = &m[1][1] + c;
        LogConnection::new(self.points.clone(), m, self.splitting)
    }

    fn require_marked(&self, point: FieldElement) -> Result<(), ConnectionError> {
        if self.points.contains(&point) {
            Ok(())
        } else {
            Err(ConnectionError::NotMarked(point.value()))
        }
    }
}

impl fmt::Debug for LogConnection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LogConnection")
            .field("field", &self.field)
            .field("points", &self.points)
            .field("matrix", &self.matrix)
            .field("splitting", &self.splitting)
            .finish()
    }
}

/// `Res_P ∇ = ((t - P) A)(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueMatrix {
    pub point: FieldElement,
    pub entries: Matrix2<FieldElement>,
}

impl ResidueMatrix {
    pub fn trace(&self) -> FieldElement {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// `Tr(R^2)`.
    pub fn trace_of_square(&self) -> FieldElement {
        let [[a, b], [c, d]] = self.entries;
        a * a + b * c + c * b + d * d
    }
}

fn residue_of(entry: &RatFunc, point: FieldElement) -> FieldElement {
    if entry.pole_order(point) == 0 {
        return point.field().zero();
    }
    let rest = entry
        .denominator()
        .exact_div(&Poly::linear(point))
        .expect("t - P is nonzero");
    entry.numerator().eval(point) / rest.eval(point)
}

pub fn residue_matrix(
    conn: &LogConnection,
    point: FieldElement,
) -> Result<ResidueMatrix, ConnectionError> {
    conn.require_marked(point)?;
    let m = &conn.matrix;
    let entries = [
        [residue_of(&m[0][0], point), residue_of(&m[0][1], point)],
        [residue_of(&m[1][0], point), residue_of(&m[1][1], point)],
    ];
    Ok(ResidueMatrix { point, entries })
}

/// The radius at a marked point: `ρ^2 = Tr(R^2) / 2`, with `ρ` up to sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radius {
    pub point: FieldElement,
    pub squared: FieldElement,
    /// Representative in `[0, (p-1)/2]`; `None` when `ρ^2` is a non-square,
    /// i.e. `ρ` only exists in `F_{p^2}`.
    pub representative: Option<u32>,
    pub residue_nonzero: bool,
}

impl Radius {
    pub fn is_split(&self) -> bool {
        self.representative.is_some()
    }
}

pub fn radius_at(conn: &LogConnection, point: FieldElement) -> Result<Radius, ConnectionError> {
    let r = residue_matrix(conn, point)?;
    let field = conn.field;
    let squared = r.trace_of_square() / field.from_int(2);
    let half = (field.characteristic() - 1) / 2;
    let representative = (0..=half).find(|&s| {
        let s = field.from_int(s as i64);
        s * s == squared
    });
    Ok(Radius {
        point,
        squared,
        representative,
        residue_nonzero: !r.is_zero(),
    })
}

/// The p-curvature `(∇_{d/dt})^p` as a matrix of rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PCurvatureMatrix {
    entries: Matrix2<RatFunc>,
}

impl PCurvatureMatrix {
    pub fn new(entries: Matrix2<RatFunc>) -> PCurvatureMatrix {
        PCurvatureMatrix { entries }
    }

    pub fn entries(&self) -> &Matrix2<RatFunc> {
        &self.entries
    }

    pub fn trace(&self) -> RatFunc {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(RatFunc::is_zero)
    }

    /// Largest pole order of any entry at `point`.
    pub fn pole_order_at(&self, point: FieldElement) -> usize {
        self.entries
            .iter()
            .flatten()
            .map(|e| e.pole_order(point))
            .max()
            .unwrap_or(0)
    }

    /// Every root of a denominator, over the coefficient field.
    pub fn pole_locations(&self) -> Vec<FieldElement> {
        let mut out: Vec<FieldElement> = self
            .entries
            .iter()
            .flatten()
            .flat_map(|e| e.denominator().roots())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `true` when every denominator splits into linear factors over the
    /// field, so [`Self::pole_locations`] sees all poles.
    pub fn denominators_split(&self) -> bool {
        self.entries.iter().flatten().all(|e| {
            let den = e.denominator();
            let found: usize = den
                .roots()
                .iter()
                .map(|&r| den.root_multiplicity(r).unwrap())
                .sum();
            Some(found) == den.degree().or(Some(0))
        })
    }
}

/// `M - (Tr M / 2) I`.
pub fn traceless_part(m: &PCurvatureMatrix) -> PCurvatureMatrix {
    let field = m.entries[0][0].field();
    let half_trace = m
        .trace()
        .scale(field.from_int(2).inverse().expect("p is odd"));
    let mut e = m.entries.clone();
    e[0][0] = &e[0][0] - &half_trace;
    e[1][1] = &e[1][1] - &half_trace;
    PCurvatureMatrix { entries: e }
}

fn mat_map<T, U>(m: &Matrix2<T>, f: impl Fn(&T) -> U) -> Matrix2<U> {
    [[f(&m[0][0]), f(&m[0][1])], [f(&m[1][0]), f(&m[1][1])]]
}

fn poly_mat_mul(x: &Matrix2<Poly>, y: &Matrix2<Poly>) -> Matrix2<Poly> {
    let e = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// p-curvature by the recursion `M_1 = A`, `M_{k+1} = M_k' + A M_k`.
///
/// The recursion is run on numerators over the common denominator
/// `D = prod (t - P_i)`: with `A = B / D` and `M_k = N_k / D^k`,
/// `N_{k+1} = N_k' D - k D' N_k + B N_k`.
pub fn p_curvature(conn: &LogConnection) -> PCurvatureMatrix {
    let field = conn.field;
    let p = field.characteristic();
    let d = Poly::from_roots(field, &conn.points);
    let d_prime = d.derivative();
    let b = mat_map(&conn.matrix, |e| {
        e.numerator() * &d.exact_div(e.denominator()).expect("logarithmic entry")
    });
    let mut n = b.clone();
    for k in 1..p {
        let kd = d_prime.scale(field.from_int(k as i64));
        let bn = poly_mat_mul(&b, &n);
        n = [0, 1].map(|i| {
            [0, 1].map(|j| &(&(&n[i][j].derivative() * &d) - &(&kd * &n[i][j])) + &bn[i][j])
        });
    }
    let dp = d.pow(p);
    let entries = mat_map(&n, |e| {
        RatFunc::new(e.clone(), dp.clone()).expect("D^p is nonzero")
    });
    PCurvatureMatrix { entries }
}

/// `true` iff the p-curvature vanishes identically.
pub fn is_dormant(conn: &LogConnection) -> bool {
    p_curvature(conn).is_zero()
}

/// The determinant connection `d/dt + Tr A` is regular at every marked point
/// and has vanishing p-curvature.
pub fn check_p_trivial_determinant(conn: &LogConnection) -> bool {
    let tr = &conn.matrix[0][0] + &conn.matrix[1][1];
    if !tr.is_polynomial() {
        return false;
    }
    let tr = tr.numerator().clone();
    let mut m = tr.clone();
    for _ in 1..conn.p() {
        m = &m.derivative() + &(&tr * &m);
    }
    m.is_zero()
}

/// The Kodaira–Spencer entry `A_21`: the map `L -> (E/L) ⊗ Ω(log)` induced
/// on the destabilizing summand `L = O(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaSpencer {
    pub entry: RatFunc,
    pub nonzero: bool,
    /// For each marked point, whether `A_21` has a genuine simple pole there.
    pub iso_at: Vec<(FieldElement, bool)>,
}

impl KodairaSpencer {
    pub fn iso_at_all_points(&self) -> bool {
        self.iso_at.iter().all(|(_, iso)| *iso)
    }
}

pub fn kodaira_spencer(conn: &LogConnection) -> Result<KodairaSpencer, ConnectionError> {
    let (a, b) = conn.splitting;
    if a == b {
        return Err(ConnectionError::Semistable);
    }
    let entry = conn.matrix[1][0].clone();
    let iso_at = conn
        .points
        .iter()
        .map(|&pt| (pt, !residue_of(&entry, pt).is_zero()))
        .collect();
    Ok(KodairaSpencer {
        nonzero: !entry.is_zero(),
        entry,
        iso_at,
    })
}

/// Level of the underlying bundle, stored doubled so half-integers stay exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub doubled: i64,
    /// Present when the bundle is unstable (`a > b`).
    pub kodaira_spencer: Option<KodairaSpencer>,
    /// `ℓ = (r - 2) / 2`, the indigenous level on a genus-0 curve with `r`
    /// marked points.
    pub indigenous: bool,
}

impl Level {
    /// `κ ≠ 0` and `κ` an isomorphism at every marked point; vacuous at level 0.
    pub fn meets_level_conditions(&self) -> bool {
        self.kodaira_spencer
            .as_ref()
            .is_none_or(|ks| ks.nonzero && ks.iso_at_all_points())
    }
}

pub fn level(conn: &LogConnection) -> Level {
    let (a, b) = conn.splitting;
    let doubled = a - b;
    let kodaira_spencer = (a > b).then(|| kodaira_spencer(conn).expect("a > b"));
    let indigenous = doubled == conn.points.len() as i64 - 2;
    Level {
        doubled,
        kodaira_spencer,
        indigenous,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> &'static GaloisField {
        GaloisField::prime(p).unwrap()
    }

    fn diag(a: RatFunc, d: RatFunc) -> Matrix2<RatFunc> {
        let z = RatFunc::zero(a.field());
        [[a, z.clone()], [z, d]]
    }

    fn zero_matrix(field: &'static GaloisField) -> Matrix2<RatFunc> {
        diag(RatFunc::zero(field), RatFunc::zero(field))
    }

    fn pole(field: &'static GaloisField, c: i64, at: i64) -> RatFunc {
        RatFunc::simple_pole(field.from_int(c), field.from_int(at))
    }

    /// Direct recursion on rational functions, independent of the
    /// common-denominator route.
    fn p_curvature_oracle(conn: &LogConnection) -> Matrix2<RatFunc> {
        let a = conn.matrix();
        let mul = |x: &Matrix2<RatFunc>, y: &Matrix2<RatFunc>| {
            let e = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
            [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
        };
        let mut m = a.clone();
        for _ in 1..conn.p() {
            let am = mul(a, &m);
            m = [0, 1].map(|i| [0, 1].map(|j| &m[i][j].derivative() + &am[i][j]));
        }
        m
    }

    #[test]
    fn residue_examples() {
        let f5 = f(5);
        let conn = LogConnection::new(
            vec![f5.zero()],
            diag(pole(f5, 1, 0), pole(f5, -1, 0)),
            (0, 0),
        )
        .unwrap();
        let r = residue_matrix(&conn, f5.zero()).unwrap();
        assert_eq!(
            r.entries,
            [[f5.one(), f5.zero()], [f5.zero(), f5.from_int(-1)]]
        );

        let zero = LogConnection::new(vec![f5.zero()], zero_matrix(f5), (0, 0)).unwrap();
        assert!(residue_matrix(&zero, f5.zero()).unwrap().is_zero());

        let f7 = f(7);
        let mut m = zero_matrix(f7);
        m[0][1] = pole(f7, 1, 1);
        let conn = LogConnection::new(vec![f7.one()], m, (0, 0)).unwrap();
        let r = residue_matrix(&conn, f7.one()).unwrap();
        assert_eq!(r.entries, [[f7.zero(), f7.one()], [f7.zero(), f7.zero()]]);
    }

    #[test]
    fn residue_at_unmarked_point_fails() {
        let f5 = f(5);
        let conn = LogConnection::new(vec![f5.zero()], zero_matrix(f5), (0, 0)).unwrap();
        assert_eq!(
            residue_matrix(&conn, f5.one()).unwrap_err(),
            ConnectionError::NotMarked(1)
        );
    }

    #[test]
    fn double_poles_and_stray_poles_are_rejected() {
        let f5 = f(5);
        let mut m = zero_matrix(f5);
        m[0][0] = RatFunc::from_ints(f5, &[1], &[0, 0, 1]).unwrap();
        assert!(matches!(
            LogConnection::new(vec![f5.zero()], m, (0, 0)),
            Err(ConnectionError::NotLogarithmic { row: 0, col: 0, .. })
        ));
        let mut m = zero_matrix(f5);
        m[1][0] = pole(f5, 1, 2);
        assert!(matches!(
            LogConnection::new(vec![f5.zero()], m, (0, 0)),
            Err(ConnectionError::NotLogarithmic { row: 1, col: 0, .. })
        ));
        assert_eq!(
            LogConnection::new(vec![f5.zero(), f5.zero()], zero_matrix(f5), (0, 0)).unwrap_err(),
            ConnectionError::DuplicatePoint(0)
        );
        assert_eq!(
            LogConnection::new(vec![], zero_matrix(f5), (0, 1)).unwrap_err(),
            ConnectionError::SplittingOrder { a: 0, b: 1 }
        );
    }

    #[test]
    fn extension_fields_are_rejected() {
        let f9 = GaloisField::get(3, 2).unwrap();
        assert!(matches!(
            LogConnection::new(vec![], zero_matrix(f9), (0, 0)),
            Err(ConnectionError::NotPrimeField { p: 3, k: 2 })
        ));
    }

    #[test]
    fn radius_examples() {
        let f5 = f(5);
        let conn = LogConnection::new(
            vec![f5.zero()],
            diag(pole(f5, 1, 0), pole(f5, -1, 0)),
            (0, 0),
        )
        .unwrap();
        let r = radius_at(&conn, f5.zero()).unwrap();
        assert_eq!(
            (r.squared, r.representative, r.residue_nonzero),
            (f5.one(), Some(1), true)
        );

        let f7 = f(7);
        let conn = LogConnection::new(
            vec![f7.zero()],
            diag(pole(f7, 2, 0), pole(f7, -2, 0)),
            (0, 0),
        )
        .unwrap();
        let r = radius_at(&conn, f7.zero()).unwrap();
        assert_eq!((r.squared, r.representative), (f7.from_int(4), Some(2)));

        let mut m = zero_matrix(f7);
        m[0][1] = pole(f7, 1, 0);
        let conn = LogConnection::new(vec![f7.zero()], m, (0, 0)).unwrap();
        let r = radius_at(&conn, f7.zero()).unwrap();
        assert_eq!(
            (r.squared, r.representative, r.residue_nonzero),
            (f7.zero(), Some(0), true)
        );
    }

    #[test]
    fn non_square_radius_is_flagged() {
        // R = [[0, 1], [2, 0]]: Tr R^2 = 4, so ρ^2 = 2, a non-square mod 5
        let f5 = f(5);
        let mut m = zero_matrix(f5);
        m[0][1] = pole(f5, 1, 0);
        m[1][0] = pole(f5, 2, 0);
        let conn = LogConnection::new(vec![f5.zero()], m, (0, 0)).unwrap();
        let r = radius_at(&conn, f5.zero()).unwrap();
        assert_eq!(r.squared, f5.from_int(2));
        assert!(!r.is_split());
    }

    #[test]
    fn p_curvature_examples() {
        for p in [3, 5, 7] {
            let fp = f(p);
            let zero = LogConnection::new(vec![fp.zero()], zero_matrix(fp), (0, 0)).unwrap();
            assert!(p_curvature(&zero).is_zero());
            assert!(is_dormant(&zero));
            for c in 1..p as i64 {
                let cst = RatFunc::constant(fp.from_int(c));
                let conn =
                    LogConnection::new(vec![], diag(cst.clone(), cst.clone()), (0, 0)).unwrap();
                let m = p_curvature(&conn);
                assert_eq!(m.entries(), &diag(cst.clone(), cst.clone()));
                assert_eq!(m.entries(), &p_curvature_oracle(&conn));
                assert!(!is_dormant(&conn));
            }
            for lambda in 0..p as i64 {
                let e = pole(fp, lambda, 0);
                let conn = LogConnection::new(vec![fp.zero()], diag(e.clone(), e), (0, 0)).unwrap();
                assert!(p_curvature_oracle(&conn)
                    .iter()
                    .flatten()
                    .all(RatFunc::is_zero));
                assert!(is_dormant(&conn));
            }
        }
    }

    #[test]
    fn p_curvature_matches_direct_recursion() {
        let f5 = f(5);
        let pts = vec![f5.zero(), f5.one(), f5.from_int(3)];
        let m = [
            [
                RatFunc::from_ints(f5, &[1, 2], &[0, -1, 1]).unwrap(),
                RatFunc::from_ints(f5, &[3], &[-3, 1]).unwrap(),
            ],
            [
                RatFunc::from_ints(f5, &[0, 0, 4], &[1]).unwrap(),
                pole(f5, 2, 1),
            ],
        ];
        let conn = LogConnection::new(pts, m, (1, 0)).unwrap();
        assert_eq!(p_curvature(&conn).entries(), &p_curvature_oracle(&conn));
    }

    #[test]
    fn p_trivial_determinant_examples() {
        let f5 = f(5);
        let zero = LogConnection::new(vec![f5.zero()], zero_matrix(f5), (0, 0)).unwrap();
        assert!(check_p_trivial_determinant(&zero));
        let traceless = LogConnection::new(
            vec![f5.zero()],
            diag(pole(f5, 1, 0), pole(f5, -1, 0)),
            (0, 0),
        )
        .unwrap();
        assert!(check_p_trivial_determinant(&traceless));
        let bad = LogConnection::new(
            vec![f5.zero()],
            diag(pole(f5, 1, 0), RatFunc::zero(f5)),
            (0, 0),
        )
        .unwrap();
        assert!(!check_p_trivial_determinant(&bad));
        // regular trace with nonzero p-curvature: Tr A = 1
        let one = RatFunc::one(f5);
        let regular = LogConnection::new(vec![], diag(one, RatFunc::zero(f5)), (0, 0)).unwrap();
        assert!(!check_p_trivial_determinant(&regular));
    }

    #[test]
    fn kodaira_spencer_examples() {
        let f5 = f(5);
        let p1 = f5.from_int(2);
        let mut m = zero_matrix(f5);
        let horizontal = LogConnection::new(vec![p1], m.clone(), (1, -1)).unwrap();
        let ks = kodaira_spencer(&horizontal).unwrap();
        assert!(!ks.nonzero);
        assert_eq!(ks.iso_at, vec![(p1, false)]);

        m[1][0] = RatFunc::simple_pole(f5.one(), p1);
        let ks =
            kodaira_spencer(&LogConnection::new(vec![p1], m.clone(), (1, -1)).unwrap()).unwrap();
        assert!(ks.nonzero && ks.iso_at_all_points());

        m[1][0] = RatFunc::one(f5);
        let ks = kodaira_spencer(&LogConnection::new(vec![p1], m, (1, -1)).unwrap()).unwrap();
        assert!(ks.nonzero && !ks.iso_at_all_points());

        let semistable = LogConnection::new(vec![p1], zero_matrix(f5), (0, 0)).unwrap();
        assert_eq!(
            kodaira_spencer(&semistable).unwrap_err(),
            ConnectionError::Semistable
        );
    }

    #[test]
    fn level_examples() {
        let f7 = f(7);
        let semistable = LogConnection::new(vec![f7.zero()], zero_matrix(f7), (0, 0)).unwrap();
        let l = level(&semistable);
        assert_eq!(l.doubled, 0);
        assert!(l.kodaira_spencer.is_none());

        for r in [4i64, 6] {
            let pts: Vec<_> = (0..r).map(|i| f7.from_int(i)).collect();
            let conn = LogConnection::new(pts, zero_matrix(f7), (r / 2 - 1, -r / 2 + 1)).unwrap();
            let l = level(&conn);
            assert_eq!(l.doubled, r - 2);
            assert!(l.indigenous);
        }

        let pts: Vec<_> = (0..6).map(|i| f7.from_int(i)).collect();
        let conn = LogConnection::new(pts, zero_matrix(f7), (2, 0)).unwrap();
        let l = level(&conn);
        assert_eq!(l.doubled, 2);
        assert!(!l.indigenous);
        assert!(!l.meets_level_conditions());
    }

    #[test]
    fn traceless_part_examples() {
        let f5 = f(5);
        let one = RatFunc::one(f5);
        let id = PCurvatureMatrix::new(diag(one.clone(), one));
        assert!(traceless_part(&id).is_zero());

        let g = RatFunc::from_ints(f5, &[1, 2], &[0, 1]).unwrap();
        let tl = PCurvatureMatrix::new(diag(g.clone(), -&g));
        assert_eq!(traceless_part(&tl), tl);

        let m = PCurvatureMatrix::new(diag(g.clone(), RatFunc::zero(f5)));
        let half = g.scale(f5.from_int(3)); // 1/2 = 3 mod 5
        assert_eq!(traceless_part(&m).entries(), &diag(half.clone(), -&half));
        assert!(traceless_part(&m).trace().is_zero());
    }
}
