//! Rational functions in one variable and points of the projective line.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::field::{FieldElement, GaloisField};
use crate::poly::{poly_gcd, Poly};

/// A point of `P^1` over a finite field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ProjPoint {
    Finite(FieldElement),
    Infinity,
}

impl ProjPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn finite(&self) -> Option<FieldElement> {
        match self {
            ProjPoint::Finite(a) => Some(*a),
            ProjPoint::Infinity => None,
        }
    }

    /// Every point of `P^1(F_q)`: finite points in encoding order, then infinity.
    pub fn all(field: &'static GaloisField) -> impl Iterator<Item = ProjPoint> {
        field
            .elements()
            .map(ProjPoint::Finite)
            .chain(std::iter::once(ProjPoint::Infinity))
    }

    /// Field-independent label of this point.
    pub fn to_label(&self) -> PointLabel {
        match self {
            ProjPoint::Finite(a) => PointLabel::Finite(a.value() as u64),
            ProjPoint::Infinity => PointLabel::Infinity,
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(a) => write!(f, "{a}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Field-independent name of a point: an element encoding or `inf`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PointLabel {
    Finite(u64),
    Infinity,
}

impl PointLabel {
    pub fn in_field(&self, field: &'static GaloisField) -> Result<ProjPoint, AlgebraError> {
        match self {
            PointLabel::Finite(v) => Ok(ProjPoint::Finite(field.element(*v)?)),
            PointLabel::Infinity => Ok(ProjPoint::Infinity),
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Finite(v) => write!(f, "{v}"),
            PointLabel::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for PointLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(PointLabel::Infinity);
        }
        s.parse::<u64>()
            .map(PointLabel::Finite)
            .map_err(|_| format!("invalid point `{s}` (expected a nonnegative integer or `inf`)"))
    }
}

impl From<PointLabel> for String {
    fn from(p: PointLabel) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for PointLabel {
    type Error = String;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// A rational function `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// The representation is unique, so `==` is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero(num.field()));
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(RatFunc::from_coprime(num, den))
    }

    /// Normalizes the scalar only; the caller guarantees coprimality.
    pub(crate) fn from_coprime(num: Poly, den: Poly) -> RatFunc {
        let lc = den.leading().expect("denominator is nonzero");
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.inverse().expect("leading coefficient is nonzero");
        RatFunc {
            num: num.scale(inv),
            den: den.scale(inv),
        }
    }

    pub fn from_poly(num: Poly) -> RatFunc {
        let field = num.field();
        RatFunc {
            num,
            den: Poly::one(field),
        }
    }

    pub fn zero(field: &'static GaloisField) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn one(field: &'static GaloisField) -> RatFunc {
        RatFunc::from_poly(Poly::one(field))
    }

    pub fn constant(c: FieldElement) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn t(field: &'static GaloisField) -> RatFunc {
        RatFunc::from_poly(Poly::t(field))
    }

    /// `c / (t - a)`.
    pub fn simple_pole(c: FieldElement, a: FieldElement) -> RatFunc {
        RatFunc::new(Poly::constant(c), Poly::linear(a)).expect("t - a is nonzero")
    }

    /// Builds from integer coefficient lists (ascending, reduced mod p).
    pub fn from_ints(
        field: &'static GaloisField,
        num: &[i64],
        den: &[i64],
    ) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(Poly::from_ints(field, num), Poly::from_ints(field, den))
    }

    pub fn field(&self) -> &'static GaloisField {
        self.num.field()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `max(deg num, deg den)`; constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    pub fn derivative(&self) -> RatFunc {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFunc::new(num, den).expect("squared denominator is nonzero")
    }

    pub fn scale(&self, c: FieldElement) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.field());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inverse(&self) -> Result<RatFunc, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgebraError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Pole order at a finite point (0 when regular).
    pub fn pole_order(&self, a: FieldElement) -> usize {
        self.den.root_multiplicity(a).unwrap_or(0)
    }

    /// Value at a point of `P^1`; poles map to infinity.
    pub fn eval(&self, point: ProjPoint) -> ProjPoint {
        match point {
            ProjPoint::Finite(a) => {
                let d = self.den.eval(a);
                if d.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(self.num.eval(a) / d)
                }
            }
            // s = 1/t: compare degrees
            ProjPoint::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree();
                match dn.cmp(&dd) {
                    Ordering::Greater => ProjPoint::Infinity,
                    Ordering::Less => ProjPoint::Finite(self.field().zero()),
                    Ordering::Equal => ProjPoint::Finite(self.num.leading().unwrap()),
                }
            }
        }
    }

    /// Comparison key of the fixed total order used for canonical forms:
    /// denominator length, numerator length, then denominator and numerator
    /// coefficients from the top degree down.
    pub fn order_key(&self) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.num.coeffs().len() + self.den.coeffs().len() + 2);
        key.push(self.den.coeffs().len() as u32);
        key.push(self.num.coeffs().len() as u32);
        key.extend(self.den.coeffs().iter().rev().map(|c| c.value()));
        key.extend(self.num.coeffs().iter().rev().map(|c| c.value()));
        key
    }
}

/// Value of `f` at `point` on the projective line.
pub fn proj_eval(f: &RatFunc, point: ProjPoint) -> ProjPoint {
    f.eval(point)
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_is_unique() {
        let f5 = GaloisField::prime(5).unwrap();
        // (2t^2 - 2) / (2t - 2) = t + 1
        let a = RatFunc::from_ints(f5, &[-2, 0, 2], &[-2, 2]).unwrap();
        let b = RatFunc::from_ints(f5, &[1, 1], &[1]).unwrap();
        assert_eq!(a, b);
        assert!(a.denominator().is_monic());
    }

    #[test]
    fn proj_eval_examples() {
        let f5 = GaloisField::prime(5).unwrap();
        let inv_t = RatFunc::from_ints(f5, &[1], &[0, 1]).unwrap();
        assert_eq!(
            proj_eval(&inv_t, ProjPoint::Finite(f5.zero())),
            ProjPoint::Infinity
        );
        let sq = RatFunc::from_ints(f5, &[0, 0, 1], &[1]).unwrap();
        assert_eq!(proj_eval(&sq, ProjPoint::Infinity), ProjPoint::Infinity);
        let m = RatFunc::from_ints(f5, &[-1, 1], &[1, 1]).unwrap();
        assert_eq!(
            proj_eval(&m, ProjPoint::Finite(f5.one())),
            ProjPoint::Finite(f5.zero())
        );
        assert_eq!(
            proj_eval(&m, ProjPoint::Infinity),
            ProjPoint::Finite(f5.one())
        );
        assert_eq!(
            proj_eval(&inv_t, ProjPoint::Infinity),
            ProjPoint::Finite(f5.zero())
        );
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let f3 = GaloisField::prime(3).unwrap();
        assert_eq!(
            RatFunc::from_ints(f3, &[1], &[0]).unwrap_err(),
            AlgebraError::DivisionByZero
        );
        assert_eq!(
            RatFunc::zero(f3).inverse().unwrap_err(),
            AlgebraError::DivisionByZero
        );
    }

    #[test]
    fn point_labels_parse() {
        assert_eq!("inf".parse::<PointLabel>().unwrap(), PointLabel::Infinity);
        assert_eq!(" 4".parse::<PointLabel>().unwrap(), PointLabel::Finite(4));
        assert!("-1".parse::<PointLabel>().is_err());
    }

    #[test]
    fn quotient_rule() {
        let f7 = GaloisField::prime(7).unwrap();
        // d/dt (1/t) = -1/t^2
        let inv_t = RatFunc::from_ints(f7, &[1], &[0, 1]).unwrap();
        assert_eq!(
            inv_t.derivative(),
            RatFunc::from_ints(f7, &[-1], &[0, 0, 1]).unwrap()
        );
    }
}
