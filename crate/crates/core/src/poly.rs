//! Dense univariate polynomials over a [`GaloisField`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::field::{FieldElement, GaloisField};

/// A polynomial with ascending coefficients and no trailing zeros.
///
/// The zero polynomial has no coefficients; its degree is `None`, standing in
/// for `-∞`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: &'static GaloisField,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &'static GaloisField, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// Coefficients from integers, reduced into the prime subfield.
    pub fn from_ints(field: &'static GaloisField, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &'static GaloisField) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &'static GaloisField) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// The coordinate `t`.
    pub fn t(field: &'static GaloisField) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Poly {
        let mut coeffs = vec![c.field().zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(c.field(), coeffs)
    }

    /// `t - a`.
    pub fn linear(a: FieldElement) -> Poly {
        Poly::new(a.field(), vec![-a, a.field().one()])
    }

    pub fn field(&self) -> &'static GaloisField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Scalar multiple with leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    /// Formal derivative. In characteristic `p` the `p`-th iterate is zero.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.field.from_int(i as i64) * c)
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * inv;
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, AlgebraError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; the remainder must vanish.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, AlgebraError> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Multiplicity of `a` as a root. The zero polynomial has no finite
    /// multiplicity and returns `None`.
    pub fn root_multiplicity(&self, a: FieldElement) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        // synthetic division by (t - a) until a nonzero remainder appears
        let mut cur = self.coeffs.clone();
        let mut m = 0;
        loop {
            let mut acc = self.field.zero();
            let mut quot = vec![self.field.zero(); cur.len().saturating_sub(1)];
            for i in (0..cur.len()).rev() {
                acc = acc * a + cur[i];
                if i > 0 {
                    quot[i - 1] = acc;
                }
            }
            if !acc.is_zero() {
                return Some(m);
            }
            m += 1;
            cur = quot;
        }
    }

    /// Roots in the coefficient field, in increasing encoding order.
    pub fn roots(&self) -> Vec<FieldElement> {
        if self.is_zero() {
            return Vec::new();
        }
        self.field
            .elements()
            .filter(|&x| self.eval(x).is_zero())
            .collect()
    }

    /// `prod (t - a_i)`.
    pub fn from_roots(field: &'static GaloisField, roots: &[FieldElement]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(field), |acc, &a| &acc * &Poly::linear(a))
    }

    /// Coefficient encodings, ascending.
    pub fn values(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }
}

/// Monic greatest common divisor.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly, AlgebraError> {
    if f.is_zero() && g.is_zero() {
        return Err(AlgebraError::GcdOfZeros);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.field, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{c}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{c}t^{i}")?,
            }
        }
        Ok(())
    }
}
