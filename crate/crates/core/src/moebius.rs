//! Möbius transformations `t -> (a t + b) / (c t + d)`.

use std::fmt;

use crate::error::AlgebraError;
use crate::field::{FieldElement, GaloisField};
use crate::poly::Poly;
use crate::ratfunc::{ProjPoint, RatFunc};

/// An invertible 2x2 matrix acting on `P^1`, up to scalars.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Moebius {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
}

/// Which side of `f` the transformation is composed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `f ∘ σ`: a change of coordinate on the source.
    Pre,
    /// `σ ∘ f`: an automorphism of the image.
    Post,
}

impl Moebius {
    pub fn new(
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Result<Moebius, AlgebraError> {
        if (a * d - b * c).is_zero() {
            return Err(AlgebraError::SingularMoebius);
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn identity(field: &'static GaloisField) -> Moebius {
        Moebius {
            a: field.one(),
            b: field.zero(),
            c: field.zero(),
            d: field.one(),
        }
    }

    /// `t -> 1/t`.
    pub fn swap(field: &'static GaloisField) -> Moebius {
        Moebius {
            a: field.zero(),
            b: field.one(),
            c: field.one(),
            d: field.zero(),
        }
    }

    pub fn translation(shift: FieldElement) -> Moebius {
        let field = shift.field();
        Moebius {
            a: field.one(),
            b: shift,
            c: field.zero(),
            d: field.one(),
        }
    }

    pub fn entries(&self) -> [FieldElement; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn field(&self) -> &'static GaloisField {
        self.a.field()
    }

    pub fn determinant(&self) -> FieldElement {
        self.a * self.d - self.b * self.c
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn apply(&self, point: ProjPoint) -> ProjPoint {
        match point {
            ProjPoint::Finite(t) => {
                let den = self.c * t + self.d;
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite((self.a * t + self.b) / den)
                }
            }
            ProjPoint::Infinity => {
                if self.c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(self.a / self.c)
                }
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        Moebius {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> Moebius {
        Moebius {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// The unique transformation sending `0, ∞, 1` to three distinct points.
    pub fn from_three_points(
        zero_to: ProjPoint,
        inf_to: ProjPoint,
        one_to: ProjPoint,
    ) -> Result<Moebius, AlgebraError> {
        let field = [zero_to, inf_to, one_to]
            .iter()
            .find_map(|p| p.finite())
            .ok_or(AlgebraError::SingularMoebius)?
            .field();
        // columns are homogeneous representatives of the images of 0 and ∞,
        // scaled so that (1:1) lands on `one_to`
        let hom = |p: ProjPoint| match p {
            ProjPoint::Finite(x) => (x, field.one()),
            ProjPoint::Infinity => (field.one(), field.zero()),
        };
        let (x0, y0) = hom(zero_to);
        let (xi, yi) = hom(inf_to);
        let (x1, y1) = hom(one_to);
        // solve λ (xi, yi) + μ (x0, y0) = (x1, y1)
        let det = xi * y0 - x0 * yi;
        if det.is_zero() {
            return Err(AlgebraError::SingularMoebius);
        }
        let lambda = (x1 * y0 - x0 * y1) / det;
        let mu = (xi * y1 - x1 * yi) / det;
        Moebius::new(lambda * xi, mu * x0, lambda * yi, mu * y0)
    }

    /// One representative of every element of `PGL_2(F_q)`, `q^3 - q` in all,
    /// in a fixed order.
    pub fn all(field: &'static GaloisField) -> impl Iterator<Item = Moebius> {
        let elems = field.elements();
        let upper = {
            let elems = elems.clone();
            elems.clone().skip(1).flat_map(move |a| {
                elems.clone().map(move |b| Moebius {
                    a,
                    b,
                    c: field.zero(),
                    d: field.one(),
                })
            })
        };
        let general = {
            let e1 = elems.clone();
            e1.flat_map(move |a| {
                let e2 = elems.clone();
                let e3 = elems.clone();
                e2.flat_map(move |b| {
                    e3.clone().filter_map(move |d| {
                        let m = Moebius {
                            a,
                            b,
                            c: field.one(),
                            d,
                        };
                        (!m.determinant().is_zero()).then_some(m)
                    })
                })
            })
        };
        upper.chain(general)
    }

    /// `σ ∘ f`. Fails only when `f` is the constant sent to `∞` by `σ`.
    pub fn post(&self, f: &RatFunc) -> Result<RatFunc, AlgebraError> {
        let n = f.numerator();
        let d = f.denominator();
        let num = &n.scale(self.a) + &d.scale(self.b);
        let den = &n.scale(self.c) + &d.scale(self.d);
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // invertibility keeps the pair coprime
        Ok(RatFunc::from_coprime(num, den))
    }

    /// `f ∘ σ`.
    pub fn pre(&self, f: &RatFunc) -> RatFunc {
        let field = self.field();
        let deg = f.degree();
        let lin_num = Poly::new(field, vec![self.b, self.a]);
        let lin_den = Poly::new(field, vec![self.d, self.c]);
        let num_pows: Vec<Poly> = (0..=deg).map(|i| lin_num.pow(i as u32)).collect();
        let den_pows: Vec<Poly> = (0..=deg).map(|i| lin_den.pow(i as u32)).collect();
        let homogenize = |p: &Poly| {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(field), |acc, (i, &c)| {
                    &acc + &(&num_pows[i] * &den_pows[deg - i]).scale(c)
                })
        };
        RatFunc::new(homogenize(f.numerator()), homogenize(f.denominator()))
            .expect("invertible substitution keeps the denominator nonzero")
    }
}

/// `σ ∘ f` or `f ∘ σ`, reduced; the degree of `f` is preserved.
///
/// Post-composing a constant `c` with `σ(c) = ∞` has no finite
/// representative and fails with [`AlgebraError::DivisionByZero`].
pub fn moebius_conjugate(
    f: &RatFunc,
    sigma: &Moebius,
    side: Side,
) -> Result<RatFunc, AlgebraError> {
    match side {
        Side::Post => sigma.post(f),
        Side::Pre => Ok(sigma.pre(f)),
    }
}

impl fmt::Debug for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
