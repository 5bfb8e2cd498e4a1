//! Line sub-bundles of a split rank-2 bundle on `P^1`.
//!
//! A map `O(c) -> O(a) ⊕ O(b)` is a pair of sections `(s_1, s_2)` of
//! `O(a - c)` and `O(b - c)`, written as polynomials of degree at most
//! `a - c` and `b - c` in the affine coordinate. Its image is a sub-bundle
//! (saturated) iff the two sections have no common zero on `P^1`,
//! including `∞`, where a section of `O(m)` vanishes iff its degree is below `m`.

use crate::field::GaloisField;
use crate::poly::{poly_gcd, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSubbundle {
    pub degree: i64,
    pub first: Poly,
    pub second: Poly,
}

impl LineSubbundle {
    /// The image is the declared `O(a)` summand.
    pub fn is_first_summand(&self) -> bool {
        self.second.is_zero()
    }
}

fn sections(field: &'static GaloisField, m: i64) -> Vec<Poly> {
    if m < 0 {
        return vec![Poly::zero(field)];
    }
    let q = field.order() as u64;
    let len = (m + 1) as u32;
    (0..q.pow(len))
        .map(|mut idx| {
            let coeffs = (0..len)
                .map(|_| {
                    let c = field.element(idx % q).unwrap();
                    idx /= q;
                    c
                })
                .collect();
            Poly::new(field, coeffs)
        })
        .collect()
}

fn vanishes_at_infinity(s: &Poly, m: i64) -> bool {
    match s.degree() {
        None => true,
        Some(d) => (d as i64) < m,
    }
}

/// Every saturated embedding `O(c) -> O(a) ⊕ O(b)` over `field`, not up to
/// scalars.
pub fn saturated_line_subbundles(
    field: &'static GaloisField,
    a: i64,
    b: i64,
    c: i64,
) -> Vec<LineSubbundle> {
    let firsts = sections(field, a - c);
    let seconds = sections(field, b - c);
    let mut out = Vec::new();
    for s1 in &firsts {
        for s2 in &seconds {
            if s1.is_zero() && s2.is_zero() {
                continue;
            }
            let coprime = poly_gcd(s1, s2).map(|g| g.is_one()).unwrap_or(false);
            let common_at_infinity =
                vanishes_at_infinity(s1, a - c) && vanishes_at_infinity(s2, b - c);
            if coprime && !common_at_infinity {
                out.push(LineSubbundle {
                    degree: c,
                    first: s1.clone(),
                    second: s2.clone(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summands_are_subbundles() {
        let f3 = GaloisField::prime(3).unwrap();
        let top = saturated_line_subbundles(f3, 2, -1, 2);
        assert_eq!(top.len(), 2); // nonzero scalars
        assert!(top.iter().all(LineSubbundle::is_first_summand));
        assert!(saturated_line_subbundles(f3, 2, -1, 3).is_empty());
        // O(-1) sits in O(2) ⊕ O(-1) as the second summand and in many other ways
        let low = saturated_line_subbundles(f3, 2, -1, -1);
        assert!(low.iter().any(|s| s.first.is_zero()));
        assert!(low
            .iter()
            .any(|s| !s.first.is_zero() && !s.second.is_zero()));
    }

    #[test]
    fn trivial_bundle_has_degree_zero_subbundles() {
        // O ⊕ O: every nonzero constant pair spans a sub-bundle, q^2 - 1 of them
        let f5 = GaloisField::prime(5).unwrap();
        assert_eq!(saturated_line_subbundles(f5, 0, 0, 0).len(), 24);
        assert!(saturated_line_subbundles(f5, 0, 0, 1).is_empty());
    }
}
