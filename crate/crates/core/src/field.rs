//! Finite fields `F_{p^k}` for odd primes `p`.
//!
//! A field is identified by `(p, k)` and interned for the lifetime of the
//! process, so elements are small `Copy` values carrying a `&'static`
//! reference to their field. Elements are encoded as integers
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, where `(c_0, ..., c_{k-1})` are the
//! coordinates relative to the basis `1, a, ..., a^{k-1}` and `a` is a root of
//! the field modulus. The prime subfield is therefore exactly the encodings
//! `0..p`.
//!
//! The modulus is the lowest monic irreducible polynomial of degree `k` when
//! coefficient vectors `(c_{k-1}, ..., c_0)` are compared lexicographically,
//! so every run builds the same field.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use crate::error::AlgebraError;

/// Largest supported field order. Extension fields use log tables of this size.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

const NO_LOG: u32 = u32::MAX;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The field `F_{p^k}`.
pub struct GaloisField {
    p: u32,
    k: u32,
    order: u32,
    /// Monic modulus, ascending coefficients, length `k + 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed primitive element `g`, doubled to skip reductions.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Zech logarithms: `zech[n] = log(1 + g^n)`, or `NO_LOG` when `1 + g^n = 0`.
    zech: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.k)
        }
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for GaloisField {}

impl Hash for GaloisField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.k.hash(state);
    }
}

fn registry() -> &'static Mutex<HashMap<(u32, u32), &'static GaloisField>> {
    static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), &'static GaloisField>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

impl GaloisField {
    /// Returns the interned field `F_{p^k}`, building it on first use.
    pub fn get(p: u64, k: u32) -> Result<&'static GaloisField, AlgebraError> {
        if p == 2 || !is_prime(p) {
            return Err(AlgebraError::NotOddPrime(p));
        }
        if k == 0 {
            return Err(AlgebraError::ZeroDegree);
        }
        let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(AlgebraError::FieldTooLarge { p, k });
        }
        let key = (p as u32, k);
        let mut map = registry().lock().expect("field registry poisoned");
        if let Some(field) = map.get(&key) {
            return Ok(field);
        }
        let field: &'static GaloisField = Box::leak(Box::new(Self::build(p as u32, k)));
        map.insert(key, field);
        Ok(field)
    }

    /// Shorthand for the prime field `F_p`.
    pub fn prime(p: u64) -> Result<&'static GaloisField, AlgebraError> {
        Self::get(p, 1)
    }

    fn build(p: u32, k: u32) -> GaloisField {
        let order = p.pow(k);
        if k == 1 {
            return GaloisField {
                p,
                k,
                order,
                modulus: vec![0, 1],
                exp: Vec::new(),
                log: Vec::new(),
                zech: Vec::new(),
            };
        }
        let modulus = lowest_irreducible(p, k as usize);
        let n = (order - 1) as usize;
        let (exp, log) = (2..order)
            .find_map(|g| {
                power_table(p, &modulus, g, n).map(|exp| {
                    let mut log = vec![NO_LOG; order as usize];
                    for (i, &x) in exp.iter().enumerate() {
                        log[x as usize] = i as u32;
                    }
                    let mut doubled = exp.clone();
                    doubled.extend_from_slice(&exp);
                    (doubled, log)
                })
            })
            .expect("multiplicative group of a finite field is cyclic");
        let zech = (0..n)
            .map(|i| {
                let mut digits = to_digits(exp[i], p, k as usize);
                digits[0] = (digits[0] + 1) % p;
                let s = from_digits(&digits, p);
                if s == 0 {
                    NO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();
        GaloisField {
            p,
            k,
            order,
            modulus,
            exp,
            log,
            zech,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements `q = p^k`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    /// Ascending coefficients of the monic modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&'static self) -> FieldElement {
        FieldElement {
            value: 0,
            field: self,
        }
    }

    pub fn one(&'static self) -> FieldElement {
        FieldElement {
            value: 1,
            field: self,
        }
    }

    /// Element with the given integer encoding.
    pub fn element(&'static self, value: u64) -> Result<FieldElement, AlgebraError> {
        if value >= self.order as u64 {
            return Err(AlgebraError::OutOfRange {
                value,
                order: self.order,
            });
        }
        Ok(FieldElement {
            value: value as u32,
            field: self,
        })
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&'static self, n: i64) -> FieldElement {
        let v = n.rem_euclid(self.p as i64) as u32;
        FieldElement {
            value: v,
            field: self,
        }
    }

    /// All elements in increasing encoding order.
    pub fn elements(&'static self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order).map(move |value| FieldElement { value, field: self })
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let m = self.order - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let diff = if lb >= la { lb - la } else { lb + m - la };
        let z = self.zech[diff as usize];
        if z == NO_LOG {
            0
        } else {
            self.exp[(la + z) as usize]
        }
    }

    fn neg_raw(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        if self.k == 1 {
            return self.p - a;
        }
        let half = (self.order - 1) / 2;
        self.exp[(self.log[a as usize] + half) as usize]
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.k == 1 {
            // extended Euclid on (a, p)
            let (mut r0, mut r1) = (self.p as i64, a as i64);
            let (mut s0, mut s1) = (0i64, 1i64);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (s0, s1) = (s1, s0 - q * s1);
            }
            return Some(s0.rem_euclid(self.p as i64) as u32);
        }
        let m = self.order - 1;
        let l = self.log[a as usize];
        Some(self.exp[((m - l) % m) as usize])
    }
}

fn to_digits(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two residues modulo a monic `modulus`, on digit vectors.
fn mulmod_digits(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
        }
    }
    prod[..k].iter().map(|&x| x as u32).collect()
}

/// Powers of `g` when `g` generates the multiplicative group, else `None`.
fn power_table(p: u32, modulus: &[u32], g: u32, n: usize) -> Option<Vec<u32>> {
    let k = modulus.len() - 1;
    let gd = to_digits(g, p, k);
    let mut cur = to_digits(1, p, k);
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let v = from_digits(&cur, p);
        if i > 0 && v == 1 {
            return None;
        }
        table.push(v);
        cur = mulmod_digits(&cur, &gd, modulus, p);
    }
    (from_digits(&cur, p) == 1).then_some(table)
}

/// Remainder of `f` modulo monic `g` over `F_p`, digits ascending.
fn rem_digits(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&x| x as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = r.pop().unwrap();
        if c != 0 {
            let base = r.len() - dg;
            for (i, &gi) in g[..dg].iter().enumerate() {
                r[base + i] = (r[base + i] + (p as u64 - c) * gi as u64) % p as u64;
            }
        }
    }
    r.into_iter().map(|x| x as u32).collect()
}

fn monic_of_degree(p: u32, deg: usize, index: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(deg + 1);
    let mut n = index;
    for _ in 0..deg {
        out.push((n % p as u64) as u32);
        n /= p as u64;
    }
    out.push(1);
    out
}

fn is_irreducible_digits(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let g = monic_of_degree(p, d, idx);
            if rem_digits(f, &g, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn lowest_irreducible(p: u32, k: usize) -> Vec<u32> {
    // `monic_of_degree` puts c_0 in the least significant digit, so increasing
    // index is lexicographic order on (c_{k-1}, ..., c_0).
    (0..(p as u64).pow(k as u32))
        .map(|idx| monic_of_degree(p, k, idx))
        .find(|f| is_irreducible_digits(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// An element of `F_{p^k}`.
#[derive(Clone, Copy)]
pub struct FieldElement {
    value: u32,
    field: &'static GaloisField,
}

impl FieldElement {
    pub fn field(&self) -> &'static GaloisField {
        self.field
    }

    /// Integer encoding `sum c_i p^i`.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Coordinates over the prime field, ascending.
    pub fn coords(&self) -> Vec<u32> {
        to_digits(self.value, self.field.p, self.field.k as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn in_prime_field(&self) -> bool {
        self.value < self.field.p
    }

    pub fn inverse(&self) -> Result<FieldElement, AlgebraError> {
        self.field
            .inv_raw(self.value)
            .map(|value| FieldElement {
                value,
                field: self.field,
            })
            .ok_or(AlgebraError::DivisionByZero)
    }

    pub fn checked_div(&self, rhs: FieldElement) -> Result<FieldElement, AlgebraError> {
        Ok(*self * rhs.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Some square root, if one exists in this field.
    pub fn sqrt(&self) -> Option<FieldElement> {
        self.field.elements().find(|x| *x * *x == *self)
    }

    fn same_field(&self, other: &FieldElement) {
        debug_assert!(
            std::ptr::eq(self.field, other.field),
            "mixed fields {:?} and {:?}",
            self.field,
            other.field
        );
    }
}

/// Inverse of a nonzero field element.
pub fn field_inverse(a: FieldElement) -> Result<FieldElement, AlgebraError> {
    a.inverse()
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value.cmp(&other.value)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.same_field(&rhs);
        FieldElement {
            value: self.field.add_raw(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field.neg_raw(self.value),
            field: self.field,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.same_field(&rhs);
        FieldElement {
            value: self.field.mul_raw(self.value, rhs.value),
            field: self.field,
        }
    }
}

/// Panics on a zero divisor; use [`FieldElement::checked_div`] to handle it.
impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: FieldElement) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let f7 = GaloisField::prime(7).unwrap();
        assert_eq!(field_inverse(f7.from_int(3)).unwrap(), f7.from_int(5));
        let f5 = GaloisField::prime(5).unwrap();
        assert_eq!(field_inverse(f5.one()).unwrap(), f5.one());
        assert_eq!(field_inverse(f5.zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn rejects_even_and_composite_characteristic() {
        assert_eq!(
            GaloisField::get(2, 1).unwrap_err(),
            AlgebraError::NotOddPrime(2)
        );
        assert_eq!(
            GaloisField::get(9, 1).unwrap_err(),
            AlgebraError::NotOddPrime(9)
        );
        assert_eq!(
            GaloisField::get(5, 0).unwrap_err(),
            AlgebraError::ZeroDegree
        );
        assert!(matches!(
            GaloisField::get(101, 4),
            Err(AlgebraError::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn moduli_are_lowest_irreducibles() {
        // t^2 + 1 is irreducible mod 3 and 7; mod 5 the first is t^2 + 2.
        assert_eq!(GaloisField::get(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(GaloisField::get(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(GaloisField::get(7, 2).unwrap().modulus(), &[1, 0, 1]);
        // first cubic mod 3 without a root
        assert_eq!(GaloisField::get(3, 3).unwrap().modulus(), &[1, 2, 0, 1]);
    }

    #[test]
    fn interned_fields_are_shared() {
        let a = GaloisField::get(11, 2).unwrap();
        let b = GaloisField::get(11, 2).unwrap();
        assert!(std::ptr::eq(a, b));
    }

    #[test]
    fn extension_arithmetic_matches_digit_arithmetic() {
        for (p, k) in [(3u32, 2u32), (5, 2), (3, 3), (7, 2)] {
            let f = GaloisField::get(p as u64, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let da = a.coords();
                    let db = b.coords();
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    assert_eq!((a + b).coords(), sum);
                    let prod = mulmod_digits(&da, &db, f.modulus(), p);
                    assert_eq!((a * b).coords(), prod);
                }
            }
        }
    }

    #[test]
    fn every_nonzero_element_has_an_inverse() {
        for (p, k) in [(3, 1), (13, 1), (5, 2), (3, 3)] {
            let f = GaloisField::get(p, k).unwrap();
            for a in f.elements().skip(1) {
                assert!((a * a.inverse().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = GaloisField::get(5, 3).unwrap();
        for a in f.elements() {
            assert_eq!(a.pow(5) == a, a.in_prime_field());
            assert_eq!(a.pow(125), a);
        }
    }
}
