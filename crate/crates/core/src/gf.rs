//! Finite fields GF(p^e) with elements stored as packed coefficient vectors.
//!
//! An element is the polynomial `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` modulo the
//! field's monic irreducible modulus. Internally it is packed into a single
//! integer *code* `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`, so the zero element has
//! code 0 and the one element has code 1. Matrices and polynomials elsewhere in
//! the crate store raw codes and call back into [`FieldSpec`] for arithmetic.
//!
//! The canonical `F_2`-basis of GF(2^r) used by [`LinearFunctional`] is the
//! power basis `1, x, ..., x^{r-1}`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::FFMatrix;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 31;

#[derive(Debug)]
struct FieldInner {
    p: u32,
    e: u32,
    order: u32,
    /// Monic modulus, low-to-high, length e + 1.
    modulus: Vec<u32>,
    /// For p = 2: the modulus as a bitmask (including the x^e bit).
    modulus_bits: u64,
}

/// A finite field GF(p^e). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldInner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Polynomials over GF(p), low-to-high coefficient vectors.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        if lead != 0 {
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let sub = lead * c as u64 % p64;
                let slot = &mut r[shift + i];
                *slot = ((*slot as u64 + p64 - sub) % p64) as u32;
            }
        }
        r.pop();
    }
    poly_trim(r)
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn monic_from_tail(tail: u32, p: u32, degree: usize) -> Vec<u32> {
    let mut poly = digits(tail, p, degree);
    poly.push(1);
    poly
}

fn format_poly(poly: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in poly.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && i > 0 {
            String::new()
        } else {
            c.to_string()
        };
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(format!("{coeff}{mono}"));
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Returns a monic factor of degree in `1..=deg/2` if `poly` is reducible.
fn find_factor(poly: &[u32], p: u32) -> Option<Vec<u32>> {
    let deg = poly.len() - 1;
    for fdeg in 1..=deg / 2 {
        let count = (p as u64).pow(fdeg as u32);
        for tail in 0..count {
            let g = monic_from_tail(tail as u32, p, fdeg);
            if poly_rem_monic(poly, &g, p).is_empty() {
                return Some(g);
            }
        }
    }
    None
}

impl FieldSpec {
    /// Builds GF(p^e). `modulus` is low-to-high, monic, of degree `e`; when
    /// omitted the lexicographically smallest monic irreducible is used
    /// (coefficients compared from `x^{e-1}` down to the constant).
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let order = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
            Error::InvalidField(format!("GF({p}^{e}) exceeds the supported order 2^31"))
        })?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must have degree {e}, got {} coefficients",
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(format!(
                        "modulus coefficients must lie in 0..{p}"
                    )));
                }
                if m[e as usize] != 1 {
                    return Err(Error::InvalidField("modulus must be monic".into()));
                }
                if let Some(factor) = find_factor(m, p) {
                    return Err(Error::ReducibleModulus {
                        p,
                        modulus: format_poly(m),
                        factor: format_poly(&factor),
                    });
                }
                m.to_vec()
            }
            None => {
                let count = (p as u64).pow(e);
                (0..count)
                    .map(|tail| monic_from_tail(tail as u32, p, e as usize))
                    .find(|cand| find_factor(cand, p).is_none())
                    .ok_or_else(|| Error::internal("no irreducible polynomial found"))?
            }
        };
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i))
        } else {
            0
        };
        Ok(FieldSpec {
            inner: Arc::new(FieldInner {
                p,
                e,
                order: order as u32,
                modulus,
                modulus_bits,
            }),
        })
    }

    pub fn gf2() -> Self {
        static GF2: std::sync::OnceLock<FieldSpec> = std::sync::OnceLock::new();
        GF2.get_or_init(|| FieldSpec::new(2, 1, None).expect("GF(2)")).clone()
    }

    pub fn prime(p: u32) -> Result<Self> {
        FieldSpec::new(p, 1, None)
    }

    /// GF(2^r) with the canonical modulus.
    pub fn binary(r: u32) -> Result<Self> {
        FieldSpec::new(2, r, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    /// Modulus coefficients, low-to-high.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn is_gf2(&self) -> bool {
        self.inner.order == 2
    }

    pub fn is_binary(&self) -> bool {
        self.inner.p == 2
    }

    /// `GF(p^e; c_e,...,c_0)` with modulus coefficients high-to-low.
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self
            .inner
            .modulus
            .iter()
            .rev()
            .map(|c| c.to_string())
            .collect();
        format!("GF({}^{}; {})", self.inner.p, self.inner.e, coeffs.join(","))
    }

    /// Parses `GF(p^e; c_e,...,c_0)`, `GF(p^e)`, `GF(q)` or `GF(p)`.
    pub fn parse_descriptor(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidField(format!("{msg}: {text:?}"));
        let t = text.trim();
        let body = t
            .strip_prefix("GF(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| bad("expected GF(...)"))?;
        let (order_part, modulus_part) = match body.split_once(';') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (body.trim(), None),
        };
        let (p, e) = match order_part.split_once('^') {
            Some((p, e)) => (
                p.trim().parse::<u32>().map_err(|_| bad("bad characteristic"))?,
                e.trim().parse::<u32>().map_err(|_| bad("bad extension degree"))?,
            ),
            None => {
                let q: u64 = order_part.parse().map_err(|_| bad("bad field order"))?;
                split_prime_power(q).ok_or_else(|| bad("order is not a prime power"))?
            }
        };
        let modulus = match modulus_part {
            Some(m) => {
                let mut coeffs = m
                    .split(',')
                    .map(|c| c.trim().parse::<u32>().map_err(|_| bad("bad modulus coefficient")))
                    .collect::<Result<Vec<_>>>()?;
                coeffs.reverse();
                Some(coeffs)
            }
            None => None,
        };
        FieldSpec::new(p, e, modulus.as_deref())
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Coefficient vector `c_0..c_{e-1}` of a code.
    pub fn coeffs(&self, code: u32) -> Vec<u32> {
        digits(code, self.inner.p, self.inner.e as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32> {
        if coeffs.len() != self.inner.e as usize {
            return Err(Error::DimensionMismatch {
                expected: self.inner.e as usize,
                found: coeffs.len(),
            });
        }
        let p = self.inner.p;
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(Error::InvalidField(format!("coefficient {c} not reduced mod {p}")));
            }
            code = code * p as u64 + c as u64;
        }
        Ok(code as u32)
    }

    /// Maps an integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.inner.p as i64) as u32
    }

    pub fn contains(&self, code: u32) -> bool {
        code < self.inner.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let f = &*self.inner;
        if f.p == 2 {
            return a ^ b;
        }
        if f.e == 1 {
            let s = a + b;
            return if s >= f.p { s - f.p } else { s };
        }
        let mut out = 0u64;
        let mut place = 1u64;
        let (mut a, mut b) = (a, b);
        for _ in 0..f.e {
            let d = (a % f.p + b % f.p) % f.p;
            out += d as u64 * place;
            place *= f.p as u64;
            a /= f.p;
            b /= f.p;
        }
        out as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let f = &*self.inner;
        if f.p == 2 {
            return a;
        }
        if f.e == 1 {
            return if a == 0 { 0 } else { f.p - a };
        }
        let mut out = 0u64;
        let mut place = 1u64;
        let mut a = a;
        for _ in 0..f.e {
            let d = (f.p - a % f.p) % f.p;
            out += d as u64 * place;
            place *= f.p as u64;
            a /= f.p;
        }
        out as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let f = &*self.inner;
        if a == 0 || b == 0 {
            return 0;
        }
        if f.e == 1 {
            return ((a as u64 * b as u64) % f.p as u64) as u32;
        }
        if f.p == 2 {
            let (a, b) = (a as u64, b as u64);
            let mut prod = 0u64;
            for i in 0..f.e {
                if (b >> i) & 1 == 1 {
                    prod ^= a << i;
                }
            }
            let e = f.e as u64;
            for bit in (e..2 * e).rev() {
                if (prod >> bit) & 1 == 1 {
                    prod ^= f.modulus_bits << (bit - e);
                }
            }
            return prod as u32;
        }
        let e = f.e as usize;
        let da = digits(a, f.p, e);
        let db = digits(b, f.p, e);
        let mut prod = vec![0u32; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % f.p as u64) as u32;
            }
        }
        let r = poly_rem_monic(&prod, &f.modulus, f.p);
        let mut code = 0u64;
        for &c in r.iter().rev() {
            code = code * f.p as u64 + c as u64;
        }
        code as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.inner.order as u64 - 2))
    }

    /// Text form of a single element: a decimal for prime-subfield elements,
    /// `(c_{e-1},...,c_0)` otherwise.
    pub fn format_elem(&self, code: u32) -> String {
        if self.inner.e == 1 || code < self.inner.p {
            return code.to_string();
        }
        let parts: Vec<String> = self.coeffs(code).iter().rev().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }

    pub fn parse_elem(&self, text: &str) -> Result<u32> {
        let t = text.trim();
        let bad = || Error::InvalidField(format!("bad element {t:?} for {}", self.descriptor()));
        if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let mut coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            coeffs.reverse();
            return self.from_coeffs(&coeffs).map_err(|_| bad());
        }
        let v: i64 = t.parse().map_err(|_| bad())?;
        if self.inner.e == 1 {
            Ok(self.from_int(v))
        } else if (0..self.inner.p as i64).contains(&v) {
            Ok(v as u32)
        } else {
            Err(bad())
        }
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if !self.contains(code) {
            return Err(Error::InvalidField(format!(
                "code {code} outside {}",
                self.descriptor()
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            code,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.inner.order
    }
}

fn split_prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut e = 0u32;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1 && p <= u32::MAX as u64).then_some((p as u32, e))
}

/// An element bound to its field; arithmetic checks that operands agree.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    code: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.code))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.code))
    }
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.descriptor(),
                right: other.field.descriptor(),
            });
        }
        Ok(())
    }

    fn with(&self, code: u32) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            code,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.code, other.code)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.code)?))
    }
}

/// An `F_2`-linear functional `φ: GF(2^r) → GF(2)`, stored as a row over the
/// power basis, with its Gram matrix `M[a][b] = φ(θ_a θ_b)`.
#[derive(Debug, Clone)]
pub struct LinearFunctional {
    field: FieldSpec,
    row: Vec<u8>,
    gram: FFMatrix,
}

impl LinearFunctional {
    /// Picks φ as the coordinate functional of the lowest-index nonzero
    /// coefficient of `target`, so that `φ(target) = 1`.
    pub fn for_target(field: &FieldSpec, target: u32) -> Result<Self> {
        if !field.is_binary() {
            return Err(Error::pre("linear functionals require characteristic 2"));
        }
        if target == 0 {
            return Err(Error::pre("no F_2-linear functional maps 0 to 1"));
        }
        let r = field.degree() as usize;
        let lowest = (target as u64).trailing_zeros() as usize;
        let mut row = vec![0u8; r];
        row[lowest] = 1;
        LinearFunctional::from_row(field, row)
    }

    pub fn from_row(field: &FieldSpec, row: Vec<u8>) -> Result<Self> {
        let r = field.degree() as usize;
        if row.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: row.len(),
            });
        }
        let mut lf = LinearFunctional {
            field: field.clone(),
            row,
            gram: FFMatrix::zeros(&FieldSpec::gf2(), r, r),
        };
        let mut gram = FFMatrix::zeros(&FieldSpec::gf2(), r, r);
        for a in 0..r {
            for b in 0..r {
                let prod = field.mul(1 << a, 1 << b);
                gram.set(a, b, lf.apply(prod));
            }
        }
        lf.gram = gram;
        Ok(lf)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn row(&self) -> &[u8] {
        &self.row
    }

    pub fn gram(&self) -> &FFMatrix {
        &self.gram
    }

    pub fn apply(&self, code: u32) -> u32 {
        let mut acc = 0u32;
        for (i, &bit) in self.row.iter().enumerate() {
            if bit == 1 {
                acc ^= (code >> i) & 1;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fields() -> Vec<FieldSpec> {
        let mut out = Vec::new();
        for &(p, e) in &[(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (2, 8)] {
            out.push(FieldSpec::new(p, e, None).unwrap());
        }
        out
    }

    #[test]
    fn make_field_examples() {
        let gf2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(gf2.order(), 2);
        assert_eq!(gf2.modulus(), &[0, 1]);
        let gf4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(gf4.order(), 4);
        assert_eq!(FieldSpec::new(3, 1, None).unwrap().order(), 3);
    }

    #[test]
    fn gf4_irreducibility_by_roots() {
        // x^2 + x + 1 has no root in {0, 1}.
        for x in 0..2u32 {
            assert_ne!((x * x + x + 1) % 2, 0);
        }
        // The canonical GF(4) modulus is that polynomial.
        assert_eq!(FieldSpec::binary(2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::binary(3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_fields() {
        assert_eq!(FieldSpec::new(4, 1, None), Err(Error::NotPrime(4)));
        match FieldSpec::new(2, 2, Some(&[1, 0, 1])) {
            Err(Error::ReducibleModulus { factor, .. }) => assert_eq!(factor, "x+1"),
            other => panic!("{other:?}"),
        }
        // non-monic (leading coefficient 0)
        assert!(FieldSpec::new(2, 2, Some(&[1, 1, 0])).is_err());
        // x^2 + 2 = (x + 1)(x + 2) over GF(3)
        assert!(matches!(
            FieldSpec::new(3, 2, Some(&[2, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        // x^2 + 1 has no root in GF(3): 0 -> 1, 1 -> 2, 2 -> 2
        assert!(FieldSpec::new(3, 2, Some(&[1, 0, 1])).is_ok());
    }

    #[test]
    fn field_op_examples() {
        let gf2 = FieldSpec::gf2();
        assert_eq!(gf2.mul(1, 1), 1);
        let gf4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let alpha = 0b10;
        assert_eq!(gf4.mul(alpha, alpha), 0b11);
        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(gf5.inv(2).unwrap(), 3);
        assert_eq!(gf5.inv(0), Err(Error::ZeroInverse));
    }

    #[test]
    fn mixed_field_operands_are_rejected() {
        let a = FieldSpec::prime(3).unwrap().element(1).unwrap();
        let b = FieldSpec::prime(5).unwrap().element(1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch { .. })));
        assert!(a.field().element(0).unwrap().inv().is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for f in all_fields() {
            if f.order() > 256 {
                continue;
            }
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
            // associativity and distributivity on all triples up to q = 16,
            // strided beyond that to keep runtime modest.
            let step = if q <= 16 { 1 } else { 7 };
            for a in (0..q).step_by(step) {
                for b in (0..q).step_by(step) {
                    for c in (0..q).step_by(step) {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        for r in 1..=8 {
            let f = FieldSpec::binary(r).unwrap();
            for x in 0..f.order() {
                for y in 0..f.order() {
                    let s = f.add(x, y);
                    assert_eq!(f.mul(s, s), f.add(f.mul(x, x), f.mul(y, y)));
                }
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        for f in all_fields() {
            let text = f.descriptor();
            assert_eq!(FieldSpec::parse_descriptor(&text).unwrap(), f);
        }
        assert_eq!(FieldSpec::gf2().descriptor(), "GF(2^1; 1,0)");
        assert_eq!(
            FieldSpec::parse_descriptor("GF(4)").unwrap().descriptor(),
            "GF(2^2; 1,1,1)"
        );
        assert_eq!(FieldSpec::parse_descriptor("GF(2^3)").unwrap().order(), 8);
        assert!(FieldSpec::parse_descriptor("GF(6)").is_err());
        assert!(FieldSpec::parse_descriptor("F(2)").is_err());
    }

    #[test]
    fn element_text_round_trip() {
        for f in all_fields() {
            for code in f.elements().take(300) {
                assert_eq!(f.parse_elem(&f.format_elem(code)).unwrap(), code);
            }
        }
    }

    #[test]
    fn linear_functional_examples() {
        let gf4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let phi = LinearFunctional::for_target(&gf4, 0b10).unwrap();
        assert_eq!(phi.row(), &[0, 1]);
        assert_eq!(phi.apply(0b10), 1);
        assert_eq!(phi.apply(0b01), 0);
        assert_eq!(phi.apply(0), 0);
        let g = phi.gram();
        assert_eq!((g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1)), (0, 1, 1, 1));
        assert!(LinearFunctional::for_target(&gf4, 0).is_err());
    }

    #[test]
    fn linear_functionals_are_linear_with_symmetric_gram() {
        for r in 1..=6 {
            let f = FieldSpec::binary(r).unwrap();
            for target in 1..f.order() {
                let phi = LinearFunctional::for_target(&f, target).unwrap();
                assert_eq!(phi.apply(target), 1);
                for x in 0..f.order() {
                    for y in 0..f.order() {
                        assert_eq!(phi.apply(f.add(x, y)), phi.apply(x) ^ phi.apply(y));
                    }
                }
                let g = phi.gram();
                for a in 0..r as usize {
                    for b in 0..r as usize {
                        assert_eq!(g.get(a, b), g.get(b, a));
                        assert_eq!(g.get(a, b), phi.apply(f.mul(1 << a, 1 << b)));
                    }
                }
            }
        }
    }
}
