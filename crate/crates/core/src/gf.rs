//! Finite fields GF(p^k) of size at most 2^16.
//!
//! Elements are stored as their index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`,
//! where `c_i` are the coordinates with respect to the power basis of a root
//! `a` of the modulus. Index order is therefore coefficient-lexicographic
//! (most significant coefficient first) with zero first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

const MAX_FIELD_SIZE: u32 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 256;

/// An element of a finite field, identified by its coefficient index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Description of GF(p^k) together with its arithmetic tables.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients from degree 0 up to degree k.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u16>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p), lowest coefficient first, no trailing zeros.
fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem_prime(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = inv_mod(den[dd], p);
    while r.len() > dd {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
        if c != 0 {
            let shift = top - dd;
            for (i, &dc) in den.iter().enumerate() {
                let sub = (c as u64 * dc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn digits(mut n: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Irreducibility over GF(p) by trial division against every monic polynomial
/// of degree at most `deg / 2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = trim(poly.to_vec());
    let deg = poly.len().saturating_sub(1) as u32;
    if deg == 0 {
        return false;
    }
    for dd in 1..=deg / 2 {
        let count = p.pow(dd);
        for lower in 0..count {
            let mut den = digits(lower, p, dd);
            den.push(1);
            if poly_rem_prime(&poly, &den, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^k) using the smallest irreducible monic modulus of degree k,
    /// where monic polynomials `x^k + c_{k-1}x^{k-1} + ... + c_0` are ordered by
    /// the index of `(c_0, ..., c_{k-1})` (so `c_{k-1}` is most significant).
    pub fn new(p: u32, k: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let q = match p.checked_pow(k) {
            Some(q) if q <= MAX_FIELD_SIZE => q,
            _ => return Err(Error::FieldTooLarge { p, k }),
        };
        let mut modulus = None;
        for lower in 0..q {
            let mut cand = digits(lower, p, k);
            cand.push(1);
            if is_irreducible(&cand, p) {
                modulus = Some(cand);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial of every degree exists");
        let mut field = FieldSpec { p, k, q, modulus, exp: Vec::new(), log: Vec::new(), add_table: None };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        if q <= ADD_TABLE_LIMIT {
            let mut table = vec![0u16; (q * q) as usize];
            for x in 0..q {
                for y in 0..q {
                    table[(x * q + y) as usize] = self.add_digits(x, y) as u16;
                }
            }
            self.add_table = Some(table);
        }
        // Find a primitive element by brute force over the multiplicative group.
        let order = q - 1;
        let mut generator = None;
        'search: for g in 1..q {
            let mut x = 1u32;
            for i in 1..=order {
                x = self.mul_slow(x, g);
                if x == 1 && i < order {
                    continue 'search;
                }
            }
            generator = Some(g);
            break;
        }
        let g = generator.expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp.push(x);
            log[x as usize] = i;
            x = self.mul_slow(x, g);
        }
        self.exp = exp;
        self.log = log;
    }

    fn add_digits(&self, mut x: u32, mut y: u32) -> u32 {
        let p = self.p;
        if p == 2 {
            return x ^ y;
        }
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    }

    fn mul_slow(&self, x: u32, y: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let xs = digits(x, self.p, self.k);
        let ys = digits(y, self.p, self.k);
        let mut prod = vec![0u64; 2 * k];
        for (i, &a) in xs.iter().enumerate() {
            for (j, &b) in ys.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u64 * b as u64) % p;
            }
        }
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c != 0 {
                for (i, &mc) in self.modulus.iter().enumerate().take(k) {
                    let idx = top - k + i;
                    prod[idx] = (prod[idx] + (p - c) * mc as u64) % p;
                }
                prod[top] = 0;
            }
        }
        let mut out = 0u64;
        for i in (0..k).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    /// Monic modulus coefficients from degree 0 up to degree k.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The class of the integer `n` in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::ForeignElement(index))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize {
            return Err(Error::DimensionMismatch { expected: self.k as usize, found: coeffs.len() });
        }
        let mut index = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::Precondition(alloc::format!(
                    "coefficient {c} not reduced mod {}",
                    self.p
                )));
            }
            index = index * self.p + c;
        }
        Ok(FieldElement(index))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        digits(x.0, self.p, self.k)
    }

    pub fn check(&self, x: FieldElement) -> Result<()> {
        if x.0 < self.q {
            Ok(())
        } else {
            Err(Error::ForeignElement(x.0))
        }
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(x.0 < self.q && y.0 < self.q);
        match &self.add_table {
            Some(t) => FieldElement(t[(x.0 * self.q + y.0) as usize] as u32),
            None => FieldElement(self.add_digits(x.0, y.0)),
        }
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.p == 2 {
            return x;
        }
        let p = self.p;
        let mut v = x.0;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((p - v % p) % p) * place;
            v /= p;
            place *= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(x.0 < self.q && y.0 < self.q);
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = self.q - 1;
        let e = self.log[x.0 as usize] + self.log[y.0 as usize];
        FieldElement(self.exp[(if e >= order { e - order } else { e }) as usize])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        self.check(x)?;
        let order = self.q - 1;
        let l = self.log[x.0 as usize];
        Ok(FieldElement(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FieldElement, n: u64) -> FieldElement {
        if n == 0 {
            return FieldElement::ONE;
        }
        if x.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = (self.q - 1) as u64;
        let e = (self.log[x.0 as usize] as u64 * (n % order)) % order;
        FieldElement(self.exp[e as usize])
    }

    /// All q elements, zero first, in index (coefficient-lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    /// The root `a` of the modulus, as an element (for k = 1 this is the
    /// root of `x + c_0`, i.e. `-c_0`).
    pub fn generator_root(&self) -> FieldElement {
        if self.k == 1 {
            self.from_int(-(self.modulus[0] as i64))
        } else {
            FieldElement(self.p)
        }
    }

    /// Text form: a decimal residue for prime fields, otherwise a polynomial in
    /// the root `a`, e.g. `a+1` or `2a^2+a`.
    pub fn format(&self, x: FieldElement) -> String {
        if self.k == 1 || x.0 == 0 {
            return alloc::format!("{}", x.0);
        }
        let cs = self.coeffs(x);
        let mut out = String::new();
        for (deg, &c) in cs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            match (deg, c) {
                (0, c) => write!(out, "{c}").unwrap(),
                (1, 1) => out.push('a'),
                (1, c) => write!(out, "{c}a").unwrap(),
                (d, 1) => write!(out, "a^{d}").unwrap(),
                (d, c) => write!(out, "{c}a^{d}").unwrap(),
            }
        }
        out
    }
}
