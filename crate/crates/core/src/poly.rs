//! Sparse multivariate polynomials over a [`FieldSpec`], monomial orders,
//! and the multivariate division algorithm.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// A power product `t_1^{a_1} ... t_s^{a_s}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    /// `t_var^power`, with variables numbered from zero.
    pub fn var(nvars: usize, var: usize, power: u32) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[var] = power;
        Monomial { exps, deg: power }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending
/// exponent-vector order (t1^d first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fill_monomials(&mut exps, 0, d, &mut out);
    out
}

fn fill_monomials(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.to_vec()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_monomials(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedReverseLex,
}

/// A monomial order given by a kind and a variable priority
/// (`priority[0]` is the largest variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Order with the natural priority `t1 > t2 > ... > t_n`.
    pub fn new(kind: OrderKind, nvars: usize) -> MonomialOrder {
        MonomialOrder { kind, priority: (0..nvars).collect() }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<MonomialOrder> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &v in &priority {
            if v >= n || seen[v] {
                return Err(Error::Precondition(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn lex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, nvars)
    }

    pub fn grevlex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::GradedReverseLex, nvars)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_graded(&self) -> bool {
        self.kind != OrderKind::Lex
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            let found = if a.nvars() != self.nvars() { a.nvars() } else { b.nvars() };
            return Err(Error::DimensionMismatch { expected: self.nvars(), found });
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without the dimension check.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::GradedLex => a.deg.cmp(&b.deg).then_with(|| self.lex_cmp(a, b)),
            OrderKind::GradedReverseLex => a.deg.cmp(&b.deg).then_with(|| {
                for &v in self.priority.iter().rev() {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// A polynomial in `nvars` variables with coefficients stored as field
/// element indices; arithmetic takes the field explicitly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m, c.0))).finish()
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Polynomial {
        Polynomial::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: FieldElement) -> Polynomial {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Polynomial::term(m, FieldElement::ONE)
    }

    /// `t_var` (zero-based index).
    pub fn var(nvars: usize, var: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(nvars, var, 1))
    }

    /// Sums the given terms, combining repeated monomials.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
        field: &FieldSpec,
    ) -> Result<Polynomial> {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.nvars() });
            }
            field.check(c)?;
            out.add_term(m, c, field);
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElement, field: &FieldSpec) {
        if c.is_zero() {
            return;
        }
        let new = match self.terms.get(&m) {
            Some(&old) => field.add(old, c),
            None => c,
        };
        if new.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, new);
        }
    }

    pub fn add(&self, other: &Polynomial, field: &FieldSpec) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c, field);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial, field: &FieldSpec) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), field.neg(c), field);
        }
        out
    }

    pub fn scale(&self, c: FieldElement, field: &FieldSpec) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), field.mul(*x, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: FieldElement, field: &FieldSpec) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(n, x)| (n.mul(m), field.mul(*x, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, field: &FieldSpec) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in other.terms() {
            for (n, x) in self.terms() {
                out.add_term(n.mul(m), field.mul(x, c), field);
            }
        }
        out
    }

    pub fn pow(&self, e: u32, field: &FieldSpec) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, field.one());
        for _ in 0..e {
            out = out.mul(self, field);
        }
        out
    }

    /// The ≺-largest monomial with its coefficient.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, FieldElement)> {
        if self.nvars != order.nvars() {
            return Err(Error::DimensionMismatch { expected: order.nvars(), found: self.nvars });
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), *c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, order: &MonomialOrder, field: &FieldSpec) -> Result<Polynomial> {
        let (_, c) = self.leading_term(order)?;
        Ok(self.scale(field.inv(c)?, field))
    }

    pub fn evaluate(&self, point: &[FieldElement], field: &FieldSpec) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        Ok(self.eval_unchecked(point, field))
    }

    pub(crate) fn eval_unchecked(&self, point: &[FieldElement], field: &FieldSpec) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for (m, c) in self.terms() {
            let mut v = c;
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    v = field.mul(v, field.pow(*x, e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        acc
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), *c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Human-readable form such as `t1*t2^2+t1^2*t2` (terms in descending
    /// `order`).
    pub fn format(&self, field: &FieldSpec, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let negative = field.degree() == 1 && field.characteristic() > 2 && c.0 * 2 > field.size();
            if negative {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let shown = if negative { field.neg(c) } else { c };
            let coeff = field.format(shown);
            if m.is_one() {
                out.push_str(&coeff);
            } else if shown == field.one() {
                out.push_str(&format!("{m}"));
            } else if field.degree() > 1 && coeff.contains('+') {
                out.push_str(&format!("({coeff})*{m}"));
            } else {
                out.push_str(&format!("{coeff}*{m}"));
            }
        }
        out
    }
}

/// Multivariate division with first-match divisor selection.
///
/// Returns quotients `q_i` and remainder `r` with `f = Σ q_i g_i + r`, where
/// no monomial of `r` is divisible by a leading monomial of the divisors.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
    field: &FieldSpec,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let leads = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order)?;
            Ok((m, field.inv(c)?))
        })
        .collect::<Result<Vec<_>>>()?;
    if f.nvars() != order.nvars() {
        return Err(Error::DimensionMismatch { expected: order.nvars(), found: f.nvars() });
    }
    let mut quotients = vec![Polynomial::zero(f.nvars()); divisors.len()];
    let mut remainder = Polynomial::zero(f.nvars());
    let mut p = f.clone();
    while let Ok((m, c)) = p.leading_term(order) {
        let hit = leads.iter().position(|(lm, _)| lm.divides(&m));
        match hit {
            Some(i) => {
                let (lm, inv_lc) = &leads[i];
                let shift = lm.quotient_of(&m).expect("divisibility checked");
                let factor = field.mul(c, *inv_lc);
                quotients[i].add_term(shift.clone(), factor, field);
                p = p.sub(&divisors[i].mul_term(&shift, factor, field), field);
            }
            None => {
                remainder.add_term(m.clone(), c, field);
                p.terms.remove(&m);
            }
        }
    }
    Ok((quotients, remainder))
}

/// Remainder of `f` on division by `divisors`.
pub fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
    field: &FieldSpec,
) -> Result<Polynomial> {
    divide(f, divisors, order, field).map(|(_, r)| r)
}
