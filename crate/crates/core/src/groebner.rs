//! Reduced Gröbner bases and vanishing ideals of finite point sets.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::ideal::MonomialIdeal;
use crate::linalg::kernel;
use crate::poly::{monomials_of_degree, reduce, Monomial, MonomialOrder, OrderKind, Polynomial};

/// A reduced Gröbner basis: monic generators sorted by decreasing leading
/// monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.leading_monomial(&self.order).expect("nonzero")).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars(), self.leading_monomials()).expect("dimensions agree")
    }

    /// Normal form of `f`.
    pub fn reduce(&self, f: &Polynomial, field: &FieldSpec) -> Result<Polynomial> {
        reduce(f, &self.gens, &self.order, field)
    }

    pub fn contains(&self, f: &Polynomial, field: &FieldSpec) -> Result<bool> {
        Ok(self.reduce(f, field)?.is_zero())
    }

    /// Whether every S-polynomial of two generators reduces to zero.
    pub fn satisfies_buchberger_criterion(&self, field: &FieldSpec) -> bool {
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let s = s_polynomial(&self.gens[i], &self.gens[j], &self.order, field);
                if !self.reduce(&s, field).map(|r| r.is_zero()).unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder, field: &FieldSpec) -> Polynomial {
    let (mf, cf) = f.leading_term(order).expect("nonzero");
    let (mg, cg) = g.leading_term(order).expect("nonzero");
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l).expect("lcm"), field.inv(cf).expect("nonzero"), field);
    let b = g.mul_term(&mg.quotient_of(&l).expect("lcm"), field.inv(cg).expect("nonzero"), field);
    a.sub(&b, field)
}

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// criterion, and a final inter-reduction.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, field: &FieldSpec) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::EmptyInput("generator list"));
    }
    for g in gens {
        if g.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch { expected: order.nvars(), found: g.nvars() });
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let r = reduce(g, &basis, order, field)?;
        if !r.is_zero() {
            leads.push(r.leading_monomial(order)?);
            basis.push(r.monic(order, field)?);
        }
    }
    if basis.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    // Pending pairs keyed by (lcm, j, i); ordered by the monomial order on
    // the lcm through `PairKey`.
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    let push_pairs = |pairs: &mut BTreeSet<PairKey>, leads: &[Monomial], j: usize| {
        for i in 0..j {
            if !leads[i].is_coprime(&leads[j]) {
                pairs.insert(PairKey::new(leads[i].lcm(&leads[j]), i, j, order));
            }
        }
    };
    for j in 1..basis.len() {
        push_pairs(&mut pairs, &leads, j);
    }
    while let Some(key) = pairs.pop_first() {
        let s = s_polynomial(&basis[key.i], &basis[key.j], order, field);
        let r = reduce(&s, &basis, order, field)?;
        if r.is_zero() {
            continue;
        }
        leads.push(r.leading_monomial(order)?);
        basis.push(r.monic(order, field)?);
        push_pairs(&mut pairs, &leads, basis.len() - 1);
    }
    Ok(GroebnerBasis { order: order.clone(), gens: interreduce(basis, leads, order, field)? })
}

#[derive(Clone, Debug)]
struct PairKey {
    lcm_rank: Vec<u32>,
    i: usize,
    j: usize,
}

impl PairKey {
    /// Encodes the lcm so that lexicographic comparison of `lcm_rank`
    /// reproduces the monomial order.
    fn new(lcm: Monomial, i: usize, j: usize, order: &MonomialOrder) -> PairKey {
        let e = lcm.exps();
        let mut key = Vec::with_capacity(e.len() + 1);
        match order.kind() {
            OrderKind::Lex => key.extend(order.priority().iter().map(|&v| e[v])),
            OrderKind::GradedLex => {
                key.push(lcm.degree());
                key.extend(order.priority().iter().map(|&v| e[v]));
            }
            OrderKind::GradedReverseLex => {
                key.push(lcm.degree());
                key.extend(order.priority().iter().rev().map(|&v| u32::MAX - e[v]));
            }
        }
        PairKey { lcm_rank: key, i, j }
    }
}

impl PartialEq for PairKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for PairKey {}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lcm_rank
            .cmp(&other.lcm_rank)
            .then(self.j.cmp(&other.j))
            .then(self.i.cmp(&other.i))
    }
}

fn interreduce(
    basis: Vec<Polynomial>,
    leads: Vec<Monomial>,
    order: &MonomialOrder,
    field: &FieldSpec,
) -> Result<Vec<Polynomial>> {
    // Keep one generator per minimal leading monomial.
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let dominated = (0..basis.len()).any(|j| {
            j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)
        });
        if !dominated {
            keep.push(i);
        }
    }
    let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let (lm, lc) = g.leading_term(order)?;
        let tail = g.sub(&Polynomial::term(lm.clone(), lc), field);
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, h)| h.clone()).collect();
        let tail = reduce(&tail, &others, order, field)?;
        reduced.push(Polynomial::term(lm, lc).add(&tail, field).monic(order, field)?);
    }
    reduced.sort_by(|a, b| {
        order.cmp(&b.leading_monomial(order).expect("nonzero"), &a.leading_monomial(order).expect("nonzero"))
    });
    Ok(reduced)
}

/// Evaluation matrix of the monomials at the points (rows = points).
pub fn evaluation_matrix(
    points: &[Vec<FieldElement>],
    monomials: &[Monomial],
    field: &FieldSpec,
) -> Vec<Vec<FieldElement>> {
    points
        .iter()
        .map(|p| monomials.iter().map(|m| eval_monomial(m, p, field)).collect())
        .collect()
}

pub fn eval_monomial(m: &Monomial, point: &[FieldElement], field: &FieldSpec) -> FieldElement {
    let mut v = field.one();
    for (x, &e) in point.iter().zip(m.exps()) {
        if e > 0 {
            v = field.mul(v, field.pow(*x, e as u64));
            if v.is_zero() {
                break;
            }
        }
    }
    v
}

/// Gröbner basis of the vanishing ideal of finitely many projective points,
/// from kernels of evaluation matrices.
///
/// Kernels are taken degree by degree up to `D + 1`, where `D` is the first
/// degree whose evaluation matrix has full rank `|X|`; the ideal of a finite
/// point set is generated in degrees up to its regularity plus one. The
/// result is validated by comparing the Hilbert function of its initial
/// ideal with evaluation ranks for `d ≤ D + 1` and its degree with `|X|`.
pub fn vanishing_ideal_points(
    points: &[Vec<FieldElement>],
    order: &MonomialOrder,
    field: &FieldSpec,
) -> Result<GroebnerBasis> {
    let n = order.nvars();
    if points.is_empty() {
        return Err(Error::EmptyInput("point set"));
    }
    if let Some(p) = points.iter().find(|p| p.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.len() });
    }
    let target = points.len();
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut lead_ideal = MonomialIdeal::zero(n);
    let mut ranks = Vec::new();
    let mut full_at = None;
    let mut d = 1u32;
    loop {
        let mut monos = monomials_of_degree(n, d);
        monos.sort_by(|a, b| order.cmp(a, b));
        let e = evaluation_matrix(points, &monos, field);
        let ker = kernel(&e, monos.len(), field);
        ranks.push(monos.len() - ker.len());
        for v in ker {
            let lead = v.iter().rposition(|x| !x.is_zero()).expect("kernel vectors are nonzero");
            if lead_ideal.contains(&monos[lead]) {
                continue;
            }
            lead_ideal = lead_ideal.with_generators([monos[lead].clone()]);
            let terms = monos.iter().cloned().zip(v.iter().copied());
            gens.push(Polynomial::from_terms(n, terms, field)?);
        }
        if full_at.is_none() && *ranks.last().unwrap() == target {
            full_at = Some(d);
        }
        if full_at.is_some_and(|f| d > f) {
            break;
        }
        d += 1;
        if d > 64 * (target as u32 + 1) {
            return Err(Error::Validation(format!("evaluation rank never reached {target}")));
        }
    }
    if gens.is_empty() {
        return Err(Error::Validation("no vanishing forms found".into()));
    }
    let gb = buchberger(&gens, order, field)?;
    let init = gb.initial_ideal();
    for (i, &r) in ranks.iter().enumerate() {
        let hf = init.hilbert_function(i as u32 + 1);
        if hf != r as u64 {
            return Err(Error::Validation(format!(
                "Hilbert function {hf} differs from evaluation rank {r} in degree {}",
                i + 1
            )));
        }
    }
    let summary = init.hilbert_summary()?;
    if summary.degree != target as u64 {
        return Err(Error::Validation(format!(
            "degree {} differs from the number of points {target}",
            summary.degree
        )));
    }
    Ok(gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn binom(f: &FieldSpec, a: &[u32], b: &[u32]) -> Polynomial {
        Polynomial::monomial(m(a)).sub(&Polynomial::monomial(m(b)), f)
    }

    fn example_7_1(f: &FieldSpec) -> Vec<Polynomial> {
        vec![
            binom(f, &[1, 2, 0], &[2, 1, 0]),
            binom(f, &[1, 0, 4], &[4, 0, 1]),
            binom(f, &[0, 1, 4], &[0, 4, 1]),
        ]
    }

    #[test]
    fn pure_powers_are_a_basis() {
        let f = FieldSpec::new(3, 1).unwrap();
        let order = MonomialOrder::grevlex(3);
        let gens = vec![Polynomial::monomial(m(&[2, 0, 0])), Polynomial::monomial(m(&[0, 3, 0]))];
        let gb = buchberger(&gens, &order, &f).unwrap();
        assert_eq!(gb.gens().len(), 2);
        assert!(gb.gens().contains(&gens[0]) && gb.gens().contains(&gens[1]));
    }

    #[test]
    fn example_7_1_hilbert_function() {
        let f = FieldSpec::new(2, 2).unwrap();
        let order = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        let gb = buchberger(&example_7_1(&f), &order, &f).unwrap();
        assert!(gb.satisfies_buchberger_criterion(&f));
        let init = gb.initial_ideal();
        let hf: Vec<u64> = (1..=5).map(|d| init.hilbert_function(d)).collect();
        assert_eq!(hf, vec![3, 6, 9, 12, 13]);
        let s = init.hilbert_summary().unwrap();
        assert_eq!((s.degree, s.regularity), (13, 5));
    }

    #[test]
    fn projective_plane_over_gf2() {
        let f = FieldSpec::new(2, 1).unwrap();
        let order = MonomialOrder::grevlex(3);
        let gens = vec![
            binom(&f, &[1, 2, 0], &[2, 1, 0]),
            binom(&f, &[1, 0, 2], &[2, 0, 1]),
            binom(&f, &[0, 2, 1], &[0, 1, 2]),
        ];
        let gb = buchberger(&gens, &order, &f).unwrap();
        let s = gb.initial_ideal().hilbert_summary().unwrap();
        assert_eq!(s.degree, 7);
    }

    #[test]
    fn empty_generators_rejected() {
        let f = FieldSpec::new(2, 1).unwrap();
        let order = MonomialOrder::lex(2);
        assert_eq!(buchberger(&[], &order, &f), Err(Error::EmptyInput("generator list")));
        assert_eq!(buchberger(&[Polynomial::zero(2)], &order, &f), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn initial_ideal_of_single_generator() {
        let f = FieldSpec::new(3, 1).unwrap();
        let order = MonomialOrder::lex(2);
        let gb = buchberger(&[binom(&f, &[2, 0], &[0, 2])], &order, &f).unwrap();
        assert_eq!(gb.initial_ideal().gens(), &[m(&[2, 0])]);
    }

    #[test]
    fn vanishing_ideal_of_one_point() {
        let f = FieldSpec::new(2, 1).unwrap();
        let order = MonomialOrder::grevlex(3);
        let gb = vanishing_ideal_points(&[vec![f.one(), f.zero(), f.zero()]], &order, &f).unwrap();
        assert_eq!(gb.gens(), &[Polynomial::var(3, 1), Polynomial::var(3, 2)]);
    }

    #[test]
    fn vanishing_ideal_matches_published_generators() {
        let f = FieldSpec::new(2, 2).unwrap();
        let order = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        // [{0,1} x {0,1} x F4] with first nonzero coordinate 1
        let mut pts = Vec::new();
        for a in 0..2u32 {
            for b in 0..2u32 {
                for c in 0..4u32 {
                    let p = vec![FieldElement(a), FieldElement(b), FieldElement(c)];
                    if let Some(first) = p.iter().find(|x| !x.is_zero()) {
                        if *first == f.one() {
                            pts.push(p);
                        }
                    }
                }
            }
        }
        assert_eq!(pts.len(), 13);
        let from_points = vanishing_ideal_points(&pts, &order, &f).unwrap();
        let published = buchberger(&example_7_1(&f), &order, &f).unwrap();
        assert_eq!(from_points, published);
    }

    #[test]
    fn empty_point_set_rejected() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(
            vanishing_ideal_points(&[], &MonomialOrder::lex(2), &f),
            Err(Error::EmptyInput("point set"))
        );
    }
}
