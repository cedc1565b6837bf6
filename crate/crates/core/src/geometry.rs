//! Finite sets of projective points: cartesian and nested cartesian sets,
//! projective spaces and tori, their vanishing ideals and zero sets.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::groebner::{buchberger, vanishing_ideal_points, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Homogeneous coordinates of a point in standard form.
pub type Point = Vec<FieldElement>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `[A_1 × ... × A_n × {1}]`, points normalized with last coordinate 1.
    AffineCartesian,
    /// `[A_1 × ... × A_s]` satisfying the nested closure conditions.
    NestedCartesian,
    ProjectiveSpace,
    Torus,
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::AffineCartesian => "affine-cartesian",
            Family::NestedCartesian => "nested-cartesian",
            Family::ProjectiveSpace => "projective-space",
            Family::Torus => "torus",
            Family::Custom => "custom",
        }
    }
}

/// A finite, duplicate-free set of points of `P^{s-1}` over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    field: FieldSpec,
    nvars: usize,
    family: Family,
    factors: Vec<Vec<FieldElement>>,
    points: Vec<Point>,
}

fn check_factor(field: &FieldSpec, i: usize, a: &[FieldElement]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptyInput("factor"));
    }
    for (j, x) in a.iter().enumerate() {
        field.check(*x)?;
        if a[..j].contains(x) {
            return Err(Error::Precondition(format!(
                "factor A_{} lists {} twice",
                i + 1,
                field.format(*x)
            )));
        }
    }
    Ok(())
}

/// Scales `p` so that its first nonzero coordinate is one.
pub fn normalize_first(p: &mut [FieldElement], field: &FieldSpec) -> Result<()> {
    let lead = *p.iter().find(|x| !x.is_zero()).ok_or(Error::Precondition("zero vector is not a projective point".into()))?;
    if lead != field.one() {
        let inv = field.inv(lead)?;
        for x in p.iter_mut() {
            *x = field.mul(*x, inv);
        }
    }
    Ok(())
}

/// Iterates over the cartesian product of `factors`.
fn for_each_tuple(factors: &[Vec<FieldElement>], mut visit: impl FnMut(&[FieldElement])) {
    let n = factors.len();
    let mut idx = vec![0usize; n];
    let mut tuple: Vec<FieldElement> = factors.iter().map(|a| a[0]).collect();
    loop {
        visit(&tuple);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < factors[i].len() {
                tuple[i] = factors[i][idx[i]];
                break;
            }
            idx[i] = 0;
            tuple[i] = factors[i][0];
        }
    }
}

impl PointSet {
    /// `[A_1 × ... × A_n × {1}] ⊂ P^n`.
    pub fn affine_cartesian(field: &FieldSpec, factors: Vec<Vec<FieldElement>>) -> Result<PointSet> {
        if factors.is_empty() {
            return Err(Error::EmptyInput("factor list"));
        }
        for (i, a) in factors.iter().enumerate() {
            check_factor(field, i, a)?;
            if a.len() < 2 {
                return Err(Error::Precondition(format!("factor A_{} has fewer than two elements", i + 1)));
            }
        }
        let mut points = Vec::new();
        for_each_tuple(&factors, |t| {
            let mut p = t.to_vec();
            p.push(field.one());
            points.push(p);
        });
        points.sort();
        Ok(PointSet { field: field.clone(), nvars: factors.len() + 1, family: Family::AffineCartesian, factors, points })
    }

    /// `[A_1 × ... × A_s] ⊂ P^{s-1}` for factors satisfying: each contains 0
    /// and 1; `a/b ∈ A_j` whenever `i < j`, `a ∈ A_j`, `0 ≠ b ∈ A_i`; and
    /// non-decreasing sizes.
    pub fn nested_cartesian(field: &FieldSpec, factors: Vec<Vec<FieldElement>>) -> Result<PointSet> {
        check_nested(field, &factors)?;
        PointSet::from_nested_factors(field, factors, Family::NestedCartesian)
    }

    fn from_nested_factors(field: &FieldSpec, factors: Vec<Vec<FieldElement>>, family: Family) -> Result<PointSet> {
        let mut points = Vec::new();
        let mut err = None;
        for_each_tuple(&factors, |t| {
            if t.iter().all(|x| x.is_zero()) {
                return;
            }
            let mut p = t.to_vec();
            if let Err(e) = normalize_first(&mut p, field) {
                err = Some(e);
            }
            points.push(p);
        });
        if let Some(e) = err {
            return Err(e);
        }
        points.sort();
        points.dedup();
        Ok(PointSet { field: field.clone(), nvars: factors.len(), family, factors, points })
    }

    /// All of `P^{s-1}`.
    pub fn projective_space(field: &FieldSpec, s: usize) -> Result<PointSet> {
        if s < 2 {
            return Err(Error::Precondition("projective space needs s ≥ 2".into()));
        }
        let all: Vec<FieldElement> = field.elements().collect();
        PointSet::from_nested_factors(field, vec![all; s], Family::ProjectiveSpace)
    }

    /// The projective torus: points with every coordinate nonzero.
    pub fn torus(field: &FieldSpec, s: usize) -> Result<PointSet> {
        if s < 2 {
            return Err(Error::Precondition("projective torus needs s ≥ 2".into()));
        }
        let units: Vec<FieldElement> = field.elements().skip(1).collect();
        let mut factors = vec![vec![field.one()]];
        factors.extend(core::iter::repeat(units).take(s - 1));
        let mut points = Vec::new();
        for_each_tuple(&factors, |t| points.push(t.to_vec()));
        points.sort();
        factors[0] = field.elements().skip(1).collect();
        Ok(PointSet { field: field.clone(), nvars: s, family: Family::Torus, factors, points })
    }

    /// Arbitrary points, normalized and deduplicated.
    pub fn custom(field: &FieldSpec, points: Vec<Point>) -> Result<PointSet> {
        let nvars = points.first().ok_or(Error::EmptyInput("point set"))?.len();
        let mut out = Vec::with_capacity(points.len());
        for mut p in points {
            if p.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: p.len() });
            }
            for x in &p {
                field.check(*x)?;
            }
            normalize_first(&mut p, field)?;
            out.push(p);
        }
        out.sort();
        out.dedup();
        Ok(PointSet { field: field.clone(), nvars, family: Family::Custom, factors: Vec::new(), points: out })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The factor sets `A_i` (for the torus, copies of the unit group).
    pub fn factors(&self) -> &[Vec<FieldElement>] {
        &self.factors
    }

    pub fn factor_sizes(&self) -> Vec<usize> {
        self.factors.iter().map(Vec::len).collect()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Known generators of the vanishing ideal of a structured family.
    pub fn vanishing_generators(&self) -> Result<Vec<Polynomial>> {
        let f = &self.field;
        let s = self.nvars;
        let t = |i: usize| Polynomial::var(s, i);
        match self.family {
            Family::NestedCartesian | Family::ProjectiveSpace => {
                // t_i ∏_{γ ∈ A_j} (t_j - γ t_i) for i < j
                let mut gens = Vec::new();
                for i in 0..s {
                    for j in i + 1..s {
                        let mut g = t(i);
                        for &gamma in &self.factors[j] {
                            g = g.mul(&t(j).sub(&t(i).scale(gamma, f), f), f);
                        }
                        gens.push(g);
                    }
                }
                Ok(gens)
            }
            Family::AffineCartesian => Ok(self
                .factors
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    a.iter().fold(Polynomial::constant(s, f.one()), |acc, &gamma| {
                        acc.mul(&t(i).sub(&t(s - 1).scale(gamma, f), f), f)
                    })
                })
                .collect()),
            Family::Torus => {
                let e = f.size() - 1;
                let last = Polynomial::monomial(Monomial::var(s, s - 1, e));
                Ok((0..s - 1).map(|i| Polynomial::monomial(Monomial::var(s, i, e)).sub(&last, f)).collect())
            }
            Family::Custom => Err(Error::Precondition("custom point sets have no known generators".into())),
        }
    }

    /// Reduced Gröbner basis of `I(X)`. Structured families use their known
    /// generators (checked to vanish on `X` and to give degree `|X|`);
    /// custom sets go through evaluation-matrix kernels.
    pub fn vanishing_ideal(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        if order.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: order.nvars() });
        }
        if self.family == Family::Custom {
            return vanishing_ideal_points(&self.points, order, &self.field);
        }
        let gens = self.vanishing_generators()?;
        for g in &gens {
            if let Some(p) = self.points.iter().find(|p| !g.eval_unchecked(p, &self.field).is_zero()) {
                return Err(Error::Validation(format!(
                    "{} does not vanish at {}",
                    g.format(&self.field, order),
                    self.format_point(p)
                )));
            }
        }
        let gb = buchberger(&gens, order, &self.field)?;
        let degree = gb.initial_ideal().hilbert_summary()?.degree;
        if degree != self.len() as u64 {
            return Err(Error::Validation(format!(
                "known generators give degree {degree}, but the set has {} points",
                self.len()
            )));
        }
        Ok(gb)
    }

    /// Indices of the points where every polynomial of `polys` vanishes.
    pub fn zero_set(&self, polys: &[Polynomial]) -> Result<Vec<usize>> {
        for g in polys {
            if g.nvars() != self.nvars {
                return Err(Error::DimensionMismatch { expected: self.nvars, found: g.nvars() });
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            for (_, c) in g.terms() {
                self.field.check(c)?;
            }
        }
        Ok((0..self.points.len())
            .filter(|&i| polys.iter().all(|g| g.eval_unchecked(&self.points[i], &self.field).is_zero()))
            .collect())
    }

    /// `(|V_X(F)|, |X \ V_X(F)|)`.
    pub fn zero_counts(&self, polys: &[Polynomial]) -> Result<(usize, usize)> {
        let z = self.zero_set(polys)?.len();
        Ok((z, self.len() - z))
    }

    pub fn format_point(&self, p: &[FieldElement]) -> String {
        let parts: Vec<String> = p.iter().map(|x| self.field.format(*x)).collect();
        format!("[{}]", parts.join(":"))
    }
}

fn check_nested(field: &FieldSpec, factors: &[Vec<FieldElement>]) -> Result<()> {
    if factors.len() < 2 {
        return Err(Error::Precondition("a nested cartesian set needs at least two factors".into()));
    }
    for (i, a) in factors.iter().enumerate() {
        check_factor(field, i, a)?;
        for (x, name) in [(field.zero(), "0"), (field.one(), "1")] {
            if !a.contains(&x) {
                return Err(Error::NestedCondition { condition: 1, detail: format!("{name} ∉ A_{}", i + 1) });
            }
        }
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            for &a in &factors[j] {
                for &b in factors[i].iter().filter(|b| !b.is_zero()) {
                    let ratio = field.div(a, b)?;
                    if !factors[j].contains(&ratio) {
                        return Err(Error::NestedCondition {
                            condition: 2,
                            detail: format!(
                                "{}/{} ∉ A_{}",
                                field.format(a),
                                field.format(b),
                                j + 1
                            ),
                        });
                    }
                }
            }
        }
    }
    for i in 1..factors.len() {
        if factors[i - 1].len() > factors[i].len() {
            return Err(Error::NestedCondition {
                condition: 3,
                detail: format!("|A_{}| > |A_{}|", i, i + 1),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::OrderKind;

    fn gf4() -> FieldSpec {
        FieldSpec::new(2, 2).unwrap()
    }

    fn el(xs: &[u32]) -> Vec<FieldElement> {
        xs.iter().map(|&x| FieldElement(x)).collect()
    }

    fn example_7_1() -> PointSet {
        let f = gf4();
        PointSet::nested_cartesian(&f, vec![el(&[0, 1]), el(&[0, 1]), el(&[0, 1, 2, 3])]).unwrap()
    }

    #[test]
    fn affine_cartesian_sizes() {
        let f = gf4();
        let x = PointSet::affine_cartesian(&f, vec![el(&[0, 1]), el(&[0, 1]), el(&[0, 1, 2, 3])]).unwrap();
        assert_eq!(x.len(), 16);
        assert!(x.points().iter().all(|p| p[3] == f.one()));
        let g2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(PointSet::affine_cartesian(&g2, vec![el(&[0, 1])]).unwrap().len(), 2);
    }

    #[test]
    fn affine_cartesian_rejects_bad_factors() {
        let f = gf4();
        assert!(PointSet::affine_cartesian(&f, vec![el(&[])]).is_err());
        assert!(PointSet::affine_cartesian(&f, vec![el(&[1, 1])]).is_err());
    }

    #[test]
    fn nested_cartesian_example_sizes() {
        assert_eq!(example_7_1().len(), 13);
        let g2 = FieldSpec::new(2, 1).unwrap();
        let x = PointSet::nested_cartesian(&g2, vec![el(&[0, 1]); 3]).unwrap();
        assert_eq!(x.len(), 7);
    }

    #[test]
    fn nested_conditions_reported() {
        let f = gf4();
        let e = PointSet::nested_cartesian(&f, vec![el(&[0, 1]), el(&[0, 2])]).unwrap_err();
        assert!(matches!(e, Error::NestedCondition { condition: 1, .. }));
        let e = PointSet::nested_cartesian(&f, vec![el(&[0, 1, 2]), el(&[0, 1, 2])]).unwrap_err();
        assert!(matches!(e, Error::NestedCondition { condition: 2, .. }));
        let e = PointSet::nested_cartesian(&f, vec![el(&[0, 1, 2, 3]), el(&[0, 1])]).unwrap_err();
        assert!(matches!(e, Error::NestedCondition { condition: 2 | 3, .. }));
        let g3 = FieldSpec::new(3, 1).unwrap();
        let e = PointSet::nested_cartesian(&g3, vec![el(&[0, 1, 2]), el(&[0, 1, 2]), el(&[0, 1])]).unwrap_err();
        assert!(matches!(e, Error::NestedCondition { .. }));
    }

    #[test]
    fn projective_space_and_torus_sizes() {
        let g2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(PointSet::projective_space(&g2, 3).unwrap().len(), 7);
        let g3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(PointSet::torus(&g3, 3).unwrap().len(), 4);
        assert_eq!(PointSet::torus(&gf4(), 2).unwrap().len(), 3);
    }

    #[test]
    fn example_7_1_generators() {
        let x = example_7_1();
        let f = x.field().clone();
        let order = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        let shown: Vec<String> = x.vanishing_generators().unwrap().iter().map(|g| g.format(&f, &order)).collect();
        assert_eq!(shown, ["t1*t2^2+t1^2*t2", "t1*t3^4+t1^4*t3", "t2*t3^4+t2^4*t3"]);
        let gb = x.vanishing_ideal(&order).unwrap();
        assert_eq!(gb.initial_ideal().hilbert_summary().unwrap().degree, 13);
    }

    #[test]
    fn structured_ideals_match_point_kernels() {
        let g3 = FieldSpec::new(3, 1).unwrap();
        let sets = [
            PointSet::projective_space(&FieldSpec::new(2, 1).unwrap(), 3).unwrap(),
            PointSet::torus(&g3, 3).unwrap(),
            PointSet::affine_cartesian(&g3, vec![el(&[0, 1]), el(&[0, 1, 2])]).unwrap(),
            example_7_1(),
        ];
        for x in sets {
            let order = MonomialOrder::grevlex(x.nvars());
            let known = x.vanishing_ideal(&order).unwrap();
            let custom = PointSet::custom(x.field(), x.points().to_vec()).unwrap();
            assert_eq!(custom.vanishing_ideal(&order).unwrap(), known, "{:?}", x.family());
        }
    }

    #[test]
    fn affine_cartesian_initial_ideal_is_pure_powers() {
        let f = gf4();
        let x = PointSet::affine_cartesian(&f, vec![el(&[0, 1]), el(&[0, 1]), el(&[0, 1, 2, 3])]).unwrap();
        let gb = x.vanishing_ideal(&MonomialOrder::grevlex(4)).unwrap();
        let init = gb.initial_ideal();
        assert_eq!(init.gens().len(), 3);
        for (i, d) in [2u32, 2, 4].iter().enumerate() {
            assert!(init.gens().contains(&Monomial::var(4, i, *d)));
        }
        assert_eq!(init.hilbert_summary().unwrap().degree, 16);
    }

    #[test]
    fn zero_set_of_a_line() {
        let g2 = FieldSpec::new(2, 1).unwrap();
        let x = PointSet::projective_space(&g2, 3).unwrap();
        assert_eq!(x.zero_counts(&[Polynomial::var(3, 0)]).unwrap(), (3, 4));
        assert_eq!(x.zero_set(&[Polynomial::zero(3)]), Err(Error::ZeroPolynomial));
        let inhom = Polynomial::var(3, 0).add(&Polynomial::monomial(Monomial::var(3, 1, 2)), &g2);
        assert_eq!(x.zero_set(&[inhom]), Err(Error::NotHomogeneous));
    }

    #[test]
    fn example_7_1_witness_vanishes_off_e3() {
        let x = example_7_1();
        let f = x.field().clone();
        let m = |e: &[u32]| Polynomial::monomial(Monomial::new(e.to_vec()));
        // t3 (t3^3 - t2^3 - t1^3 + t1^2 t2)
        let g = m(&[0, 0, 4]).sub(&m(&[0, 3, 1]), &f).sub(&m(&[3, 0, 1]), &f).add(&m(&[2, 1, 1]), &f);
        let zeros = x.zero_set(core::slice::from_ref(&g)).unwrap();
        assert_eq!(zeros.len(), 12);
        let e3 = el(&[0, 0, 1]);
        assert_eq!(g.evaluate(&e3, &f).unwrap(), f.one());
    }
}
