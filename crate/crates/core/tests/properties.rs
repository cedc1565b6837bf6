use gmd_core::codes::{gaussian_binomial, ghw, singleton_bound, support_weight, weight_hierarchy};
use gmd_core::gmdfun::{delta_fn, footprint_fn, vasconcelos_fn};
use gmd_core::groebner::{buchberger, evaluation_matrix};
use gmd_core::linalg::rank;
use gmd_core::poly::{divide, monomials_of_degree};
use gmd_core::{
    EvaluationCode, FieldElement, FieldSpec, Monomial, MonomialIdeal, MonomialOrder, OrderKind, PointSet,
    Polynomial, SubcodeBasis,
};
use proptest::prelude::*;

const SMALL_FIELDS: &[(u32, u32)] = &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (11, 1), (13, 1)];

#[test]
fn small_fields_satisfy_the_axioms_exhaustively() {
    for &(p, k) in SMALL_FIELDS {
        let f = FieldSpec::new(p, k).unwrap();
        let q = f.size();
        let els: Vec<FieldElement> = f.elements().collect();
        assert_eq!(els.len(), q as usize);
        for &x in &els {
            assert_eq!(f.pow(x, q as u64), x, "Frobenius in GF({q})");
            if !x.is_zero() {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            }
            assert_eq!(f.add(x, f.neg(x)), f.zero());
            for &y in &els {
                assert_eq!(f.add(x, y), f.add(y, x));
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for &z in &els {
                    assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                    assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
        // the multiplicative group is cyclic of order q - 1
        let orders: Vec<u32> = els
            .iter()
            .filter(|x| !x.is_zero())
            .map(|&x| {
                let mut y = x;
                let mut n = 1;
                while y != f.one() {
                    y = f.mul(y, x);
                    n += 1;
                }
                n
            })
            .collect();
        assert_eq!(orders.len() as u32, q - 1);
        assert!(orders.iter().all(|o| (q - 1) % o == 0));
        assert_eq!(*orders.iter().max().unwrap(), q - 1);
    }
}

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![(2u32, 1u32), (3, 1), (2, 2), (5, 1), (3, 3), (2, 8), (65521, 1), (2, 16), (3, 7)])
        .prop_map(|(p, k)| FieldSpec::new(p, k).unwrap())
}

proptest! {
    #[test]
    fn large_field_arithmetic(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let q = f.size();
        let (x, y, z) = (FieldElement(a % q), FieldElement(b % q), FieldElement(c % q));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.sub(f.add(x, y), y), x);
        prop_assert_eq!(f.pow(x, q as u64), x);
        let p = f.characteristic() as u64;
        prop_assert_eq!(f.pow(f.add(x, y), p), f.add(f.pow(x, p), f.pow(y, p)));
        if !y.is_zero() {
            prop_assert_eq!(f.mul(f.div(x, y).unwrap(), y), x);
        }
    }
}

const NV: usize = 3;

fn monomial_strategy(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, NV).prop_map(Monomial::new)
}

fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
    (
        prop::sample::select(vec![OrderKind::Lex, OrderKind::GradedLex, OrderKind::GradedReverseLex]),
        Just(vec![0usize, 1, 2]).prop_shuffle(),
    )
        .prop_map(|(k, p)| MonomialOrder::with_priority(k, p).unwrap())
}

fn gf3() -> FieldSpec {
    FieldSpec::new(3, 1).unwrap()
}

fn poly_strategy(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial_strategy(max_exp), 1u32..3), 0..=max_terms).prop_map(|ts| {
        let f = gf3();
        Polynomial::from_terms(NV, ts.into_iter().map(|(m, c)| (m, FieldElement(c))), &f).unwrap()
    })
}

fn form_strategy(degree: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(NV, degree);
    prop::collection::vec((prop::sample::select(monos), 1u32..3), 1..=max_terms).prop_map(|ts| {
        Polynomial::from_terms(NV, ts.into_iter().map(|(m, c)| (m, FieldElement(c))), &gf3()).unwrap()
    })
}

proptest! {
    #[test]
    fn orders_are_total_multiplicative_well_orders(
        o in order_strategy(),
        a in monomial_strategy(4),
        b in monomial_strategy(4),
        c in monomial_strategy(4),
    ) {
        use core::cmp::Ordering;
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_ne!(o.cmp(&Monomial::one(NV), &a), Ordering::Greater);
        if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
            prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
        }
        if o.is_graded() && a.degree() != b.degree() {
            prop_assert_eq!(ab, a.degree().cmp(&b.degree()));
        }
    }

    #[test]
    fn division_reconstructs_the_dividend(
        o in order_strategy(),
        f in poly_strategy(4, 8),
        gs in prop::collection::vec(poly_strategy(2, 3), 1..4),
    ) {
        let field = gf3();
        let gs: Vec<Polynomial> = gs.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        let (qs, r) = divide(&f, &gs, &o, &field).unwrap();
        let mut back = r.clone();
        for (q, g) in qs.iter().zip(&gs) {
            back = back.add(&q.mul(g, &field), &field);
        }
        prop_assert_eq!(back, f);
        let leads: Vec<Monomial> = gs.iter().map(|g| g.leading_monomial(&o).unwrap()).collect();
        for (m, _) in r.terms() {
            prop_assert!(leads.iter().all(|l| !l.divides(m)));
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        f in poly_strategy(3, 6),
        g in poly_strategy(3, 6),
        pt in prop::collection::vec(0u32..3, NV),
    ) {
        let field = gf3();
        let pt: Vec<FieldElement> = pt.into_iter().map(FieldElement).collect();
        let ev = |p: &Polynomial| p.evaluate(&pt, &field).unwrap();
        prop_assert_eq!(ev(&f.add(&g, &field)), field.add(ev(&f), ev(&g)));
        prop_assert_eq!(ev(&f.mul(&g, &field)), field.mul(ev(&f), ev(&g)));
    }

    #[test]
    fn homogeneity_is_preserved(
        (d1, d2, f, g, h) in (0u32..4, 0u32..4).prop_flat_map(|(d1, d2)| {
            (Just(d1), Just(d2), form_strategy(d1, 4), form_strategy(d1, 4), form_strategy(d2, 4))
        })
    ) {
        let field = gf3();
        prop_assert!(f.add(&g, &field).is_homogeneous());
        let fh = f.mul(&h, &field);
        prop_assert!(fh.is_homogeneous());
        if !fh.is_zero() {
            prop_assert_eq!(fh.total_degree(), Some(d1 + d2));
        }
    }

    #[test]
    fn buchberger_output_is_a_groebner_basis(
        o in order_strategy(),
        gens in prop::collection::vec(poly_strategy(2, 3), 1..4),
    ) {
        let field = gf3();
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let gb = buchberger(&gens, &o, &field).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion(&field));
        for g in &gens {
            prop_assert!(gb.contains(g, &field).unwrap());
        }
        for g in gb.gens() {
            prop_assert_eq!(g.leading_term(&o).unwrap().1, field.one());
        }
    }
}

/// Random sets of points of `P^2` over `GF(3)`.
fn point_set_strategy(min: usize, max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(0u32..3, 3), min..=max).prop_filter_map("zero point", move |pts| {
        if pts.iter().any(|p| p.iter().all(|&c| c == 0)) {
            return None;
        }
        let pts = pts.into_iter().map(|p| p.into_iter().map(FieldElement).collect()).collect();
        let x = PointSet::custom(&gf3(), pts).ok()?;
        (x.len() >= min).then_some(x)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn initial_ideal_matches_evaluation_ranks(x in point_set_strategy(1, 13), o in order_strategy()) {
        let field = gf3();
        let gb = x.vanishing_ideal(&o).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion(&field));
        let l = gb.initial_ideal();
        let summary = l.hilbert_summary().unwrap();
        prop_assert_eq!(summary.degree, x.len() as u64);
        for d in 1..=summary.regularity + 1 {
            let m = evaluation_matrix(x.points(), &monomials_of_degree(3, d), &field);
            prop_assert_eq!(l.hilbert_function(d), rank(&m, &field) as u64, "d = {}", d);
        }
        for g in gb.gens() {
            for p in x.points() {
                prop_assert!(g.evaluate(p, &field).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn weights_obey_wei_singleton_and_regularity(x in point_set_strategy(2, 9)) {
        let o = MonomialOrder::grevlex(3);
        let l = x.vanishing_ideal(&o).unwrap().initial_ideal();
        let summary = l.hilbert_summary().unwrap();
        let m = x.len();
        for d in 1..=summary.regularity + 1 {
            let code = EvaluationCode::new(&x, &l, &o, d).unwrap();
            let h = code.dimension();
            let hier = weight_hierarchy(&code).unwrap();
            prop_assert_eq!(hier.len(), h);
            prop_assert!(hier.windows(2).all(|w| w[0] < w[1]), "{:?}", hier);
            for (i, &w) in hier.iter().enumerate() {
                let r = i + 1;
                prop_assert!(w <= singleton_bound(&code, r));
                prop_assert!(r <= w && w <= m);
                if gaussian_binomial(h, r, 3) <= 1 << 16 {
                    prop_assert_eq!(delta_fn(&x, &l, &o, d, r, 1 << 16).unwrap(), w);
                    prop_assert_eq!(vasconcelos_fn(&x, &l, &o, d, r, 1 << 16).unwrap(), w);
                }
                prop_assert!(footprint_fn(&l, m as u64, d, r).unwrap() <= w as u64);
                if d >= summary.regularity {
                    prop_assert_eq!(w, r);
                }
            }
        }
    }

    #[test]
    fn support_weight_counts_non_common_zeros(
        x in point_set_strategy(3, 13),
        d in 1u32..3,
        rows in prop::collection::vec(prop::collection::vec(0u32..3, 10), 1..4),
    ) {
        let field = gf3();
        let o = MonomialOrder::grevlex(3);
        let l = x.vanishing_ideal(&o).unwrap().initial_ideal();
        let code = EvaluationCode::new(&x, &l, &o, d).unwrap();
        let h = code.dimension();
        let msgs: Vec<Vec<FieldElement>> = rows.iter().map(|r| r[..h].iter().map(|&c| FieldElement(c)).collect()).collect();
        prop_assume!(rank(&msgs, &field) == msgs.len());
        let basis = SubcodeBasis::new(msgs.clone(), &field).unwrap();
        let polys: Vec<Polynomial> = msgs.iter().map(|v| code.message_polynomial(v).unwrap()).collect();
        let (zeros, outside) = x.zero_counts(&polys).unwrap();
        prop_assert_eq!(zeros + outside, x.len());
        prop_assert_eq!(support_weight(&code, &basis).unwrap(), outside);
        // a common zero exists exactly when the supports miss a point
        prop_assert_eq!(zeros == 0, outside == x.len());
        if basis.rank() == 1 {
            prop_assert!(ghw(&code, 1).unwrap() <= outside);
        }
    }

    #[test]
    fn colon_contains_the_ideal(
        gens in prop::collection::vec(monomial_strategy(3), 1..4),
        ms in prop::collection::vec(monomial_strategy(2), 1..3),
    ) {
        let l = MonomialIdeal::new(NV, gens).unwrap();
        let c = l.colon(&ms).unwrap();
        for g in l.gens() {
            prop_assert!(c.contains(g));
        }
        // brute force: u ∈ (L : (M)) iff u·m ∈ L for every m
        let top = l.max_exponent() * NV as u32;
        let mut proper = false;
        for deg in 0..=top {
            for u in monomials_of_degree(NV, deg) {
                let member = ms.iter().all(|m| l.contains(&u.mul(m)));
                prop_assert_eq!(member, c.contains(&u));
                proper |= member && !l.contains(&u);
            }
        }
        prop_assert_eq!(proper, l.colon_is_proper_extension(&ms).unwrap());
    }
}
