//! Closed forms and integer inequalities for generalized Hamming weights of
//! cartesian, nested cartesian and toric codes, with exhaustive verifiers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{Family, PointSet};
use crate::gf::FieldElement;
use crate::linalg::rank;
use crate::poly::{Monomial, Polynomial};

/// `∏a + ∏b - ∏min(a_i, b_i)`.
pub fn pi(a: &[i64], b: &[i64]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    let pa: i64 = a.iter().product();
    let pb: i64 = b.iter().product();
    let pm: i64 = a.iter().zip(b).map(|(x, y)| *x.min(y)).product();
    Ok(pa + pb - pm)
}

fn check_sorted(e: &[i64], what: &str) -> Result<()> {
    if e.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(format!("{what} must be non-decreasing")));
    }
    Ok(())
}

/// Right-hand side `(d - Σ_{i>k} e_i - (k-2)) e_{k+1}⋯e_m - e_{k+2}⋯e_m` of
/// the lower bound for `π`, with `d = Σa` and `1 ≤ k ≤ m-1`.
pub fn thm62_rhs(d: i64, e: &[i64], k: usize) -> Result<i64> {
    let m = e.len();
    if k == 0 || k >= m {
        return Err(Error::Precondition(format!("k = {k} outside 1..={}", m.saturating_sub(1))));
    }
    let tail_sum: i64 = e[k..].iter().sum();
    let tail: i64 = e[k..].iter().product();
    let tail2: i64 = e[k + 1..].iter().product();
    Ok((d - tail_sum - (k as i64 - 2)) * tail - tail2)
}

/// One checked instance of an inequality `lhs ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub e: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub k: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of an exhaustive verification.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: u64,
    pub violations: Vec<Instance>,
    /// Instances with equality (at most [`MAX_RECORDED`] are kept).
    pub tight_instances: Vec<Instance>,
    pub tight_count: u64,
}

pub const MAX_RECORDED: usize = 16;

impl Report {
    fn record(&mut self, inst: Instance) {
        if inst.lhs < inst.rhs {
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(inst);
            }
        } else if inst.lhs == inst.rhs {
            self.tight_count += 1;
            if self.tight_instances.len() < MAX_RECORDED {
                self.tight_instances.push(inst);
            }
        }
    }

    /// Adds `other` into `self`.
    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.tight_count += other.tight_count;
        for v in other.violations {
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(v);
            }
        }
        for t in other.tight_instances {
            if self.tight_instances.len() < MAX_RECORDED {
                self.tight_instances.push(t);
            }
        }
    }

    pub fn violation_free(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Visits every integer vector `v` with `lo_i ≤ v_i ≤ hi_i`.
pub fn for_each_box(lo: &[i64], hi: &[i64], mut visit: impl FnMut(&[i64])) {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut v = lo.to_vec();
    loop {
        visit(&v);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if v[i] < hi[i] {
                v[i] += 1;
                break;
            }
            v[i] = lo[i];
            i += 1;
        }
    }
}

/// Checks `π(a, b) ≥ thm62_rhs` for all `1 ≤ a_i, b_i ≤ e_i` with
/// `Σa = Σb`, `a ≠ b`, and all `k`.
///
/// The right-hand side depends on `a` only through `d = Σa`, so each `d`
/// compares the least `π` over its pairs with the largest right-hand side;
/// `checked` counts the (unordered pair, k) instances covered.
pub fn verify_thm62(e: &[i64]) -> Result<Report> {
    check_sorted(e, "e")?;
    if e.iter().any(|&x| x < 1) {
        return Err(Error::Precondition("e_i must be positive".into()));
    }
    let m = e.len();
    let mut report = Report::default();
    if m < 2 {
        return Ok(report);
    }
    let total: i64 = e.iter().sum();
    let mut groups: Vec<Vec<Vec<i64>>> = vec![Vec::new(); total as usize + 1];
    for_each_box(&vec![1; m], e, |a| groups[a.iter().sum::<i64>() as usize].push(a.to_vec()));
    for (d, group) in groups.iter().enumerate() {
        let n = group.len() as u64;
        if n < 2 {
            continue;
        }
        let mut best: Option<(i64, usize, usize)> = None;
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let p = pi(&group[i], &group[j])?;
                if best.map_or(true, |(b, _, _)| p < b) {
                    best = Some((p, i, j));
                }
            }
        }
        let (p, i, j) = best.expect("group has two elements");
        for k in 1..m {
            let rhs = thm62_rhs(d as i64, e, k)?;
            report.record(Instance { e: e.to_vec(), a: group[i].clone(), b: group[j].clone(), k, lhs: p, rhs });
        }
        report.checked += n * (n - 1) / 2 * (m as u64 - 1);
    }
    Ok(report)
}

/// Checks `∏(e_i - b_i) ≥ (Σ_{i≤k}(e_i - b_i) - (k-1) - Σ_{i>k} b_i) e_{k+1}⋯e_m`
/// for every `0 ≤ b_i ≤ e_i - 1` and `1 ≤ k ≤ m`.
pub fn lemma53_check(e: &[i64]) -> Result<Report> {
    check_sorted(e, "e")?;
    if e.is_empty() || e[0] < 1 {
        return Err(Error::Precondition("need 1 ≤ e_1".into()));
    }
    let m = e.len();
    let mut report = Report::default();
    let hi: Vec<i64> = e.iter().map(|x| x - 1).collect();
    for_each_box(&vec![0; m], &hi, |b| {
        let lhs: i64 = e.iter().zip(b).map(|(x, y)| x - y).product();
        for k in 1..=m {
            let head: i64 = (0..k).map(|i| e[i] - b[i]).sum();
            let tail_b: i64 = b[k..].iter().sum();
            let tail_e: i64 = e[k..].iter().product();
            let rhs = (head - (k as i64 - 1) - tail_b) * tail_e;
            report.checked += 1;
            report.record(Instance { e: e.to_vec(), a: Vec::new(), b: b.to_vec(), k, lhs, rhs });
        }
    });
    Ok(report)
}

/// Checks `a_1⋯a_r ≥ (a_1 + ... + a_r) - (r - 1)` over all partitions with
/// sum at most `max_sum` (both sides are symmetric in the `a_i`).
pub fn lemma63_check(max_sum: i64) -> Report {
    let mut report = Report::default();
    let mut parts = Vec::new();
    partitions(max_sum, max_sum, &mut parts, &mut report);
    report
}

fn partitions(remaining: i64, largest: i64, parts: &mut Vec<i64>, report: &mut Report) {
    if !parts.is_empty() {
        let lhs = parts.iter().fold(1i64, |acc, x| acc.saturating_mul(*x));
        let rhs = parts.iter().sum::<i64>() - (parts.len() as i64 - 1);
        report.checked += 1;
        report.record(Instance { e: Vec::new(), a: parts.clone(), b: Vec::new(), k: parts.len(), lhs, rhs });
    }
    for p in (1..=largest.min(remaining)).rev() {
        parts.push(p);
        partitions(remaining - p, p, parts, report);
        parts.pop();
    }
}

/// `d_1⋯d_n - ∏(d_i - a_i)` for `a = (a_1, ..., a_n, a_s)` with
/// `a_i ≤ d_i - 1` and some `a_j ≥ 1`, `j ≤ n`: the degree of
/// `S/(t_1^{d_1}, ..., t_n^{d_n}, t^a)`.
pub fn lemma92_degree(sizes: &[i64], a: &[i64]) -> Result<i64> {
    let n = sizes.len();
    if a.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, found: a.len() });
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::Precondition("exponents must be non-negative".into()));
    }
    if a[..n].iter().zip(sizes).any(|(x, d)| *x > d - 1) {
        return Err(Error::Precondition("need a_i ≤ d_i - 1".into()));
    }
    if a[..n].iter().all(|&x| x == 0) {
        return Err(Error::Precondition("need a_j ≥ 1 for some j ≤ n".into()));
    }
    let full: i64 = sizes.iter().product();
    let rest: i64 = sizes.iter().zip(a).map(|(d, x)| d - x).product();
    Ok(full - rest)
}

/// The unique `(k, ℓ)` with `d = Σ_{i=1}^{k}(sizes_i - 1) + ℓ` and
/// `1 ≤ ℓ ≤ sizes_{k+1} - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeDecomposition {
    pub k: usize,
    pub ell: i64,
}

pub fn degree_decomposition(d: i64, sizes: &[i64]) -> Result<DegreeDecomposition> {
    let total: i64 = sizes.iter().map(|x| x - 1).sum();
    if d < 1 || d > total {
        return Err(Error::Precondition(format!("d = {d} outside 1..={total}")));
    }
    let mut before = 0;
    for (k, &size) in sizes.iter().enumerate() {
        if d < before + size {
            return Ok(DegreeDecomposition { k, ell: d - before });
        }
        before += size - 1;
    }
    unreachable!("d is within the total")
}

fn check_cartesian(sizes: &[i64]) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::EmptyInput("size list"));
    }
    check_sorted(sizes, "sizes")?;
    if sizes[0] < 2 {
        return Err(Error::Precondition("sizes must be at least 2".into()));
    }
    Ok(())
}

/// Closed form of `δ_X(d, 2)` for `X = [A_1 × ... × A_n × {1}]` with
/// `|A_i| = sizes_i`.
pub fn thm83_delta2(sizes: &[i64], d: i64) -> Result<i64> {
    check_cartesian(sizes)?;
    if d < 1 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    let n = sizes.len();
    let total: i64 = sizes.iter().map(|x| x - 1).sum();
    if d >= total {
        return Ok(2);
    }
    let DegreeDecomposition { k, ell } = degree_decomposition(d, sizes)?;
    let prod = |from: usize| -> i64 { sizes.get(from..).map_or(1, |s| s.iter().product()) };
    // sizes are 0-based: d_{k+1} = sizes[k]
    Ok(if k + 2 < n {
        (sizes[k] - ell + 1) * prod(k + 1) - prod(k + 2)
    } else if k + 2 == n {
        (sizes[k] - ell + 1) * prod(k + 1) - 1
    } else {
        sizes[n - 1] - ell + 1
    })
}

/// `P(a, b) = ∏(d_i - a_i) + ∏(d_i - b_i) - ∏min(d_i - a_i, d_i - b_i)`.
pub fn p_value(sizes: &[i64], a: &[i64], b: &[i64]) -> i64 {
    let x: Vec<i64> = sizes.iter().zip(a).map(|(d, v)| d - v).collect();
    let y: Vec<i64> = sizes.iter().zip(b).map(|(d, v)| d - v).collect();
    pi(&x, &y).expect("equal lengths")
}

/// Minimum of `P(a, b)` over pairs of exponent vectors of degree `d` with
/// `a_i, b_i ≤ d_i - 1` for `i ≤ n`, `a ≠ b`, and some nonzero `a_i`, `b_j`
/// among the first `n` coordinates. Returns the value and a minimizing
/// pair (first `n` coordinates, the last one being `d` minus their sum).
pub fn thm85_min(sizes: &[i64], d: i64) -> Result<(i64, Vec<i64>, Vec<i64>)> {
    check_cartesian(sizes)?;
    let n = sizes.len();
    if n < 2 {
        return Err(Error::Precondition("needs at least two cartesian factors".into()));
    }
    let total: i64 = sizes.iter().map(|x| x - 1).sum();
    if d < 1 || d > total {
        return Err(Error::Precondition(format!("d = {d} outside 1..={total}")));
    }
    let hi: Vec<i64> = sizes.iter().map(|x| x - 1).collect();
    let mut heads = Vec::new();
    for_each_box(&vec![0; n], &hi, |a| {
        let s: i64 = a.iter().sum();
        if s >= 1 && s <= d {
            heads.push(a.to_vec());
        }
    });
    let mut best: Option<(i64, usize, usize)> = None;
    for i in 0..heads.len() {
        for j in i + 1..heads.len() {
            let p = p_value(sizes, &heads[i], &heads[j]);
            if best.map_or(true, |(b, _, _)| p < b) {
                best = Some((p, i, j));
            }
        }
    }
    let (p, i, j) = best.ok_or(Error::Precondition("no admissible pair".into()))?;
    Ok((p, heads[i].clone(), heads[j].clone()))
}

/// `δ_T(d, 2)` for the projective torus `T ⊂ P^{s-1}` over `GF(q)`.
pub fn cor84_torus_delta2(q: i64, s: i64, d: i64) -> Result<i64> {
    if q < 3 {
        return Err(Error::Precondition("the torus formula needs q ≥ 3".into()));
    }
    if s < 3 || d < 1 {
        return Err(Error::Precondition("needs s ≥ 3 and d ≥ 1".into()));
    }
    let k = (d - 1) / (q - 2);
    let ell = d - k * (q - 2);
    let eta = (q - 2) * (s - 2);
    let gamma = (q - 2) * (s - 1);
    Ok(if d <= eta {
        (q - 1).pow((s - (k + 3)) as u32) * ((q - 1) * (q - ell) - 1)
    } else if d < gamma {
        q - ell
    } else {
        2
    })
}

/// Conjectured minimum distance of a nested cartesian code with factor
/// sizes `d_1 ≤ ... ≤ d_s`.
pub fn conjecture52_value(sizes: &[i64], d: i64) -> Result<i64> {
    if sizes.len() < 2 {
        return Err(Error::Precondition("needs at least two factors".into()));
    }
    check_sorted(sizes, "sizes")?;
    if d < 1 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    let tail = &sizes[1..];
    let total: i64 = tail.iter().map(|x| x - 1).sum();
    if d > total {
        return Ok(1);
    }
    let DegreeDecomposition { k, ell } = degree_decomposition(d, tail)?;
    Ok((tail[k] - ell + 1) * tail[k + 1..].iter().product::<i64>())
}

/// Lower bound `d_1 - ℓ + 1` for the minimum distance of a nested cartesian
/// code when `d = Σ_{i=2}^{s-1}(d_i - 1) + ℓ` with `1 ≤ ℓ ≤ d_1 - 1`.
pub fn thm55_bound(sizes: &[i64], d: i64) -> Result<i64> {
    if sizes.len() < 2 {
        return Err(Error::Precondition("needs at least two factors".into()));
    }
    check_sorted(sizes, "sizes")?;
    let s = sizes.len();
    let base: i64 = sizes[1..s - 1].iter().map(|x| x - 1).sum();
    let ell = d - base;
    if ell < 1 || ell > sizes[0] - 1 {
        return Err(Error::Precondition(format!(
            "d = {d} outside {}..={}",
            base + 1,
            base + sizes[0] - 1
        )));
    }
    Ok(sizes[0] - ell + 1)
}

/// Two independent degree-`d` forms whose common zeros on an affine
/// cartesian set number exactly the count predicted by the case analysis.
#[derive(Clone, Debug)]
pub struct PairWitness {
    pub f: Polynomial,
    pub g: Polynomial,
    pub decomposition: DegreeDecomposition,
    pub common_zeros: usize,
    /// `|X| - common_zeros`, an upper bound for `δ_X(d, 2)`.
    pub bound: usize,
}

/// Builds the witness pair for `X = [A_1 × ... × A_n × {1}]`, taking the
/// elements of each `A_i` in the order given as `β_{i,1}, ..., β_{i,d_i}`.
pub fn lemma91_witness(x: &PointSet, d: i64) -> Result<PairWitness> {
    if x.family() != Family::AffineCartesian {
        return Err(Error::Precondition("the witness is built on affine cartesian sets".into()));
    }
    let field = x.field();
    let beta = x.factors();
    let sizes: Vec<i64> = beta.iter().map(|a| a.len() as i64).collect();
    check_cartesian(&sizes)?;
    let n = sizes.len();
    let s = n + 1;
    let dec = degree_decomposition(d, &sizes)?;
    let DegreeDecomposition { k, ell } = dec;
    let ell_u = ell as usize;
    // β t_s - t_i, the homogenization of β - t_i
    let linear = |i: usize, b: FieldElement| -> Polynomial {
        Polynomial::var(s, s - 1).scale(b, field).sub(&Polynomial::var(s, i), field)
    };
    let mut common = Polynomial::constant(s, field.one());
    for (i, factor) in beta.iter().enumerate().take(k) {
        for &b in &factor[..factor.len() - 1] {
            common = common.mul(&linear(i, b), field);
        }
    }
    for &b in &beta[k][..ell_u - 1] {
        common = common.mul(&linear(k, b), field);
    }
    let f = common.mul(&linear(k, beta[k][ell_u - 1]), field);
    let g = if k + 2 <= n {
        common.mul(&linear(k + 1, beta[k + 1][ell_u - 1]), field)
    } else {
        common.mul(&linear(k, beta[k][ell_u]), field)
    };
    let coeffs = |p: &Polynomial, monos: &[Monomial]| -> Vec<FieldElement> {
        monos.iter().map(|m| p.coefficient(m)).collect()
    };
    let mut monos: Vec<Monomial> = f.terms().chain(g.terms()).map(|(m, _)| m.clone()).collect();
    monos.sort();
    monos.dedup();
    if rank(&vec![coeffs(&f, &monos), coeffs(&g, &monos)], field) != 2 {
        return Err(Error::Validation("witness forms are dependent".into()));
    }
    let (zeros, outside) = x.zero_counts(&[f.clone(), g.clone()])?;
    let total: i64 = sizes.iter().product();
    let prod = |from: usize| -> i64 { sizes.get(from..).map_or(1, |v| v.iter().product()) };
    // k < s-3, k = s-3, k = s-2 with k zero-based against sizes
    let expected = if k + 3 < s {
        total - (sizes[k] - ell + 1) * prod(k + 1) + prod(k + 2)
    } else if k + 3 == s {
        total - (sizes[k] - ell + 1) * prod(k + 1) + 1
    } else {
        total - sizes[n - 1] + ell - 1
    };
    if zeros as i64 != expected {
        return Err(Error::Validation(format!(
            "witness has {zeros} common zeros, expected {expected}"
        )));
    }
    Ok(PairWitness { f, g, decomposition: dec, common_zeros: zeros, bound: outside })
}

/// Non-decreasing tuples of length `1..=max_len` with entries `≥ min_entry`
/// and product at most `max_product`.
pub fn nondecreasing_tuples(max_len: usize, min_entry: i64, max_product: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(cur: &mut Vec<i64>, start: i64, prod: i64, max_len: usize, max_product: i64, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        let mut v = start;
        while prod * v <= max_product {
            cur.push(v);
            rec(cur, v, prod * v, max_len, max_product, out);
            cur.pop();
            v += 1;
        }
    }
    rec(&mut cur, min_entry, 1, max_len, max_product, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn pi_examples() {
        assert_eq!(pi(&[1, 2], &[2, 1]).unwrap(), 3);
        assert_eq!(pi(&[2, 3], &[2, 3]).unwrap(), 6);
        assert_eq!(pi(&[1, 1, 1], &[2, 3, 4]).unwrap(), 24);
        assert!(pi(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn thm62_small_cases() {
        assert!(verify_thm62(&[2, 2]).unwrap().violation_free());
        let r = verify_thm62(&[2, 3, 4]).unwrap();
        assert!(r.violation_free());
        assert!(r.checked > 0);
        assert!(verify_thm62(&[3, 2]).is_err());
        // k = m - 1 uses an empty trailing product
        assert_eq!(thm62_rhs(5, &[2, 3], 1).unwrap(), (5 - 3 + 1) * 3 - 1);
    }

    #[test]
    fn lemma53_small_cases() {
        let r = lemma53_check(&[2, 2, 2]).unwrap();
        assert!(r.violation_free());
        assert_eq!(r.checked, 8 * 3);
        let r = lemma53_check(&[5]).unwrap();
        // m = 1: equality for every b
        assert_eq!(r.tight_count, 5);
    }

    #[test]
    fn lemma63_holds() {
        let r = lemma63_check(30);
        assert!(r.violation_free());
        assert_eq!(r.checked, 28_628);
    }

    #[test]
    fn lemma92_examples() {
        assert_eq!(lemma92_degree(&[2, 3], &[1, 1, 0]).unwrap(), 4);
        assert_eq!(lemma92_degree(&[2, 3, 4], &[1, 2, 3, 5]).unwrap(), 23);
        assert!(lemma92_degree(&[2, 3], &[0, 0, 2]).is_err());
    }

    #[test]
    fn decompositions() {
        assert_eq!(degree_decomposition(3, &[2, 2, 4]).unwrap(), DegreeDecomposition { k: 2, ell: 1 });
        assert_eq!(degree_decomposition(1, &[3, 3]).unwrap(), DegreeDecomposition { k: 0, ell: 1 });
        assert_eq!(degree_decomposition(5, &[2, 2, 4]).unwrap(), DegreeDecomposition { k: 2, ell: 3 });
        assert!(degree_decomposition(6, &[2, 2, 4]).is_err());
    }

    #[test]
    fn thm83_examples() {
        assert_eq!(thm83_delta2(&[2, 2, 4], 1).unwrap(), 12);
        assert_eq!(thm83_delta2(&[2, 2, 4], 5).unwrap(), 2);
        assert_eq!(thm83_delta2(&[2, 2, 4], 9).unwrap(), 2);
    }

    #[test]
    fn thm85_matches_thm83() {
        for sizes in [&[2, 2][..], &[2, 3], &[2, 2, 2], &[2, 2, 3], &[2, 2, 4], &[3, 3, 3]] {
            let total: i64 = sizes.iter().map(|x| x - 1).sum();
            for d in 1..=total {
                assert_eq!(thm85_min(sizes, d).unwrap().0, thm83_delta2(sizes, d).unwrap(), "{sizes:?} d={d}");
            }
        }
        assert!(thm85_min(&[3], 1).is_err());
    }

    #[test]
    fn torus_formula() {
        assert_eq!(cor84_torus_delta2(3, 3, 1).unwrap(), 3);
        assert_eq!(cor84_torus_delta2(3, 3, 2).unwrap(), 2);
        assert_eq!(cor84_torus_delta2(4, 3, 2).unwrap(), 5);
        assert!(cor84_torus_delta2(2, 3, 1).is_err());
    }

    #[test]
    fn conjecture_and_bound() {
        let row: Vec<i64> = (1..=5).map(|d| conjecture52_value(&[2, 2, 4], d).unwrap()).collect();
        assert_eq!(row, vec![8, 4, 3, 2, 1]);
        assert_eq!(thm55_bound(&[2, 2, 4], 2).unwrap(), 2);
        assert!(thm55_bound(&[2, 2, 4], 3).is_err());
    }

    #[test]
    fn witness_pairs() {
        let f = FieldSpec::new(2, 2).unwrap();
        let el = |xs: &[u32]| xs.iter().map(|&v| FieldElement(v)).collect::<Vec<_>>();
        let x = PointSet::affine_cartesian(&f, vec![el(&[0, 1]), el(&[0, 1]), el(&[0, 1, 2, 3])]).unwrap();
        let w = lemma91_witness(&x, 1).unwrap();
        assert_eq!(w.common_zeros, 4);
        assert_eq!(w.bound, 12);
        for d in 1..=5 {
            let w = lemma91_witness(&x, d).unwrap();
            assert_eq!(w.bound as i64, thm83_delta2(&[2, 2, 4], d).unwrap(), "d={d}");
            assert!(w.f.is_homogeneous() && w.f.total_degree() == Some(d as u32));
        }
    }

    #[test]
    fn tuples_enumeration() {
        let t = nondecreasing_tuples(2, 2, 6);
        assert_eq!(t, vec![vec![2], vec![2, 2], vec![2, 3], vec![3], vec![4], vec![5], vec![6]]);
    }
}
