//! Monomial ideals: standard monomials, Hilbert functions, dimension, degree,
//! regularity and colon ideals.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder};

/// A monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Numerical invariants of `S/L` for `dim(S/L) ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertSummary {
    /// Krull dimension; `None` for the unit ideal.
    pub dim: Option<usize>,
    /// Degree (multiplicity): the length for dimension 0, the eventual
    /// value of the Hilbert function for dimension 1.
    pub degree: u64,
    /// Least `r0` with `H(d) = h(d)` for every `d ≥ r0`.
    pub regularity: u32,
    /// Value of the Hilbert polynomial (constant in dimension ≤ 1).
    pub hilbert_constant: u64,
}

impl MonomialIdeal {
    /// The ideal generated by `gens` (minimalized and sorted).
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
        let mut all = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: g.nvars() });
            }
            all.push(g);
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(all) })
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> MonomialIdeal {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Sum with the ideal generated by `extra`.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut all = self.gens.clone();
        all.extend(extra);
        MonomialIdeal { nvars: self.nvars, gens: minimalize(all) }
    }

    /// The standard monomials of degree `d`, i.e. monomials outside the
    /// ideal, in descending exponent-vector order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d).into_iter().filter(|m| !self.contains(m)).collect()
    }

    /// Standard monomials of degree `d`, sorted from largest to smallest
    /// under `order`.
    pub fn standard_monomials_ordered(&self, d: u32, order: &MonomialOrder) -> Vec<Monomial> {
        let mut v = self.standard_monomials(d);
        v.sort_by(|a, b| order.cmp(b, a));
        v
    }

    pub fn hilbert_function(&self, d: u32) -> u64 {
        self.standard_monomials(d).len() as u64
    }

    /// Largest number of variables spanning a face that avoids every
    /// generator; `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let n = self.nvars;
        assert!(n < 32, "too many variables for subset search");
        let supports: Vec<u32> =
            self.gens.iter().map(|g| g.support().fold(0u32, |acc, i| acc | (1 << i))).collect();
        let mut best = 0;
        for set in 0u32..(1u32 << n) {
            let size = set.count_ones() as usize;
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        Some(best)
    }

    /// Degree and regularity of `S/L`, computed exactly for `dim ≤ 1`.
    ///
    /// Membership of `t^a` depends only on the truncation `min(a, E)`, where
    /// `E` is the componentwise maximum of the generators. A standard
    /// truncation pattern `c` whose set `U` of saturated coordinates is empty
    /// contributes one monomial in degree `|c|`; with `|U| = 1` it
    /// contributes one monomial in every degree `≥ |c|`. Larger `U` means
    /// dimension at least two.
    pub fn hilbert_summary(&self) -> Result<HilbertSummary> {
        if self.is_unit() {
            return Ok(HilbertSummary { dim: None, degree: 0, regularity: 0, hilbert_constant: 0 });
        }
        let n = self.nvars;
        let mut cap = vec![0u32; n];
        for g in &self.gens {
            for (c, &e) in cap.iter_mut().zip(g.exps()) {
                *c = (*c).max(e);
            }
        }
        let mut dim = 0usize;
        // Degrees |c| of standard patterns with |U| = 0 and |U| = 1.
        let mut finite = Vec::new();
        let mut rays = Vec::new();
        let mut c = vec![0u32; n];
        loop {
            let m = Monomial::new(c.clone());
            if !self.contains(&m) {
                let saturated = c.iter().zip(&cap).filter(|(a, e)| a == e).count();
                dim = dim.max(saturated);
                if saturated > 1 {
                    return Err(Error::DimensionTooLarge(self.krull_dimension().unwrap_or(saturated)));
                }
                if saturated == 0 {
                    finite.push(m.degree());
                } else {
                    rays.push(m.degree());
                }
            }
            // next pattern in the box ∏[0, cap_i]
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(summarize(dim, &finite, &rays));
                }
                if c[i] < cap[i] {
                    c[i] += 1;
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// `(L : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.gcd(m).quotient_of(g).expect("gcd divides g"))
            .collect();
        MonomialIdeal { nvars: self.nvars, gens: minimalize(gens) }
    }

    /// Intersection, generated by pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal { nvars: self.nvars, gens: minimalize(gens) }
    }

    /// `(L : (M)) = ∩_{m ∈ M} (L : m)`.
    pub fn colon(&self, ms: &[Monomial]) -> Result<MonomialIdeal> {
        let (first, rest) = ms.split_first().ok_or(Error::EmptyInput("monomial set"))?;
        let mut acc = self.colon_monomial(first);
        for m in rest {
            if m.nvars() != self.nvars {
                return Err(Error::DimensionMismatch { expected: self.nvars, found: m.nvars() });
            }
            acc = acc.intersect(&self.colon_monomial(m));
        }
        Ok(acc)
    }

    /// Whether some nonzero class of `S/L` is killed by every element of
    /// `ms`, i.e. `(L : (M)) ≠ L`.
    pub fn colon_is_proper_extension(&self, ms: &[Monomial]) -> Result<bool> {
        Ok(self.colon(ms)?.gens != self.gens)
    }

    /// Largest exponent appearing in any generator.
    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().flat_map(|g| g.exps().iter().copied()).max().unwrap_or(0)
    }
}

fn summarize(dim: usize, finite: &[u32], rays: &[u32]) -> HilbertSummary {
    let hilbert_constant = rays.len() as u64;
    let degree = if dim == 0 { finite.len() as u64 } else { hilbert_constant };
    // H(d) - h(d) = #{finite patterns of degree d} - #{rays starting above d}.
    let top = finite.iter().chain(rays).copied().max().unwrap_or(0);
    let mut regularity = 0;
    for d in (0..=top).rev() {
        let extra = finite.iter().filter(|&&x| x == d).count();
        let missing = rays.iter().filter(|&&x| x > d).count();
        if extra != missing {
            regularity = d + 1;
            break;
        }
    }
    HilbertSummary { dim: Some(dim), degree, regularity, hilbert_constant }
}

/// Removes generators divisible by another one, then sorts and dedups.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn standard_monomials_of_squares() {
        let l = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(l.standard_monomials(1), vec![m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(l.standard_monomials(2), vec![m(&[1, 1])]);
        assert_eq!(l.hilbert_function(3), 0);
    }

    #[test]
    fn unit_ideal() {
        let l = MonomialIdeal::unit(3);
        assert_eq!(l.hilbert_function(0), 0);
        assert_eq!(l.hilbert_function(4), 0);
        assert_eq!(l.krull_dimension(), None);
        assert_eq!(l.hilbert_summary().unwrap().degree, 0);
    }

    #[test]
    fn krull_dimension_cases() {
        assert_eq!(ideal(3, &[&[2, 0, 0], &[0, 3, 0]]).krull_dimension(), Some(1));
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).krull_dimension(), Some(0));
        assert_eq!(ideal(3, &[&[1, 1, 0]]).krull_dimension(), Some(2));
    }

    #[test]
    fn summary_zero_dimensional() {
        let s = ideal(2, &[&[2, 0], &[0, 2]]).hilbert_summary().unwrap();
        assert_eq!((s.dim, s.degree, s.regularity), (Some(0), 4, 3));
    }

    #[test]
    fn summary_one_dimensional() {
        // (t1^2, t2^3) in three variables: HF = 1,3,5,6,6,...
        let s = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]).hilbert_summary().unwrap();
        assert_eq!((s.dim, s.degree, s.regularity), (Some(1), 6, 3));
    }

    #[test]
    fn summary_rejects_dimension_two() {
        assert_eq!(ideal(3, &[&[1, 1, 0]]).hilbert_summary(), Err(Error::DimensionTooLarge(2)));
    }

    #[test]
    fn summary_matches_hilbert_function() {
        let cases: [&[&[u32]]; 4] = [
            &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]],
            &[&[0, 2, 1], &[3, 0, 0], &[1, 2, 0], &[0, 4, 0]],
            &[&[1, 1, 1], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2]],
            &[&[0, 1, 0, 0], &[1, 0, 2, 0], &[2, 0, 0, 0], &[0, 0, 3, 0]],
        ];
        for gens in cases {
            let n = gens[0].len();
            let l = ideal(n, gens);
            let s = l.hilbert_summary().unwrap();
            let top = 3 * n as u32 * l.max_exponent();
            let hf: Vec<u64> = (0..=top).map(|d| l.hilbert_function(d)).collect();
            assert_eq!(hf[top as usize], s.hilbert_constant);
            let reg = (0..=top).find(|&r| (r..=top).all(|d| hf[d as usize] == s.hilbert_constant)).unwrap();
            assert_eq!(reg, s.regularity);
            if s.dim == Some(0) {
                assert_eq!(hf.iter().sum::<u64>(), s.degree);
            }
        }
    }

    #[test]
    fn colon_examples() {
        let l = ideal(2, &[&[2, 0]]);
        assert_eq!(l.colon(&[m(&[1, 0])]).unwrap(), ideal(2, &[&[1, 0]]));
        assert!(l.colon_is_proper_extension(&[m(&[1, 0])]).unwrap());
        let l2 = ideal(2, &[&[2, 0], &[0, 1]]);
        assert!(l2.colon(&[m(&[0, 1])]).unwrap().is_unit());
        assert_eq!(l.colon(&[]), Err(Error::EmptyInput("monomial set")));
    }

    #[test]
    fn colon_of_several_monomials_matches_membership() {
        let l = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 1]]);
        let ms = [m(&[1, 0, 0]), m(&[0, 2, 0])];
        let c = l.colon(&ms).unwrap();
        for d in 0..=5 {
            for u in monomials_of_degree(3, d) {
                let member = ms.iter().all(|x| l.contains(&u.mul(x)));
                assert_eq!(c.contains(&u), member, "{u}");
            }
        }
    }

    #[test]
    fn minimal_generators() {
        let l = ideal(2, &[&[2, 0], &[3, 1], &[2, 0], &[0, 1]]);
        assert_eq!(l.gens(), &[m(&[0, 1]), m(&[2, 0])]);
    }
}
