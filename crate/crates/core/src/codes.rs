//! Evaluation codes of point sets and their generalized Hamming weights.
//!
//! Two exact strategies compute `δ_r`:
//!
//! * subspace enumeration: every `r`-dimensional subcode is visited once
//!   through its reduced row echelon basis, grouped by pivot pattern. The
//!   support of a subcode is the union of the supports of its basis rows,
//!   and rows of a fixed pattern vary independently, so each row only
//!   contributes its inclusion-minimal supports.
//! * support search: `δ_r` is the least `|T|` for which the codewords
//!   supported in `T` form a space of dimension `|T| - rank(H_T) ≥ r`,
//!   where `H` is a parity-check matrix.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::gf::{FieldElement, FieldSpec};
use crate::groebner::evaluation_matrix;
use crate::ideal::MonomialIdeal;
use crate::linalg::{kernel, rank, rref, EchelonBasis, Matrix};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};
use core::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

/// The code `C_X(d)`: evaluations of degree-`d` forms at the points of `X`,
/// with the degree-`d` standard monomials as message basis.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    field: FieldSpec,
    nvars: usize,
    degree: u32,
    basis: Vec<Monomial>,
    /// `H × m` generator matrix.
    matrix: Matrix,
    length: usize,
}

impl EvaluationCode {
    /// Builds `C_X(d)` from `X` and the initial ideal of `I(X)` under
    /// `order`. The rank of the full degree-`d` evaluation matrix is checked
    /// against the number of standard monomials.
    pub fn new(x: &PointSet, initial: &MonomialIdeal, order: &MonomialOrder, d: u32) -> Result<EvaluationCode> {
        if d == 0 {
            return Err(Error::Precondition("codes are indexed by degrees d ≥ 1".into()));
        }
        let field = x.field();
        let basis = initial.standard_monomials_ordered(d, order);
        let matrix: Matrix = basis
            .iter()
            .map(|m| x.points().iter().map(|p| crate::groebner::eval_monomial(m, p, field)).collect())
            .collect();
        let full = evaluation_matrix(x.points(), &monomials_of_degree(x.nvars(), d), field);
        let full_rank = rank(&full, field);
        let basis_rank = rank(&matrix, field);
        if full_rank != basis.len() || basis_rank != basis.len() {
            return Err(Error::Validation(format!(
                "degree {d}: {} standard monomials, evaluation rank {full_rank}, basis rank {basis_rank}",
                basis.len()
            )));
        }
        Ok(EvaluationCode { field: field.clone(), nvars: x.nvars(), degree: d, basis, matrix, length: x.len() })
    }

    /// A code given directly by a full-rank generator matrix.
    pub fn from_generator_matrix(field: &FieldSpec, matrix: Matrix) -> Result<EvaluationCode> {
        let length = matrix.first().map_or(0, Vec::len);
        if matrix.iter().any(|r| r.len() != length) {
            return Err(Error::Precondition("ragged generator matrix".into()));
        }
        if rank(&matrix, field) != matrix.len() {
            return Err(Error::Precondition("generator matrix rows are dependent".into()));
        }
        Ok(EvaluationCode { field: field.clone(), nvars: 0, degree: 0, basis: Vec::new(), matrix, length })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Dimension `H = H_X(d)`.
    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    /// Length `m = |X|`.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn generator_matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Basis of the dual code, as vectors of length `m`.
    pub fn parity_check(&self) -> Matrix {
        kernel(&self.matrix, self.length, &self.field)
    }

    /// `msg · G`.
    pub fn encode(&self, msg: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if msg.len() != self.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: msg.len() });
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.length];
        for (c, row) in msg.iter().zip(&self.matrix) {
            if !c.is_zero() {
                for (o, g) in out.iter_mut().zip(row) {
                    *o = f.add(*o, f.mul(*c, *g));
                }
            }
        }
        Ok(out)
    }

    /// The standard polynomial with coefficient vector `msg`.
    pub fn message_polynomial(&self, msg: &[FieldElement]) -> Result<Polynomial> {
        if msg.len() != self.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: msg.len() });
        }
        Polynomial::from_terms(self.nvars, self.basis.iter().cloned().zip(msg.iter().copied()), &self.field)
    }
}

/// An `r`-dimensional subcode in message coordinates, kept in reduced row
/// echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcodeBasis {
    rows: Matrix,
}

impl SubcodeBasis {
    pub fn new(mut rows: Matrix, field: &FieldSpec) -> Result<SubcodeBasis> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::Precondition("subcode of dimension 0".into()));
        }
        let h = rows[0].len();
        if rows.iter().any(|row| row.len() != h) {
            return Err(Error::Precondition("ragged subcode basis".into()));
        }
        if rref(&mut rows, field).len() != r {
            return Err(Error::Precondition("subcode basis rows are dependent".into()));
        }
        Ok(SubcodeBasis { rows })
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Number of coordinates where some codeword of the subcode is nonzero.
pub fn support_weight(code: &EvaluationCode, b: &SubcodeBasis) -> Result<usize> {
    let mut mask = vec![false; code.length()];
    for row in b.rows() {
        for (i, c) in code.encode(row)?.iter().enumerate() {
            if !c.is_zero() {
                mask[i] = true;
            }
        }
    }
    Ok(mask.iter().filter(|&&x| x).count())
}

/// Number of `r`-dimensional subspaces of `GF(q)^h`, saturating at
/// `u128::MAX`.
pub fn gaussian_binomial(h: usize, r: usize, q: u32) -> u128 {
    if r > h {
        return 0;
    }
    let q = q as u128;
    let pow = |e: usize| -> Option<u128> { q.checked_pow(e as u32) };
    let mut acc: u128 = 1;
    for i in 0..r {
        let (Some(num), Some(den)) = (pow(h - i), pow(i + 1)) else {
            return u128::MAX;
        };
        match acc.checked_mul(num - 1) {
            Some(v) => acc = v / (den - 1),
            None => return u128::MAX,
        }
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Visits the `k`-subsets of `0..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        Combinations { n, current: if k <= n { Some((0..k).collect()) } else { None } }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

/// Pivot patterns of `r`-dimensional subspaces of an `h`-dimensional space.
pub fn pivot_patterns(h: usize, r: usize) -> Combinations {
    Combinations::new(h, r)
}

/// Number of subspaces with the given pivot pattern.
pub fn pattern_size(h: usize, pattern: &[usize], q: u32) -> u128 {
    let free: usize = pattern.iter().enumerate().map(|(i, &p)| h - p - 1 - (pattern.len() - i - 1)).sum();
    (q as u128).checked_pow(free as u32).unwrap_or(u128::MAX)
}

/// Free (non-pivot) positions to the right of each pivot.
pub fn free_positions(h: usize, pattern: &[usize]) -> Vec<Vec<usize>> {
    pattern
        .iter()
        .map(|&p| (p + 1..h).filter(|j| !pattern.contains(j)).collect())
        .collect()
}

/// Calls `visit` with every vector `e_pivot + Σ_{j ∈ free} x_j e_j` of
/// `GF(q)^h`, expressed through the images `rows[j]` of the unit vectors:
/// `visit` receives `rows[pivot] + Σ x_j rows[j]`.
pub fn for_each_row_image(
    field: &FieldSpec,
    rows: &Matrix,
    pivot: usize,
    free: &[usize],
    visit: impl FnMut(&[FieldElement]),
) {
    for_each_row_image_from(field, rows, &rows[pivot], free, visit);
}

/// As [`for_each_row_image`], starting from an arbitrary vector `start`.
pub fn for_each_row_image_from(
    field: &FieldSpec,
    rows: &Matrix,
    start: &[FieldElement],
    free: &[usize],
    mut visit: impl FnMut(&[FieldElement]),
) {
    let m = start.len();
    let mut levels: Vec<Vec<FieldElement>> = vec![vec![FieldElement::ZERO; m]; free.len() + 1];
    levels[0].copy_from_slice(start);
    fn rec(
        field: &FieldSpec,
        rows: &Matrix,
        free: &[usize],
        levels: &mut [Vec<FieldElement>],
        t: usize,
        visit: &mut dyn FnMut(&[FieldElement]),
    ) {
        if t == free.len() {
            visit(&levels[t]);
            return;
        }
        let g = &rows[free[t]];
        for x in field.elements() {
            let (lo, hi) = levels.split_at_mut(t + 1);
            let (src, dst) = (&lo[t], &mut hi[0]);
            if x.is_zero() {
                dst.clone_from(src);
            } else {
                axpy(field, x, g, src, dst);
            }
            rec(field, rows, free, levels, t + 1, visit);
        }
    }
    rec(field, rows, free, &mut levels, 0, &mut visit);
}

/// `dst = src + x·g`.
fn axpy(field: &FieldSpec, x: FieldElement, g: &[FieldElement], src: &[FieldElement], dst: &mut [FieldElement]) {
    for ((d, s), y) in dst.iter_mut().zip(src).zip(g) {
        *d = if y.is_zero() { *s } else { field.add(*s, field.mul(x, *y)) };
    }
}

/// A list of equal-width bit masks over the `m` coordinates.
#[derive(Clone, Debug)]
pub struct MaskList {
    words: usize,
    data: Vec<u64>,
}

impl MaskList {
    pub fn new(m: usize) -> MaskList {
        MaskList { words: m.div_ceil(64).max(1), data: Vec::new() }
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.words
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn push(&mut self, mask: &[u64]) {
        self.data.extend_from_slice(mask);
    }

    /// Sorts by weight, removes duplicates and, when `minimal`, every mask
    /// containing another one.
    pub fn reduce(&mut self, minimal: bool) {
        let w = self.words;
        let mut items: Vec<&[u64]> = self.data.chunks(w).collect();
        items.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
        items.dedup();
        let mut out: Vec<u64> = Vec::with_capacity(items.len() * w);
        let mut kept = 0usize;
        for it in items {
            if minimal
                && out.chunks(w).any(|k| k.iter().zip(it.iter()).all(|(a, b)| a & !b == 0))
            {
                continue;
            }
            out.extend_from_slice(it);
            kept += 1;
        }
        debug_assert_eq!(out.len(), kept * w);
        self.data = out;
    }
}

pub fn weight(mask: &[u64]) -> usize {
    mask.iter().map(|w| w.count_ones() as usize).sum()
}

/// Sets bit `i` of the mask for every nonzero coordinate of `v`.
pub fn support_mask(v: &[FieldElement], out: &mut [u64]) {
    out.iter_mut().for_each(|w| *w = 0);
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            out[i / 64] |= 1 << (i % 64);
        }
    }
}

/// Masks above this count are not filtered for inclusion-minimality.
const MINIMAL_FILTER_LIMIT: usize = 4096;

/// The subcodes sharing one pivot pattern, prepared for a branch and bound
/// over their first basis row. The first row's enumeration splits into
/// chunks by its leading free coefficients, so chunks can be searched
/// independently against a shared bound.
pub struct PatternSearch<'a> {
    code: &'a EvaluationCode,
    pattern: Vec<usize>,
    first_free: Vec<usize>,
    lists: Vec<MaskList>,
    words: usize,
}

impl<'a> PatternSearch<'a> {
    pub fn new(code: &'a EvaluationCode, pattern: &[usize]) -> PatternSearch<'a> {
        let h = code.dimension();
        let m = code.length();
        let field = &code.field;
        let mut free = free_positions(h, pattern);
        let words = MaskList::new(m).words();
        let mut buf = vec![0u64; words];
        let mut lists = Vec::with_capacity(pattern.len().saturating_sub(1));
        for (i, &p) in pattern.iter().enumerate().skip(1) {
            let mut list = MaskList::new(m);
            for_each_row_image(field, &code.matrix, p, &free[i], |v| {
                support_mask(v, &mut buf);
                list.push(&buf);
            });
            let minimal = list.len() <= MINIMAL_FILTER_LIMIT;
            list.reduce(minimal);
            lists.push(list);
        }
        PatternSearch { code, pattern: pattern.to_vec(), first_free: free.swap_remove(0), lists, words }
    }

    /// Number of chunks when the first `depth` free coefficients are fixed.
    pub fn chunk_count(&self, depth: usize) -> usize {
        let q = self.code.field.size() as usize;
        q.saturating_pow(depth.min(self.first_free.len()) as u32)
    }

    /// Searches chunk `chunk` out of [`chunk_count`](Self::chunk_count)`(depth)`,
    /// lowering `best` to any smaller support found; stops once `best ≤ floor`.
    pub fn search_chunk(&self, depth: usize, chunk: usize, best: &AtomicUsize, floor: usize) {
        let field = &self.code.field;
        let rows = &self.code.matrix;
        let depth = depth.min(self.first_free.len());
        let q = field.size() as usize;
        let mut start = rows[self.pattern[0]].clone();
        let mut rest = chunk;
        for &j in &self.first_free[..depth] {
            let x = FieldElement((rest % q) as u32);
            rest /= q;
            if !x.is_zero() {
                let src = start.clone();
                axpy(field, x, &rows[j], &src, &mut start);
            }
        }
        let mut scratch = vec![vec![0u64; self.words]; self.pattern.len()];
        for_each_row_image_from(field, rows, &start, &self.first_free[depth..], |v| {
            let mut local = best.load(AtomicOrdering::Relaxed);
            if local <= floor {
                return;
            }
            support_mask(v, &mut scratch[0]);
            if weight(&scratch[0]) >= local {
                return;
            }
            descend(&self.lists, 0, &mut scratch, &mut local);
            best.fetch_min(local, AtomicOrdering::Relaxed);
        });
    }
}

/// Least support size among subcodes with the given pivot pattern, if it
/// is below `bound`. The search stops early once `floor` is reached.
pub fn min_support_for_pattern(code: &EvaluationCode, pattern: &[usize], bound: usize, floor: usize) -> Option<usize> {
    let best = AtomicUsize::new(bound);
    PatternSearch::new(code, pattern).search_chunk(0, 0, &best, floor);
    let best = best.into_inner();
    (best < bound).then_some(best)
}

fn descend(lists: &[MaskList], depth: usize, scratch: &mut [Vec<u64>], best: &mut usize) {
    if depth == lists.len() {
        let w = weight(&scratch[depth]);
        if w < *best {
            *best = w;
        }
        return;
    }
    let list = &lists[depth];
    for i in 0..list.len() {
        let mask = list.get(i);
        if weight(mask) >= *best {
            break;
        }
        let (lo, hi) = scratch.split_at_mut(depth + 1);
        let (acc, next) = (&lo[depth], &mut hi[0]);
        for ((n, a), b) in next.iter_mut().zip(acc).zip(mask) {
            *n = a | b;
        }
        if weight(next) < *best {
            descend(lists, depth + 1, scratch, best);
        }
    }
}

fn check_rank(code: &EvaluationCode, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::Precondition("generalized Hamming weights start at r = 1".into()));
    }
    if r > code.dimension() {
        return Err(Error::Precondition(format!("r = {r} exceeds the code dimension {}", code.dimension())));
    }
    Ok(())
}

/// `δ_r` by enumeration of all `r`-dimensional subcodes.
pub fn ghw_enumerate(code: &EvaluationCode, r: usize) -> Result<usize> {
    check_rank(code, r)?;
    let mut best = code.length() + 1;
    for pattern in pivot_patterns(code.dimension(), r) {
        if let Some(v) = min_support_for_pattern(code, &pattern, best, r) {
            best = v;
        }
        if best == r {
            break;
        }
    }
    Ok(best)
}

/// `δ_r` by searching supports of increasing size, starting at `lower`.
pub fn ghw_support_search(code: &EvaluationCode, r: usize, lower: usize) -> Result<usize> {
    check_rank(code, r)?;
    let search = SupportSearch::new(code);
    for w in lower.max(r)..=code.length() {
        if (0..code.length()).any(|j| search.exists_with_first(r, w, j)) {
            return Ok(w);
        }
    }
    Err(Error::Validation("support search exhausted every support size".into()))
}

/// Columns of a parity-check matrix: the codewords supported in `T` form a
/// space of dimension `|T| - rank(H_T)`.
pub struct SupportSearch<'a> {
    field: &'a FieldSpec,
    columns: Vec<Vec<FieldElement>>,
}

impl<'a> SupportSearch<'a> {
    pub fn new(code: &'a EvaluationCode) -> SupportSearch<'a> {
        let m = code.length();
        let hmat = code.parity_check();
        let columns = (0..m).map(|j| hmat.iter().map(|row| row[j]).collect()).collect();
        SupportSearch { field: &code.field, columns }
    }

    /// Whether some `w`-set with least element `first` carries an
    /// `r`-dimensional subcode.
    pub fn exists_with_first(&self, r: usize, w: usize, first: usize) -> bool {
        let m = self.columns.len();
        if w == 0 || first + w > m {
            return false;
        }
        let mut basis = EchelonBasis::new();
        basis.insert(self.columns[first].clone(), self.field);
        self.level(r, w, 1, first + 1, &mut basis)
    }

    fn level(&self, r: usize, w: usize, chosen: usize, start: usize, basis: &mut EchelonBasis) -> bool {
        let m = self.columns.len();
        let nullity = chosen - basis.rank();
        if nullity >= r {
            return true;
        }
        if nullity + (w - chosen) < r || m - start < w - chosen {
            return false;
        }
        for j in start..m {
            if m - j < w - chosen {
                break;
            }
            let grew = basis.insert(self.columns[j].clone(), self.field);
            let found = self.level(r, w, chosen + 1, j + 1, basis);
            if grew {
                basis.pop();
            }
            if found {
                return true;
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GhwStrategy {
    SubspaceEnumeration,
    SupportSearch,
}

/// Work estimate of each strategy, given bounds `lower ≤ δ_r ≤ upper`.
pub fn strategy_costs(code: &EvaluationCode, r: usize, lower: usize, upper: usize) -> [(GhwStrategy, u128); 2] {
    let q = code.field.size();
    let enumerate = gaussian_binomial(code.dimension(), r, q);
    let m = code.length();
    let mut search: u128 = 0;
    for w in lower.max(r)..=upper.min(m) {
        search = search.saturating_add(binomial(m, w));
    }
    [(GhwStrategy::SubspaceEnumeration, enumerate), (GhwStrategy::SupportSearch, search)]
}

/// Generalized Singleton bound `m - k + r`.
pub fn singleton_bound(code: &EvaluationCode, r: usize) -> usize {
    code.length() - code.dimension() + r
}

/// `δ_r` with the cheaper exact strategy, refusing when its estimated work
/// exceeds `budget`.
pub fn ghw_auto(code: &EvaluationCode, r: usize, lower: usize, upper: usize, budget: u128) -> Result<usize> {
    check_rank(code, r)?;
    let upper = upper.min(singleton_bound(code, r));
    let costs = strategy_costs(code, r, lower, upper);
    let (strategy, cost) = if costs[0].1 <= costs[1].1 { costs[0] } else { costs[1] };
    if cost > budget {
        return Err(Error::BudgetExceeded { needed: cost, budget });
    }
    match strategy {
        GhwStrategy::SubspaceEnumeration => ghw_enumerate(code, r),
        GhwStrategy::SupportSearch => ghw_support_search(code, r, lower),
    }
}

/// `δ_r(C)`, exact, with no work limit.
pub fn ghw(code: &EvaluationCode, r: usize) -> Result<usize> {
    ghw_auto(code, r, r, code.length(), u128::MAX)
}

/// `δ_r` by subspace enumeration when the number of subspaces is within
/// `budget`; otherwise an explicit refusal.
pub fn ghw_budgeted(code: &EvaluationCode, r: usize, budget: u128) -> Result<usize> {
    check_rank(code, r)?;
    let needed = gaussian_binomial(code.dimension(), r, code.field.size());
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    ghw_enumerate(code, r)
}

/// Weight hierarchy `δ_1 < ... < δ_k`.
pub fn weight_hierarchy(code: &EvaluationCode) -> Result<Vec<usize>> {
    (1..=code.dimension()).map(|r| ghw(code, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PointSet;
    use crate::poly::OrderKind;

    fn el(xs: &[u32]) -> Vec<FieldElement> {
        xs.iter().map(|&x| FieldElement(x)).collect()
    }

    fn example_7_1() -> (PointSet, MonomialIdeal, MonomialOrder) {
        let f = FieldSpec::new(2, 2).unwrap();
        let x = PointSet::nested_cartesian(&f, vec![el(&[0, 1]), el(&[0, 1]), el(&[0, 1, 2, 3])]).unwrap();
        let order = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        let init = x.vanishing_ideal(&order).unwrap().initial_ideal();
        (x, init, order)
    }

    /// Minimum support over all nonzero-free spanning sets, found by
    /// enumerating every r-tuple of messages.
    fn brute_ghw(code: &EvaluationCode, r: usize) -> usize {
        let f = code.field().clone();
        let h = code.dimension();
        let q = f.size() as usize;
        let total = q.pow(h as u32);
        let words: Vec<Vec<FieldElement>> = (0..total)
            .map(|mut n| {
                (0..h)
                    .map(|_| {
                        let x = FieldElement((n % q) as u32);
                        n /= q;
                        x
                    })
                    .collect()
            })
            .collect();
        let mut best = usize::MAX;
        for combo in Combinations::new(total, r) {
            let rows: Matrix = combo.iter().map(|&i| words[i].clone()).collect();
            if let Ok(b) = SubcodeBasis::new(rows, &f) {
                best = best.min(support_weight(code, &b).unwrap());
            }
        }
        best
    }

    #[test]
    fn code_parameters() {
        let (x, init, order) = example_7_1();
        let dims: Vec<usize> =
            (1..=5).map(|d| EvaluationCode::new(&x, &init, &order, d).unwrap().dimension()).collect();
        assert_eq!(dims, vec![3, 6, 9, 12, 13]);
        assert!(EvaluationCode::new(&x, &init, &order, 0).is_err());
    }

    #[test]
    fn minimum_distance_row() {
        let (x, init, order) = example_7_1();
        let row: Vec<usize> =
            (1..=5).map(|d| ghw(&EvaluationCode::new(&x, &init, &order, d).unwrap(), 1).unwrap()).collect();
        assert_eq!(row, vec![8, 4, 3, 1, 1]);
    }

    #[test]
    fn strategies_agree_with_brute_force() {
        let (x, init, order) = example_7_1();
        let code = EvaluationCode::new(&x, &init, &order, 1).unwrap();
        for r in 1..=3 {
            let b = brute_ghw(&code, r);
            assert_eq!(ghw_enumerate(&code, r).unwrap(), b);
            assert_eq!(ghw_support_search(&code, r, 1).unwrap(), b);
        }
        assert_eq!(ghw(&code, 3).unwrap(), 13);
    }

    #[test]
    fn strategies_agree_on_larger_codes() {
        let (x, init, order) = example_7_1();
        for d in 2..=3 {
            let code = EvaluationCode::new(&x, &init, &order, d).unwrap();
            for r in [1, 2] {
                assert_eq!(ghw_enumerate(&code, r).unwrap(), ghw_support_search(&code, r, 1).unwrap());
            }
        }
    }

    #[test]
    fn budget_gate() {
        let (x, init, order) = example_7_1();
        let c1 = EvaluationCode::new(&x, &init, &order, 1).unwrap();
        assert_eq!(gaussian_binomial(3, 2, 4), 21);
        assert!(ghw_budgeted(&c1, 2, 1_000_000).is_ok());
        let c4 = EvaluationCode::new(&x, &init, &order, 4).unwrap();
        assert!(matches!(ghw_budgeted(&c4, 6, 1_000_000), Err(Error::BudgetExceeded { .. })));
        assert_eq!(ghw_budgeted(&c4, 12, 1).unwrap(), 13);
    }

    #[test]
    fn support_weight_of_example_pair() {
        let (x, init, order) = example_7_1();
        let code = EvaluationCode::new(&x, &init, &order, 1).unwrap();
        let f = code.field().clone();
        // basis is t3, t2, t1 under lex with t3 > t2 > t1
        assert_eq!(code.basis(), &[Monomial::var(3, 2, 1), Monomial::var(3, 1, 1), Monomial::var(3, 0, 1)]);
        let one = f.one();
        let zero = f.zero();
        // t1 - t2 and t1 - t3
        let rows = vec![vec![zero, one, one], vec![one, zero, one]];
        let b = SubcodeBasis::new(rows, &f).unwrap();
        assert_eq!(support_weight(&code, &b).unwrap(), 12);
        assert!(SubcodeBasis::new(Vec::new(), &f).is_err());
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(6, 3, 4), 376_805);
        assert_eq!(gaussian_binomial(5, 0, 3), 1);
        assert_eq!(gaussian_binomial(5, 5, 3), 1);
        assert_eq!(gaussian_binomial(2, 3, 3), 0);
        assert_eq!(gaussian_binomial(200, 100, 65536), u128::MAX);
    }

    #[test]
    fn pattern_sizes_sum_to_gaussian_binomial() {
        for (h, r, q) in [(5, 2, 3), (6, 3, 2), (4, 1, 4)] {
            let total: u128 = pivot_patterns(h, r).map(|p| pattern_size(h, &p, q)).sum();
            assert_eq!(total, gaussian_binomial(h, r, q));
        }
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(binomial(27, 8), 2_220_075);
    }
}
