//! The generalized minimum distance function `δ`, the Vasconcelos function
//! `ϑ` and the generalized footprint function `fp`, with their matrices.
//!
//! `δ` and `ϑ` are evaluated for vanishing ideals of point sets, where
//! `deg(S/(I,F)) = |V_X(F)|` and `deg(S/(I:(F))) = |X \ V_X(F)|`. Both walk
//! the subspaces of standard polynomials and evaluate the polynomials at the
//! points, independently of the generator-matrix route in [`crate::codes`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::codes::{
    binomial, for_each_row_image, free_positions, gaussian_binomial, pivot_patterns, singleton_bound,
    support_mask, weight, Combinations, EvaluationCode, MaskList,
};
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::gf::FieldElement;
use crate::ideal::MonomialIdeal;
use crate::linalg::{rank, Matrix};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Distinct zero masks of all forms `u_pivot + Σ x_j u_j` over the standard
/// monomials `u_j` of the code. Evaluation is linear, so each monomial is
/// evaluated on `X` once and the forms are walked incrementally.
fn zero_masks_for_row(code: &EvaluationCode, x: &PointSet, pivot: usize, free: &[usize]) -> Result<MaskList> {
    let field = x.field();
    let evals: Matrix = code
        .basis()
        .iter()
        .map(|u| {
            let f = Polynomial::monomial(u.clone());
            x.points().iter().map(|p| f.evaluate(p, field)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut list = MaskList::new(x.len());
    let mut seen = BTreeSet::new();
    let mut buf = vec![0u64; list.words()];
    for_each_row_image(field, &evals, pivot, free, |values| {
        buf.iter_mut().for_each(|w| *w = 0);
        for (i, v) in values.iter().enumerate() {
            if v.is_zero() {
                buf[i / 64] |= 1 << (i % 64);
            }
        }
        if seen.insert(buf.clone()) {
            list.push(&buf);
        }
    });
    Ok(list)
}

fn check_budget(code: &EvaluationCode, r: usize, budget: u128) -> Result<()> {
    let needed = gaussian_binomial(code.dimension(), r, code.field().size());
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// `δ_X(d, r) = |X| - max{|V_X(F)| : F ⊂ S_d, r independent forms, V_X(F) ≠ ∅}`
/// (or `|X|` when no such `F` exists), by enumeration of `r`-dimensional
/// spaces of standard polynomials when their number is within `budget`.
pub fn delta_fn(
    x: &PointSet,
    initial: &MonomialIdeal,
    order: &MonomialOrder,
    d: u32,
    r: usize,
    budget: u128,
) -> Result<usize> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let code = EvaluationCode::new(x, initial, order, d)?;
    let h = code.dimension();
    if r > h {
        return Ok(x.len());
    }
    check_budget(&code, r, budget)?;
    let mut best_zeros = 0usize;
    for pattern in pivot_patterns(h, r) {
        let free = free_positions(h, &pattern);
        let mut lists = Vec::new();
        for (i, &p) in pattern.iter().enumerate() {
            let mut l = zero_masks_for_row(&code, x, p, &free[i])?;
            l.reduce(false);
            lists.push(l);
        }
        // Larger zero sets first.
        let order_idx: Vec<Vec<usize>> = lists
            .iter()
            .map(|l| {
                let mut v: Vec<usize> = (0..l.len()).collect();
                v.sort_by_key(|&i| core::cmp::Reverse(weight(l.get(i))));
                v
            })
            .collect();
        let words = lists[0].words();
        let full = vec![u64::MAX; words];
        max_common_zeros(&lists, &order_idx, 0, &full, &mut best_zeros);
    }
    Ok(x.len() - best_zeros)
}

fn max_common_zeros(lists: &[MaskList], idx: &[Vec<usize>], depth: usize, acc: &[u64], best: &mut usize) {
    if depth == lists.len() {
        *best = (*best).max(weight(acc));
        return;
    }
    let mut next = vec![0u64; acc.len()];
    for &i in &idx[depth] {
        let mask = lists[depth].get(i);
        if weight(mask) <= *best {
            break;
        }
        for ((n, a), b) in next.iter_mut().zip(acc).zip(mask) {
            *n = a & b;
        }
        if weight(&next) > *best {
            max_common_zeros(lists, idx, depth + 1, &next, best);
        }
    }
}

/// `ϑ_X(d, r) = min{|X \ V_X(F)| : V_X(F) ≠ ∅}` (or `|X|` when no admissible
/// `F` exists); requires `|X| ≥ 2`.
pub fn vasconcelos_fn(
    x: &PointSet,
    initial: &MonomialIdeal,
    order: &MonomialOrder,
    d: u32,
    r: usize,
    budget: u128,
) -> Result<usize> {
    if x.len() < 2 {
        return Err(Error::Precondition("the Vasconcelos function needs at least two points".into()));
    }
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let code = EvaluationCode::new(x, initial, order, d)?;
    let h = code.dimension();
    if r > h {
        return Ok(x.len());
    }
    check_budget(&code, r, budget)?;
    let m = x.len();
    // Complements of the zero sets, i.e. supports; a union below |X|
    // certifies a common zero.
    let mut best = m;
    for pattern in pivot_patterns(h, r) {
        let free = free_positions(h, &pattern);
        let mut lists = Vec::new();
        for (i, &p) in pattern.iter().enumerate() {
            let zeros = zero_masks_for_row(&code, x, p, &free[i])?;
            let mut supports = MaskList::new(m);
            let mut buf = vec![0u64; supports.words()];
            for k in 0..zeros.len() {
                complement(zeros.get(k), m, &mut buf);
                supports.push(&buf);
            }
            supports.reduce(supports.len() <= 4096);
            lists.push(supports);
        }
        let empty = vec![0u64; lists[0].words()];
        min_union(&lists, 0, &empty, &mut best);
    }
    Ok(best)
}

fn complement(mask: &[u64], m: usize, out: &mut [u64]) {
    for (i, (o, w)) in out.iter_mut().zip(mask).enumerate() {
        let bits = if (i + 1) * 64 <= m { u64::MAX } else { (1u64 << (m - i * 64)) - 1 };
        *o = !w & bits;
    }
}

fn min_union(lists: &[MaskList], depth: usize, acc: &[u64], best: &mut usize) {
    if depth == lists.len() {
        *best = (*best).min(weight(acc));
        return;
    }
    let mut next = vec![0u64; acc.len()];
    for i in 0..lists[depth].len() {
        let mask = lists[depth].get(i);
        if weight(mask) >= *best {
            break;
        }
        for ((n, a), b) in next.iter_mut().zip(acc).zip(mask) {
            *n = a | b;
        }
        if weight(&next) < *best {
            min_union(lists, depth + 1, &next, best);
        }
    }
}

/// `deg(S/J)` measured in the dimension of `S/L`: the Hilbert polynomial
/// constant when `dim(S/L) = 1`, the length when it is 0.
fn degree_relative(j: &MonomialIdeal, ambient_dim: usize) -> Result<u64> {
    let s = j.hilbert_summary()?;
    Ok(match ambient_dim {
        0 => s.degree,
        _ => s.hilbert_constant,
    })
}

/// `fp_I(d, r) = deg(S/I) - max{deg(S/(L, M))}` over `r`-sets `M` of degree-`d`
/// standard monomials with `(L : (M)) ≠ L`, where `L = in(I)`; `deg(S/I)`
/// when no such `M` exists.
pub fn footprint_fn(l: &MonomialIdeal, deg_s: u64, d: u32, r: usize) -> Result<u64> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let summary = l.hilbert_summary()?;
    let ambient_dim = summary.dim.ok_or(Error::Precondition("the unit ideal has no footprint".into()))?;
    let delta = l.standard_monomials(d);
    if r > delta.len() {
        return Ok(deg_s);
    }
    let mut best: Option<u64> = None;
    for combo in Combinations::new(delta.len(), r) {
        let ms: Vec<Monomial> = combo.iter().map(|&i| delta[i].clone()).collect();
        if !l.colon_is_proper_extension(&ms)? {
            continue;
        }
        let deg = degree_relative(&l.with_generators(ms), ambient_dim)?;
        best = Some(best.map_or(deg, |b| b.max(deg)));
    }
    Ok(match best {
        Some(b) => deg_s.saturating_sub(b),
        None => deg_s,
    })
}

/// A matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Value(u64),
    /// `r > H(d)`; for weight matrices this stands for `|X|`.
    Infinity,
    /// Not enumerated; the true value lies in `[lower, upper]`.
    Interval { lower: u64, upper: u64 },
}

impl Cell {
    /// The value if it is determined (an interval of width zero counts).
    pub fn exact(self) -> Option<u64> {
        match self {
            Cell::Value(v) => Some(v),
            Cell::Interval { lower, upper } if lower == upper => Some(lower),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Delta,
    Footprint,
    Vasconcelos,
}

/// Rows `d = first_degree, first_degree + 1, ...`, columns `r = 1..=deg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    pub kind: MatrixKind,
    pub first_degree: u32,
    pub cells: Vec<Vec<Cell>>,
}

impl WeightMatrix {
    pub fn get(&self, d: u32, r: usize) -> Cell {
        self.cells[(d - self.first_degree) as usize][r - 1]
    }

    pub fn degrees(&self) -> RangeInclusive<u32> {
        self.first_degree..=self.first_degree + self.cells.len() as u32 - 1
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    /// Cells that are intervals of positive width.
    pub fn open_cells(&self) -> usize {
        self.cells.iter().flatten().filter(|c| matches!(c, Cell::Interval { .. }) && c.exact().is_none()).count()
    }
}

/// The footprint matrix of `L` with rows `degrees` and `deg_s` columns.
pub fn footprint_matrix(l: &MonomialIdeal, deg_s: u64, degrees: RangeInclusive<u32>) -> Result<WeightMatrix> {
    let first_degree = *degrees.start();
    if first_degree == 0 {
        return Err(Error::Precondition("degrees start at 1".into()));
    }
    let mut cells = Vec::new();
    for d in degrees {
        let h = l.hilbert_function(d) as usize;
        let mut row = Vec::new();
        for r in 1..=deg_s as usize {
            row.push(if r > h { Cell::Infinity } else { Cell::Value(footprint_fn(l, deg_s, d, r)?) });
        }
        cells.push(row);
    }
    Ok(WeightMatrix { kind: MatrixKind::Footprint, first_degree, cells })
}

/// Exact `δ_r` computation used by [`weight_matrix`]; implementations may
/// parallelize.
pub trait GhwSolver {
    /// `δ_r(code)` given `lower ≤ δ_r ≤ upper`, or `BudgetExceeded`.
    fn solve(&self, code: &EvaluationCode, r: usize, lower: usize, upper: usize, budget: u128) -> Result<usize>;
}

/// Serial solver choosing the cheaper exact strategy.
pub struct SerialSolver;

impl GhwSolver for SerialSolver {
    fn solve(&self, code: &EvaluationCode, r: usize, lower: usize, upper: usize, budget: u128) -> Result<usize> {
        crate::codes::ghw_auto(code, r, lower, upper, budget)
    }
}

/// A set of forms of one degree whose common zeros certify an upper bound.
#[derive(Clone, Debug)]
pub struct Witness {
    pub degree: u32,
    pub polys: Vec<Polynomial>,
}

/// Upper bounds for `δ_X(d, r)`, `r = 1..=H`, from supports of spans of
/// standard monomials (at most `limit` subsets per `r`) and from witnesses.
pub fn witness_upper_bounds(
    x: &PointSet,
    code: &EvaluationCode,
    witnesses: &[Witness],
    limit: u128,
) -> Result<Vec<usize>> {
    let h = code.dimension();
    let m = x.len();
    let mut ub: Vec<usize> = (1..=h).map(|r| singleton_bound(code, r)).collect();
    let words = m.div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = code
        .generator_matrix()
        .iter()
        .map(|row| {
            let mut b = vec![0u64; words];
            support_mask(row, &mut b);
            b
        })
        .collect();
    for r in 1..=h {
        if binomial(h, r) > limit {
            continue;
        }
        for combo in Combinations::new(h, r) {
            let mut acc = vec![0u64; words];
            for &i in &combo {
                for (a, b) in acc.iter_mut().zip(&masks[i]) {
                    *a |= b;
                }
            }
            ub[r - 1] = ub[r - 1].min(weight(&acc));
        }
    }
    for w in witnesses.iter().filter(|w| w.degree == code.degree()) {
        let evals: Matrix = w
            .polys
            .iter()
            .map(|f| x.points().iter().map(|p| f.evaluate(p, x.field())).collect::<Result<Vec<FieldElement>>>())
            .collect::<Result<_>>()?;
        let dim = rank(&evals, x.field());
        let (_, outside) = x.zero_counts(&w.polys)?;
        if dim >= 1 && dim <= h {
            ub[dim - 1] = ub[dim - 1].min(outside);
        }
    }
    // δ_r ≤ δ_{r+1} - 1
    for r in (1..h).rev() {
        ub[r - 1] = ub[r - 1].min(ub[r].saturating_sub(1));
    }
    Ok(ub)
}

/// Options for [`weight_matrix`].
pub struct WeightMatrixOptions<'a> {
    /// Largest admissible work estimate per cell.
    pub budget: u128,
    pub witnesses: &'a [Witness],
    pub solver: &'a dyn GhwSolver,
    /// Rows to compute; `1..=reg` when absent.
    pub degrees: Option<RangeInclusive<u32>>,
    /// Columns beyond this rank keep their bounds without a search.
    pub max_rank: Option<usize>,
}

impl<'a> WeightMatrixOptions<'a> {
    pub fn new(budget: u128, solver: &'a dyn GhwSolver) -> WeightMatrixOptions<'a> {
        WeightMatrixOptions { budget, witnesses: &[], solver, degrees: None, max_rank: None }
    }
}

/// The weight matrix `δ_X(d, r)` for `d = 1..=reg`, `r = 1..=|X|`. Cells
/// whose exact computation exceeds the budget become intervals between the
/// footprint bound and the best witness bound.
pub fn weight_matrix(
    x: &PointSet,
    initial: &MonomialIdeal,
    order: &MonomialOrder,
    options: &WeightMatrixOptions<'_>,
) -> Result<WeightMatrix> {
    let summary = initial.hilbert_summary()?;
    let m = x.len();
    if summary.degree != m as u64 {
        return Err(Error::Validation(format!("degree {} differs from |X| = {m}", summary.degree)));
    }
    let deg_s = summary.degree;
    let degrees = options.degrees.clone().unwrap_or(1..=summary.regularity.max(1));
    let first_degree = *degrees.start();
    if first_degree == 0 {
        return Err(Error::Precondition("degrees start at 1".into()));
    }
    let max_rank = options.max_rank.unwrap_or(m);
    let mut cells = Vec::new();
    for d in degrees {
        let code = EvaluationCode::new(x, initial, order, d)?;
        let h = code.dimension();
        let ub = witness_upper_bounds(x, &code, options.witnesses, 20_000)?;
        let mut lower: Vec<u64> = Vec::with_capacity(h);
        for r in 1..=h {
            lower.push((footprint_fn(initial, deg_s, d, r)?).max(r as u64));
        }
        let mut row: Vec<Cell> = Vec::with_capacity(m);
        let mut prev_exact: Option<u64> = None;
        for r in 1..=h {
            // The search itself only relies on δ_r > δ_{r-1}; the footprint
            // bound enters the interval of cells that are not searched.
            let rigorous = (r as u64).max(prev_exact.map_or(0, |p| p + 1));
            let up = ub[r - 1] as u64;
            let open = Cell::Interval { lower: lower[r - 1].max(rigorous), upper: up };
            let cell = if r > max_rank {
                open
            } else {
                match options.solver.solve(&code, r, rigorous as usize, up as usize, options.budget) {
                    Ok(v) => Cell::Value(v as u64),
                    Err(Error::BudgetExceeded { .. }) => open,
                    Err(e) => return Err(e),
                }
            };
            prev_exact = match cell {
                Cell::Value(v) => Some(v),
                Cell::Interval { lower, .. } => Some(lower),
                Cell::Infinity => None,
            };
            row.push(cell);
        }
        tighten_row(&mut row);
        row.extend(core::iter::repeat(Cell::Infinity).take(m - h));
        cells.push(row);
    }
    Ok(WeightMatrix { kind: MatrixKind::Delta, first_degree, cells })
}

/// Propagates strict monotonicity through the interval cells of a row.
fn tighten_row(row: &mut [Cell]) {
    let bounds = |c: &Cell| match *c {
        Cell::Value(v) => (v, v),
        Cell::Interval { lower, upper } => (lower, upper),
        Cell::Infinity => (0, u64::MAX),
    };
    for i in 1..row.len() {
        let (plo, _) = bounds(&row[i - 1]);
        if let Cell::Interval { lower, .. } = &mut row[i] {
            *lower = (*lower).max(plo + 1);
        }
    }
    for i in (0..row.len().saturating_sub(1)).rev() {
        let (_, nup) = bounds(&row[i + 1]);
        if let Cell::Interval { upper, .. } = &mut row[i] {
            *upper = (*upper).min(nup.saturating_sub(1));
        }
    }
}

/// The matrix of `ϑ` or `δ` through the polynomial routes, for cells within
/// `budget`; others are left as intervals `[r, |X|]`.
pub fn function_matrix(
    x: &PointSet,
    initial: &MonomialIdeal,
    order: &MonomialOrder,
    kind: MatrixKind,
    budget: u128,
) -> Result<WeightMatrix> {
    let summary = initial.hilbert_summary()?;
    let m = x.len();
    let mut cells = Vec::new();
    for d in 1..=summary.regularity.max(1) {
        let h = initial.hilbert_function(d) as usize;
        let mut row = Vec::with_capacity(m);
        for r in 1..=m {
            if r > h {
                row.push(Cell::Infinity);
                continue;
            }
            let v = match kind {
                MatrixKind::Vasconcelos => vasconcelos_fn(x, initial, order, d, r, budget),
                MatrixKind::Delta => delta_fn(x, initial, order, d, r, budget),
                MatrixKind::Footprint => footprint_fn(initial, summary.degree, d, r).map(|v| v as usize),
            };
            row.push(match v {
                Ok(v) => Cell::Value(v as u64),
                Err(Error::BudgetExceeded { .. }) => Cell::Interval { lower: r as u64, upper: m as u64 },
                Err(e) => return Err(e),
            });
        }
        cells.push(row);
    }
    Ok(WeightMatrix { kind, first_degree: 1, cells })
}
