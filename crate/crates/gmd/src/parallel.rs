//! Multi-threaded generalized Hamming weight computation.

use std::sync::atomic::{AtomicUsize, Ordering};

use gmd_core::codes::{pattern_size, pivot_patterns, singleton_bound, strategy_costs, GhwStrategy, PatternSearch, SupportSearch};
use gmd_core::gmdfun::GhwSolver;
use gmd_core::{Error, EvaluationCode};
use rayon::prelude::*;

/// Patterns with more subspaces than this are split into chunks.
const SPLIT_THRESHOLD: u128 = 1 << 14;

/// Chooses the cheaper exact strategy like the serial solver and spreads
/// it over the rayon pool. Results do not depend on the number of threads.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParallelSolver;

impl GhwSolver for ParallelSolver {
    fn solve(&self, code: &EvaluationCode, r: usize, lower: usize, upper: usize, budget: u128) -> gmd_core::Result<usize> {
        if r == 0 || r > code.dimension() {
            return Err(Error::Precondition(format!("r = {r} outside 1..={}", code.dimension())));
        }
        let lower = lower.max(r);
        let upper = upper.min(singleton_bound(code, r)).max(lower);
        let costs = strategy_costs(code, r, lower, upper);
        let (strategy, cost) = if costs[0].1 <= costs[1].1 { costs[0] } else { costs[1] };
        if cost > budget {
            return Err(Error::BudgetExceeded { needed: cost, budget });
        }
        match strategy {
            GhwStrategy::SubspaceEnumeration => Ok(enumerate(code, r, lower, upper)),
            GhwStrategy::SupportSearch => support_search(code, r, lower, upper),
        }
    }
}

/// Least support over all `r`-dimensional subcodes, given that it lies in
/// `lower..=upper`.
pub fn enumerate(code: &EvaluationCode, r: usize, lower: usize, upper: usize) -> usize {
    let h = code.dimension();
    let q = code.field().size();
    let best = AtomicUsize::new(upper + 1);
    let patterns: Vec<Vec<usize>> = pivot_patterns(h, r).collect();
    patterns.par_iter().for_each(|pattern| {
        if best.load(Ordering::Relaxed) <= lower {
            return;
        }
        let search = PatternSearch::new(code, pattern);
        let size = pattern_size(h, pattern, q);
        let mut depth = 0;
        while size / (q as u128).pow(depth as u32) > SPLIT_THRESHOLD && search.chunk_count(depth + 1) > search.chunk_count(depth) {
            depth += 1;
        }
        (0..search.chunk_count(depth)).into_par_iter().for_each(|chunk| {
            if best.load(Ordering::Relaxed) > lower {
                search.search_chunk(depth, chunk, &best, lower);
            }
        });
    });
    best.into_inner().min(upper)
}

/// Least `w` in `lower..=upper` for which some `w` coordinates carry an
/// `r`-dimensional subcode.
pub fn support_search(code: &EvaluationCode, r: usize, lower: usize, upper: usize) -> gmd_core::Result<usize> {
    let search = SupportSearch::new(code);
    let m = code.length();
    for w in lower..=upper.min(m) {
        if (0..m).into_par_iter().any(|j| search.exists_with_first(r, w, j)) {
            return Ok(w);
        }
    }
    Err(Error::Validation(format!("no support of size at most {upper} carries {r} dimensions")))
}
