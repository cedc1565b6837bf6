//! Subcommand implementations. Each returns its rendered output and an
//! outcome that the binary maps to an exit code.

use anyhow::{bail, Context as _, Result};
use gmd_core::gmdfun::{footprint_matrix, Cell, weight_matrix, WeightMatrix, WeightMatrixOptions};
use gmd_core::ideal::HilbertSummary;
use gmd_core::{GroebnerBasis, MonomialIdeal, MonomialOrder, PointSet, Polynomial};
use serde_json::json;

use crate::config::{Format, RunConfig};
use crate::output::{render_matrix, render_table, Table};
use crate::parallel::ParallelSolver;
use crate::parse::parse_polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Violation,
    BudgetExceeded,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Violation => 2,
            Outcome::BudgetExceeded => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub text: String,
    pub outcome: Outcome,
}

impl CommandOutput {
    pub fn ok(text: String) -> CommandOutput {
        CommandOutput { text, outcome: Outcome::Ok }
    }
}

/// A configured point set with its vanishing ideal.
pub struct Context {
    pub config: RunConfig,
    pub points: PointSet,
    pub order: MonomialOrder,
    pub basis: GroebnerBasis,
    pub initial: MonomialIdeal,
    pub summary: HilbertSummary,
}

impl Context {
    pub fn new(config: RunConfig) -> Result<Context> {
        config.validate()?;
        let points = config.family.build().context("cannot build the point set")?;
        let order = config.monomial_order(points.nvars())?;
        let basis = points.vanishing_ideal(&order)?;
        let initial = basis.initial_ideal();
        let summary = initial.hilbert_summary()?;
        Ok(Context { config, points, order, basis, initial, summary })
    }

    pub fn regularity(&self) -> u32 {
        self.summary.regularity.max(1)
    }

    /// The configured degree range, `1..=reg` by default.
    pub fn degrees(&self) -> Result<std::ops::RangeInclusive<u32>> {
        let reg = self.regularity();
        match self.config.degrees {
            None => Ok(1..=reg),
            Some([lo, hi]) if hi <= reg => Ok(lo..=hi),
            Some([_, hi]) => bail!("degree {hi} exceeds the regularity {reg}"),
        }
    }

    pub fn ranks(&self) -> std::ops::RangeInclusive<usize> {
        let m = self.points.len();
        match self.config.ranks {
            None => 1..=m,
            Some([lo, hi]) => lo..=hi.min(m),
        }
    }

    fn format(&self) -> Format {
        self.config.format
    }

    fn describe(&self) -> String {
        let f = self.points.field();
        format!(
            "{} set of {} points over GF({}) in P^{}",
            self.points.family().name(),
            self.points.len(),
            f.size(),
            self.points.nvars() - 1
        )
    }
}

pub fn params(ctx: &Context) -> Result<CommandOutput> {
    let degrees: Vec<u32> = ctx.degrees()?.collect();
    let m = ctx.points.len();
    let hs: Vec<u64> = degrees.iter().map(|&d| ctx.initial.hilbert_function(d)).collect();
    let mut t = Table::new(std::iter::once("d".to_string()).chain(degrees.iter().map(u32::to_string)));
    t.push(std::iter::once("|X|".to_string()).chain(degrees.iter().map(|_| m.to_string())));
    t.push(std::iter::once("H(d)".to_string()).chain(hs.iter().map(u64::to_string)));
    let json = json!({
        "family": ctx.points.family().name(),
        "field": ctx.points.field().size(),
        "points": m,
        "degree": ctx.summary.degree,
        "regularity": ctx.summary.regularity,
        "dimension": ctx.summary.dim,
        "hilbert": degrees.iter().zip(&hs).map(|(d, h)| json!({ "d": d, "h": h })).collect::<Vec<_>>(),
    });
    let mut text = render_table(&t, &json, ctx.format());
    if ctx.format() == Format::Text {
        text = format!(
            "{}\n{}deg {}, reg {}\n",
            ctx.describe(),
            text,
            ctx.summary.degree,
            ctx.summary.regularity
        );
    }
    Ok(CommandOutput::ok(text))
}

pub fn weight_matrix_of(ctx: &Context) -> Result<WeightMatrix> {
    let field = ctx.points.field();
    let witnesses = ctx.config.witnesses(field, ctx.points.nvars())?;
    let options = WeightMatrixOptions {
        budget: ctx.config.budget as u128,
        witnesses: &witnesses,
        solver: &ParallelSolver,
        degrees: Some(ctx.degrees()?),
        max_rank: Some(*ctx.ranks().end()),
    };
    Ok(weight_matrix(&ctx.points, &ctx.initial, &ctx.order, &options)?)
}

/// The weight matrix; with `strict`, undetermined cells make the outcome
/// [`Outcome::BudgetExceeded`].
pub fn weights(ctx: &Context, strict: bool) -> Result<CommandOutput> {
    let w = weight_matrix_of(ctx)?;
    let ranks = ctx.ranks();
    let open = ranks.clone().filter(|&r| r <= w.cols()).any(|r| {
        w.degrees().any(|d| matches!(w.get(d, r), Cell::Interval { lower, upper } if lower != upper))
    });
    let text = render_matrix(&w, ranks, ctx.format());
    let outcome = if strict && open { Outcome::BudgetExceeded } else { Outcome::Ok };
    Ok(CommandOutput { text, outcome })
}

pub fn footprint(ctx: &Context) -> Result<CommandOutput> {
    let fp = footprint_matrix(&ctx.initial, ctx.summary.degree, ctx.degrees()?)?;
    Ok(CommandOutput::ok(render_matrix(&fp, ctx.ranks(), ctx.format())))
}

/// `|V_X(F)|` and `|X \ V_X(F)|` for forms given as text.
pub fn zeros(ctx: &Context, forms: &[String]) -> Result<CommandOutput> {
    if forms.is_empty() {
        bail!("no polynomials given");
    }
    let field = ctx.points.field();
    let n = ctx.points.nvars();
    let polys: Vec<Polynomial> =
        forms.iter().map(|f| parse_polynomial(field, n, f)).collect::<Result<_, _>>()?;
    let (zeros, outside) = ctx.points.zero_counts(&polys)?;
    let mut t = Table::new(["quantity", "value"]);
    t.push(["|V_X(F)|".to_string(), zeros.to_string()]);
    t.push(["|X\\V_X(F)|".to_string(), outside.to_string()]);
    t.push(["|X|".to_string(), ctx.points.len().to_string()]);
    let json = json!({
        "polynomials": polys.iter().map(|p| p.format(field, &ctx.order)).collect::<Vec<_>>(),
        "zeros": zeros,
        "nonzeros": outside,
        "points": ctx.points.len(),
    });
    let text = match ctx.format() {
        Format::Text => format!("|V_X(F)| = {zeros}\n|X \\ V_X(F)| = {outside}\n"),
        f => render_table(&t, &json, f),
    };
    Ok(CommandOutput::ok(text))
}
