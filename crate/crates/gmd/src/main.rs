use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand};
use gmd::commands::{self, CommandOutput, Context, Outcome};
use gmd::config::{parse_range, split_priority, FactorJson, FamilyName, FamilySpec, FieldJson, Format, OrderName, RunConfig};
use gmd::reproduce::{reproduce, Example};
use gmd::verify::{self, Section, VerifyOptions};

/// Generalized minimum distance functions and weight hierarchies of
/// evaluation codes on projective point sets.
#[derive(Parser, Debug)]
#[command(name = "gmd", version)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct RunArgs {
    /// JSON run configuration; other flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print the effective configuration as JSON and exit.
    #[arg(long, global = true)]
    dump_config: bool,
    /// Field as p^k, p or q.
    #[arg(long, global = true)]
    field: Option<String>,
    /// affine-cartesian, nested-cartesian, projective-space, torus or custom.
    #[arg(long, global = true)]
    family: Option<String>,
    /// Cartesian factors as JSON, e.g. '[["0","1"],["0","1"],"all"]'.
    #[arg(long, global = true)]
    factors: Option<String>,
    /// Number of homogeneous coordinates of projective spaces and tori.
    #[arg(long, global = true)]
    vars: Option<usize>,
    /// Points of a custom family as JSON, e.g. '[[1,0,0],[0,1,"a"]]'.
    #[arg(long, global = true)]
    points: Option<String>,
    #[arg(long, global = true, value_enum)]
    order: Option<OrderName>,
    /// Variables from largest to smallest, e.g. "t3,t2,t1".
    #[arg(long, global = true)]
    priority: Option<String>,
    /// Degree range, e.g. 1..5.
    #[arg(long, global = true)]
    degrees: Option<String>,
    /// Rank range, e.g. 1..4.
    #[arg(long, global = true)]
    ranks: Option<String>,
    /// Largest number of subspaces or supports examined for one cell.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Exit with status 3 when some cell stays undetermined.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length, Hilbert function, degree and regularity.
    Params,
    /// The weight matrix δ(d, r), with intervals for cells beyond the budget.
    Weights,
    /// The footprint matrix fp(d, r).
    Footprint,
    /// Common zeros of forms on the point set.
    Zeros {
        /// Forms such as "(t1-t2)*t3".
        #[arg(required = true)]
        polynomials: Vec<String>,
    },
    /// Exhaustive checks of the closed forms and bounds.
    Verify(VerifyArgs),
    /// Recompute a worked example.
    Reproduce {
        #[arg(value_enum)]
        example: Example,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Sections to run (default: all).
    #[arg(long = "only", value_enum)]
    sections: Vec<Section>,
    #[arg(long, default_value_t = 4)]
    pi_max_len: usize,
    #[arg(long, default_value_t = 2000)]
    pi_max_product: i64,
    #[arg(long, default_value_t = 4)]
    product_max_len: usize,
    #[arg(long, default_value_t = 500)]
    product_max_product: i64,
    #[arg(long, default_value_t = 30)]
    product_sum_max: i64,
    #[arg(long, default_value_t = 256)]
    quotient_max_product: i64,
    /// Factor sizes for the triangle section as JSON, e.g. '[[2,2],[2,2,4]]'.
    #[arg(long)]
    triangle_sizes: Option<String>,
    /// Nested cartesian factor sizes for the conjecture section, e.g. '[2,2,4]'.
    #[arg(long)]
    conjecture_sizes: Option<String>,
}

impl RunArgs {
    fn config(&self) -> Result<Option<RunConfig>> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                Some(RunConfig::from_json(&text)?)
            }
            None => None,
        };
        if self.family.is_some() || self.field.is_some() {
            let family = self.family_spec(cfg.as_ref().map(|c| &c.family))?;
            match &mut cfg {
                Some(c) => c.family = family,
                None => cfg = Some(RunConfig::new(family)),
            }
        }
        let Some(mut cfg) = cfg else {
            return Ok(None);
        };
        if let Some(o) = self.order {
            cfg.order = o;
        }
        if let Some(p) = &self.priority {
            cfg.priority = Some(split_priority(p));
        }
        if let Some(d) = &self.degrees {
            cfg.degrees = Some(parse_range(d)?);
        }
        if let Some(r) = &self.ranks {
            cfg.ranks = Some(parse_range(r)?);
        }
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        if let Some(f) = self.format {
            cfg.format = f;
        }
        cfg.validate()?;
        Ok(Some(cfg))
    }

    fn family_spec(&self, base: Option<&FamilySpec>) -> Result<FamilySpec> {
        let field = match (&self.field, base) {
            (Some(text), _) => {
                let f = gmd::parse::parse_field(text)?;
                FieldJson { p: f.characteristic(), k: f.degree() }
            }
            (None, Some(b)) => b.field,
            (None, None) => bail!("--field is required"),
        };
        let family = match (&self.family, base) {
            (Some(name), _) => name.parse::<FamilyName>()?,
            (None, Some(b)) => b.family,
            (None, None) => bail!("--family is required"),
        };
        let factors = match &self.factors {
            Some(json) => Some(serde_json::from_str::<Vec<FactorJson>>(json).context("invalid --factors")?),
            None => base.and_then(|b| b.factors.clone()),
        };
        let points = match &self.points {
            Some(json) => Some(serde_json::from_str(json).context("invalid --points")?),
            None => base.and_then(|b| b.points.clone()),
        };
        let vars = self.vars.or(base.and_then(|b| b.vars));
        Ok(FamilySpec { field, family, factors, vars, points })
    }

    fn format(&self, cfg: Option<&RunConfig>) -> Format {
        self.format.or(cfg.map(|c| c.format)).unwrap_or_default()
    }
}

fn parse_sizes<T: serde::de::DeserializeOwned>(flag: &str, text: &Option<String>) -> Result<Option<T>> {
    text.as_ref().map(|t| serde_json::from_str(t).with_context(|| format!("invalid {flag}"))).transpose()
}

fn run(cli: Cli) -> Result<CommandOutput> {
    let cfg = cli.run.config()?;
    if cli.run.dump_config {
        let cfg = cfg.context("--dump-config needs a configuration (--config or --field/--family)")?;
        return Ok(CommandOutput::ok(cfg.to_json() + "\n"));
    }
    let format = cli.run.format(cfg.as_ref());
    let context = || -> Result<Context> {
        let cfg = cfg.clone().context("no point set given; use --config or --field/--family")?;
        Context::new(cfg)
    };
    match &cli.command {
        Command::Params => commands::params(&context()?),
        Command::Weights => commands::weights(&context()?, cli.run.strict),
        Command::Footprint => commands::footprint(&context()?),
        Command::Zeros { polynomials } => commands::zeros(&context()?, polynomials),
        Command::Reproduce { example } => Ok(CommandOutput::ok(reproduce(*example, format)?)),
        Command::Verify(args) => {
            let mut opts = VerifyOptions {
                pi_max_len: args.pi_max_len,
                pi_max_product: args.pi_max_product,
                product_max_len: args.product_max_len,
                product_max_product: args.product_max_product,
                product_sum_max: args.product_sum_max,
                quotient_max_product: args.quotient_max_product,
                ..VerifyOptions::default()
            };
            if !args.sections.is_empty() {
                opts.sections = args.sections.clone();
            }
            if let Some(s) = parse_sizes("--triangle-sizes", &args.triangle_sizes)? {
                opts.triangle_sizes = s;
            }
            if let Some(s) = parse_sizes("--conjecture-sizes", &args.conjecture_sizes)? {
                opts.conjecture_sizes = s;
            }
            if let Some(b) = cli.run.budget {
                opts.budget = b as u128;
            }
            let report = verify::run(&opts)?;
            let outcome = if report.violations() > 0 { Outcome::Violation } else { Outcome::Ok };
            Ok(CommandOutput { text: report.render(format), outcome })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
