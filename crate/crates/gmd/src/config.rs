//! Run configuration: the point family, monomial order, ranges, budget and
//! output format, as read from JSON files or assembled from flags.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use gmd_core::gmdfun::Witness;
use gmd_core::{FieldElement, FieldSpec, MonomialOrder, OrderKind, PointSet};
use serde::{Deserialize, Serialize};

use crate::parse::{parse_element, parse_polynomial, parse_variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub k: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyName {
    AffineCartesian,
    NestedCartesian,
    ProjectiveSpace,
    Torus,
    Custom,
}

impl FromStr for FamilyName {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| anyhow::anyhow!("unknown family {s:?}; expected affine-cartesian, nested-cartesian, projective-space, torus or custom"))
    }
}

/// An element written as an index or as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Index(u32),
    Text(String),
}

/// A cartesian factor: a list of elements or the keyword `"all"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FactorJson {
    Keyword(String),
    Elements(Vec<ElementJson>),
}

/// A point family, e.g.
/// `{"field":{"p":2,"k":2},"family":"nested-cartesian","factors":[["0","1"],["0","1"],"all"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub field: FieldJson,
    pub family: FamilyName,
    /// Factors of cartesian families.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorJson>>,
    /// Number of homogeneous coordinates of projective spaces and tori.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<usize>,
    /// Points of custom families, one coordinate list each.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<ElementJson>>>,
}

fn element(field: &FieldSpec, e: &ElementJson) -> Result<FieldElement> {
    Ok(match e {
        ElementJson::Index(i) => field.element(*i)?,
        ElementJson::Text(t) => parse_element(field, t)?,
    })
}

impl FamilySpec {
    pub fn field(&self) -> Result<FieldSpec> {
        Ok(FieldSpec::new(self.field.p, self.field.k)?)
    }

    pub fn build(&self) -> Result<PointSet> {
        let field = self.field()?;
        let factors = || -> Result<Vec<Vec<FieldElement>>> {
            let list = self.factors.as_ref().context("this family needs \"factors\"")?;
            list.iter()
                .map(|f| match f {
                    FactorJson::Keyword(k) if k == "all" => Ok(field.elements().collect()),
                    FactorJson::Keyword(k) => bail!("unknown factor keyword {k:?}; expected \"all\" or a list"),
                    FactorJson::Elements(es) => es.iter().map(|e| element(&field, e)).collect(),
                })
                .collect()
        };
        let vars = || self.vars.context("this family needs \"vars\"");
        Ok(match self.family {
            FamilyName::AffineCartesian => PointSet::affine_cartesian(&field, factors()?)?,
            FamilyName::NestedCartesian => PointSet::nested_cartesian(&field, factors()?)?,
            FamilyName::ProjectiveSpace => PointSet::projective_space(&field, vars()?)?,
            FamilyName::Torus => PointSet::torus(&field, vars()?)?,
            FamilyName::Custom => {
                let pts = self.points.as_ref().context("custom families need \"points\"")?;
                let pts = pts
                    .iter()
                    .map(|p| p.iter().map(|e| element(&field, e)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                PointSet::custom(&field, pts)?
            }
        })
    }

    /// The sizes of the cartesian factors, when there are factors.
    pub fn factor_sizes(&self) -> Result<Vec<usize>> {
        Ok(self.build()?.factor_sizes())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OrderName {
    Lex,
    Grlex,
    #[default]
    Grevlex,
}

impl OrderName {
    pub fn kind(self) -> OrderKind {
        match self {
            OrderName::Lex => OrderKind::Lex,
            OrderName::Grlex => OrderKind::GradedLex,
            OrderName::Grevlex => OrderKind::GradedReverseLex,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Forms of one degree whose common zeros bound weights from above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub degree: u32,
    pub polys: Vec<String>,
}

pub const DEFAULT_BUDGET: u64 = 2_000_000;

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub family: FamilySpec,
    #[serde(default)]
    pub order: OrderName,
    /// Variables from largest to smallest, e.g. `["t3", "t2", "t1"]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub priority: Option<Vec<String>>,
    /// Inclusive degree range; defaults to `1..=reg`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<[u32; 2]>,
    /// Inclusive rank range; defaults to `1..=|X|`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<[usize; 2]>,
    /// Largest number of subspaces or supports examined for one cell.
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessSpec>,
}

impl RunConfig {
    pub fn new(family: FamilySpec) -> RunConfig {
        RunConfig {
            family,
            order: OrderName::default(),
            priority: None,
            degrees: None,
            ranks: None,
            budget: DEFAULT_BUDGET,
            format: Format::default(),
            witnesses: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<RunConfig> {
        let cfg: RunConfig = serde_json::from_str(text).context("invalid configuration")?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configurations serialize")
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            bail!("the budget must be at least 1");
        }
        if let Some([lo, hi]) = self.degrees {
            if lo == 0 || lo > hi {
                bail!("degree range {lo}..{hi} must satisfy 1 ≤ lo ≤ hi");
            }
        }
        if let Some([lo, hi]) = self.ranks {
            if lo == 0 || lo > hi {
                bail!("rank range {lo}..{hi} must satisfy 1 ≤ lo ≤ hi");
            }
        }
        Ok(())
    }

    pub fn monomial_order(&self, nvars: usize) -> Result<MonomialOrder> {
        let kind = self.order.kind();
        match &self.priority {
            None => Ok(MonomialOrder::new(kind, nvars)),
            Some(names) => {
                let priority = names.iter().map(|n| parse_variable(nvars, n)).collect::<Result<Vec<_>, _>>()?;
                Ok(MonomialOrder::with_priority(kind, priority)?)
            }
        }
    }

    pub fn witnesses(&self, field: &FieldSpec, nvars: usize) -> Result<Vec<Witness>> {
        self.witnesses
            .iter()
            .map(|w| {
                let polys = w
                    .polys
                    .iter()
                    .map(|p| parse_polynomial(field, nvars, p))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Witness { degree: w.degree, polys })
            })
            .collect()
    }
}

/// Splits `"t3,t2,t1"` into variable names.
pub fn split_priority(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

/// Parses an inclusive range `lo..hi`, `lo-hi` or a single value.
pub fn parse_range<T: FromStr + Copy>(text: &str) -> Result<[T; 2]> {
    let bad = || anyhow::anyhow!("expected a range like 1..5, found {text:?}");
    let parts: Vec<&str> = if text.contains("..") { text.split("..").collect() } else { text.split('-').collect() };
    let parse = |s: &str| s.trim().parse::<T>().map_err(|_| bad());
    match parts.as_slice() {
        [one] => {
            let v = parse(one)?;
            Ok([v, v])
        }
        [lo, hi] => Ok([parse(lo)?, parse(hi)?]),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NESTED: &str = r#"{"field":{"p":2,"k":2},"family":"nested-cartesian","factors":[["0","1"],["0","1"],"all"]}"#;

    #[test]
    fn family_json() {
        let spec: FamilySpec = serde_json::from_str(NESTED).unwrap();
        let x = spec.build().unwrap();
        assert_eq!(x.len(), 13);
        assert_eq!(spec.factor_sizes().unwrap(), vec![2, 2, 4]);
        let spec: FamilySpec = serde_json::from_str(r#"{"field":{"p":3,"k":1},"family":"torus","vars":3}"#).unwrap();
        assert_eq!(spec.build().unwrap().len(), 4);
        let bad: FamilySpec =
            serde_json::from_str(r#"{"field":{"p":2,"k":2},"family":"nested-cartesian","factors":[["0","1"],"most"]}"#)
                .unwrap();
        assert!(bad.build().is_err());
        let custom: FamilySpec = serde_json::from_str(
            r#"{"field":{"p":2,"k":2},"family":"custom","points":[[1,0,0],["a",0,0],[0,1,"a+1"]]}"#,
        )
        .unwrap();
        assert_eq!(custom.build().unwrap().len(), 2);
    }

    #[test]
    fn config_round_trip() {
        let mut cfg = RunConfig::new(serde_json::from_str(NESTED).unwrap());
        cfg.order = OrderName::Lex;
        cfg.priority = Some(split_priority("t3, t2,t1"));
        cfg.degrees = Some([1, 5]);
        cfg.witnesses.push(WitnessSpec { degree: 1, polys: vec!["t1-t2".into(), "t1-t3".into()] });
        let back = RunConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
        let order = back.monomial_order(3).unwrap();
        assert_eq!(order.priority(), &[2, 1, 0]);
        let minimal = RunConfig::from_json(NESTED).unwrap();
        assert_eq!(minimal.budget, DEFAULT_BUDGET);
        assert_eq!(minimal.order, OrderName::Grevlex);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range::<u32>("1..5").unwrap(), [1, 5]);
        assert_eq!(parse_range::<u32>("3").unwrap(), [3, 3]);
        assert_eq!(parse_range::<usize>("2-4").unwrap(), [2, 4]);
        assert!(parse_range::<u32>("x").is_err());
        assert!(RunConfig::from_json(r#"{"field":{"p":2,"k":1},"family":"torus","vars":2,"budget":0}"#).is_err());
    }
}
