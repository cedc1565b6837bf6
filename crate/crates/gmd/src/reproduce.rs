//! One-shot computations on two small projective point sets: the nested
//! cartesian set `[{0,1} × {0,1} × GF(4)] ⊂ P^2` and `P^2` over `GF(2)`.

use std::fmt::Write as _;

use anyhow::Result;
use gmd_core::formulas::{conjecture52_value, degree_decomposition};
use gmd_core::gmdfun::{footprint_fn, footprint_matrix, weight_matrix, Witness, WeightMatrixOptions};
use gmd_core::{FieldElement, FieldSpec, MonomialIdeal, MonomialOrder, OrderKind, PointSet, Polynomial};
use serde_json::{json, Value};

use crate::config::Format;
use crate::output::{cell_csv, cell_json, cell_text, render_matrix, render_table, Table};
use crate::parallel::ParallelSolver;
use crate::parse::parse_polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Example {
    #[value(name = "ex7.1")]
    Ex71,
    #[value(name = "ex7.2")]
    Ex72,
    #[value(name = "ex7.3")]
    Ex73,
    #[value(name = "ex7.4")]
    Ex74,
}

impl Example {
    pub const ALL: [Example; 4] = [Example::Ex71, Example::Ex72, Example::Ex73, Example::Ex74];

    pub fn name(self) -> &'static str {
        match self {
            Example::Ex71 => "ex7.1",
            Example::Ex72 => "ex7.2",
            Example::Ex73 => "ex7.3",
            Example::Ex74 => "ex7.4",
        }
    }
}

/// Point set, order and initial ideal of a reproduction.
pub struct Setup {
    pub points: PointSet,
    pub order: MonomialOrder,
    pub initial: MonomialIdeal,
    pub degree: u64,
    pub regularity: u32,
}

impl Setup {
    fn new(points: PointSet, order: MonomialOrder) -> Result<Setup> {
        let initial = points.vanishing_ideal(&order)?.initial_ideal();
        let s = initial.hilbert_summary()?;
        Ok(Setup { points, order, initial, degree: s.degree, regularity: s.regularity })
    }
}

/// `[{0,1} × {0,1} × GF(4)] ⊂ P^2` with lex order `t3 > t2 > t1`.
pub fn nested_224() -> Result<Setup> {
    let f = FieldSpec::new(2, 2)?;
    let el = |xs: &[u32]| xs.iter().map(|&v| FieldElement(v)).collect::<Vec<_>>();
    let x = PointSet::nested_cartesian(&f, vec![el(&[0, 1]), el(&[0, 1]), f.elements().collect()])?;
    Setup::new(x, MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0])?)
}

/// `P^2` over `GF(2)` with grevlex.
pub fn plane_gf2() -> Result<Setup> {
    let f = FieldSpec::new(2, 1)?;
    Setup::new(PointSet::projective_space(&f, 3)?, MonomialOrder::grevlex(3))
}

/// Pairs of forms of degrees 1 to 4 on the nested set with many common zeros.
pub const NESTED_PAIRS: [(&str, &str); 4] = [
    ("t1-t2", "t1-t3"),
    ("(t1-t2)(t1-t3)", "(t1-t2)t2"),
    ("(t1-t2)(t1-t3)t2", "(t1-t2)t2^2"),
    ("(t1-t2)(t1-t3)t2^2", "(t1-t2)(t2-t3)t2t3"),
];

/// A quartic vanishing on every point but `[0:0:1]`.
pub const QUARTIC: &str = "t3(t3^3-t2^3-t1^3+t1^2t2)";

pub fn nested_witnesses(field: &FieldSpec) -> Result<Vec<Witness>> {
    NESTED_PAIRS
        .iter()
        .enumerate()
        .map(|(i, (f, g))| {
            Ok(Witness { degree: i as u32 + 1, polys: vec![parse_polynomial(field, 3, f)?, parse_polynomial(field, 3, g)?] })
        })
        .collect()
}

/// Parameter table with rows `|X|`, `H(d)`, `δ(d,1)` and `fp(d,1)`.
fn parameter_table(setup: &Setup, format: Format) -> Result<(String, Value)> {
    let reg = setup.regularity;
    let degrees: Vec<u32> = (1..=reg).collect();
    let opts = WeightMatrixOptions { max_rank: Some(1), ..WeightMatrixOptions::new(u128::MAX, &ParallelSolver) };
    let w = weight_matrix(&setup.points, &setup.initial, &setup.order, &opts)?;
    let m = setup.points.len();
    let hs: Vec<u64> = degrees.iter().map(|&d| setup.initial.hilbert_function(d)).collect();
    let fps: Vec<u64> = degrees.iter().map(|&d| footprint_fn(&setup.initial, setup.degree, d, 1)).collect::<Result<_, _>>()?;
    let deltas: Vec<_> = degrees.iter().map(|&d| w.get(d, 1)).collect();
    let cell = if format == Format::Csv { cell_csv } else { cell_text };
    let mut t = Table::new(std::iter::once("d".to_string()).chain(degrees.iter().map(u32::to_string)));
    t.push(std::iter::once("|X|".to_string()).chain(degrees.iter().map(|_| m.to_string())));
    t.push(std::iter::once("H(d)".to_string()).chain(hs.iter().map(u64::to_string)));
    t.push(std::iter::once("δ(d,1)".to_string()).chain(deltas.iter().map(|&c| cell(c))));
    t.push(std::iter::once("fp(d,1)".to_string()).chain(fps.iter().map(u64::to_string)));
    let json = json!({
        "points": m,
        "degree": setup.degree,
        "regularity": reg,
        "rows": degrees.iter().enumerate().map(|(i, d)| json!({
            "d": d,
            "h": hs[i],
            "delta": cell_json(deltas[i]),
            "footprint": fps[i],
        })).collect::<Vec<_>>(),
    });
    let text = match format {
        Format::Json => String::new(),
        Format::Csv => t.csv(),
        Format::Text => format!("{}deg {}, reg {}\n", t.text(), setup.degree, reg),
    };
    Ok((text, json))
}

fn finish(format: Format, text: String, json: Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json values serialize") + "\n",
        _ => text,
    }
}

pub fn reproduce(example: Example, format: Format) -> Result<String> {
    match example {
        Example::Ex71 => ex71(format),
        Example::Ex72 => ex72(format),
        Example::Ex73 => ex73(format),
        Example::Ex74 => ex74(format),
    }
}

fn ex71(format: Format) -> Result<String> {
    let setup = nested_224()?;
    let (table, mut json) = parameter_table(&setup, format)?;
    let field = setup.points.field();
    let sizes = [2i64, 2, 4];
    let reg = setup.regularity;
    let opts = WeightMatrixOptions { max_rank: Some(1), ..WeightMatrixOptions::new(u128::MAX, &ParallelSolver) };
    let w = weight_matrix(&setup.points, &setup.initial, &setup.order, &opts)?;
    let mut conj = Table::new(std::iter::once("d".to_string()).chain((1..=reg).map(|d| d.to_string())));
    let mut ks = vec!["k".to_string()];
    let mut ls = vec!["ℓ".to_string()];
    let mut vs = vec!["conjectured".to_string()];
    let mut refuted = Vec::new();
    let mut rows = Vec::new();
    for d in 1..=reg {
        let dec = degree_decomposition(d as i64, &sizes[1..]).ok();
        let value = conjecture52_value(&sizes, d as i64)?;
        ks.push(dec.map_or(String::new(), |x| x.k.to_string()));
        ls.push(dec.map_or(String::new(), |x| x.ell.to_string()));
        vs.push(value.to_string());
        let computed = w.get(d, 1).exact();
        if computed != Some(value as u64) {
            refuted.push((d, value, computed));
        }
        rows.push(json!({ "d": d, "k": dec.map(|x| x.k), "ell": dec.map(|x| x.ell), "conjectured": value, "computed": computed }));
    }
    conj.push(ks);
    conj.push(ls);
    conj.push(vs);
    let quartic = parse_polynomial(field, 3, QUARTIC)?;
    let support: Vec<String> = setup
        .points
        .points()
        .iter()
        .filter(|p| !quartic.evaluate(p, field).map(|v| v.is_zero()).unwrap_or(true))
        .map(|p| setup.points.format_point(p))
        .collect();
    json["conjecture"] = json!(rows);
    json["quartic"] = json!({ "polynomial": QUARTIC, "nonzero_at": support });
    let mut text = String::new();
    if format == Format::Text {
        writeln!(text, "X = [{{0,1}} x {{0,1}} x GF(4)] in P^2, lex order t3 > t2 > t1").unwrap();
        text.push_str(&table);
        writeln!(text, "\nconjectured minimum distance").unwrap();
        text.push_str(&conj.text());
        for (d, value, computed) in &refuted {
            let c = computed.map_or("?".to_string(), |v| v.to_string());
            writeln!(text, "conjecture fails at d = {d}: conjectured {value}, computed {c}").unwrap();
        }
        writeln!(text, "\n{QUARTIC} is nonzero only at {}", support.join(", ")).unwrap();
    } else {
        text = table;
    }
    Ok(finish(format, text, json))
}

fn ex72(format: Format) -> Result<String> {
    let setup = nested_224()?;
    let field = setup.points.field();
    let m = setup.points.len();
    let mut t = Table::new(["d", "f1", "f2", "|V_X(F)|", "|X\\V_X(F)|", "fp(d,2)", "δ(d,2)"]);
    let mut rows = Vec::new();
    for (i, (f, g)) in NESTED_PAIRS.iter().enumerate() {
        let d = i as u32 + 1;
        let polys: Vec<Polynomial> = vec![parse_polynomial(field, 3, f)?, parse_polynomial(field, 3, g)?];
        let (zeros, outside) = setup.points.zero_counts(&polys)?;
        let fp = footprint_fn(&setup.initial, m as u64, d, 2)?;
        // fp(d,2) ≤ δ(d,2) ≤ |X \ V_X(F)|
        let delta = if fp == outside as u64 { fp.to_string() } else { format!("[{fp},{outside}]") };
        t.push([d.to_string(), f.to_string(), g.to_string(), zeros.to_string(), outside.to_string(), fp.to_string(), delta.clone()]);
        rows.push(json!({
            "d": d, "f1": f, "f2": g, "zeros": zeros, "nonzeros": outside, "footprint": fp,
            "delta": if fp == outside as u64 { json!(fp) } else { Value::Null },
        }));
    }
    let json = json!({ "points": m, "pairs": rows });
    let mut text = render_table(&t, &json, format);
    if format == Format::Text {
        text = format!("X = [{{0,1}} x {{0,1}} x GF(4)] in P^2, lex order t3 > t2 > t1\n{text}");
    }
    Ok(text)
}

fn ex73(format: Format) -> Result<String> {
    let setup = nested_224()?;
    let fp = footprint_matrix(&setup.initial, setup.degree, 1..=setup.regularity)?;
    let body = render_matrix(&fp, 1..=setup.degree as usize, format);
    Ok(match format {
        Format::Text => format!("X = [{{0,1}} x {{0,1}} x GF(4)] in P^2, lex order t3 > t2 > t1\n{body}"),
        _ => body,
    })
}

fn ex74(format: Format) -> Result<String> {
    let setup = plane_gf2()?;
    let (table, json) = parameter_table(&setup, format)?;
    let text = match format {
        Format::Text => {
            let opts = WeightMatrixOptions { max_rank: Some(1), ..WeightMatrixOptions::new(u128::MAX, &ParallelSolver) };
            let w = weight_matrix(&setup.points, &setup.initial, &setup.order, &opts)?;
            let mut gaps = String::new();
            for d in 1..=setup.regularity {
                let fp = footprint_fn(&setup.initial, setup.degree, d, 1)?;
                if let Some(delta) = w.get(d, 1).exact() {
                    if fp < delta {
                        writeln!(gaps, "fp({d},1) = {fp} < δ({d},1) = {delta}").unwrap();
                    }
                }
            }
            format!("X = P^2 over GF(2), grevlex order t1 > t2 > t3\n{table}{gaps}")
        }
        _ => table,
    };
    Ok(finish(format, text, json))
}
