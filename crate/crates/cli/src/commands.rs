use prsk_core::diagrams::level_shapes;
use prsk_core::idempotents::partition_to_index;
use prsk_core::rs::PairCoords;
use prsk_core::schur::{cauchy_check, p_schur, CauchySetup};
use prsk_core::tableaux::{enumerate_syt, TableauRecord};
use prsk_core::verify::{self, Report, Suite};
use prsk_core::{Correspondence, Error, Family, GroupElement, GroupParams, HookPartition, Level, PYoungTableau, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::output::Output;

pub struct Ctx {
    pub p: u64,
    pub r: u32,
    pub subgroup: bool,
    pub vars: usize,
    pub cap: u64,
    pub seed: u64,
}

impl Ctx {
    fn params(&self) -> Result<GroupParams> {
        GroupParams::new(self.p, self.r)
    }

    fn family(&self) -> Family {
        if self.subgroup {
            Family::W
        } else {
            Family::V
        }
    }

    fn correspondence(&self) -> Result<Correspondence> {
        Correspondence::new(self.params()?, self.family())
    }

    fn level(&self, s: u32) -> Result<Level> {
        Level::new(self.family(), self.r, s)
    }

    fn shape(&self, level: Level, kprime: u64) -> Result<HookPartition> {
        let shape = HookPartition::new(level.size(self.p), kprime)?;
        level.check(self.p, shape)?;
        Ok(shape)
    }
}

fn l_index(p: u64, shape: HookPartition, level: Level) -> Result<Option<u64>> {
    if level.is_one_dimensional() {
        return Ok(None);
    }
    Ok(Some(partition_to_index(p, shape, level)?.0))
}

fn opt(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn levels(ctx: &Ctx) -> Result<Output> {
    let p = ctx.p;
    ctx.params()?;
    let families: &[Family] = if ctx.subgroup { &[Family::W] } else { &[Family::V, Family::W] };
    let mut json = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for &family in families {
        for level in Level::all(family, ctx.r) {
            let shapes = level_shapes(p, level);
            let mut entries = Vec::new();
            for &shape in &shapes {
                let l = l_index(p, shape, level)?;
                entries.push(json!({ "shape": shape.to_string(), "l": l }));
                rows.push(vec![
                    family.to_string(),
                    level.s.to_string(),
                    level.to_string(),
                    shape.to_string(),
                    level.dimension(p).to_string(),
                    opt(l),
                ]);
            }
            json.push(json!({
                "level": level.to_string(),
                "family": family.to_string(),
                "r": level.r,
                "s": level.s,
                "size": level.size(p),
                "dimension": level.dimension(p),
                "num_shapes": shapes.len(),
                "shapes": entries,
            }));
            let names: Vec<String> = shapes.iter().map(|s| s.to_string()).collect();
            text.push_str(&format!(
                "{level}: size {}, dimension {}, {} shapes: {}\n",
                level.size(p),
                level.dimension(p),
                shapes.len(),
                names.join(" ")
            ));
        }
    }
    Ok(Output {
        json: json!({ "p": p, "r": ctx.r, "levels": json }),
        header: vec!["family", "s", "level", "shape", "dimension", "l"],
        rows,
        text,
    })
}

fn tableau_json(t: &PYoungTableau) -> Value {
    let (row, col) = t.rows();
    json!({
        "record": TableauRecord::from(t),
        "first_row": row,
        "first_column": col,
        "rendering": t.render(),
    })
}

pub fn tableaux(ctx: &Ctx, s: u32, kprime: u64) -> Result<Output> {
    let level = ctx.level(s)?;
    let shape = ctx.shape(level, kprime)?;
    let all = enumerate_syt(ctx.p, level, shape)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut json = Vec::new();
    for (t, idx) in &all {
        let blocks: Vec<String> = t.blocks().iter().map(|b| b.to_string()).collect();
        rows.push(vec![idx.value.to_string(), blocks.join(" "), t.render().replace('\n', "/")]);
        text.push_str(&format!("P{} {}\n{}\n\n", idx.value, blocks.join(" "), t.render()));
        json.push(tableau_json(t));
    }
    Ok(Output {
        json: json!({ "level": level.to_string(), "shape": shape.to_string(), "count": all.len(), "tableaux": json }),
        header: vec!["index", "blocks", "rendering"],
        rows,
        text,
    })
}

/// Parses `FAMILY,s,kprime:i,j`.
pub fn parse_pair(ctx: &Ctx, text: &str) -> Result<PairCoords> {
    let bad = || Error::Parse(format!("pair {text:?} is not FAMILY,s,kprime:i,j"));
    let (head, tail) = text.split_once(':').ok_or_else(bad)?;
    let head: Vec<&str> = head.split(',').map(str::trim).collect();
    let tail: Vec<&str> = tail.split(',').map(str::trim).collect();
    if head.len() != 3 || tail.len() != 2 {
        return Err(bad());
    }
    let family: Family = head[0].parse()?;
    let num = |x: &str| x.parse::<u64>().map_err(|_| bad());
    let s = num(head[1])? as u32;
    let level = Level::new(family, ctx.r, s)?;
    let shape = ctx.shape(level, num(head[2])?)?;
    let l = l_index(ctx.p, shape, level)?;
    Ok(PairCoords { level, shape, l, i: num(tail[0])?, j: num(tail[1])? })
}

fn coords_json(c: &PairCoords, x: GroupElement) -> Value {
    json!({
        "level": c.level.to_string(),
        "shape": c.shape.to_string(),
        "l": c.l,
        "i": c.i,
        "j": c.j,
        "element": x.to_string(),
    })
}

fn coords_row(c: &PairCoords, x: GroupElement) -> Vec<String> {
    vec![c.level.to_string(), c.shape.to_string(), opt(c.l), c.i.to_string(), c.j.to_string(), x.to_string()]
}

const PAIR_HEADER: [&str; 6] = ["level", "shape", "l", "i", "j", "element"];

pub fn map(ctx: &Ctx, pairs: &[String]) -> Result<Output> {
    let gp = ctx.params()?;
    let mut json = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for arg in pairs {
        let c = parse_pair(ctx, arg)?;
        let h = Correspondence::new(gp, c.level.family)?;
        let x = h.element(&c)?;
        json.push(coords_json(&c, x));
        rows.push(coords_row(&c, x));
        text.push_str(&format!("{x}\n"));
    }
    Ok(Output { json: Value::Array(json), header: PAIR_HEADER.to_vec(), rows, text })
}

pub fn unmap(ctx: &Ctx, elements: &[String]) -> Result<Output> {
    let h = ctx.correspondence()?;
    let mut json = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for s in elements {
        let x = h.params.parse_element(s)?;
        let c = h.locate(x)?;
        let pair = h.pair_at(&c)?;
        let mut v = coords_json(&c, x);
        v["first"] = tableau_json(&pair.p);
        v["second"] = tableau_json(&pair.q);
        json.push(v);
        rows.push(coords_row(&c, x));
        text.push_str(&format!(
            "{x} -> (P{}, P{}) on {} in {}{}\n{}\n\n{}\n\n",
            c.i,
            c.j,
            c.shape,
            c.level,
            c.l.map(|l| format!(", l = {l}")).unwrap_or_default(),
            pair.p.render(),
            pair.q.render()
        ));
    }
    Ok(Output { json: Value::Array(json), header: PAIR_HEADER.to_vec(), rows, text })
}

/// Matrices of images `h(P_i, P_j)` for one shape or every shape of a level.
pub fn matrices(ctx: &Ctx, s: u32, kprime: Option<u64>) -> Result<Output> {
    let h = ctx.correspondence()?;
    let level = ctx.level(s)?;
    let shapes = match kprime {
        Some(k) => vec![ctx.shape(level, k)?],
        None => level_shapes(ctx.p, level),
    };
    let d = level.dimension(ctx.p);
    let mut json = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for shape in shapes {
        let l = l_index(ctx.p, shape, level)?;
        let mut matrix = Vec::new();
        for i in 1..=d {
            let mut row = Vec::new();
            for j in 1..=d {
                let c = PairCoords { level, shape, l, i, j };
                let x = h.element(&c)?;
                rows.push(coords_row(&c, x));
                row.push(x.to_string());
            }
            matrix.push(row);
        }
        text.push_str(&format!("{shape} in {level}{}\n", l.map(|l| format!(", l = {l}")).unwrap_or_default()));
        for row in &matrix {
            text.push_str(&row.join("  "));
            text.push('\n');
        }
        text.push('\n');
        json.push(json!({ "shape": shape.to_string(), "level": level.to_string(), "l": l, "matrix": matrix }));
    }
    Ok(Output { json: Value::Array(json), header: PAIR_HEADER.to_vec(), rows, text })
}

pub struct VerifyOpts {
    pub suite: Suite,
    pub s: Option<u32>,
    pub k_max: usize,
    pub samples: Option<usize>,
}

fn sample_elements(ctx: &Ctx, n: usize) -> Result<Vec<GroupElement>> {
    let gp = ctx.params()?;
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    Ok((0..n)
        .map(|_| {
            let a = rng.random_range(0..gp.order_g);
            let a = if ctx.subgroup { a - a % ctx.p } else { a };
            gp.element(a as i64, rng.random_range(0..gp.order_tau) as i64)
        })
        .collect())
}

pub fn run_suite(ctx: &Ctx, o: &VerifyOpts) -> Result<Report> {
    let (p, r, sub) = (ctx.p, ctx.r, ctx.subgroup);
    ctx.params()?;
    match o.suite {
        Suite::Bijection => verify::bijection(p, r, sub),
        Suite::MatrixUnits => verify::matrix_units(p, r, ctx.family(), o.s),
        Suite::Dimensions => verify::dimensions(&[p], r),
        Suite::Paths => verify::paths(p, r),
        Suite::Knuth => verify::knuth(p, r, sub),
        Suite::Merging => verify::merging(p, o.k_max),
        Suite::Kostka => verify::kostka_suite(p, o.s.unwrap_or(2), ctx.vars),
        Suite::Cauchy => verify::cauchy(p, ctx.vars, ctx.cap),
        Suite::Roundtrip => match o.samples {
            Some(n) => {
                let xs = sample_elements(ctx, n)?;
                Ok(verify::roundtrip_sampled(p, r, sub, &xs)?.param("seed", ctx.seed))
            }
            None => verify::roundtrip(p, r, sub),
        },
    }
}

pub fn report_output(rep: &Report) -> Output {
    let mut rows = Vec::new();
    let mut text = format!("{} {}\n", rep.suite, if rep.passed { "passed" } else { "FAILED" });
    for (k, v) in &rep.params {
        text.push_str(&format!("  param {k} = {v}\n"));
    }
    for (k, v) in &rep.counts {
        rows.push(vec!["count".into(), k.clone(), v.to_string()]);
        text.push_str(&format!("  {k}: {v}\n"));
    }
    for (k, v) in &rep.notes {
        rows.push(vec!["note".into(), k.clone(), v.clone()]);
        text.push_str(&format!("  {k}: {v}\n"));
    }
    if let Some(c) = &rep.counterexample {
        rows.push(vec!["counterexample".into(), String::new(), c.clone()]);
        text.push_str(&format!("  counterexample: {c}\n"));
    }
    rows.push(vec!["result".into(), "passed".into(), rep.passed.to_string()]);
    Output {
        json: serde_json::to_value(rep).expect("report serializes"),
        header: vec!["kind", "key", "value"],
        rows,
        text,
    }
}

fn poly_rows(poly: &prsk_core::TruncatedPolynomial, tag: &str) -> Vec<Vec<String>> {
    poly.to_records()
        .into_iter()
        .map(|t| {
            vec![tag.to_string(), t.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "), t.coeff]
        })
        .collect()
}

pub fn schur(ctx: &Ctx, s: u32, kprime: Option<u64>) -> Result<Output> {
    let level = ctx.level(s)?;
    let shape = match kprime {
        Some(k) => ctx.shape(level, k)?,
        None => level_shapes(ctx.p, level)[0],
    };
    let poly = p_schur(ctx.p, level, shape, ctx.vars, ctx.cap)?;
    Ok(Output {
        json: json!({
            "level": level.to_string(),
            "shape": shape.to_string(),
            "vars": ctx.vars,
            "cap": ctx.cap,
            "terms": poly.to_records(),
        }),
        header: vec!["poly", "exponents", "coeff"],
        rows: poly_rows(&poly, "S"),
        text: format!("S[{shape}] = {poly}\n"),
    })
}

pub fn cauchy(ctx: &Ctx) -> Result<(Output, bool)> {
    ctx.params()?;
    let setup = CauchySetup { p: ctx.p, num_x: ctx.vars, num_y: ctx.vars, degree_cap: ctx.cap };
    let rep = cauchy_check(setup)?;
    let rhs = setup.rhs()?;
    let lhs = match rep.selected {
        Some(conv) => Some(setup.lhs(conv)?),
        None => None,
    };
    let mut text = format!(
        "levels: {}\nconvention: {}\n",
        rep.levels.join(" "),
        rep.selected.map(|c| c.to_string()).unwrap_or_else(|| "none".into())
    );
    for (conv, ok) in &rep.balanced {
        text.push_str(&format!("  {conv}: {}\n", if *ok { "balances" } else { "differs" }));
    }
    for (b, ok) in &rep.bullets {
        text.push_str(&format!("  bullet {b:?}: {}\n", if *ok { "balances" } else { "differs" }));
    }
    text.push_str(&format!("RHS = {rhs}\n"));
    let mut rows = poly_rows(&rhs, "rhs");
    if let Some(lhs) = &lhs {
        rows.extend(poly_rows(lhs, "lhs"));
    }
    let json = json!({
        "report": rep,
        "rhs": rhs.to_records(),
        "lhs": lhs.as_ref().map(|l| l.to_records()),
    });
    Ok((Output { json, header: vec!["poly", "exponents", "coeff"], rows, text }, rep.holds()))
}
