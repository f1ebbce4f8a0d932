//! Exhaustive and property suites with serializable reports.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{count_paths, level_shapes, Family, Level};
use crate::error::{Error, Result};
use crate::group::{AlgebraElement, GroupElement, GroupParams};
use crate::idempotents::{e_idem, ee_idem, matrix_unit_from_seed, seed, t_r_idem};
use crate::rs::Correspondence;
use crate::schur::{
    cauchy_check, contiguous_groupings, enumerate_contents, enumerate_merged, kostka, p_schur, CauchySetup,
    MergedDiagram,
};
use crate::tableaux::{enumerate_syt, index_to_tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Suite {
    Bijection,
    MatrixUnits,
    Dimensions,
    Paths,
    Knuth,
    Merging,
    Kostka,
    Cauchy,
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Bijection,
        Suite::MatrixUnits,
        Suite::Dimensions,
        Suite::Paths,
        Suite::Knuth,
        Suite::Merging,
        Suite::Kostka,
        Suite::Cauchy,
        Suite::Roundtrip,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::MatrixUnits => "matrix-units",
            Suite::Dimensions => "dimensions",
            Suite::Paths => "paths",
            Suite::Knuth => "knuth",
            Suite::Merging => "merging",
            Suite::Kostka => "kostka",
            Suite::Cauchy => "cauchy",
            Suite::Roundtrip => "roundtrip",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Counts, notes and the first counterexample of a suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub counts: BTreeMap<String, u64>,
    pub notes: BTreeMap<String, String>,
    pub counterexample: Option<String>,
    pub passed: bool,
}

impl Report {
    pub fn new(suite: Suite) -> Self {
        Report {
            suite: suite.name().to_string(),
            params: BTreeMap::new(),
            counts: BTreeMap::new(),
            notes: BTreeMap::new(),
            counterexample: None,
            passed: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn add(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += n;
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.insert(key.to_string(), value.to_string());
    }

    /// Records a failure; only the first counterexample is kept.
    pub fn fail(&mut self, what: impl ToString) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(what.to_string());
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.add("checks", 1);
        if !ok {
            self.fail(what());
        }
    }
}

fn correspondence(p: u64, r: u32, subgroup: bool) -> Result<Correspondence> {
    let gp = GroupParams::new(p, r)?;
    if subgroup {
        Correspondence::sub(gp)
    } else {
        Ok(Correspondence::full(gp))
    }
}

/// `h` (or `h'`) hits every element of `G_r` (or `SG_r`) exactly once.
pub fn bijection(p: u64, r: u32, subgroup: bool) -> Result<Report> {
    let h = correspondence(p, r, subgroup)?;
    let mut rep = Report::new(Suite::Bijection).param("p", p).param("r", r).param("subgroup", subgroup);
    let coords = h.all_coords();
    let images: Vec<_> = coords.par_iter().map(|c| h.element(c)).collect::<Result<_>>()?;
    let mut seen = HashMap::new();
    for (c, x) in coords.iter().zip(&images) {
        if let Some(prev) = seen.insert(*x, *c) {
            rep.fail(format!("{x} is the image of {prev:?} and {c:?}"));
        }
        if !h.contains(*x) {
            rep.fail(format!("{x} from {c:?} is outside the domain"));
        }
    }
    let universe = h.params.enumerate(subgroup);
    for x in &universe {
        rep.check(seen.contains_key(x), || format!("{x} is not covered"));
    }
    rep.check(seen.len() == universe.len(), || format!("{} images for {} elements", seen.len(), universe.len()));
    rep.add("pairs", coords.len() as u64);
    rep.add("elements", universe.len() as u64);
    rep.add("covered", seen.len() as u64);
    Ok(rep)
}

/// A labelled set of matrix units of one irreducible.
struct Block {
    label: String,
    units: Vec<Vec<AlgebraElement>>,
}

fn blocks(gp: &GroupParams, family: Family) -> Result<Vec<Block>> {
    let mut out = Vec::new();
    let average = match family {
        Family::V => e_idem(gp, 0, 0)?,
        Family::W => ee_idem(gp, 0, 0)?,
    };
    for l in 0..gp.order_tau {
        let e = &t_r_idem(gp, l)? * &average;
        out.push(Block { label: format!("{family}^{}_0 l={l}", gp.r), units: vec![vec![e]] });
    }
    for level in Level::all(family, gp.r).into_iter().filter(|lv| lv.s >= 1) {
        let d = level.dimension(gp.p);
        for l in 0..gp.p.pow(gp.r - level.s) {
            let e1 = seed(gp, family, level.s, l)?;
            let units = (1..=d)
                .map(|i| (1..=d).map(|j| matrix_unit_from_seed(gp, &e1, level.s, i, j)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            out.push(Block { label: format!("{level} l={l}"), units });
        }
    }
    Ok(out)
}

/// Matrix-unit relations `E_ij E_kl = delta_jk E_il` (across all blocks, so
/// distinct blocks are orthogonal), idempotency of `E_ii`, and
/// `sum E_ii = 1`. `relation_s` restricts the relation checks to levels with
/// that `s`; the resolution of identity always uses every level.
pub fn matrix_units(p: u64, r: u32, family: Family, relation_s: Option<u32>) -> Result<Report> {
    let gp = GroupParams::new(p, r)?;
    if family == Family::W && r < 2 {
        return Err(Error::InvalidLevel(format!("W needs r >= 2, got {r}")));
    }
    let mut rep = Report::new(Suite::MatrixUnits).param("p", p).param("r", r).param("family", family);
    if let Some(s) = relation_s {
        rep = rep.param("relation_s", s);
    }
    let all = blocks(&gp, family)?;
    let mut total = AlgebraElement::zero(gp);
    for b in &all {
        for (i, row) in b.units.iter().enumerate() {
            total = &total + &row[i];
        }
    }
    rep.check(total == AlgebraElement::identity(gp), || "diagonal units do not sum to 1".into());
    rep.add("blocks", all.len() as u64);
    rep.add("units", all.iter().map(|b| (b.units.len() * b.units.len()) as u64).sum());

    let selected: Vec<&Block> = all
        .iter()
        .filter(|b| match relation_s {
            None => true,
            Some(s) => b.label.starts_with(&format!("{family}^{r}_{s} ")),
        })
        .collect();
    let flat: Vec<(usize, usize, usize, &AlgebraElement)> = selected
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| {
            b.units.iter().enumerate().flat_map(move |(i, row)| row.iter().enumerate().map(move |(j, e)| (bi, i, j, e)))
        })
        .collect();
    let zero = AlgebraElement::zero(gp);
    let failures: Vec<String> = flat
        .par_iter()
        .flat_map_iter(|&(b1, i, j, x)| {
            let zero = &zero;
            let selected = &selected;
            flat.iter().filter_map(move |&(b2, k, l, y)| {
                let prod = x * y;
                let want = if b1 == b2 && j == k { &selected[b1].units[i][l] } else { zero };
                (prod != *want).then(|| {
                    format!("{}: E{}{} * {}: E{}{}", selected[b1].label, i + 1, j + 1, selected[b2].label, k + 1, l + 1)
                })
            })
        })
        .collect();
    rep.add("products", (flat.len() * flat.len()) as u64);
    rep.add("checks", (flat.len() * flat.len()) as u64);
    if let Some(f) = failures.into_iter().min() {
        rep.fail(format!("relation fails for {f}"));
    }
    let idempotent = selected.iter().flat_map(|b| (0..b.units.len()).map(move |i| (b, i))).count();
    rep.add("idempotents", idempotent as u64);
    Ok(rep)
}

/// `sum dim^2` over all irreducibles equals the group order, by counting.
pub fn dimensions(primes: &[u64], r_max: u32) -> Result<Report> {
    let mut rep = Report::new(Suite::Dimensions).param("r_max", r_max).param(
        "primes",
        primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
    );
    for &p in primes {
        for r in 1..=r_max {
            let gp = GroupParams::new(p, r)?;
            for (family, order) in [(Family::V, gp.group_order()), (Family::W, gp.subgroup_order())] {
                if family == Family::W && r < 2 {
                    continue;
                }
                let sum: u64 = Level::all(family, r).iter().map(|lv| lv.num_shapes(p) * lv.dimension(p).pow(2)).sum();
                rep.check(sum == order, || format!("p={p} r={r} {family}: {sum} != {order}"));
            }
        }
    }
    Ok(rep)
}

/// Every shape has `p^{s-1}(p-1)` standard p-Young tableaux.
pub fn paths(p: u64, r_max: u32) -> Result<Report> {
    let mut rep = Report::new(Suite::Paths).param("p", p).param("r_max", r_max);
    for r in 1..=r_max {
        for family in [Family::V, Family::W] {
            for level in Level::all(family, r) {
                for shape in level_shapes(p, level) {
                    let n = count_paths(p, level, shape)?;
                    rep.add("shapes", 1);
                    rep.check(n == level.dimension(p), || format!("{shape} in {level}: {n} tableaux"));
                }
            }
        }
    }
    Ok(rep)
}

/// p-Knuth classes (fixed shape and first tableau) and dual classes each have
/// `dim` members, and swapping exchanges the two relations.
pub fn knuth(p: u64, r: u32, subgroup: bool) -> Result<Report> {
    let h = correspondence(p, r, subgroup)?;
    let mut rep = Report::new(Suite::Knuth).param("p", p).param("r", r).param("subgroup", subgroup);
    let mut classes: BTreeMap<(Level, u64, u64), u64> = BTreeMap::new();
    let mut dual: BTreeMap<(Level, u64, u64), u64> = BTreeMap::new();
    for c in h.all_coords() {
        *classes.entry((c.level, c.shape.i, c.i)).or_insert(0) += 1;
        *dual.entry((c.level, c.shape.i, c.j)).or_insert(0) += 1;
    }
    for ((level, col, i), n) in classes.iter().chain(&dual) {
        rep.check(*n == level.dimension(p), || format!("class of ({level}, column {col}, tableau {i}) has {n}"));
    }
    rep.add("classes", classes.len() as u64);
    let elements = h.params.enumerate(subgroup);
    for w in elements.windows(2) {
        let (x, y) = (w[0], w[1]);
        if h.locate(x)?.level != h.locate(y)?.level {
            continue;
        }
        let k = h.knuth_equivalent(x, y)?;
        let dk = h.dual_knuth_equivalent(h.swap_element(x)?, h.swap_element(y)?)?;
        rep.check(k == dk, || format!("swap does not exchange the relations on {x}, {y}"));
    }
    Ok(rep)
}

/// `2^{k-1}` merged diagrams, matching the cut-point construction.
pub fn merging(p: u64, k_max: usize) -> Result<Report> {
    let mut rep = Report::new(Suite::Merging).param("p", p).param("k_max", k_max);
    for k in 2..=k_max {
        let m = enumerate_merged(p, k, 1)?;
        rep.check(m.len() == 1 << (k - 1), || format!("k={k}: {} diagrams", m.len()));
        let mut base = vec![p - 1, p - 2];
        base.extend(std::iter::repeat_n(p - 1, k - 2));
        let mut oracle: Vec<MergedDiagram> =
            contiguous_groupings(&base).into_iter().map(|block_sizes| MergedDiagram { block_sizes }).collect();
        oracle.sort();
        let distinct: BTreeSet<_> = m.iter().collect();
        rep.check(distinct.len() == m.len() && m == oracle, || format!("k={k}: diagrams differ from cut points"));
        rep.add("diagrams", m.len() as u64);
    }
    Ok(rep)
}

/// Kostka numbers are unchanged by scaling contents, and p-Schur functions
/// depend only on the level, not on the shape.
pub fn kostka_suite(p: u64, s_max: u32, vars: usize) -> Result<Report> {
    let mut rep = Report::new(Suite::Kostka).param("p", p).param("s_max", s_max).param("vars", vars);
    let pool: Vec<usize> = (0..vars).collect();
    for s in 1..=s_max {
        for (small, big) in [
            (Level::v(s, s)?, Level::v(s + 1, s)?),
            (Level::w(s + 1, s)?, Level::w(s + 2, s)?),
        ] {
            for c in enumerate_contents(p, small, &pool)? {
                let k0 = kostka(p, small, &c)?;
                let k1 = kostka(p, big, &c.scaled(p))?;
                rep.add("contents", 1);
                rep.check(k0 == k1 && k0 == 1, || format!("{small} {c:?}: {k0} vs {big}: {k1}"));
            }
        }
        for level in [Level::v(s, s)?, Level::v(s + 1, s)?, Level::w(s + 1, s)?, Level::w(s + 2, s)?] {
            let cap = level.size(p);
            let shapes = level_shapes(p, level);
            let first = p_schur(p, level, shapes[0], vars, cap)?;
            for &sh in &shapes[1..] {
                rep.add("shapes", 1);
                rep.check(p_schur(p, level, sh, vars, cap)? == first, || format!("{sh} in {level} differs"));
            }
        }
    }
    Ok(rep)
}

/// Truncated Cauchy identity under each multiplicity convention.
pub fn cauchy(p: u64, vars: usize, cap: u64) -> Result<Report> {
    let setup = CauchySetup { p, num_x: vars, num_y: vars, degree_cap: cap };
    let c = cauchy_check(setup)?;
    let mut rep = Report::new(Suite::Cauchy).param("p", p).param("vars", vars).param("cap", cap);
    rep.add("rhs_terms", c.rhs_terms as u64);
    rep.note("levels", c.levels.join(" "));
    for (conv, ok) in &c.balanced {
        rep.note(&format!("balances_{conv}"), ok);
    }
    match c.selected {
        Some(conv) => rep.note("convention", conv),
        None => rep.fail("no unique multiplicity convention balances"),
    }
    for (b, ok) in &c.bullets {
        rep.note(&format!("bullet_{b:?}"), ok);
        rep.check(*ok, || format!("bullet {b:?} does not balance"));
    }
    Ok(rep)
}

/// Index and correspondence round trips, and the swap involution.
pub fn roundtrip(p: u64, r: u32, subgroup: bool) -> Result<Report> {
    let h = correspondence(p, r, subgroup)?;
    let mut rep = Report::new(Suite::Roundtrip).param("p", p).param("r", r).param("subgroup", subgroup);
    for level in h.levels() {
        for shape in level_shapes(p, level) {
            for (pos, (t, idx)) in enumerate_syt(p, level, shape)?.into_iter().enumerate() {
                let back = index_to_tableau(p, level, shape, idx.value)?;
                rep.add("tableaux", 1);
                rep.check(back == t && idx.value == pos as u64 + 1, || format!("{shape} in {level}, index {}", idx.value));
            }
        }
    }
    let mut fixed = 0;
    for c in h.all_coords() {
        let x = h.element(&c)?;
        let back = h.locate(x)?;
        rep.check(back == c, || format!("{x}: {c:?} located as {back:?}"));
        let pair = h.pair_at(&c)?;
        rep.check(h.map(&pair)? == x, || format!("map of pair at {c:?} is not {x}"));
        let y = h.swap_element(x)?;
        rep.check(h.swap_element(y)? == x, || format!("swap is not an involution at {x}"));
        if y == x {
            fixed += 1;
        }
        rep.check((y == x) == (c.i == c.j), || format!("{x} fixed by swap = {}, diagonal = {}", y == x, c.i == c.j));
    }
    rep.add("pairs", h.all_coords().len() as u64);
    rep.add("swap_fixed", fixed);
    Ok(rep)
}

/// Round trips on the given elements only, for parameters too large to sweep.
pub fn roundtrip_sampled(p: u64, r: u32, subgroup: bool, elements: &[GroupElement]) -> Result<Report> {
    let h = correspondence(p, r, subgroup)?;
    let mut rep = Report::new(Suite::Roundtrip)
        .param("p", p)
        .param("r", r)
        .param("subgroup", subgroup)
        .param("samples", elements.len());
    for &x in elements {
        let pair = h.inverse(x)?;
        rep.check(h.map(&pair)? == x, || format!("{x} does not survive inverse then map"));
        let c = h.locate(x)?;
        rep.check(h.element(&c)? == x, || format!("{x}: {c:?}"));
        for t in [&pair.p, &pair.q] {
            let back = index_to_tableau(p, c.level, c.shape, t.index().value)?;
            rep.check(&back == t, || format!("tableau index of {x} does not round trip"));
        }
        let y = h.swap_element(x)?;
        rep.check(h.swap_element(y)? == x, || format!("swap is not an involution at {x}"));
    }
    Ok(rep)
}
