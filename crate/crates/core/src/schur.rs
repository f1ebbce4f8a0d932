//! Block merging, semi-standard p-Young tableaux, p-contents, p-Kostka
//! numbers, p-Schur functions and the truncated lacunary Cauchy identity.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Rational;
use crate::diagrams::{level_shapes, Family, HookPartition, Level};
use crate::error::{Error, Result};
use crate::tableaux::index_to_tableau;

/// Exact polynomial in `x_1..x_n, y_1..y_m` keeping only monomials of total
/// degree at most `degree_cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    num_x_vars: usize,
    num_y_vars: usize,
    degree_cap: u64,
    terms: BTreeMap<Vec<u64>, Rational>,
}

impl fmt::Debug for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .ordered_terms()
            .into_iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| {
                        let name = if v < self.num_x_vars {
                            format!("x{}", v + 1)
                        } else {
                            format!("y{}", v - self.num_x_vars + 1)
                        };
                        if k == 1 {
                            name
                        } else {
                            format!("{name}^{k}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// One monomial in the JSON encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u64>,
    pub coeff: String,
}

impl TruncatedPolynomial {
    pub fn zero(num_x_vars: usize, num_y_vars: usize, degree_cap: u64) -> Self {
        TruncatedPolynomial { num_x_vars, num_y_vars, degree_cap, terms: BTreeMap::new() }
    }

    pub fn num_x_vars(&self) -> usize {
        self.num_x_vars
    }

    pub fn num_y_vars(&self) -> usize {
        self.num_y_vars
    }

    pub fn degree_cap(&self) -> u64 {
        self.degree_cap
    }

    pub fn num_vars(&self) -> usize {
        self.num_x_vars + self.num_y_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u64]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * x^e`, dropping it if its degree exceeds the cap.
    pub fn add_term(&mut self, exponents: Vec<u64>, c: Rational) {
        assert_eq!(exponents.len(), self.num_vars(), "exponent vector length");
        if c.is_zero() || exponents.iter().sum::<u64>() > self.degree_cap {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.num_x_vars, self.num_y_vars, self.degree_cap) != (other.num_x_vars, other.num_y_vars, other.degree_cap) {
            return Err(Error::ParamsMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.num_x_vars, self.num_y_vars, self.degree_cap);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(self.num_x_vars, self.num_y_vars, self.degree_cap);
        if !q.is_zero() {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect();
        }
        out
    }

    /// `f(x) g(y)` for polynomials `f`, `g` in x-variables only.
    pub fn outer(x_part: &Self, y_part: &Self) -> Result<Self> {
        if x_part.num_y_vars != 0 || y_part.num_y_vars != 0 || x_part.degree_cap != y_part.degree_cap {
            return Err(Error::ParamsMismatch);
        }
        let mut out = Self::zero(x_part.num_x_vars, y_part.num_x_vars, x_part.degree_cap);
        for (e1, c1) in &x_part.terms {
            for (e2, c2) in &y_part.terms {
                let mut e = e1.clone();
                e.extend_from_slice(e2);
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Replaces every exponent `e` by `e * k`.
    pub fn scale_exponents(&self, k: u64) -> Self {
        let mut out = Self::zero(self.num_x_vars, self.num_y_vars, self.degree_cap);
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|v| v * k).collect(), c.clone());
        }
        out
    }

    /// Terms ordered by total degree, then lexicographically descending exponents.
    pub fn ordered_terms(&self) -> Vec<(&Vec<u64>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db) = (a.iter().sum::<u64>(), b.iter().sum::<u64>());
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.ordered_terms()
            .into_iter()
            .map(|(e, c)| TermRecord { exponents: e.clone(), coeff: format!("{}/{}", c.numer(), c.denom()) })
            .collect()
    }
}

impl std::ops::Add for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;
    fn add(self, rhs: Self) -> TruncatedPolynomial {
        self.checked_add(rhs).expect("polynomial shapes differ")
    }
}

impl std::ops::Sub for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;
    fn sub(self, rhs: Self) -> TruncatedPolynomial {
        self.checked_sub(rhs).expect("polynomial shapes differ")
    }
}

impl std::ops::Mul for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;
    fn mul(self, rhs: Self) -> TruncatedPolynomial {
        self.checked_mul(rhs).expect("polynomial shapes differ")
    }
}

/// A p-Young diagram with some consecutive blocks merged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MergedDiagram {
    pub block_sizes: Vec<u64>,
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The `2^{k-1}` merged diagrams of the block sequence
/// `(p-1, p-2, p-1, ..., p-1)` (k blocks), every size multiplied by `scale`.
/// Either the first two blocks are merged with `k-2-l` further blocks, or
/// the first block stays alone and the second is merged with `k-2-l`
/// further blocks; the last `l` blocks are grouped by a composition of `l`.
pub fn enumerate_merged(p: u64, k: usize, scale: u64) -> Result<Vec<MergedDiagram>> {
    if k < 2 {
        return Err(Error::IndexOutOfRange(format!("merging needs at least two blocks, got {k}")));
    }
    let k = k as u64;
    let mut out = Vec::new();
    for l in 0..=k - 2 {
        for comp in compositions(l) {
            let tail = comp.iter().map(|a| a * (p - 1) * scale);
            let mut first = vec![((k - l) * (p - 1) - 1) * scale];
            first.extend(tail.clone());
            out.push(MergedDiagram { block_sizes: first });
            let mut second = vec![(p - 1) * scale, ((k - 1 - l) * (p - 1) - 1) * scale];
            second.extend(tail);
            out.push(MergedDiagram { block_sizes: second });
        }
    }
    out.sort();
    Ok(out)
}

/// A p-content: strictly increasing variable indices with their exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PContent {
    pub variable_indices: Vec<usize>,
    pub exponents: Vec<u64>,
}

impl PContent {
    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn scaled(&self, k: u64) -> PContent {
        PContent { variable_indices: self.variable_indices.clone(), exponents: self.exponents.iter().map(|e| e * k).collect() }
    }

    /// Dense exponent vector over `num_vars` variables (indices are 0-based).
    pub fn dense(&self, num_vars: usize) -> Vec<u64> {
        let mut e = vec![0; num_vars];
        for (&v, &k) in self.variable_indices.iter().zip(&self.exponents) {
            e[v] += k;
        }
        e
    }
}

/// Strictly increasing selections of `k` items from `pool`.
pub fn increasing_subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for idx in start..pool.len() {
            if pool.len() - idx < k - cur.len() {
                break;
            }
            cur.push(pool[idx]);
            go(pool, k, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut sorted = pool.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    go(&sorted, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of unmerged blocks and their scale for a level with `s >= 1`.
fn block_count(level: Level) -> usize {
    match level.family {
        Family::V => 2 * level.s as usize,
        Family::W => 2 * level.s as usize + 1,
    }
}

/// All p-contents of a level over the given variables.
pub fn enumerate_contents(p: u64, level: Level, available_vars: &[usize]) -> Result<Vec<PContent>> {
    if available_vars.is_empty() {
        return Err(Error::InadmissibleContent("no variables".into()));
    }
    let scale = level.scale(p);
    let diagrams = if level.s == 0 {
        vec![MergedDiagram { block_sizes: vec![level.size(p)] }]
    } else {
        enumerate_merged(p, block_count(level), scale)?
    };
    let mut out = Vec::new();
    for d in diagrams {
        for vars in increasing_subsets(available_vars, d.block_sizes.len()) {
            out.push(PContent { variable_indices: vars, exponents: d.block_sizes.clone() });
        }
    }
    out.sort();
    Ok(out)
}

/// Block sizes of the tableaux of `shape`, bottom-up, with the
/// one-dimensional prefix counted as a single block.
pub fn shape_block_sizes(p: u64, level: Level, shape: HookPartition) -> Result<Vec<u64>> {
    let t = index_to_tableau(p, level, shape, 1)?;
    let prefix = level.one_dimensional_prefix();
    let blocks = t.blocks();
    let mut sizes = vec![blocks[..prefix].iter().map(|b| b.size()).sum()];
    sizes.extend(blocks[prefix..].iter().map(|b| b.size()));
    Ok(sizes)
}

fn level_block_sizes(p: u64, level: Level) -> Result<Vec<u64>> {
    let shape = level_shapes(p, level)[0];
    shape_block_sizes(p, level, shape)
}

/// Number of semi-standard fillings of the level's diagram with the given
/// content: weakly increasing variable assignments to the unmerged blocks
/// (equal neighbours form a merged block) whose weight is the content.
pub fn kostka(p: u64, level: Level, content: &PContent) -> Result<u64> {
    let sizes = level_block_sizes(p, level)?;
    let vars = &content.variable_indices;
    if vars.len() != content.exponents.len()
        || vars.windows(2).any(|w| w[0] >= w[1])
        || content.exponents.contains(&0)
        || content.degree() != level.size(p)
    {
        return Err(Error::InadmissibleContent(format!("{content:?} for {level}")));
    }
    let want: BTreeMap<usize, u64> = vars.iter().copied().zip(content.exponents.iter().copied()).collect();
    let mut count = 0;
    let mut fill = vec![0usize; sizes.len()];
    fn go(
        pos: usize,
        min_var: usize,
        sizes: &[u64],
        vars: &[usize],
        fill: &mut Vec<usize>,
        want: &BTreeMap<usize, u64>,
        count: &mut u64,
    ) {
        if pos == sizes.len() {
            let mut got = BTreeMap::new();
            for (&v, &sz) in fill.iter().zip(sizes) {
                *got.entry(vars[v]).or_insert(0) += sz;
            }
            if &got == want {
                *count += 1;
            }
            return;
        }
        for v in min_var..vars.len() {
            fill[pos] = v;
            go(pos + 1, v, sizes, vars, fill, want, count);
        }
    }
    go(0, 0, &sizes, vars, &mut fill, &want, &mut count);
    Ok(count)
}

/// Sizes of the groups of every contiguous grouping of `sizes`.
pub(crate) fn contiguous_groupings(sizes: &[u64]) -> Vec<Vec<u64>> {
    let k = sizes.len();
    let mut out = Vec::with_capacity(1 << (k - 1));
    for cuts in 0u64..(1 << (k - 1)) {
        let mut groups = vec![sizes[0]];
        for (idx, &s) in sizes.iter().enumerate().skip(1) {
            if cuts >> (idx - 1) & 1 == 1 {
                groups.push(s);
            } else {
                *groups.last_mut().unwrap() += s;
            }
        }
        out.push(groups);
    }
    out
}

/// The p-Schur function of `shape` in `num_vars` variables, truncated.
pub fn p_schur(p: u64, level: Level, shape: HookPartition, num_vars: usize, degree_cap: u64) -> Result<TruncatedPolynomial> {
    level.check(p, shape)?;
    let mut out = TruncatedPolynomial::zero(num_vars, 0, degree_cap);
    if level.size(p) > degree_cap {
        return Ok(out);
    }
    let sizes = shape_block_sizes(p, level, shape)?;
    let groupings = if level.s == 0 { vec![vec![level.size(p)]] } else { contiguous_groupings(&sizes) };
    let pool: Vec<usize> = (0..num_vars).collect();
    for groups in groupings {
        for vars in increasing_subsets(&pool, groups.len()) {
            let content = PContent { variable_indices: vars, exponents: groups.clone() };
            out.add_term(content.dense(num_vars), Rational::one());
        }
    }
    Ok(out)
}

/// `weight * sum_{n >= 0} p^{2n} m^{p^n}` for the monomial `m = x^e`,
/// truncated at the cap of the result.
pub fn lacunary_g(
    p: u64,
    exponents: &[u64],
    weight: &Rational,
    num_x_vars: usize,
    num_y_vars: usize,
    degree_cap: u64,
) -> TruncatedPolynomial {
    let mut out = TruncatedPolynomial::zero(num_x_vars, num_y_vars, degree_cap);
    let deg: u64 = exponents.iter().sum();
    if deg == 0 {
        return out;
    }
    let mut pn = 1u64;
    let mut coeff = weight.clone();
    let p2 = Rational::from_integer(BigInt::from(p * p));
    while deg.saturating_mul(pn) <= degree_cap {
        out.add_term(exponents.iter().map(|e| e * pn).collect(), coeff.clone());
        pn *= p;
        coeff *= &p2;
    }
    out
}

/// How each level is weighted in the left-hand side sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Multiplicity {
    /// One term per shape: weight `#shapes`.
    PerShape,
    /// One term per ordered pair of shapes in the level: weight `#shapes^2`.
    SameSizePairs,
    /// One term per level.
    Unit,
}

impl Multiplicity {
    pub const ALL: [Multiplicity; 3] = [Multiplicity::PerShape, Multiplicity::SameSizePairs, Multiplicity::Unit];

    pub fn weight(&self, num_shapes: u64) -> u64 {
        match self {
            Multiplicity::PerShape => num_shapes,
            Multiplicity::SameSizePairs => num_shapes * num_shapes,
            Multiplicity::Unit => 1,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Multiplicity::PerShape => "per-shape",
            Multiplicity::SameSizePairs => "same-size-pairs",
            Multiplicity::Unit => "unit",
        })
    }
}

/// Which sum of the right-hand side a level feeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Bullet {
    OneDimensional,
    V,
    W,
}

/// Truncation settings for the Cauchy identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchySetup {
    pub p: u64,
    pub num_x: usize,
    pub num_y: usize,
    pub degree_cap: u64,
}

impl CauchySetup {
    /// Levels whose products `S(x) S(y)` have degree within the cap. The
    /// one-dimensional shapes of `G_r` and `SG_r` coincide and are listed once.
    pub fn levels(&self) -> Vec<(Bullet, Level)> {
        let p = self.p;
        let mut out = Vec::new();
        // Smallest sizes at each r grow with r, so stop at the first r with no fit.
        for r in 1.. {
            let mut cand = vec![(Bullet::OneDimensional, Level { family: Family::V, r, s: 0 })];
            cand.extend((1..=r).map(|s| (Bullet::V, Level { family: Family::V, r, s })));
            cand.extend((1..r).map(|s| (Bullet::W, Level { family: Family::W, r, s })));
            let fit: Vec<_> = cand.into_iter().filter(|(_, lv)| 2 * lv.size(p) <= self.degree_cap).collect();
            if fit.is_empty() {
                break;
            }
            out.extend(fit);
        }
        out
    }

    fn zero(&self) -> TruncatedPolynomial {
        TruncatedPolynomial::zero(self.num_x, self.num_y, self.degree_cap)
    }

    /// Left-hand side restricted to one bullet's levels.
    pub fn lhs_part(&self, bullet: Bullet, conv: Multiplicity) -> Result<TruncatedPolynomial> {
        let mut out = self.zero();
        for (b, level) in self.levels() {
            if b != bullet {
                continue;
            }
            let shape = level_shapes(self.p, level)[0];
            let sx = p_schur(self.p, level, shape, self.num_x, self.degree_cap)?;
            let sy = p_schur(self.p, level, shape, self.num_y, self.degree_cap)?;
            let w = Rational::from_integer(BigInt::from(conv.weight(level.num_shapes(self.p))));
            out = &out + &TruncatedPolynomial::outer(&sx, &sy)?.scale(&w);
        }
        Ok(out)
    }

    pub fn lhs(&self, conv: Multiplicity) -> Result<TruncatedPolynomial> {
        let mut out = self.zero();
        for b in [Bullet::OneDimensional, Bullet::V, Bullet::W] {
            out = &out + &self.lhs_part(b, conv)?;
        }
        Ok(out)
    }

    /// One sum of the right-hand side.
    pub fn rhs_part(&self, bullet: Bullet) -> Result<TruncatedPolynomial> {
        let p = self.p;
        let (nx, ny, cap) = (self.num_x, self.num_y, self.degree_cap);
        let mut out = self.zero();
        match bullet {
            Bullet::OneDimensional => {
                let w = Rational::from_integer(BigInt::from((p - 1) * (p - 1)));
                for i in 0..nx {
                    for j in 0..ny {
                        let mut e = vec![0; nx + ny];
                        e[i] = p - 1;
                        e[nx + j] = p - 1;
                        out = &out + &lacunary_g(p, &e, &w, nx, ny, cap);
                    }
                }
            }
            Bullet::V | Bullet::W => {
                let xs: Vec<usize> = (0..nx).collect();
                let ys: Vec<usize> = (0..ny).collect();
                let prefactor = if bullet == Bullet::V { 1 } else { p * p };
                let mut s = 1;
                loop {
                    let level = match bullet {
                        Bullet::V => Level { family: Family::V, r: s, s },
                        _ => Level { family: Family::W, r: s + 1, s },
                    };
                    if 2 * level.size(p) > cap {
                        break;
                    }
                    let cx = enumerate_contents(p, level, &xs)?;
                    let cy = enumerate_contents(p, level, &ys)?;
                    for a in &cx {
                        let ka = kostka(p, level, a)?;
                        for b in &cy {
                            let kb = kostka(p, level, b)?;
                            let mut e = a.dense(nx);
                            e.extend(b.dense(ny));
                            let w = Rational::from_integer(BigInt::from(prefactor * ka * kb));
                            out = &out + &lacunary_g(p, &e, &w, nx, ny, cap);
                        }
                    }
                    s += 1;
                }
            }
        }
        Ok(out)
    }

    pub fn rhs(&self) -> Result<TruncatedPolynomial> {
        let mut out = self.zero();
        for b in [Bullet::OneDimensional, Bullet::V, Bullet::W] {
            out = &out + &self.rhs_part(b)?;
        }
        Ok(out)
    }
}

/// Outcome of comparing both sides under every multiplicity convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyReport {
    pub setup: CauchySetup,
    pub levels: Vec<String>,
    pub rhs_terms: usize,
    /// Whether the full identity balances, per convention.
    pub balanced: Vec<(Multiplicity, bool)>,
    /// The unique convention that balances, if any.
    pub selected: Option<Multiplicity>,
    /// Per-bullet agreement under the selected convention.
    pub bullets: Vec<(Bullet, bool)>,
}

impl CauchyReport {
    pub fn holds(&self) -> bool {
        self.selected.is_some() && self.bullets.iter().all(|(_, ok)| *ok)
    }
}

pub fn cauchy_check(setup: CauchySetup) -> Result<CauchyReport> {
    let rhs = setup.rhs()?;
    let mut balanced = Vec::new();
    for conv in Multiplicity::ALL {
        balanced.push((conv, setup.lhs(conv)? == rhs));
    }
    let winners: Vec<Multiplicity> = balanced.iter().filter(|(_, ok)| *ok).map(|(c, _)| *c).collect();
    let selected = (winners.len() == 1).then(|| winners[0]);
    let mut bullets = Vec::new();
    if let Some(conv) = selected {
        for b in [Bullet::OneDimensional, Bullet::V, Bullet::W] {
            bullets.push((b, setup.lhs_part(b, conv)? == setup.rhs_part(b)?));
        }
    }
    Ok(CauchyReport {
        setup,
        levels: setup.levels().iter().map(|(_, l)| l.to_string()).collect(),
        rhs_terms: rhs.terms().len(),
        balanced,
        selected,
        bullets,
    })
}
