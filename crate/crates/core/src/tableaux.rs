//! Standard p-Young tableaux as Bratteli paths, block numbering and the
//! tableau-to-integer assignment.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{self, Block, Family, HookPartition, Level};
use crate::error::{Error, Result};

/// A standard p-Young tableau. The blocks are stored bottom-up; the
/// one-dimensional prefix carries entry 1 and every later block the next
/// integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PYoungTableau {
    p: u64,
    level: Level,
    shape: HookPartition,
    blocks: Vec<Block>,
}

/// The integer attached to a tableau together with the data it was read from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauIndex {
    pub value: u64,
    /// `i_1, i_2, ...`, read from the top of the path downward.
    pub digits: Vec<u64>,
    /// Base number for scale 1, otherwise `j'`. Zero for one-dimensional shapes.
    pub base: u64,
}

/// Number of a block of size `p^e (p - 1)`: `2m + 1` for the row-heavy
/// block `B_{p^e((p-1)/2 + m), p^e((p-1)/2 - m)}`, `2m` for its conjugate.
pub fn block_number(p: u64, b: Block, scale_exponent: u32) -> Result<u64> {
    let q = p.pow(scale_exponent);
    let bad = || Error::InadmissibleBlock { block: b, scale_exponent };
    if b.size() != q * (p - 1) || !b.m.is_multiple_of(q) {
        return Err(bad());
    }
    let u = b.m / q;
    let half = (p - 1) / 2;
    Ok(if u >= half { 2 * (u - half) + 1 } else { 2 * (half - u) })
}

/// Inverse of [`block_number`].
pub fn block_from_number(p: u64, number: u64, scale_exponent: u32) -> Result<Block> {
    if number == 0 || number > p {
        return Err(Error::IndexOutOfRange(format!("block number {number} for p = {p}")));
    }
    let q = p.pow(scale_exponent);
    let half = (p - 1) / 2;
    let u = if number % 2 == 1 { half + (number - 1) / 2 } else { half - number / 2 };
    Ok(Block { m: q * u, n: q * (p - 1 - u) })
}

/// Number of the last step `lambda(2p-3, p-2) -> lambda(p-1, t)` at scale 1.
pub fn base_number_case_a(p: u64, base: HookPartition) -> Result<u64> {
    if base.k != p - 1 || base.i > p - 2 {
        return Err(Error::MalformedTableau(format!("{base} is not a base shape for p = {p}")));
    }
    let t = base.i;
    Ok(if 2 * t < p - 1 { 2 * t + 1 } else { 2 * (p - 1 - t) })
}

fn base_column_case_a(p: u64, number: u64) -> Result<u64> {
    if number == 0 || number >= p {
        return Err(Error::IndexOutOfRange(format!("base number {number} for p = {p}")));
    }
    Ok(if number % 2 == 1 { (number - 1) / 2 } else { p - 1 - number / 2 })
}

/// `j' = floor((k' - q(p - 2 - t)) / q)` for the step
/// `lambda(q(2p-3), k') -> lambda(q(p-1), k' - q(p-2-t))`.
pub fn base_number_case_b(p: u64, kprime: u64, t: u64, q: u64) -> Result<u64> {
    let off = q * (p - 2 - t.min(p - 2));
    if t > p - 2 || kprime < off {
        return Err(Error::MalformedTableau(format!("no step from column {kprime} with t = {t}")));
    }
    Ok((kprime - off) / q)
}

/// The V level whose numbering a level uses (a W level reads its tableaux
/// through the V level one step below).
fn indexing_level(level: Level) -> Level {
    match level.family {
        Family::W if level.s >= 1 => Level { family: Family::V, r: level.r - 1, s: level.s },
        _ => level,
    }
}

impl PYoungTableau {
    /// Validates that `blocks` is a path ending at `shape` in `level`.
    pub fn new(p: u64, level: Level, shape: HookPartition, blocks: Vec<Block>) -> Result<Self> {
        level.check(p, shape)?;
        let mut cur_level = level;
        let mut cur = shape;
        for (n, &b) in blocks.iter().enumerate().rev() {
            if n == 0 {
                if diagrams::one_dimensional_step(p, cur) != b || cur.k != p - 1 {
                    return Err(Error::MalformedTableau(format!("path does not end at a base shape via {b}")));
                }
                return Ok(PYoungTableau { p, level, shape, blocks });
            }
            let step = diagrams::restriction_steps(p, cur_level, cur)?
                .into_iter()
                .find(|st| st.block == b)
                .ok_or(Error::InvalidRemoval { shape: cur, block: b })?;
            cur_level = step.level;
            cur = step.shape;
        }
        Err(Error::MalformedTableau("empty block sequence".into()))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn shape(&self) -> HookPartition {
        self.shape
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Entry carried by each block, aligned with [`Self::blocks`].
    pub fn entries(&self) -> Vec<u64> {
        let prefix = self.level.one_dimensional_prefix();
        (0..self.blocks.len()).map(|u| if u < prefix { 1 } else { (u - prefix + 2) as u64 }).collect()
    }

    /// First-row entries and first-column entries (below the corner).
    pub fn rows(&self) -> (Vec<u64>, Vec<u64>) {
        let mut row = Vec::new();
        let mut col = Vec::new();
        for (b, e) in self.blocks.iter().zip(self.entries()) {
            row.extend(std::iter::repeat_n(e, b.m as usize));
            col.extend(std::iter::repeat_n(e, b.n as usize));
        }
        (row, col)
    }

    /// Multi-line picture: the first row, then one line per column box.
    pub fn render(&self) -> String {
        let (row, col) = self.rows();
        let mut out = row.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        for e in col {
            out.push('\n');
            out.push_str(&e.to_string());
        }
        out
    }

    /// Blocks removed from the top down, with the level each is removed from.
    fn steps_top_down(&self) -> Vec<(Level, Block)> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut lv = Some(self.level);
        for &b in self.blocks.iter().rev() {
            let l = lv.expect("path longer than its level chain");
            out.push((l, b));
            lv = l.below();
        }
        out
    }

    pub fn index(&self) -> TableauIndex {
        let p = self.p;
        if self.level.s == 0 {
            return TableauIndex { value: 1, digits: Vec::new(), base: 0 };
        }
        let steps = self.steps_top_down();
        let top = indexing_level(self.level);
        let skip = usize::from(top != self.level);
        let s = top.s;
        let scale_exp = top.r - s;
        let q = p.pow(scale_exp);
        let mut digits = Vec::new();
        // V^{R-m}_{S-m} -> W -> V^{R-m-1}_{S-m-1}: two steps per digit
        for m in 0..(s - 1) as usize {
            let (_, b) = steps[skip + 2 * m];
            digits.push(block_number(p, b, scale_exp).expect("path blocks are admissible"));
        }
        let (_, last) = steps[skip + 2 * (s as usize - 1)];
        let t = last.m / q;
        if q == 1 {
            let base = base_number_case_a(p, HookPartition { k: p - 1, i: t }).expect("valid base");
            let mut value = 1;
            let mut w = 1;
            for &i in &digits {
                value += w * (i - 1);
                w *= p;
            }
            value += w * (base - 1);
            TableauIndex { value, digits, base }
        } else {
            let jp = t;
            let mut y = 0;
            if s >= 2 {
                y = p.pow(s - 2) * (digits[0] - 1);
                let mut w = 1;
                for &i in &digits[1..] {
                    y += w * (i - 1);
                    w *= p;
                }
            }
            TableauIndex { value: 1 + jp + (p - 1) * y, digits, base: jp }
        }
    }
}

impl fmt::Display for PYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The tableau of `shape` with the given index.
pub fn index_to_tableau(p: u64, level: Level, shape: HookPartition, j: u64) -> Result<PYoungTableau> {
    level.check(p, shape)?;
    let dim = level.dimension(p);
    if j == 0 || j > dim {
        return Err(Error::IndexOutOfRange(format!("tableau index {j} not in 1..={dim}")));
    }
    let top = indexing_level(level);
    let s = top.s;
    let scale_exp = top.r - s;
    let q = p.pow(scale_exp);
    // choices of removed block, top-down, for each non-forced step
    let mut wanted: Vec<Block> = Vec::new();
    if s >= 1 {
        let x = j - 1;
        let (digits, t) = if q == 1 {
            let mut x = x;
            let mut digits = Vec::new();
            for _ in 1..s {
                digits.push(x % p + 1);
                x /= p;
            }
            (digits, base_column_case_a(p, x + 1)?)
        } else {
            let jp = x % (p - 1);
            let y = x / (p - 1);
            let mut digits = Vec::new();
            if s >= 2 {
                let hi = p.pow(s - 2);
                digits.push(y / hi + 1);
                let mut rest = y % hi;
                for _ in 0..s - 2 {
                    digits.push(rest % p + 1);
                    rest /= p;
                }
            }
            (digits, jp)
        };
        for d in digits {
            wanted.push(block_from_number(p, d, scale_exp)?);
        }
        wanted.push(Block { m: q * t, n: q * (p - 2 - t) });
    }
    let mut wanted = wanted.into_iter();
    let mut top_down = Vec::new();
    let mut cur_level = level;
    let mut cur = shape;
    loop {
        let steps = diagrams::restriction_steps(p, cur_level, cur)?;
        if steps.is_empty() {
            top_down.push(diagrams::one_dimensional_step(p, cur));
            break;
        }
        let chosen = if steps.len() == 1 {
            steps[0]
        } else {
            let b = wanted.next().ok_or_else(|| Error::MalformedTableau("digit sequence too short".into()))?;
            *steps
                .iter()
                .find(|st| st.block == b)
                .ok_or(Error::InvalidRemoval { shape: cur, block: b })?
        };
        top_down.push(chosen.block);
        cur_level = chosen.level;
        cur = chosen.shape;
    }
    top_down.reverse();
    Ok(PYoungTableau { p, level, shape, blocks: top_down })
}

/// All tableaux of `shape`, sorted by index.
pub fn enumerate_syt(p: u64, level: Level, shape: HookPartition) -> Result<Vec<(PYoungTableau, TableauIndex)>> {
    let mut out: Vec<(PYoungTableau, TableauIndex)> = diagrams::enumerate_paths(p, level, shape)?
        .into_iter()
        .map(|blocks| {
            let t = PYoungTableau { p, level, shape, blocks };
            let idx = t.index();
            (t, idx)
        })
        .collect();
    out.sort_by_key(|(_, idx)| idx.value);
    Ok(out)
}

/// Serializable summary of a tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub shape: String,
    pub blocks: Vec<String>,
    pub index: u64,
}

impl From<&PYoungTableau> for TableauRecord {
    fn from(t: &PYoungTableau) -> Self {
        TableauRecord {
            shape: t.shape.to_string(),
            blocks: t.blocks.iter().map(Block::to_string).collect(),
            index: t.index().value,
        }
    }
}
