//! Hook partitions, blocks, the level sets `V^r_s` / `W^r_s` and the
//! restriction chain whose maximal chains are the Bratteli paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The hook `[k - i, 1^i]`: a first row of `k - i` boxes and `i` further
/// boxes in the first column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HookPartition {
    pub k: u64,
    pub i: u64,
}

impl HookPartition {
    pub fn new(k: u64, i: u64) -> Result<Self> {
        if k == 0 || i >= k {
            return Err(Error::Parse(format!("L({k},{i}) is not a hook partition")));
        }
        Ok(HookPartition { k, i })
    }

    pub fn row_len(&self) -> u64 {
        self.k - self.i
    }

    /// `lambda(k, i) + B_{m,n} = lambda(k + m + n, i + n)`.
    pub fn add_block(&self, b: Block) -> HookPartition {
        HookPartition { k: self.k + b.size(), i: self.i + b.n }
    }

    pub fn remove_block(&self, b: Block) -> Result<HookPartition> {
        if self.row_len() <= b.m || self.i < b.n {
            return Err(Error::InvalidRemoval { shape: *self, block: b });
        }
        Ok(HookPartition { k: self.k - b.size(), i: self.i - b.n })
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.k, self.i)
    }
}

fn parse_pair(s: &str, tag: char) -> Option<(u64, u64)> {
    let inner = s.trim().strip_prefix(tag)?.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

impl FromStr for HookPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (k, i) = parse_pair(s, 'L').ok_or_else(|| Error::Parse(format!("invalid shape '{s}'")))?;
        HookPartition::new(k, i)
    }
}

/// `B_{m,n}`: `m` boxes at the end of the first row, `n` at the end of the
/// first column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub m: u64,
    pub n: u64,
}

impl Block {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::Parse("empty block".into()));
        }
        Ok(Block { m, n })
    }

    pub fn size(&self) -> u64 {
        self.m + self.n
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.m, self.n)
    }
}

impl FromStr for Block {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = parse_pair(s, 'B').ok_or_else(|| Error::Parse(format!("invalid block '{s}'")))?;
        Block::new(m, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Irreducibles of `G_r`.
    V,
    /// Irreducibles of `SG_r`.
    W,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::V => "V",
            Family::W => "W",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "V" | "v" => Ok(Family::V),
            "W" | "w" => Ok(Family::W),
            _ => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

/// One of the sets `V^r_s` (`0 <= s <= r`) or `W^r_s` (`0 <= s <= r - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Level {
    pub family: Family,
    pub r: u32,
    pub s: u32,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}", self.family, self.r, self.s)
    }
}

impl Level {
    pub fn new(family: Family, r: u32, s: u32) -> Result<Self> {
        let ok = r >= 1
            && match family {
                Family::V => s <= r,
                Family::W => s < r,
            };
        if !ok {
            return Err(Error::InvalidLevel(format!("{family}^{r}_{s}")));
        }
        Ok(Level { family, r, s })
    }

    pub fn v(r: u32, s: u32) -> Result<Self> {
        Self::new(Family::V, r, s)
    }

    pub fn w(r: u32, s: u32) -> Result<Self> {
        Self::new(Family::W, r, s)
    }

    pub fn is_one_dimensional(&self) -> bool {
        self.s == 0
    }

    /// All irreducible levels of `G_r` (family V) or `SG_r` (family W).
    pub fn all(family: Family, r: u32) -> Vec<Level> {
        let top = match family {
            Family::V => r,
            Family::W => r.saturating_sub(1),
        };
        (0..=top).map(|s| Level { family, r, s }).collect()
    }

    /// Block scale: `p^{r-s}` for V and `p^{r-s-1}` for W (`s >= 1`);
    /// `p^{r-1}` for the one-dimensional levels.
    pub fn scale(&self, p: u64) -> u64 {
        let e = match (self.family, self.s) {
            (_, 0) => self.r - 1,
            (Family::V, s) => self.r - s,
            (Family::W, s) => self.r - s - 1,
        };
        p.pow(e)
    }

    /// Number of boxes of every shape in the level.
    pub fn size(&self, p: u64) -> u64 {
        let q = self.scale(p);
        let s = self.s as u64;
        match (self.family, self.s) {
            (_, 0) => q * (p - 1),
            (Family::V, _) => q * (2 * s * p - 2 * s - 1),
            (Family::W, _) => q * ((2 * s + 1) * p - 2 * s - 2),
        }
    }

    /// Half-open range of admissible column lengths `i`.
    pub fn column_range(&self, p: u64) -> std::ops::Range<u64> {
        let q = self.scale(p);
        let s = self.s as u64;
        match (self.family, self.s) {
            (_, 0) => 0..q * (p - 1),
            (Family::V, _) => q * (s * p - s - 1)..s * q * (p - 1),
            (Family::W, _) => q * (s * p - s - 1)..(s + 1) * q * (p - 1),
        }
    }

    pub fn num_shapes(&self, p: u64) -> u64 {
        let r = self.column_range(p);
        r.end - r.start
    }

    /// Degree `p^{s-1}(p-1)` of each irreducible in the level (1 when `s = 0`).
    pub fn dimension(&self, p: u64) -> u64 {
        if self.s == 0 {
            1
        } else {
            p.pow(self.s - 1) * (p - 1)
        }
    }

    pub fn contains(&self, p: u64, shape: HookPartition) -> bool {
        shape.k == self.size(p) && self.column_range(p).contains(&shape.i)
    }

    pub fn check(&self, p: u64, shape: HookPartition) -> Result<()> {
        if self.contains(p, shape) {
            Ok(())
        } else {
            Err(Error::ShapeNotInLevel { shape, level: *self })
        }
    }

    /// Number of one-dimensional blocks at the bottom of every path.
    pub fn one_dimensional_prefix(&self) -> usize {
        match (self.family, self.s) {
            (_, 0) => self.r as usize,
            (Family::V, s) => (self.r - s + 1) as usize,
            (Family::W, s) => (self.r - s) as usize,
        }
    }

    /// Level reached by one restriction step, `None` at the base.
    pub fn below(&self) -> Option<Level> {
        match (self.family, self.s) {
            (_, 0) if self.r == 1 => None,
            (f, 0) => Some(Level { family: f, r: self.r - 1, s: 0 }),
            (Family::V, 1) => Some(Level { family: Family::V, r: self.r, s: 0 }),
            (Family::V, s) => Some(Level { family: Family::W, r: self.r, s: s - 1 }),
            (Family::W, s) => Some(Level { family: Family::V, r: self.r - 1, s }),
        }
    }
}

/// All shapes of a level in increasing column length.
pub fn level_shapes(p: u64, level: Level) -> Vec<HookPartition> {
    let k = level.size(p);
    level.column_range(p).map(|i| HookPartition { k, i }).collect()
}

/// The block removed below a one-dimensional shape `lambda(p^u(p-1), c)`.
/// For the base shape `lambda(p - 1, c)` this is the whole shape.
pub fn one_dimensional_step(p: u64, shape: HookPartition) -> Block {
    if shape.k == p - 1 {
        return Block { m: p - 1 - shape.i, n: shape.i };
    }
    let d = shape.k / p;
    let a = shape.i / d;
    Block { m: (p - 1 - a) * d, n: a * d }
}

/// One legal restriction step: the removed block and the shape it leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub block: Block,
    pub level: Level,
    pub shape: HookPartition,
}

/// All one-step restrictions of `shape`. Empty for a base shape `lambda(p-1, c)`.
pub fn restriction_steps(p: u64, level: Level, shape: HookPartition) -> Result<Vec<Step>> {
    level.check(p, shape)?;
    let below = match level.below() {
        Some(l) => l,
        None => return Ok(Vec::new()),
    };
    let candidates: Vec<Block> = match (level.family, level.s) {
        (_, 0) => vec![one_dimensional_step(p, shape)],
        (Family::V, 1) => {
            let q = level.scale(p);
            (0..=p - 2).map(|t| Block { m: q * t, n: q * (p - 2 - t) }).collect()
        }
        _ => {
            let q = level.scale(p);
            (0..p).map(|t| Block { m: q * (p - 1 - t), n: q * t }).collect()
        }
    };
    Ok(candidates
        .into_iter()
        .filter_map(|block| {
            let rest = shape.remove_block(block).ok()?;
            below.contains(p, rest).then_some(Step { block, level: below, shape: rest })
        })
        .collect())
}

/// Every maximal restriction chain from `shape` down to a base `lambda(p-1, c)`,
/// each written as its block sequence from the bottom up.
pub fn enumerate_paths(p: u64, level: Level, shape: HookPartition) -> Result<Vec<Vec<Block>>> {
    let steps = restriction_steps(p, level, shape)?;
    if steps.is_empty() {
        return Ok(vec![vec![one_dimensional_step(p, shape)]]);
    }
    let mut out = Vec::new();
    for st in steps {
        for mut path in enumerate_paths(p, st.level, st.shape)? {
            path.push(st.block);
            out.push(path);
        }
    }
    Ok(out)
}

/// Number of paths without materialising them.
pub fn count_paths(p: u64, level: Level, shape: HookPartition) -> Result<u64> {
    let steps = restriction_steps(p, level, shape)?;
    if steps.is_empty() {
        return Ok(1);
    }
    steps.iter().map(|st| count_paths(p, st.level, st.shape)).sum()
}

/// Shape obtained by stacking `blocks` bottom-up on the empty diagram.
pub fn shape_of(blocks: &[Block]) -> Option<HookPartition> {
    let first = blocks.first()?;
    if first.m == 0 {
        return None;
    }
    let start = HookPartition { k: first.size(), i: first.n };
    Some(blocks[1..].iter().fold(start, |acc, &b| acc.add_block(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(k: u64, i: u64) -> HookPartition {
        HookPartition::new(k, i).unwrap()
    }

    #[test]
    fn adding_blocks() {
        let base = l(3, 1);
        assert_eq!(base.add_block(Block { m: 2, n: 0 }), l(5, 1));
        assert_eq!(base.add_block(Block { m: 1, n: 1 }), l(5, 2));
        assert_eq!(base.add_block(Block { m: 0, n: 2 }), l(5, 3));
        assert_eq!(l(5, 1).remove_block(Block { m: 2, n: 0 }).unwrap(), base);
        assert_eq!(l(3, 1).remove_block(Block { m: 1, n: 0 }).unwrap(), l(2, 1));
        assert!(l(2, 1).remove_block(Block { m: 2, n: 0 }).is_err());
        assert!(l(2, 1).remove_block(Block { m: 0, n: 2 }).is_err());
        assert!(Block::new(0, 0).is_err());
        assert!(HookPartition::new(3, 3).is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!(l(11, 5).to_string(), "L(11,5)");
        assert_eq!("L(11,5)".parse::<HookPartition>().unwrap(), l(11, 5));
        assert_eq!(Block { m: 2, n: 0 }.to_string(), "B(2,0)");
        assert_eq!("B(0, 2)".parse::<Block>().unwrap(), Block { m: 0, n: 2 });
        assert!("L(3)".parse::<HookPartition>().is_err());
        assert_eq!(Level::w(3, 1).unwrap().to_string(), "W^3_1");
        assert!(Level::w(3, 3).is_err());
        assert!(Level::v(0, 0).is_err());
    }

    #[test]
    fn level_examples() {
        let v20 = level_shapes(3, Level::v(2, 0).unwrap());
        assert_eq!(v20, (0..6).map(|i| l(6, i)).collect::<Vec<_>>());
        let w31 = level_shapes(3, Level::w(3, 1).unwrap());
        assert_eq!(w31, (3..=11).map(|i| l(15, i)).collect::<Vec<_>>());
        assert_eq!(level_shapes(3, Level::v(3, 3).unwrap()), vec![l(11, 5)]);
        assert_eq!(level_shapes(3, Level::v(1, 1).unwrap()), vec![l(3, 1)]);
        assert_eq!(level_shapes(3, Level::w(2, 1).unwrap()), vec![l(5, 1), l(5, 2), l(5, 3)]);
    }

    #[test]
    fn level_cardinalities() {
        for p in [3u64, 5] {
            for r in 1..=4 {
                for level in Level::all(Family::V, r).into_iter().chain(Level::all(Family::W, r)) {
                    let want = if level.s == 0 { p.pow(r - 1) * (p - 1) } else { p.pow(r - level.s) };
                    assert_eq!(level_shapes(p, level).len() as u64, want, "{level} p={p}");
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let top = Level::v(3, 3).unwrap();
        let steps = restriction_steps(3, top, l(11, 5)).unwrap();
        let blocks: Vec<Block> = steps.iter().map(|s| s.block).collect();
        assert_eq!(blocks, vec![Block { m: 2, n: 0 }, Block { m: 1, n: 1 }, Block { m: 0, n: 2 }]);
        assert!(steps.iter().all(|s| s.level == Level::w(3, 2).unwrap()));

        let v11 = restriction_steps(3, Level::v(1, 1).unwrap(), l(3, 1)).unwrap();
        assert_eq!(v11.len(), 2);
        assert!(v11.iter().all(|s| s.block.size() == 1 && s.shape.k == 2));

        let tail = restriction_steps(3, Level::v(2, 0).unwrap(), l(6, 2)).unwrap();
        assert_eq!(tail.len(), 1);
        assert_eq!(tail[0].block, Block { m: 2, n: 2 });
        assert_eq!(tail[0].shape, l(2, 0));

        assert!(restriction_steps(3, Level::v(1, 0).unwrap(), l(2, 1)).unwrap().is_empty());
        assert!(restriction_steps(3, top, l(11, 4)).is_err());
    }

    #[test]
    fn path_examples() {
        assert_eq!(enumerate_paths(3, Level::v(3, 3).unwrap(), l(11, 5)).unwrap().len(), 18);
        assert_eq!(enumerate_paths(3, Level::w(3, 1).unwrap(), l(15, 7)).unwrap().len(), 2);
        for c in 0..18 {
            let paths = enumerate_paths(3, Level::v(3, 0).unwrap(), l(18, c)).unwrap();
            assert_eq!(paths.len(), 1);
            assert_eq!(paths[0].len(), 3);
            assert_eq!(shape_of(&paths[0]), Some(l(18, c)));
        }
    }

    #[test]
    fn path_counts_equal_dimensions() {
        for (p, rmax) in [(3u64, 3u32), (5, 2)] {
            for r in 1..=rmax {
                for level in Level::all(Family::V, r).into_iter().chain(Level::all(Family::W, r)) {
                    for shape in level_shapes(p, level) {
                        let paths = enumerate_paths(p, level, shape).unwrap();
                        assert_eq!(paths.len() as u64, level.dimension(p), "{shape} in {level}");
                        for path in &paths {
                            assert_eq!(shape_of(path), Some(shape));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sum_of_squares() {
        for p in [3u64, 5] {
            for r in 1..=3 {
                let g: u64 = Level::all(Family::V, r)
                    .iter()
                    .flat_map(|&lv| level_shapes(p, lv).into_iter().map(move |s| (lv, s)))
                    .map(|(lv, s)| count_paths(p, lv, s).unwrap().pow(2))
                    .sum();
                assert_eq!(g, p.pow(2 * r - 1) * (p - 1));
                if r >= 2 {
                    let sg: u64 = Level::all(Family::W, r)
                        .iter()
                        .flat_map(|&lv| level_shapes(p, lv).into_iter().map(move |s| (lv, s)))
                        .map(|(lv, s)| count_paths(p, lv, s).unwrap().pow(2))
                        .sum();
                    assert_eq!(sg, p.pow(2 * r - 2) * (p - 1));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn add_remove_inverse(k in 1u64..50, i in 0u64..50, m in 0u64..20, n in 0u64..20) {
            prop_assume!(i < k && m + n > 0);
            let shape = HookPartition { k, i };
            let b = Block { m, n };
            prop_assert_eq!(shape.add_block(b).remove_block(b).unwrap(), shape);
            if let Ok(smaller) = shape.remove_block(b) {
                prop_assert_eq!(smaller.add_block(b), shape);
            }
        }
    }
}
