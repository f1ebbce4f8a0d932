//! The Robinson-Schensted maps `h` (onto `G_r`) and `h'` (onto `SG_r`),
//! their inverses, the pair swap and the p-Knuth relations.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::diagrams::{level_shapes, Family, HookPartition, Level};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupParams};
use crate::idempotents::{index_to_partition, partition_to_index};
use crate::tableaux::{index_to_tableau, PYoungTableau};

/// Two tableaux of one shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: PYoungTableau,
    pub q: PYoungTableau,
}

impl TableauPair {
    pub fn new(p: PYoungTableau, q: PYoungTableau) -> Result<Self> {
        if p.shape() != q.shape() || p.level() != q.level() || p.p() != q.p() {
            return Err(Error::ShapeMismatch);
        }
        Ok(TableauPair { p, q })
    }

    pub fn level(&self) -> Level {
        self.p.level()
    }

    pub fn shape(&self) -> HookPartition {
        self.p.shape()
    }

    pub fn swapped(&self) -> TableauPair {
        TableauPair { p: self.q.clone(), q: self.p.clone() }
    }
}

/// Coordinates of a pair: level, shape, `l` (absent for one-dimensional
/// shapes) and the two tableau indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairCoords {
    pub level: Level,
    pub shape: HookPartition,
    pub l: Option<u64>,
    pub i: u64,
    pub j: u64,
}

/// Serializable `{shape, l, i, j, element}` record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub level: String,
    pub shape: String,
    pub l: Option<u64>,
    pub i: u64,
    pub j: u64,
    pub element: String,
}

/// `h` for family V, `h'` for family W.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Correspondence {
    pub params: GroupParams,
    pub family: Family,
}

/// Diagonal one-dimensional pair on `lambda(T, k')` maps to `tau^{k'+1}`.
pub fn one_dimensional_element(gp: &GroupParams, kprime: u64) -> GroupElement {
    gp.tau_pow(kprime as i64 + 1)
}

/// Inverse of [`one_dimensional_element`].
pub fn one_dimensional_column(gp: &GroupParams, x: GroupElement) -> u64 {
    (x.b + gp.order_tau - 1) % gp.order_tau
}

impl Correspondence {
    pub fn new(params: GroupParams, family: Family) -> Result<Self> {
        if family == Family::W && params.r < 2 {
            return Err(Error::InvalidLevel(format!("SG_{} has no W levels with s >= 1", params.r)));
        }
        Ok(Correspondence { params, family })
    }

    pub fn full(params: GroupParams) -> Self {
        Correspondence { params, family: Family::V }
    }

    pub fn sub(params: GroupParams) -> Result<Self> {
        Self::new(params, Family::W)
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    /// Levels whose pairs make up the domain.
    pub fn levels(&self) -> Vec<Level> {
        Level::all(self.family, self.params.r)
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.params.contains(x) && (self.family == Family::V || self.params.in_subgroup(x))
    }

    /// `tau^{-(i-1)} g^{p^{r-s}} tau* tau^{j-1} tau^{l p^{s-1}(p-1)}`.
    pub fn element(&self, c: &PairCoords) -> Result<GroupElement> {
        let gp = &self.params;
        let lv = c.level;
        if lv.family != self.family || lv.r != gp.r {
            return Err(Error::LevelMismatch);
        }
        lv.check(gp.p, c.shape)?;
        if lv.s == 0 {
            if c.i != 1 || c.j != 1 {
                return Err(Error::IndexOutOfRange(format!("one-dimensional pair ({},{})", c.i, c.j)));
            }
            return Ok(one_dimensional_element(gp, c.shape.i));
        }
        let d = lv.dimension(gp.p);
        if c.i == 0 || c.j == 0 || c.i > d || c.j > d {
            return Err(Error::IndexOutOfRange(format!("pair ({},{}) outside 1..={d}", c.i, c.j)));
        }
        let l = c.l.ok_or_else(|| Error::IndexOutOfRange("missing l".into()))?;
        let q = gp.p.pow(gp.r - lv.s);
        Ok(gp.product(&[
            gp.tau_pow(-(c.i as i64 - 1)),
            gp.g_pow(q as i64),
            gp.tau_pow((gp.order_tau / 2) as i64),
            gp.tau_pow(c.j as i64 - 1),
            gp.tau_pow((l * d) as i64),
        ]))
    }

    pub fn coords(&self, pair: &TableauPair) -> Result<PairCoords> {
        let level = pair.level();
        if pair.p.p() != self.params.p {
            return Err(Error::ParamsMismatch);
        }
        let l = if level.s == 0 { None } else { Some(partition_to_index(self.params.p, pair.shape(), level)?.0) };
        Ok(PairCoords { level, shape: pair.shape(), l, i: pair.p.index().value, j: pair.q.index().value })
    }

    /// `h` (or `h'`) of a pair of tableaux.
    pub fn map(&self, pair: &TableauPair) -> Result<GroupElement> {
        let c = self.coords(pair)?;
        if c.level.s == 0 && pair.p != pair.q {
            return Err(Error::ShapeMismatch);
        }
        self.element(&c)
    }

    /// Coordinates of the unique pair mapping to `x`.
    pub fn locate(&self, x: GroupElement) -> Result<PairCoords> {
        let gp = &self.params;
        if !self.contains(x) {
            return Err(match self.family {
                Family::W => Error::NotInSubgroup(x.to_string()),
                Family::V => Error::IndexOutOfRange(x.to_string()),
            });
        }
        let p = gp.p;
        if x.a == 0 {
            let level = Level { family: self.family, r: gp.r, s: 0 };
            let shape = HookPartition { k: level.size(p), i: one_dimensional_column(gp, x) };
            return Ok(PairCoords { level, shape, l: None, i: 1, j: 1 });
        }
        let v = arith::valuation(x.a, p);
        let s = gp.r - v;
        let level = Level { family: self.family, r: gp.r, s };
        let ps = p.pow(s);
        let u = (x.a / p.pow(v)) % ps;
        let d = level.dimension(p);
        let mut pw = 1 % ps;
        let mut e = None;
        for k in 0..d {
            if pw == u {
                e = Some(k);
                break;
            }
            pw = pw * gp.t % ps;
        }
        let e = e.expect("every unit mod p^s is a power of t");
        let tt = gp.order_tau;
        let c = (x.b + tt - tt / 2 + e) % tt;
        let j = c % d + 1;
        let l = c / d;
        let shape = index_to_partition(p, l, level)?;
        Ok(PairCoords { level, shape, l: Some(l), i: e + 1, j })
    }

    pub fn pair_at(&self, c: &PairCoords) -> Result<TableauPair> {
        let p = self.params.p;
        let ta = index_to_tableau(p, c.level, c.shape, c.i)?;
        let tb = index_to_tableau(p, c.level, c.shape, c.j)?;
        TableauPair::new(ta, tb)
    }

    /// Inverse of [`Self::map`].
    pub fn inverse(&self, x: GroupElement) -> Result<TableauPair> {
        self.pair_at(&self.locate(x)?)
    }

    /// The element of the swapped pair.
    pub fn swap_element(&self, x: GroupElement) -> Result<GroupElement> {
        let c = self.locate(x)?;
        self.element(&PairCoords { i: c.j, j: c.i, ..c })
    }

    fn same_level(&self, x: GroupElement, y: GroupElement) -> Result<(PairCoords, PairCoords)> {
        let (a, b) = (self.locate(x)?, self.locate(y)?);
        if a.level != b.level {
            return Err(Error::LevelMismatch);
        }
        Ok((a, b))
    }

    /// p-Knuth relation: same shape and same first tableau.
    pub fn knuth_equivalent(&self, x: GroupElement, y: GroupElement) -> Result<bool> {
        let (a, b) = self.same_level(x, y)?;
        Ok(a.shape == b.shape && a.i == b.i)
    }

    /// p-dual Knuth relation: same shape and same second tableau.
    pub fn dual_knuth_equivalent(&self, x: GroupElement, y: GroupElement) -> Result<bool> {
        let (a, b) = self.same_level(x, y)?;
        Ok(a.shape == b.shape && a.j == b.j)
    }

    /// Every pair coordinate in the domain.
    pub fn all_coords(&self) -> Vec<PairCoords> {
        let p = self.params.p;
        let mut out = Vec::new();
        for level in self.levels() {
            for shape in level_shapes(p, level) {
                if level.s == 0 {
                    out.push(PairCoords { level, shape, l: None, i: 1, j: 1 });
                    continue;
                }
                let l = partition_to_index(p, shape, level).expect("shape from its level").0;
                let d = level.dimension(p);
                for i in 1..=d {
                    for j in 1..=d {
                        out.push(PairCoords { level, shape, l: Some(l), i, j });
                    }
                }
            }
        }
        out
    }

    pub fn record(&self, c: &PairCoords) -> Result<PairRecord> {
        Ok(PairRecord {
            level: c.level.to_string(),
            shape: c.shape.to_string(),
            l: c.l,
            i: c.i,
            j: c.j,
            element: self.element(c)?.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_syt;
    use std::collections::HashSet;

    fn v33() -> (Correspondence, Level, HookPartition) {
        let gp = GroupParams::new(3, 3).unwrap();
        (Correspondence::full(gp), Level::v(3, 3).unwrap(), HookPartition { k: 11, i: 5 })
    }

    fn pair(c: &Correspondence, lv: Level, sh: HookPartition, i: u64, j: u64) -> TableauPair {
        c.pair_at(&PairCoords { level: lv, shape: sh, l: Some(0), i, j }).unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let (c, lv, sh) = v33();
        let gp = c.params;
        assert_eq!(c.map(&pair(&c, lv, sh, 1, 1)).unwrap(), gp.element(1, 9));
        assert_eq!(c.map(&pair(&c, lv, sh, 10, 10)).unwrap(), gp.element(26, 9));
        assert_eq!(c.map(&pair(&c, lv, sh, 18, 18)).unwrap(), gp.element(14, 9));
        assert_eq!(c.inverse(gp.element(1, 9)).unwrap(), pair(&c, lv, sh, 1, 1));
    }

    #[test]
    fn subgroup_examples() {
        let gp = GroupParams::new(3, 3).unwrap();
        let c = Correspondence::sub(gp).unwrap();
        let lv = Level::w(3, 1).unwrap();
        let at = |k, i, j| {
            let sh = HookPartition { k: 15, i: k };
            let l = partition_to_index(3, sh, lv).unwrap().0;
            c.element(&PairCoords { level: lv, shape: sh, l: Some(l), i, j }).unwrap()
        };
        assert_eq!(at(7, 1, 1), gp.element(9, 9));
        assert_eq!(at(7, 1, 2), gp.element(9, 10));
        assert_eq!(at(6, 2, 1), gp.element(18, 16));
        let back = c.locate(gp.element(9, 10)).unwrap();
        assert_eq!((back.shape.i, back.i, back.j, back.l), (7, 1, 2, Some(0)));
        assert!(matches!(c.locate(gp.g()), Err(Error::NotInSubgroup(_))));
    }

    #[test]
    fn one_dimensional_labeling() {
        let gp = GroupParams::new(3, 3).unwrap();
        let c = Correspondence::full(gp);
        let e = c.locate(gp.identity()).unwrap();
        assert_eq!(e.shape, HookPartition { k: 18, i: 17 });
        assert_eq!(e.level, Level::v(3, 0).unwrap());
        assert_eq!(c.element(&e).unwrap(), gp.identity());
        assert_eq!(c.locate(gp.tau()).unwrap().shape.i, 0);
    }

    #[test]
    fn bijections() {
        for (p, r) in [(3u64, 1u32), (3, 2), (3, 3), (5, 1), (5, 2)] {
            let gp = GroupParams::new(p, r).unwrap();
            let mut families = vec![Correspondence::full(gp)];
            if r >= 2 {
                families.push(Correspondence::sub(gp).unwrap());
            }
            for c in families {
                let coords = c.all_coords();
                let images: HashSet<GroupElement> = coords.iter().map(|x| c.element(x).unwrap()).collect();
                let target = gp.enumerate(c.family == Family::W);
                assert_eq!(coords.len(), target.len());
                assert_eq!(images, target.iter().copied().collect::<HashSet<_>>());
                for x in &coords {
                    let y = c.element(x).unwrap();
                    assert_eq!(&c.locate(y).unwrap(), x);
                    // level images: valuation of the g exponent fixes s
                    if x.level.s == 0 {
                        assert_eq!(y.a, 0);
                    } else {
                        assert_eq!(arith::valuation(y.a, p), r - x.level.s);
                    }
                }
            }
        }
    }

    #[test]
    fn map_and_inverse_on_tableaux() {
        let (c, lv, sh) = v33();
        let all = enumerate_syt(3, lv, sh).unwrap();
        for (a, _) in &all {
            for (b, _) in &all {
                let pr = TableauPair::new(a.clone(), b.clone()).unwrap();
                let x = c.map(&pr).unwrap();
                assert_eq!(c.inverse(x).unwrap(), pr);
                assert_eq!(c.swap_element(x).unwrap(), c.map(&pr.swapped()).unwrap());
            }
        }
    }

    #[test]
    fn swap_is_an_involution() {
        let gp = GroupParams::new(3, 2).unwrap();
        let c = Correspondence::full(gp);
        for x in gp.enumerate(false) {
            let y = c.swap_element(x).unwrap();
            assert_eq!(c.swap_element(y).unwrap(), x);
            let loc = c.locate(x).unwrap();
            assert_eq!(x == y, loc.i == loc.j);
        }
        let (c, lv, sh) = v33();
        let x = c.map(&pair(&c, lv, sh, 1, 1)).unwrap();
        assert_eq!(c.swap_element(x).unwrap(), x);
    }

    #[test]
    fn knuth_examples() {
        let (c, lv, sh) = v33();
        let h = |i, j| c.map(&pair(&c, lv, sh, i, j)).unwrap();
        assert!(c.knuth_equivalent(h(1, 2), h(1, 2)).unwrap());
        assert!(c.knuth_equivalent(h(1, 2), h(1, 5)).unwrap());
        assert!(!c.knuth_equivalent(h(1, 2), h(3, 2)).unwrap());
        assert!(c.dual_knuth_equivalent(h(1, 2), h(3, 2)).unwrap());
        assert_eq!(c.knuth_equivalent(h(1, 2), c.params.tau()), Err(Error::LevelMismatch));
    }

    #[test]
    fn knuth_class_sizes() {
        let gp = GroupParams::new(3, 3).unwrap();
        let c = Correspondence::full(gp);
        let all = gp.enumerate(false);
        for &x in all.iter().step_by(7) {
            let lx = c.locate(x).unwrap();
            let same: Vec<_> = all.iter().filter(|&&y| c.locate(y).unwrap().level == lx.level).collect();
            let k = same.iter().filter(|&&&y| c.knuth_equivalent(x, y).unwrap()).count() as u64;
            let dk = same.iter().filter(|&&&y| c.dual_knuth_equivalent(x, y).unwrap()).count() as u64;
            assert_eq!(k, lx.level.dimension(3));
            assert_eq!(dk, lx.level.dimension(3));
        }
    }

    #[test]
    fn rejects_bad_pairs() {
        let (c, lv, sh) = v33();
        let a = pair(&c, lv, sh, 1, 1).p;
        let gp = c.params;
        let other = index_to_tableau(3, Level::w(3, 2).unwrap(), HookPartition { k: 9, i: 3 }, 1).unwrap();
        assert_eq!(TableauPair::new(a.clone(), other.clone()), Err(Error::ShapeMismatch));
        let sub = Correspondence::sub(gp).unwrap();
        assert_eq!(sub.map(&TableauPair::new(a.clone(), a).unwrap()), Err(Error::LevelMismatch));
        assert!(Correspondence::sub(GroupParams::new(3, 1).unwrap()).is_err());
    }
}
