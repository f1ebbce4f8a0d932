//! The idempotents `E`, `EE` (on `<g^p>`), `T`, `T_r`, the matrix units built
//! from them, and the dictionary between hook shapes and the index `l`.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CyclotomicNumber, Rational};
use crate::diagrams::{Family, HookPartition, Level};
use crate::error::{Error, Result};
use crate::group::{AlgebraElement, GroupParams};

fn out_of_range(what: String) -> Error {
    Error::IndexOutOfRange(what)
}

fn check_root_power(p: u64, s: u32, i: u64) -> Result<()> {
    if s >= 1 && i.is_multiple_of(p) {
        return Err(out_of_range(format!("root power {i} is not prime to p^{s}")));
    }
    Ok(())
}

/// `(1/n) sum_{j=1}^{n} root^{e j} x^j` for `x^j` given by `element(j)`.
fn weighted_sum(
    gp: &GroupParams,
    n: u64,
    order: u64,
    e: u64,
    element: impl Fn(u64) -> crate::group::GroupElement,
) -> AlgebraElement {
    let conductor = gp.conductor();
    let inv_n = Rational::new(1.into(), n.into());
    let terms = (1..=n).map(|j| {
        let power = ((e % order) * (j % order)) % order;
        let c = CyclotomicNumber::root_of_unity(conductor, order, power as i64)
            .expect("order divides the conductor")
            .scale(&inv_n);
        (element(j), c)
    });
    AlgebraElement::from_terms(*gp, terms)
}

/// `E^{(r,s)}_{rho^i} = (1/p^r) sum_{j=1}^{p^r} rho^{ij} g^j`, `rho` of order `p^s`.
pub fn e_idem(gp: &GroupParams, s: u32, i: u64) -> Result<AlgebraElement> {
    if s > gp.r {
        return Err(out_of_range(format!("s = {s} exceeds r = {}", gp.r)));
    }
    check_root_power(gp.p, s, i)?;
    let order = gp.p.pow(s);
    Ok(weighted_sum(gp, gp.order_g, order, i, |j| gp.g_pow(j as i64)))
}

/// `EE^{(r,s)}_{rho^i} = (1/p^{r-1}) sum_{j=1}^{p^{r-1}} rho^{ij} (g^p)^j`.
pub fn ee_idem(gp: &GroupParams, s: u32, i: u64) -> Result<AlgebraElement> {
    if s + 1 > gp.r {
        return Err(out_of_range(format!("s = {s} must be below r = {}", gp.r)));
    }
    check_root_power(gp.p, s, i)?;
    let order = gp.p.pow(s);
    let p = gp.p;
    Ok(weighted_sum(gp, gp.order_g / p, order, i, |j| gp.g_pow((p * j) as i64)))
}

/// `T^{(r,s)}_l = (1/p^{r-s}) sum_{j=1}^{p^{r-s}} beta^{lj} tau^{j p^{s-1}(p-1)}`.
pub fn t_idem(gp: &GroupParams, s: u32, l: u64) -> Result<AlgebraElement> {
    if s == 0 || s > gp.r {
        return Err(out_of_range(format!("s = {s} not in 1..={}", gp.r)));
    }
    let n = gp.p.pow(gp.r - s);
    if l >= n {
        return Err(out_of_range(format!("l = {l} not below {n}")));
    }
    let d = gp.p.pow(s - 1) * (gp.p - 1);
    Ok(weighted_sum(gp, n, n, l, |j| gp.tau_pow((j * d) as i64)))
}

/// `T^{(r)}_l = (1/p^{r-1}(p-1)) sum_{j=1}^{p^{r-1}(p-1)} zeta^{lj} tau^j`.
pub fn t_r_idem(gp: &GroupParams, l: u64) -> Result<AlgebraElement> {
    let n = gp.order_tau;
    if l >= n {
        return Err(out_of_range(format!("l = {l} not below {n}")));
    }
    Ok(weighted_sum(gp, n, n, l, |j| gp.tau_pow(j as i64)))
}

/// Seed `E_1 = T^{(r,s)}_l E^{(r,s)}_rho` (family V) or `T^{(r,s)}_l EE^{(r,s)}_rho` (family W).
pub fn seed(gp: &GroupParams, family: Family, s: u32, l: u64) -> Result<AlgebraElement> {
    let level = Level::new(family, gp.r, s)?;
    if level.s == 0 {
        return Err(Error::InvalidLevel(format!("{level} has no matrix units")));
    }
    let e = match family {
        Family::V => e_idem(gp, s, 1)?,
        Family::W => ee_idem(gp, s, 1)?,
    };
    Ok(&t_idem(gp, s, l)? * &e)
}

/// `E_{ij} = tau^{-(i-1)} E_1 tau^{j-1}` for `1 <= i, j <= p^{s-1}(p-1)`.
pub fn matrix_unit(gp: &GroupParams, family: Family, s: u32, l: u64, i: u64, j: u64) -> Result<AlgebraElement> {
    let e1 = seed(gp, family, s, l)?;
    matrix_unit_from_seed(gp, &e1, s, i, j)
}

/// Same as [`matrix_unit`] with a precomputed seed.
pub fn matrix_unit_from_seed(gp: &GroupParams, e1: &AlgebraElement, s: u32, i: u64, j: u64) -> Result<AlgebraElement> {
    let d = gp.p.pow(s.saturating_sub(1)) * (gp.p - 1);
    if i == 0 || j == 0 || i > d || j > d {
        return Err(out_of_range(format!("matrix position ({i},{j}) outside {d}x{d}")));
    }
    Ok(e1.left_shift(gp.tau_pow(-(i as i64 - 1))).right_shift(gp.tau_pow(j as i64 - 1)))
}

/// Digits `e_1, ..., e_D` of `k' - (k-1)/2` in balanced base `p`, most
/// significant first, as magnitude and sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedDigits {
    pub digits: Vec<(u64, i8)>,
}

impl SignedDigits {
    pub fn from_offset(p: u64, num_digits: u32, mut delta: i64) -> Self {
        let p = p as i64;
        let h = (p - 1) / 2;
        let mut digits = Vec::with_capacity(num_digits as usize);
        for _ in 0..num_digits {
            let mut e = delta.rem_euclid(p);
            if e > h {
                e -= p;
            }
            digits.push((e.unsigned_abs(), e.signum() as i8));
            delta = (delta - e) / p;
        }
        debug_assert_eq!(delta, 0);
        digits.reverse();
        SignedDigits { digits }
    }

    pub fn offset(&self, p: u64) -> i64 {
        self.digits.iter().fold(0i64, |acc, &(j, sg)| acc * p as i64 + sg as i64 * j as i64)
    }

    /// `nu(j) = 2j` for a negative coefficient, `2j - 1` for a positive one, `0` for zero.
    pub fn nu(&self) -> Vec<u64> {
        self.digits
            .iter()
            .map(|&(j, sg)| match sg {
                0 => 0,
                s if s < 0 => 2 * j,
                _ => 2 * j - 1,
            })
            .collect()
    }
}

fn dictionary_level(p: u64, shape: HookPartition, level: Level) -> Result<(u32, i64)> {
    level.check(p, shape)?;
    if level.s == 0 {
        return Err(Error::InvalidLevel(format!("{level} is one-dimensional")));
    }
    let center = ((level.size(p) - 1) / 2) as i64;
    Ok((level.r - level.s, shape.i as i64 - center))
}

/// `l = (p-1) sum_i p^{D-i} nu(j_i) mod p^D`, `D = r - s`.
pub fn partition_to_index(p: u64, shape: HookPartition, level: Level) -> Result<(u64, SignedDigits)> {
    let (d, delta) = dictionary_level(p, shape, level)?;
    let digits = SignedDigits::from_offset(p, d, delta);
    let modulus = p.pow(d);
    let raw = digits.nu().iter().fold(0u64, |acc, &v| acc * p + v);
    Ok(((p - 1) * raw % modulus, digits))
}

/// Inverse of [`partition_to_index`] on a level.
pub fn index_to_partition(p: u64, l: u64, level: Level) -> Result<HookPartition> {
    if level.s == 0 {
        return Err(Error::InvalidLevel(format!("{level} is one-dimensional")));
    }
    let d = level.r - level.s;
    let modulus = p.pow(d);
    if l >= modulus {
        return Err(out_of_range(format!("l = {l} not below {modulus}")));
    }
    let inv = crate::arith::inv_mod((p - 1) % modulus, modulus).unwrap_or(0);
    let mut n = ((l as u128 * inv as u128) % modulus as u128) as u64;
    let mut digits = Vec::with_capacity(d as usize);
    for _ in 0..d {
        let nu = n % p;
        n /= p;
        digits.push(match nu {
            0 => (0, 0),
            v if v % 2 == 0 => (v / 2, -1),
            v => (v.div_ceil(2), 1),
        });
    }
    digits.reverse();
    let offset = SignedDigits { digits }.offset(p);
    let center = ((level.size(p) - 1) / 2) as i64;
    Ok(HookPartition { k: level.size(p), i: (center + offset) as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::level_shapes;

    fn gp(p: u64, r: u32) -> GroupParams {
        GroupParams::new(p, r).unwrap()
    }

    fn sq(x: &AlgebraElement) -> AlgebraElement {
        x * x
    }

    #[test]
    fn e_examples() {
        let g1 = gp(3, 1);
        let e0 = e_idem(&g1, 0, 1).unwrap();
        let third = CyclotomicNumber::from_rational(g1.conductor(), &Rational::new(1.into(), 3.into()));
        let want = AlgebraElement::from_terms(g1, (0..3).map(|a| (g1.g_pow(a), third.clone())));
        assert_eq!(e0, want);
        let a = e_idem(&g1, 1, 1).unwrap();
        let b = e_idem(&g1, 1, 2).unwrap();
        assert!((&a * &b).is_zero());
        assert_eq!(sq(&a), a);
        let g2 = gp(3, 2);
        let e = e_idem(&g2, 1, 1).unwrap();
        assert_eq!(sq(&e), e);
        assert!(e_idem(&g2, 1, 3).is_err());
        assert!(e_idem(&g2, 3, 1).is_err());
    }

    #[test]
    fn ee_examples() {
        let g2 = gp(3, 2);
        let e = ee_idem(&g2, 0, 1).unwrap();
        assert_eq!(e.support_size(), 3);
        assert!(e.support().all(|x| x.b == 0 && x.a % 3 == 0));
        let g3 = gp(3, 3);
        let e = ee_idem(&g3, 1, 1).unwrap();
        assert_eq!(sq(&e), e);
        for s in 0..3 {
            for i in [1u64, 2, 4] {
                assert!(ee_idem(&g3, s, i).unwrap().support().all(|&x| g3.in_subgroup(x)));
            }
        }
        assert!(ee_idem(&g3, 3, 1).is_err());
    }

    #[test]
    fn t_examples() {
        for r in 1..=3 {
            let g = gp(3, r);
            assert_eq!(t_idem(&g, r, 0).unwrap(), AlgebraElement::identity(g));
        }
        let g2 = gp(3, 2);
        let t = t_idem(&g2, 1, 1).unwrap();
        assert_eq!(sq(&t), t);
        let tr = t_r_idem(&g2, 0).unwrap();
        assert_eq!(sq(&tr), tr);
        assert_eq!(tr.support_size(), 6);
        assert!(t_idem(&g2, 1, 3).is_err());
        assert!(t_idem(&g2, 0, 0).is_err());
        assert!(t_r_idem(&g2, 6).is_err());
    }

    #[test]
    fn matrix_unit_examples() {
        let g2 = gp(3, 2);
        let e11 = matrix_unit(&g2, Family::V, 1, 0, 1, 1).unwrap();
        assert_eq!(e11, seed(&g2, Family::V, 1, 0).unwrap());
        let e12 = matrix_unit(&g2, Family::V, 1, 0, 1, 2).unwrap();
        let e21 = matrix_unit(&g2, Family::V, 1, 0, 2, 1).unwrap();
        assert_eq!(&e12 * &e21, e11);
        assert!((&e12 * &e12).is_zero());
        assert!(matrix_unit(&g2, Family::V, 1, 0, 3, 1).is_err());
        assert!(matrix_unit(&g2, Family::W, 2, 0, 1, 1).is_err());
    }

    #[test]
    fn dictionary_examples() {
        let w31 = Level::w(3, 1).unwrap();
        let l = |i| partition_to_index(3, HookPartition { k: 15, i }, w31).unwrap().0;
        let published = [(7, 0), (6, 4), (5, 5), (4, 3), (3, 7), (8, 2), (9, 1), (10, 6), (11, 8)];
        for (k, want) in published {
            assert_eq!(l(k), want, "k' = {k}");
            assert_eq!(index_to_partition(3, want, w31).unwrap(), HookPartition { k: 15, i: k });
        }
        let (_, digits) = partition_to_index(3, HookPartition { k: 15, i: 5 }, w31).unwrap();
        assert_eq!(digits.digits, vec![(1, -1), (1, 1)]);
        assert_eq!(digits.nu(), vec![2, 1]);
        assert!(partition_to_index(3, HookPartition { k: 15, i: 2 }, w31).is_err());
        assert!(partition_to_index(3, HookPartition { k: 6, i: 2 }, Level::v(2, 0).unwrap()).is_err());
        assert!(index_to_partition(3, 9, w31).is_err());
    }

    #[test]
    fn dictionary_is_bijective() {
        for p in [3u64, 5, 7] {
            for r in 1..=4 {
                for level in Level::all(Family::V, r).into_iter().chain(Level::all(Family::W, r)) {
                    if level.s == 0 {
                        continue;
                    }
                    let mut seen: Vec<u64> = level_shapes(p, level)
                        .into_iter()
                        .map(|shape| {
                            let (l, digits) = partition_to_index(p, shape, level).unwrap();
                            assert!(digits.digits.iter().all(|&(j, sg)| j <= (p - 1) / 2 && (sg == 0) == (j == 0)));
                            assert_eq!(index_to_partition(p, l, level).unwrap(), shape);
                            l
                        })
                        .collect();
                    seen.sort_unstable();
                    assert_eq!(seen, (0..p.pow(r - level.s)).collect::<Vec<_>>(), "{level} p={p}");
                }
            }
        }
    }
}
