//! The groups `G_r = Z_{p^r} x| Z*_{p^r}` and `SG_r`, and their group algebras
//! over a cyclotomic field.
//!
//! Elements are written in the normal form `g^a tau^b`. Conjugation acts by
//! `tau^{-1} g tau = g^t` for the fixed primitive root `t`, so
//! `tau^b g^a = g^{a t^{-b}} tau^b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclotomic::{CyclotomicNumber, ProductSum, Rational};
use crate::error::{Error, Result};

/// Parameters of `G_r` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub p: u64,
    pub r: u32,
    /// Primitive root modulo `p^r`.
    pub t: u64,
    t_inv: u64,
    /// `p^r`, the order of `g`.
    pub order_g: u64,
    /// `p^{r-1}(p-1)`, the order of `tau`.
    pub order_tau: u64,
}

impl GroupParams {
    /// Parameters for `G_r`; `t` is the smallest primitive root modulo `p^2`.
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if r == 0 {
            return Err(Error::ZeroLevel);
        }
        let order_g = p.checked_pow(r).ok_or(Error::Overflow { p, r })?;
        let order_tau = order_g / p * (p - 1);
        // |G_r| = order_g * order_tau must fit
        order_g.checked_mul(order_tau).ok_or(Error::Overflow { p, r })?;
        let t = (2..p * p)
            .find(|&t| arith::mult_order(t, p * p) == Some(p * (p - 1)))
            .expect("primitive roots exist modulo p^2");
        debug_assert_eq!(arith::mult_order(t, order_g), Some(order_tau));
        let t_inv = arith::inv_mod(t % order_g, order_g).unwrap_or(0);
        Ok(GroupParams { p, r, t, t_inv, order_g, order_tau })
    }

    /// Same prime, different level.
    pub fn with_level(&self, r: u32) -> Result<Self> {
        Self::new(self.p, r)
    }

    /// `|G_r| = p^{2r-1}(p-1)`.
    pub fn group_order(&self) -> u64 {
        self.order_g * self.order_tau
    }

    /// `|SG_r| = p^{2r-2}(p-1)`.
    pub fn subgroup_order(&self) -> u64 {
        self.group_order() / self.p
    }

    /// Conductor `p^r (p-1)` of the coefficient field.
    pub fn conductor(&self) -> u64 {
        self.order_g * (self.p - 1)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { a: 0, b: 0 }
    }

    pub fn g(&self) -> GroupElement {
        self.element(1, 0)
    }

    pub fn tau(&self) -> GroupElement {
        self.element(0, 1)
    }

    /// `g^a tau^b` with both exponents reduced.
    pub fn element(&self, a: i64, b: i64) -> GroupElement {
        GroupElement {
            a: a.rem_euclid(self.order_g as i64) as u64,
            b: b.rem_euclid(self.order_tau as i64) as u64,
        }
    }

    pub fn g_pow(&self, a: i64) -> GroupElement {
        self.element(a, 0)
    }

    pub fn tau_pow(&self, b: i64) -> GroupElement {
        self.element(0, b)
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        x.a < self.order_g && x.b < self.order_tau
    }

    /// `g^{a1} tau^{b1} g^{a2} tau^{b2} = g^{a1 + a2 t^{-b1}} tau^{b1 + b2}`.
    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let m = self.order_g as u128;
        let twist = arith::pow_mod(self.t_inv, x.b, self.order_g) as u128;
        GroupElement {
            a: ((x.a as u128 + y.a as u128 * twist % m) % m) as u64,
            b: (x.b + y.b) % self.order_tau,
        }
    }

    pub fn product(&self, xs: &[GroupElement]) -> GroupElement {
        xs.iter().fold(self.identity(), |acc, &x| self.multiply(acc, x))
    }

    pub fn inverse(&self, x: GroupElement) -> GroupElement {
        // (g^a tau^b)^{-1} = tau^{-b} g^{-a} = g^{-a t^{b}} tau^{-b}
        let tw = arith::pow_mod(self.t, x.b, self.order_g) as u128;
        let m = self.order_g as u128;
        let a = (m - (x.a as u128 * tw % m)) % m;
        GroupElement { a: a as u64, b: (self.order_tau - x.b) % self.order_tau }
    }

    pub fn pow(&self, x: GroupElement, mut k: u64) -> GroupElement {
        let mut acc = self.identity();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        acc
    }

    /// Membership in `SG_r`: `p` divides the exponent of `g`.
    pub fn in_subgroup(&self, x: GroupElement) -> bool {
        x.a.is_multiple_of(self.p)
    }

    /// All elements (or those of `SG_r`) in lexicographic `(a, b)` order.
    pub fn enumerate(&self, subgroup_only: bool) -> Vec<GroupElement> {
        let step = if subgroup_only { self.p } else { 1 };
        (0..self.order_g)
            .step_by(step as usize)
            .flat_map(|a| (0..self.order_tau).map(move |b| GroupElement { a, b }))
            .collect()
    }

    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let x: GroupElement = s.parse()?;
        Ok(self.element(x.a as i64, x.b as i64))
    }
}

/// `g^a tau^b` with `0 <= a < p^r`, `0 <= b < p^{r-1}(p-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub a: u64,
    pub b: u64,
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "e"),
            (0, b) => write!(f, "tau^{b}"),
            (a, b) => write!(f, "g^{a}*tau^{b}"),
        }
    }
}

/// Parses `e`, `g^a*tau^b` and its abbreviations (`g`, `g^a`, `tau`, `tau^b`,
/// `tau^b*g^a` is not accepted). Exponents are not reduced here.
impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s == "1" {
            return Ok(GroupElement { a: 0, b: 0 });
        }
        let bad = || Error::Parse(format!("invalid group element '{s}'"));
        let exponent = |factor: &str, name: &str| -> Option<u64> {
            let rest = factor.strip_prefix(name)?;
            if rest.is_empty() {
                return Some(1);
            }
            rest.strip_prefix('^')?.parse().ok()
        };
        let mut parts = s.split('*').map(str::trim);
        let first = parts.next().ok_or_else(bad)?;
        let second = parts.next();
        if parts.next().is_some() {
            return Err(bad());
        }
        match second {
            None => {
                if let Some(b) = exponent(first, "tau") {
                    Ok(GroupElement { a: 0, b })
                } else if let Some(a) = exponent(first, "g") {
                    Ok(GroupElement { a, b: 0 })
                } else {
                    Err(bad())
                }
            }
            Some(second) => {
                let a = exponent(first, "g").ok_or_else(bad)?;
                let b = exponent(second, "tau").ok_or_else(bad)?;
                Ok(GroupElement { a, b })
            }
        }
    }
}

/// A finitely supported map from group elements to cyclotomic numbers.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    params: GroupParams,
    terms: BTreeMap<GroupElement, CyclotomicNumber>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, v)| (k.to_string(), v.to_string()))).finish()
    }
}

impl AlgebraElement {
    pub fn zero(params: GroupParams) -> Self {
        AlgebraElement { params, terms: BTreeMap::new() }
    }

    /// The basis element `delta_x`.
    pub fn basis(params: GroupParams, x: GroupElement) -> Self {
        let mut out = Self::zero(params);
        out.terms.insert(x, CyclotomicNumber::one(params.conductor()));
        out
    }

    pub fn identity(params: GroupParams) -> Self {
        Self::basis(params, params.identity())
    }

    pub fn from_terms(params: GroupParams, terms: impl IntoIterator<Item = (GroupElement, CyclotomicNumber)>) -> Self {
        let mut out = Self::zero(params);
        for (x, c) in terms {
            out.add_term(x, c);
        }
        out
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn conductor(&self) -> u64 {
        self.params.conductor()
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, CyclotomicNumber> {
        &self.terms
    }

    pub fn coefficient(&self, x: GroupElement) -> CyclotomicNumber {
        self.terms.get(&x).cloned().unwrap_or_else(|| CyclotomicNumber::zero(self.conductor()))
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }

    /// Number of group elements with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, x: GroupElement, c: CyclotomicNumber) {
        let x = self.params.element(x.a as i64, x.b as i64);
        let sum = match self.terms.remove(&x) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(x, sum);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&x, c) in &other.terms {
            out.add_term(x, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(self.params);
        if q.numer() == &0.into() {
            return out;
        }
        out.terms = self.terms.iter().map(|(&x, c)| (x, c.scale(q))).collect();
        out
    }

    /// Convolution `(u v)(z) = sum_{x y = z} u(x) v(y)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let params = self.params;
        let mut buckets: BTreeMap<GroupElement, Vec<(&CyclotomicNumber, &CyclotomicNumber)>> = BTreeMap::new();
        for (&x, cx) in &self.terms {
            for (&y, cy) in &other.terms {
                buckets.entry(params.multiply(x, y)).or_default().push((cx, cy));
            }
        }
        let field = crate::cyclotomic::CyclotomicField::get(params.conductor());
        let terms: Vec<(GroupElement, CyclotomicNumber)> = buckets
            .into_par_iter()
            .filter_map(|(z, pairs)| {
                let mut acc = ProductSum::new(field.clone());
                for (a, b) in pairs {
                    acc.add_product(a, b);
                }
                let c = acc.finish();
                (!c.is_zero()).then_some((z, c))
            })
            .collect();
        Ok(AlgebraElement { params, terms: terms.into_iter().collect() })
    }

    /// Multiply on the left by a group element.
    pub fn left_shift(&self, x: GroupElement) -> Self {
        let terms = self.terms.iter().map(|(&y, c)| (self.params.multiply(x, y), c.clone())).collect();
        AlgebraElement { params: self.params, terms }
    }

    /// Multiply on the right by a group element.
    pub fn right_shift(&self, x: GroupElement) -> Self {
        let terms = self.terms.iter().map(|(&y, c)| (self.params.multiply(y, x), c.clone())).collect();
        AlgebraElement { params: self.params, terms }
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.checked_add(rhs).expect("group parameters differ")
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.checked_sub(rhs).expect("group parameters differ")
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.checked_mul(rhs).expect("group parameters differ")
    }
}
