//! Exact arithmetic in the cyclotomic field `Q(zeta_N) = Q[x] / Phi_N(x)`.
//!
//! Elements are stored in the power basis `1, x, ..., x^{phi(N)-1}` as an
//! integer numerator vector over one positive common denominator. Every
//! value is kept normalized (the gcd of the denominator and all numerators is
//! one), so two equal field elements always have identical representations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Dense integer polynomial, lowest degree first.
pub type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; `None` if the remainder is nonzero.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<IntPoly> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by
/// `Phi_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in arith::divisors(n).into_iter().filter(|&d| d < n) {
        num = poly_div_exact(&num, &cyclotomic_polynomial(d))
            .expect("x^n - 1 is divisible by every Phi_d with d | n");
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// Static data for one cyclotomic field.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u64,
    degree: usize,
    /// `x^k mod Phi_N` for `k` in `degree .. 2*degree - 1`.
    overflow: Vec<IntPoly>,
    roots: OnceLock<Vec<IntPoly>>,
}

impl CyclotomicField {
    /// Shared field of conductor `n`; fields are interned per conductor.
    pub fn get(n: u64) -> Arc<CyclotomicField> {
        static FIELDS: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(Default::default);
        if let Some(f) = fields.lock().unwrap().get(&n) {
            return f.clone();
        }
        let f = Arc::new(Self::build(n));
        fields.lock().unwrap().entry(n).or_insert(f).clone()
    }

    fn build(n: u64) -> Self {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        // x^degree = -(phi_0 + ... + phi_{degree-1} x^{degree-1})
        let mut cur: IntPoly = phi[..degree].iter().map(|c| -c).collect();
        let mut overflow = Vec::with_capacity(degree.saturating_sub(1));
        for _ in 0..degree.saturating_sub(1) {
            overflow.push(cur.clone());
            // multiply by x and reduce
            let top = cur.pop().unwrap_or_default();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(&phi) {
                    *c -= &top * p;
                }
            }
        }
        CyclotomicField { conductor: n, degree, overflow, roots: OnceLock::new() }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `phi(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduce a polynomial of degree at most `2*degree - 2`.
    fn reduce(&self, mut p: IntPoly) -> IntPoly {
        let d = self.degree;
        if p.len() > d {
            let high: Vec<BigInt> = p.drain(d..).collect();
            for (k, c) in high.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (acc, r) in p.iter_mut().zip(&self.overflow[k]) {
                    *acc += c * r;
                }
            }
        }
        p.resize(d, BigInt::zero());
        p
    }

    /// Power-basis coefficients of `zeta_N^e`.
    fn root_poly(&self, e: u64) -> &IntPoly {
        let roots = self.roots.get_or_init(|| {
            let d = self.degree;
            let mut out = Vec::with_capacity(self.conductor as usize);
            let mut cur = vec![BigInt::zero(); d];
            cur[0] = BigInt::one();
            for _ in 0..self.conductor {
                out.push(cur.clone());
                let mut next = vec![BigInt::zero(); d + 1];
                for (i, c) in cur.iter().enumerate() {
                    next[i + 1] = c.clone();
                }
                cur = self.reduce(next);
            }
            out
        });
        &roots[(e % self.conductor) as usize]
    }
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    num: IntPoly,
    den: BigInt,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber(N={}, {})", self.field.conductor, self)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.conductor;
        let mut first = true;
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{n}")?,
                _ => write!(f, "({c})*z{n}^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CyclotomicNumber {
    fn from_parts(field: Arc<CyclotomicField>, num: IntPoly, den: BigInt) -> Self {
        let mut x = CyclotomicNumber { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(n: u64) -> Self {
        let field = CyclotomicField::get(n);
        let num = vec![BigInt::zero(); field.degree];
        CyclotomicNumber { field, num, den: BigInt::one() }
    }

    pub fn one(n: u64) -> Self {
        Self::from_rational(n, &Rational::one())
    }

    pub fn from_rational(n: u64, q: &Rational) -> Self {
        let mut x = Self::zero(n);
        x.num[0] = q.numer().clone();
        x.den = q.denom().clone();
        x.normalize();
        x
    }

    pub fn from_integer(n: u64, k: i64) -> Self {
        Self::from_rational(n, &Rational::from_integer(k.into()))
    }

    /// `zeta_order^power`, embedded as `zeta_N^{(N/order) * power}`.
    pub fn root_of_unity(n: u64, order: u64, power: i64) -> Result<Self> {
        if order == 0 || !n.is_multiple_of(order) {
            return Err(Error::ConductorMismatch(n, order));
        }
        let e = ((n / order) as i128 * power as i128).rem_euclid(n as i128) as u64;
        let field = CyclotomicField::get(n);
        let num = field.root_poly(e).clone();
        Ok(CyclotomicNumber { field, num, den: BigInt::one() })
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Power-basis coefficients, length `phi(N)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.conductor != other.field.conductor {
            return Err(Error::ConductorMismatch(self.field.conductor, other.field.conductor));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Ok(Self::from_parts(self.field.clone(), num, &self.den * &other.den))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let prod = self.field.reduce(poly_mul(&self.num, &other.num));
        Ok(Self::from_parts(self.field.clone(), prod, &self.den * &other.den))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * q.denom())
    }

    /// Multiply by `zeta_N^e`.
    pub fn mul_root(&self, e: u64) -> Self {
        let r = self.field.root_poly(e);
        let prod = self.field.reduce(poly_mul(&self.num, r));
        CyclotomicNumber { field: self.field.clone(), num: prod, den: self.den.clone() }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::one(self.field.conductor);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl std::ops::Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    /// Panics on conductor mismatch; use [`CyclotomicNumber::checked_add`] otherwise.
    fn add(self, rhs: Self) -> CyclotomicNumber {
        self.checked_add(rhs).expect("conductor mismatch")
    }
}

impl std::ops::Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        self.checked_sub(rhs).expect("conductor mismatch")
    }
}

impl std::ops::Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        self.checked_mul(rhs).expect("conductor mismatch")
    }
}

impl std::ops::Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

/// Accumulates a sum of products without reducing or normalizing until the end.
pub(crate) struct ProductSum {
    field: Arc<CyclotomicField>,
    acc: IntPoly,
    den: BigInt,
}

impl ProductSum {
    pub(crate) fn new(field: Arc<CyclotomicField>) -> Self {
        let len = (2 * field.degree).saturating_sub(1).max(1);
        ProductSum { field, acc: vec![BigInt::zero(); len], den: BigInt::one() }
    }

    pub(crate) fn add_product(&mut self, a: &CyclotomicNumber, b: &CyclotomicNumber) {
        let den = &a.den * &b.den;
        let mut factor = BigInt::one();
        if den != self.den {
            let l = self.den.lcm(&den);
            let up = &l / &self.den;
            if !up.is_one() {
                for c in &mut self.acc {
                    *c *= &up;
                }
            }
            factor = &l / &den;
            self.den = l;
        }
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let xf = x * &factor;
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    self.acc[i + j] += &xf * y;
                }
            }
        }
    }

    pub(crate) fn finish(self) -> CyclotomicNumber {
        let num = self.field.reduce(self.acc);
        CyclotomicNumber::from_parts(self.field, num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Oracle: (x^n - 1) / (x^m - 1) for the prime-power and small cases.
    fn geometric_quotient(n: usize, m: usize) -> IntPoly {
        let mut num = vec![BigInt::zero(); n + 1];
        num[0] = BigInt::from(-1);
        num[n] = BigInt::one();
        let mut den = vec![BigInt::zero(); m + 1];
        den[0] = BigInt::from(-1);
        den[m] = BigInt::one();
        poly_div_exact(&num, &den).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(9), geometric_quotient(9, 3));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(27), geometric_quotient(27, 9));
        for n in [1u64, 2, 6, 12, 18, 54, 100] {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, arith::totient(n));
        }
    }

    #[test]
    fn roots_of_unity() {
        let one = CyclotomicNumber::root_of_unity(54, 1, 0).unwrap();
        assert!(one.is_one());
        let w = CyclotomicNumber::root_of_unity(54, 3, 1).unwrap();
        let w2 = CyclotomicNumber::root_of_unity(54, 3, 2).unwrap();
        assert!((&(&w + &w2) + &one).is_zero());
        let minus = CyclotomicNumber::root_of_unity(54, 2, 1).unwrap();
        assert_eq!(minus, CyclotomicNumber::from_integer(54, -1));
        assert_eq!(
            CyclotomicNumber::root_of_unity(54, 4, 1),
            Err(Error::ConductorMismatch(54, 4))
        );
        assert!(!w.is_zero());
    }

    #[test]
    fn field_arithmetic() {
        let z9 = CyclotomicNumber::root_of_unity(9, 9, 1).unwrap();
        let z9_8 = CyclotomicNumber::root_of_unity(9, 9, 8).unwrap();
        assert!((&z9 * &z9_8).is_one());
        assert_eq!(&z9 * &CyclotomicNumber::one(9), z9);
        let z54 = CyclotomicNumber::root_of_unity(54, 54, 1).unwrap();
        let big = z54.scale(&Rational::from_integer(27.into()));
        assert_eq!(big.scale(&Rational::new(1.into(), 27.into())), z54);
        let a = CyclotomicNumber::one(9);
        let b = CyclotomicNumber::one(18);
        assert_eq!(a.checked_add(&b), Err(Error::ConductorMismatch(9, 18)));
        assert_eq!(z54.mul_root(53), CyclotomicNumber::one(54));
    }

    #[test]
    fn root_sums_vanish() {
        let n = 54;
        for order in arith::divisors(n) {
            let mut sum = CyclotomicNumber::zero(n);
            for k in 0..order {
                sum = &sum + &CyclotomicNumber::root_of_unity(n, order, k as i64).unwrap();
            }
            if order == 1 {
                assert!(sum.is_one());
            } else {
                assert!(sum.is_zero(), "order {order}");
            }
            for k in 0..order {
                let z = CyclotomicNumber::root_of_unity(n, order, k as i64).unwrap();
                assert!(z.pow(order).is_one());
            }
        }
    }

    fn arb_number(n: u64) -> impl Strategy<Value = CyclotomicNumber> {
        prop::collection::vec((-5i64..=5, 0u64..n, 1i64..=4), 0..5).prop_map(move |terms| {
            let mut x = CyclotomicNumber::zero(n);
            for (c, e, d) in terms {
                let q = Rational::new(c.into(), d.into());
                x = &x + &CyclotomicNumber::root_of_unity(n, n, e as i64).unwrap().scale(&q);
            }
            x
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_number(18), b in arb_number(18), c in arb_number(18)) {
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a * &CyclotomicNumber::one(18), a.clone());
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            let mut acc = ProductSum::new(a.field().clone());
            acc.add_product(&a, &b);
            acc.add_product(&b, &c);
            prop_assert_eq!(acc.finish(), &(&a * &b) + &(&b * &c));
        }

        #[test]
        fn canonical_reduction(e in 0u64..54, f in 0u64..54) {
            // zeta^e * zeta^f computed two ways lands on one representation
            let x = CyclotomicNumber::root_of_unity(54, 54, e as i64).unwrap();
            let y = CyclotomicNumber::root_of_unity(54, 54, f as i64).unwrap();
            let direct = CyclotomicNumber::root_of_unity(54, 54, (e + f) as i64).unwrap();
            prop_assert_eq!(&x * &y, direct.clone());
            prop_assert_eq!(x.mul_root(f), direct);
        }
    }
}
