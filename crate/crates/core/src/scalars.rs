//! Exact coefficient arithmetic.
//!
//! Everything lives on the half-integer grid `s = t^(1/2)`: a term `t^(m/2)`
//! is stored with integer s-exponent `m`. [`SPoly`] is a Laurent polynomial
//! in `s` over ℚ and [`SRatFunc`] a reduced quotient of two of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Laurent polynomial in `s = t^(1/2)` with rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl SPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    /// `c * s^exp`.
    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `s^exp`, i.e. `t^(exp/2)`.
    pub fn s_pow(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// Build from `(s-exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Polynomial in `t` from integer coefficients, lowest degree first.
    pub fn from_t_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (2 * k as i64, rat(c))),
        )
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `s`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Substitute `s -> s^i` (equivalently `t -> t^i`).
    pub fn substitute_power(&self, i: i64) -> Self {
        assert!(i >= 1, "power substitution needs a positive exponent");
        Self {
            terms: self.terms.iter().map(|(e, v)| (e * i, v.clone())).collect(),
        }
    }

    /// Substitute `s -> -s`.
    pub fn negate_s(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, if e.rem_euclid(2) == 1 { -v } else { v.clone() }))
                .collect(),
        }
    }

    /// Evaluate at a rational value of `s`. Negative exponents need `s != 0`.
    pub fn eval_s(&self, s: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(s.clone(), *e as usize)
            } else {
                if s.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                num_traits::pow(s.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    /// Value at `s = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// True if every exponent is even, i.e. only integer powers of `t` occur.
    pub fn has_integer_t_powers(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Drop all terms with s-exponent `>= order`.
    pub fn truncate_below(&self, order: i64) -> Self {
        Self {
            terms: self.terms.range(..order).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Dense coefficient vector of `self / s^min_exp`, lowest first.
    fn to_dense(&self) -> (i64, Vec<BigRational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(offset: i64, v: &[BigRational]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (offset + i as i64, c.clone())))
    }
}

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPoly({self})")
    }
}

fn fmt_t_power(exp: i64) -> String {
    if exp % 2 == 0 {
        match exp / 2 {
            1 => "t".to_string(),
            k => format!("t^{k}"),
        }
    } else {
        format!("t^{{{exp}/2}}")
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_t_power(*e))?;
            } else {
                write!(f, "{abs}*{}", fmt_t_power(*e))?;
            }
        }
        Ok(())
    }
}

impl Add for &SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&SPoly> for SPoly {
    fn add_assign(&mut self, rhs: &SPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        SPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &SPoly {
    type Output = SPoly;
    fn mul(self, rhs: &SPoly) -> SPoly {
        let mut out = SPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(SPoly, Add, add);
forward_owned_binop!(SPoly, Sub, sub);
forward_owned_binop!(SPoly, Mul, mul);

// Dense polynomial helpers over ℚ, coefficients lowest degree first.

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder and quotient of `a / b`; `b` must be nonzero.
fn dense_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lb;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[k + j] -= t;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn dense_monic(v: &mut [BigRational]) {
    if let Some(l) = v.last().cloned() {
        for c in v.iter_mut() {
            *c = &*c / &l;
        }
    }
}

fn dense_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, mut r) = dense_divrem(&x, &y);
        dense_monic(&mut r);
        x = y;
        y = r;
    }
    dense_monic(&mut x);
    x
}

/// Monic gcd of two polynomials in `s`, ignoring powers of `s` (Laurent units).
pub fn spoly_gcd(a: &SPoly, b: &SPoly) -> SPoly {
    let (_, da) = a.to_dense();
    let (_, db) = b.to_dense();
    SPoly::from_dense(0, &dense_gcd(&da, &db))
}

/// Reduced rational function `num / den` in `s`.
///
/// Canonical form: `den` is monic with a nonzero constant term and is coprime
/// to `num`; any power of `s` is carried by `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SRatFunc {
    num: SPoly,
    den: SPoly,
}

impl Default for SRatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl SRatFunc {
    pub fn zero() -> Self {
        Self {
            num: SPoly::zero(),
            den: SPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(SPoly::one())
    }

    pub fn from_poly(p: SPoly) -> Self {
        Self {
            num: p,
            den: SPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(SPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `s^exp`.
    pub fn s_pow(exp: i64) -> Self {
        Self::from_poly(SPoly::s_pow(exp))
    }

    pub fn t_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// Reduced representative of `num / den`.
    pub fn new(num: SPoly, den: SPoly) -> Result<Self> {
        srat_normalize(num, den)
    }

    pub fn numer(&self) -> &SPoly {
        &self.num
    }

    pub fn denom(&self) -> &SPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Result<SPoly> {
        as_polynomial(self)
    }

    pub fn eval_at_t1(&self) -> Result<BigRational> {
        eval_at_t1(self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// `s -> s^i`. Coprimality and monicity survive the substitution, so no
    /// renormalisation is needed.
    pub fn substitute_power(&self, i: i64) -> Self {
        if i == 1 {
            return self.clone();
        }
        Self {
            num: self.num.substitute_power(i),
            den: self.den.substitute_power(i),
        }
    }

    /// `s -> -s`.
    pub fn negate_s(&self) -> Self {
        srat_normalize(self.num.negate_s(), self.den.negate_s()).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        srat_normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Power-series expansion in `s`, keeping exponents `< order`.
    pub fn series(&self, order: i64) -> SPoly {
        if self.den.is_one() {
            return self.num.truncate_below(order);
        }
        let Some(lo) = self.num.min_exp() else {
            return SPoly::zero();
        };
        let n = (order - lo).max(0) as usize;
        let (_, den) = self.den.to_dense();
        let (_, num) = self.num.to_dense();
        // den has nonzero constant term: invert it as a power series.
        let d0 = den[0].clone();
        let mut out = vec![BigRational::zero(); n];
        for k in 0..n {
            let mut acc = num.get(k).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..=k.min(den.len() - 1) {
                acc -= &den[j] * &out[k - j];
            }
            out[k] = acc / &d0;
        }
        SPoly::from_dense(lo, &out)
    }
}

/// Reduced representative of `num / den`.
pub fn srat_normalize(num: SPoly, den: SPoly) -> Result<SRatFunc> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(SRatFunc::zero());
    }
    if den.terms.len() == 1 {
        let (e, c) = den.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
        return Ok(SRatFunc {
            num: num.shift(-e).scale(&c.recip()),
            den: SPoly::one(),
        });
    }
    let (na, dn) = num.to_dense();
    let (db, dd) = den.to_dense();
    let g = dense_gcd(&dn, &dd);
    let (mut qn, mut qd) = if g.len() > 1 {
        let (qn, _) = dense_divrem(&dn, &g);
        let (qd, _) = dense_divrem(&dd, &g);
        (qn, qd)
    } else {
        (dn, dd)
    };
    let lc = qd.last().unwrap().clone();
    for c in qn.iter_mut().chain(qd.iter_mut()) {
        *c = &*c / &lc;
    }
    Ok(SRatFunc {
        num: SPoly::from_dense(na - db, &qn),
        den: SPoly::from_dense(0, &qd),
    })
}

/// The numerator of `f`, provided its reduced denominator is 1.
pub fn as_polynomial(f: &SRatFunc) -> Result<SPoly> {
    if f.den.is_one() {
        Ok(f.num.clone())
    } else {
        Err(Error::NotPolynomial(f.to_string()))
    }
}

/// Value of `f` at `t = 1` (equivalently `s = 1`) after cancellation.
pub fn eval_at_t1(f: &SRatFunc) -> Result<BigRational> {
    let d = f.den.eval_at_one();
    if d.is_zero() {
        return Err(Error::PoleAtOne(f.to_string()));
    }
    Ok(f.num.eval_at_one() / d)
}

impl From<SPoly> for SRatFunc {
    fn from(p: SPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRational> for SRatFunc {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

impl From<i64> for SRatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Debug for SRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRatFunc({self})")
    }
}

impl fmt::Display for SRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Display with a positive lowest denominator coefficient: 1/(1 - t).
        let flip = self.den.terms().next().is_some_and(|(_, c)| c.is_negative());
        let (num, den) = if flip { (-&self.num, -&self.den) } else { (self.num.clone(), self.den.clone()) };
        if num.terms().count() == 1 && !num.coeff(num.min_exp().unwrap()).is_negative() {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

impl Add for &SRatFunc {
    type Output = SRatFunc;
    fn add(self, rhs: &SRatFunc) -> SRatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return SRatFunc::from_poly(&self.num + &rhs.num);
            }
            return srat_normalize(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        srat_normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl AddAssign<&SRatFunc> for SRatFunc {
    fn add_assign(&mut self, rhs: &SRatFunc) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Sub for &SRatFunc {
    type Output = SRatFunc;
    fn sub(self, rhs: &SRatFunc) -> SRatFunc {
        self + &(-rhs)
    }
}

impl Neg for &SRatFunc {
    type Output = SRatFunc;
    fn neg(self) -> SRatFunc {
        SRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for SRatFunc {
    type Output = SRatFunc;
    fn neg(self) -> SRatFunc {
        -&self
    }
}

impl Mul for &SRatFunc {
    type Output = SRatFunc;
    fn mul(self, rhs: &SRatFunc) -> SRatFunc {
        if self.is_zero() || rhs.is_zero() {
            return SRatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return SRatFunc::from_poly(&self.num * &rhs.num);
        }
        srat_normalize(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

forward_owned_binop!(SRatFunc, Add, add);
forward_owned_binop!(SRatFunc, Sub, sub);
forward_owned_binop!(SRatFunc, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn one_minus_t() -> SPoly {
        SPoly::from_t_coeffs(&[1, -1])
    }

    #[test]
    fn normalize_self_cancellation() {
        let f = srat_normalize(one_minus_t(), one_minus_t()).unwrap();
        assert!(f.is_one());
    }

    #[test]
    fn normalize_factorization() {
        let f = srat_normalize(SPoly::from_t_coeffs(&[1, 0, -1]), one_minus_t()).unwrap();
        assert_eq!(f, SRatFunc::from_poly(SPoly::from_t_coeffs(&[1, 1])));
    }

    #[test]
    fn normalize_s_grid() {
        let f = srat_normalize(SPoly::s_pow(2), SPoly::one()).unwrap();
        assert_eq!(f.as_polynomial().unwrap(), SPoly::t_pow(1));
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        assert_eq!(
            srat_normalize(SPoly::one(), SPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn normalize_moves_s_powers_into_numerator() {
        // s / (s^3 - s^2) = s^-1 / (s - 1) = -s^-1 / (1 - s) ... monic den: s^-1/(s-1)
        let num = SPoly::s_pow(1);
        let den = &SPoly::s_pow(3) - &SPoly::s_pow(2);
        let f = srat_normalize(num, den).unwrap();
        assert_eq!(f.denom(), &(&SPoly::s_pow(1) - &SPoly::one()));
        assert_eq!(f.numer(), &SPoly::s_pow(-1));
    }

    #[test]
    fn as_polynomial_cases() {
        let p = SPoly::from_t_coeffs(&[1, 1]);
        assert_eq!(as_polynomial(&SRatFunc::from_poly(p.clone())).unwrap(), p);
        let q = SRatFunc::new(SPoly::from_t_coeffs(&[1, 0, -1]), one_minus_t()).unwrap();
        assert_eq!(as_polynomial(&q).unwrap(), p);
        let pole = SRatFunc::new(SPoly::one(), one_minus_t()).unwrap();
        assert!(matches!(as_polynomial(&pole), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn eval_at_t1_cases() {
        assert_eq!(
            eval_at_t1(&SRatFunc::from_poly(one_minus_t())).unwrap(),
            rat(0)
        );
        let q = SRatFunc::new(SPoly::from_t_coeffs(&[1, 0, -1]), one_minus_t()).unwrap();
        assert_eq!(eval_at_t1(&q).unwrap(), rat(2));
        let pole = SRatFunc::new(SPoly::one(), one_minus_t()).unwrap();
        assert!(matches!(eval_at_t1(&pole), Err(Error::PoleAtOne(_))));
    }

    #[test]
    fn series_of_geometric() {
        let f = SRatFunc::new(SPoly::one(), one_minus_t()).unwrap();
        assert_eq!(f.series(7), SPoly::from_t_coeffs(&[1, 1, 1, 1]));
    }

    #[test]
    fn display_half_powers() {
        let p = SPoly::from_terms([(0, rat(1)), (1, rat(-3)), (2, ratio(1, 6)), (-1, rat(2))]);
        assert_eq!(p.to_string(), "2*t^{-1/2} + 1 - 3*t^{1/2} + 1/6*t");
    }

    fn arb_spoly() -> impl Strategy<Value = SPoly> {
        prop::collection::vec((-2i64..5, -4i64..5), 0..4)
            .prop_map(|v| SPoly::from_terms(v.into_iter().map(|(e, c)| (e, rat(c)))))
    }

    fn arb_nonzero_spoly() -> impl Strategy<Value = SPoly> {
        arb_spoly().prop_filter("nonzero", |p| !p.is_zero())
    }

    fn arb_srat() -> impl Strategy<Value = SRatFunc> {
        (arb_spoly(), arb_nonzero_spoly()).prop_map(|(n, d)| srat_normalize(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_srat(), b in arb_srat(), c in arb_srat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, SRatFunc::zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.recip().unwrap()).is_one());
            }
        }

        #[test]
        fn normalize_is_idempotent_and_coprime(n in arb_spoly(), d in arb_nonzero_spoly()) {
            let f = srat_normalize(n, d).unwrap();
            let g = srat_normalize(f.numer().clone(), f.denom().clone()).unwrap();
            prop_assert_eq!(&f, &g);
            prop_assert!(spoly_gcd(f.numer(), f.denom()).is_one() || f.is_zero());
            prop_assert!(f.denom().leading_coeff().unwrap().is_one());
            prop_assert_eq!(f.denom().min_exp(), Some(0));
        }

        #[test]
        fn cancellation_recovers_polynomial(p in arb_nonzero_spoly(), q in arb_nonzero_spoly()) {
            let f = srat_normalize(&p * &q, q).unwrap();
            prop_assert_eq!(as_polynomial(&f).unwrap(), p);
        }
    }
}
