//! Truncated symmetric functions in the power-sum basis.
//!
//! A [`SymFunc`] is a finite sum `Σ c_λ p_λ` with coefficients in
//! [`SRatFunc`] (so `t` and `t^(1/2)` may appear), kept exactly up to
//! p-degree `pbound`. Terms of p-degree above the bound are discarded by every
//! operation; two series are comparable only up to the smaller bound.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
pub use crate::partition::Partition;
use crate::scalars::SRatFunc;

#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    pbound: usize,
    coeffs: BTreeMap<Partition, SRatFunc>,
}

impl SymFunc {
    pub fn zero(pbound: usize) -> Self {
        Self {
            pbound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(pbound: usize, c: SRatFunc) -> Self {
        Self::monomial(pbound, Partition::empty(), c)
    }

    pub fn one(pbound: usize) -> Self {
        Self::constant(pbound, SRatFunc::one())
    }

    /// `c * p_λ`, dropped if `|λ| > pbound`.
    pub fn monomial(pbound: usize, lambda: Partition, c: SRatFunc) -> Self {
        let mut f = Self::zero(pbound);
        f.add_term(lambda, c);
        f
    }

    /// The power sum `p_i`.
    pub fn p(pbound: usize, i: u32) -> Self {
        Self::monomial(pbound, Partition::single(i), SRatFunc::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, SRatFunc)>>(pbound: usize, iter: I) -> Self {
        let mut f = Self::zero(pbound);
        for (l, c) in iter {
            f.add_term(l, c);
        }
        f
    }

    pub fn pbound(&self) -> usize {
        self.pbound
    }

    pub fn add_term(&mut self, lambda: Partition, c: SRatFunc) {
        if c.is_zero() || lambda.size() > self.pbound {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> SRatFunc {
        self.coeffs.get(lambda).cloned().unwrap_or_else(SRatFunc::zero)
    }

    pub fn constant_term(&self) -> SRatFunc {
        self.coeff(&Partition::empty())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &SRatFunc)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same series with a smaller bound.
    pub fn truncate(&self, pbound: usize) -> Self {
        Self::from_terms(
            pbound.min(self.pbound),
            self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    /// Homogeneous component of p-degree `d`.
    pub fn degree_part(&self, d: usize) -> Self {
        Self::from_terms(
            self.pbound,
            self.coeffs
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    fn filter_degree(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self::from_terms(
            self.pbound,
            self.coeffs
                .iter()
                .filter(|(l, _)| keep(l.size()))
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn odd_part(&self) -> Self {
        self.filter_degree(|d| d % 2 == 1)
    }

    pub fn even_part(&self) -> Self {
        self.filter_degree(|d| d % 2 == 0)
    }

    /// Largest p-degree present.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|l| l.size()).max()
    }

    /// True if both agree on every term of p-degree `<= d`.
    pub fn agrees_to(&self, other: &Self, d: usize) -> bool {
        self.truncate(d) == other.truncate(d)
    }

    pub fn scale(&self, c: &SRatFunc) -> Self {
        Self::from_terms(self.pbound, self.coeffs.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::from_terms(
            self.pbound,
            self.coeffs.iter().map(|(l, v)| (l.clone(), v.scale(c))),
        )
    }

    /// Apply `s -> s^k` to every coefficient.
    fn map_coeffs(&self, f: impl Fn(&SRatFunc) -> SRatFunc) -> Self {
        Self::from_terms(self.pbound, self.coeffs.iter().map(|(l, v)| (l.clone(), f(v))))
    }

    /// `F[p_k]`: relabel `p_i -> p_{ik}`, coefficients untouched.
    pub fn relabel(&self, k: u32) -> Self {
        Self::from_terms(
            self.pbound,
            self.coeffs.iter().map(|(l, v)| (l.scaled(k), v.clone())),
        )
    }

    /// `p_k[F]`: `p_i -> p_{ik}` together with `t -> t^k` in the coefficients.
    pub fn adams(&self, k: u32) -> Self {
        Self::from_terms(
            self.pbound,
            self.coeffs
                .iter()
                .filter(|(l, _)| l.size() * k as usize <= self.pbound)
                .map(|(l, v)| (l.scaled(k), v.substitute_power(k as i64))),
        )
    }

    /// `F^~`: negate every even-indexed power sum.
    pub fn tilde(&self) -> Self {
        Self::from_terms(
            self.pbound,
            self.coeffs.iter().map(|(l, v)| {
                if l.sign() == 1 {
                    (l.clone(), v.clone())
                } else {
                    (l.clone(), -v)
                }
            }),
        )
    }

    /// Formal partial derivative in `p_1`. Known exactly only to `pbound - 1`.
    pub fn d_p1(&self) -> Self {
        let mut out = Self::zero(self.pbound.saturating_sub(1));
        for (l, c) in &self.coeffs {
            let m = l.multiplicity(1);
            if m > 0 {
                let rest = l.without_part(1).unwrap();
                out.add_term(rest, c.scale(&BigRational::from_integer(BigInt::from(m))));
            }
        }
        out
    }

    /// Truncated product.
    pub fn mul_trunc(&self, other: &Self) -> Self {
        let pbound = self.pbound.min(other.pbound);
        let mut out = Self::zero(pbound);
        // Group by degree so the inner loop can stop early.
        let mut by_deg: Vec<Vec<(&Partition, &SRatFunc)>> = vec![Vec::new(); pbound + 1];
        for (l, c) in &other.coeffs {
            if l.size() <= pbound {
                by_deg[l.size()].push((l, c));
            }
        }
        for (la, ca) in &self.coeffs {
            let da = la.size();
            if da > pbound {
                continue;
            }
            for bucket in &by_deg[..=pbound - da] {
                for (lb, cb) in bucket {
                    out.add_term(la.union(lb), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.pbound);
        for _ in 0..k {
            acc = acc.mul_trunc(self);
        }
        acc
    }

    /// Ordinary exponential `Σ F^k / k!` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Self::one(self.pbound);
        let mut term = Self::one(self.pbound);
        for k in 1..=self.pbound {
            term = term
                .mul_trunc(self)
                .scale_rational(&BigRational::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Plethysm `F[G]`: the `p_i` slot of `F` receives `G` with
    /// `p_j -> p_{ij}` and `s -> s^i`; the coefficients of `F` are untouched.
    pub fn plethysm(&self, g: &Self) -> Result<Self> {
        plethysm(self, g)
    }

    /// The series `H` with `self[H] = H[self] = p_1`.
    pub fn plethystic_inverse(&self) -> Result<Self> {
        plethystic_inverse(self)
    }
}

/// Plethysm `F[G]`, truncated at the smaller bound.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    if !g.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let pbound = f.pbound.min(g.pbound);
    let g = g.truncate(pbound);
    let mut adams: HashMap<u32, SymFunc> = HashMap::new();
    let mut powers: HashMap<(u32, usize), SymFunc> = HashMap::new();
    let mut out = SymFunc::zero(pbound);
    for (lambda, c) in &f.coeffs {
        if lambda.size() > pbound {
            continue;
        }
        let mut term = SymFunc::one(pbound);
        for (i, m) in lambda.multiplicities() {
            let gi = adams.entry(i).or_insert_with(|| g.adams(i)).clone();
            let pw = powers
                .entry((i, m))
                .or_insert_with(|| gi.pow(m as u32))
                .clone();
            term = term.mul_trunc(&pw);
            if term.is_zero() {
                break;
            }
        }
        for (l, v) in term.coeffs {
            out.add_term(l, c * &v);
        }
    }
    Ok(out)
}

/// Plethystic inverse of `G = c p_1 + (p-degree >= 2)`, solved degree by degree.
pub fn plethystic_inverse(g: &SymFunc) -> Result<SymFunc> {
    if !g.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    if g.pbound == 0 {
        return Ok(SymFunc::zero(0));
    }
    let c = g.coeff(&Partition::single(1));
    let cinv = c.recip().map_err(|_| Error::DegenerateLinearTerm)?;
    // Other degree-1 terms cannot exist, so p_1/c solves degree 1.
    let pbound = g.pbound;
    let mut h = SymFunc::monomial(pbound, Partition::single(1), cinv.clone());
    for d in 2..=pbound {
        let r = plethysm(&g.truncate(d), &h.truncate(d))?;
        let rd = r.degree_part(d);
        for (l, v) in rd.coeffs {
            h.add_term(l, -(&v * &cinv));
        }
    }
    Ok(h)
}

/// Graded trace of the permutation of cycle type `lambda` under the
/// representation with cycle index `z`: `z_λ` times the `p_λ` coefficient.
pub fn extract_character(z: &SymFunc, lambda: &Partition) -> Result<SRatFunc> {
    if lambda.size() > z.pbound {
        return Err(Error::BeyondTruncation {
            partition: lambda.parts().to_vec(),
            pbound: z.pbound,
        });
    }
    Ok(z.coeff(lambda).scale(&BigRational::from_integer(lambda.z())))
}

/// `Exp = exp(Σ p_i / i)`: coefficient `1/z_λ` on every `p_λ`.
pub fn make_exp(pbound: usize) -> SymFunc {
    SymFunc::from_terms(
        pbound,
        Partition::all_up_to(pbound)
            .into_iter()
            .map(|l| {
                let c = BigRational::new(BigInt::one(), l.z());
                (l, SRatFunc::from_rational(c))
            }),
    )
}

/// Odd p-degree part of `Exp`.
pub fn make_sinh(pbound: usize) -> SymFunc {
    make_exp(pbound).odd_part()
}

/// Even p-degree part of `Exp`.
pub fn make_cosh(pbound: usize) -> SymFunc {
    make_exp(pbound).even_part()
}

/// `Exp^{-1} = exp(-Σ p_i / i)`.
pub fn make_exp_inverse(pbound: usize) -> SymFunc {
    SymFunc::from_terms(
        pbound,
        Partition::all_up_to(pbound).into_iter().map(|l| {
            let sign = if l.len() % 2 == 0 { 1 } else { -1 };
            let c = BigRational::new(BigInt::from(sign), l.z());
            (l, SRatFunc::from_rational(c))
        }),
    )
}

/// Plethystic inverse of `Sinh`.
pub fn make_arcsinh(pbound: usize) -> SymFunc {
    plethystic_inverse(&make_sinh(pbound)).expect("Sinh has linear term p_1")
}

/// `X = Σ_{k odd} Arcsinh^~[p_k] / k`.
pub fn make_x(pbound: usize) -> SymFunc {
    make_x_from(&make_arcsinh(pbound).tilde())
}

pub(crate) fn make_x_from(arcsinh_tilde: &SymFunc) -> SymFunc {
    let pbound = arcsinh_tilde.pbound();
    let mut x = SymFunc::zero(pbound);
    for k in (1..=pbound as u32).step_by(2) {
        let term = arcsinh_tilde
            .relabel(k)
            .scale_rational(&BigRational::new(BigInt::one(), BigInt::from(k)));
        x = &x + &term;
    }
    x
}

/// `C = Cosh^~[Arcsinh^~]`.
pub fn make_c(pbound: usize) -> SymFunc {
    let at = make_arcsinh(pbound).tilde();
    plethysm(&make_cosh(pbound).tilde(), &at).expect("Arcsinh has no constant term")
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.truncate(self.pbound.min(rhs.pbound));
        for (l, c) in &rhs.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.mul_trunc(rhs)
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[pbound={}]({self})", self.pbound)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if l.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*p{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, ratio, SPoly};
    use proptest::prelude::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> SRatFunc {
        SRatFunc::from_rational(ratio(n, d))
    }

    /// Independent oracle for Exp: expand exp(Σ p_i/i) by repeated
    /// multiplication of the truncated exponential series of each p_i/i.
    fn exp_by_factors(pbound: usize) -> SymFunc {
        let mut acc = SymFunc::one(pbound);
        for i in 1..=pbound as u32 {
            let x = SymFunc::p(pbound, i).scale_rational(&ratio(1, i as i64));
            let mut series = SymFunc::one(pbound);
            let mut term = SymFunc::one(pbound);
            for k in 1..=pbound {
                term = term.mul_trunc(&x).scale_rational(&ratio(1, k as i64));
                series = &series + &term;
            }
            acc = acc.mul_trunc(&series);
        }
        acc
    }

    #[test]
    fn exp_matches_expansion() {
        assert_eq!(make_exp(8), exp_by_factors(8));
        let e3 = make_exp(3);
        let expected = SymFunc::from_terms(
            3,
            [
                (part(&[]), q(1, 1)),
                (part(&[1]), q(1, 1)),
                (part(&[1, 1]), q(1, 2)),
                (part(&[2]), q(1, 2)),
                (part(&[1, 1, 1]), q(1, 6)),
                (part(&[2, 1]), q(1, 2)),
                (part(&[3]), q(1, 3)),
            ],
        );
        assert_eq!(e3, expected);
        let s3 = make_sinh(3);
        assert_eq!(s3.coeff(&part(&[1])), q(1, 1));
        assert_eq!(s3.coeff(&part(&[2, 1])), q(1, 2));
        assert!(s3.coeff(&part(&[2])).is_zero());
        assert!(make_cosh(4).constant_term().is_one());
    }

    #[test]
    fn ring_examples() {
        let p1 = SymFunc::p(4, 1);
        assert_eq!(&p1 + &p1, p1.scale_rational(&rat(2)));
        assert_eq!(&p1 * &p1, SymFunc::monomial(4, part(&[1, 1]), SRatFunc::one()));
        let one = SymFunc::one(4);
        let prod = &(&one + &p1) * &(&one - &p1);
        assert_eq!(prod, &one - &(&p1 * &p1));
    }

    #[test]
    fn tilde_examples() {
        let p2 = SymFunc::p(4, 2);
        assert_eq!(p2.tilde(), -&p2);
        let p1 = SymFunc::p(4, 1);
        assert_eq!(p1.tilde(), p1);
    }

    #[test]
    fn plethysm_examples() {
        let p2 = SymFunc::p(8, 2);
        let p3 = SymFunc::p(8, 3);
        assert_eq!(plethysm(&p2, &p3).unwrap(), SymFunc::p(8, 6));
        let sp1 = SymFunc::monomial(8, part(&[1]), SRatFunc::s_pow(1));
        assert_eq!(
            plethysm(&p2, &sp1).unwrap(),
            SymFunc::monomial(8, part(&[2]), SRatFunc::t_pow(1))
        );
        assert_eq!(
            plethysm(&p2, &SymFunc::one(8)),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn inverse_examples() {
        let p1 = SymFunc::p(6, 1);
        assert_eq!(plethystic_inverse(&p1).unwrap(), p1);

        // Oracle values solved by hand: (Exp-1)[H] = p1 to degree 2 gives
        // H = p1 - (p1^2 + p2)/2 + ...
        let log = plethystic_inverse(&(&make_exp(4) - &SymFunc::one(4))).unwrap();
        assert_eq!(log.coeff(&part(&[1])), q(1, 1));
        assert_eq!(log.coeff(&part(&[1, 1])), q(-1, 2));
        assert_eq!(log.coeff(&part(&[2])), q(-1, 2));

        let asinh = make_arcsinh(5);
        assert_eq!(asinh.coeff(&part(&[1, 1, 1])), q(-1, 6));
        assert_eq!(asinh.coeff(&part(&[2, 1])), q(-1, 2));
        assert_eq!(asinh.coeff(&part(&[3])), q(-1, 3));
        assert!(asinh.degree_part(2).is_zero() && asinh.degree_part(4).is_zero());

        assert_eq!(
            plethystic_inverse(&SymFunc::p(4, 2)),
            Err(Error::DegenerateLinearTerm)
        );
    }

    #[test]
    fn d_p1_examples() {
        let half_p1sq = SymFunc::monomial(5, part(&[1, 1]), q(1, 2));
        assert_eq!(half_p1sq.d_p1(), SymFunc::p(4, 1));
        assert!(SymFunc::p(5, 2).d_p1().is_zero());
        assert_eq!(make_exp(7).d_p1(), make_exp(6));
    }

    #[test]
    fn x_and_c() {
        let x = make_x(8);
        assert_eq!(x.coeff(&part(&[1])), q(1, 1));
        for (l, _) in x.iter() {
            assert!(
                l.parts().iter().all(|p| p.is_power_of_two()),
                "X has a term at {l}"
            );
        }
        let c = make_c(8);
        assert!(c.constant_term().is_one());
        for (l, _) in c.iter() {
            assert!(l.parts().iter().all(|p| p.is_power_of_two()), "C has a term at {l}");
        }
    }

    #[test]
    fn round_trips() {
        let p = 8;
        let sinh = make_sinh(p);
        let asinh = make_arcsinh(p);
        let p1 = SymFunc::p(p, 1);
        assert_eq!(plethysm(&asinh, &sinh).unwrap(), p1);
        assert_eq!(plethysm(&sinh, &asinh).unwrap(), p1);
        assert_eq!(plethysm(&sinh.tilde(), &asinh.tilde()).unwrap(), p1);
        assert_eq!(plethysm(&asinh.tilde(), &sinh.tilde()).unwrap(), p1);
    }

    #[test]
    fn extract_examples() {
        let e = make_exp(6);
        for l in Partition::all_up_to(6) {
            assert!(extract_character(&e, &l).unwrap().is_one());
        }
        assert!(matches!(
            extract_character(&e, &Partition::ones(7)),
            Err(Error::BeyondTruncation { .. })
        ));
    }

    #[test]
    fn series_text() {
        let f = SymFunc::monomial(3, part(&[2, 1]), SRatFunc::from_poly(SPoly::from_t_coeffs(&[1, -1])));
        assert_eq!(f.to_string(), "(1 - t)*p[2,1]");
    }

    // Random series with small rational/t coefficients on low p-degrees.
    fn arb_symfunc(pbound: usize, min_deg: usize) -> impl Strategy<Value = SymFunc> {
        let labels: Vec<Partition> = Partition::all_up_to(pbound)
            .into_iter()
            .filter(|l| l.size() >= min_deg)
            .collect();
        let n = labels.len();
        prop::collection::vec((0..n, -3i64..4, 0i64..3), 0..5).prop_map(move |v| {
            SymFunc::from_terms(
                pbound,
                v.into_iter().map(|(i, c, e)| {
                    (
                        labels[i].clone(),
                        SRatFunc::from_poly(SPoly::monomial(e, rat(c))),
                    )
                }),
            )
        })
    }

    fn arb_odd_symfunc(pbound: usize) -> impl Strategy<Value = SymFunc> {
        arb_symfunc(pbound, 1).prop_map(|f| f.odd_part())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn plethysm_is_associative(
            f in arb_symfunc(6, 0),
            g in arb_symfunc(6, 1),
            h in arb_symfunc(6, 1),
        ) {
            let left = plethysm(&plethysm(&f, &g).unwrap(), &h).unwrap();
            let right = plethysm(&f, &plethysm(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn plethysm_units(f in arb_symfunc(6, 0), g in arb_symfunc(6, 1)) {
            let p1 = SymFunc::p(6, 1);
            prop_assert_eq!(plethysm(&f, &p1).unwrap(), f.clone());
            prop_assert_eq!(plethysm(&p1, &g).unwrap(), g);
        }

        #[test]
        fn tilde_is_an_involution(f in arb_symfunc(6, 0)) {
            prop_assert_eq!(f.tilde().tilde(), f);
        }

        #[test]
        fn tilde_commutes_with_odd_plethysm(f in arb_symfunc(6, 0), g in arb_odd_symfunc(6)) {
            let left = plethysm(&f.tilde(), &g.tilde()).unwrap();
            let right = plethysm(&f, &g).unwrap().tilde();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn d_p1_is_a_derivation(f in arb_symfunc(6, 0), g in arb_symfunc(6, 0)) {
            let left = (&f * &g).d_p1();
            let right = &(&f.d_p1() * &g.truncate(5)) + &(&f.truncate(5) * &g.d_p1());
            prop_assert_eq!(left, right);
        }
    }
}
