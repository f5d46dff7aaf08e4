//! Closed-form graded characters.
//!
//! For `π ∈ S_n` with `n_1 + 1` fixed points and `n_m` cycles of length
//! `m > 1`, the graded character is a product over cycle lengths `l` of
//! factors built from the Möbius polynomials `γ_l(t)` and the counts `o_l` of
//! shorter cycles whose length divides `l` by a power of two. Everything is
//! computed in [`SRatFunc`] because the fixed-point-free case (`n_1 = -1`)
//! passes through `1/(1 - t)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedCharacter;
use crate::partition::Partition;
use crate::scalars::{rat, SPoly, SRatFunc};

/// Cycle counts of an honest permutation: `m -> n_m`, zero counts omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct CycleType {
    counts: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn from_counts<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (m, n) in iter {
            if m == 0 {
                return Err(Error::InvalidCycleType("cycle length 0".into()));
            }
            if n > 0 {
                *counts.entry(m).or_insert(0) += n;
            }
        }
        Ok(Self { counts })
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        Self {
            counts: lambda
                .multiplicities()
                .into_iter()
                .map(|(m, n)| (m, n as u32))
                .collect(),
        }
    }

    /// Cycle type of a permutation given as its image vector on `0..n`.
    pub fn of_permutation(perm: &[usize]) -> Self {
        Self::from_partition(&crate::sn::cycle_type(perm))
    }

    pub fn identity(n: u32) -> Self {
        Self::from_counts([(1, n)]).unwrap()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&m, &n) in &self.counts {
            parts.extend(std::iter::repeat_n(m, n as usize));
        }
        Partition::new(parts).unwrap()
    }

    pub fn count(&self, m: u32) -> u32 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    /// Size `n` of the permuted set.
    pub fn n(&self) -> u32 {
        self.counts.iter().map(|(m, n)| m * n).sum()
    }

    pub fn fixed_points(&self) -> u32 {
        self.count(1)
    }

    /// Same permutation with one more fixed point (the `S_m ⊂ S_{m+1}` embedding).
    pub fn with_fixed_point(&self) -> Self {
        let mut c = self.clone();
        *c.counts.entry(1).or_insert(0) += 1;
        c
    }
}

/// Parameters of the product formula: `n1` is one less than the number of
/// fixed points and may be `-1`; `counts` holds `n_m` for `m >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualCycleType {
    n1: i64,
    counts: BTreeMap<u32, u32>,
}

impl VirtualCycleType {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(n1: i64, higher: I) -> Result<Self> {
        if n1 < -1 {
            return Err(Error::InvalidCycleType(format!("n1 = {n1} < -1")));
        }
        let mut counts = BTreeMap::new();
        for (m, n) in higher {
            if m < 2 {
                return Err(Error::InvalidCycleType(format!("higher cycle length {m}")));
            }
            if n > 0 {
                *counts.entry(m).or_insert(0) += n;
            }
        }
        Ok(Self { n1, counts })
    }

    pub fn n1(&self) -> i64 {
        self.n1
    }

    /// `n_m` with the virtual convention at `m = 1`.
    pub fn count(&self, m: u32) -> i64 {
        if m == 1 {
            self.n1
        } else {
            self.counts.get(&m).copied().unwrap_or(0) as i64
        }
    }

    /// Size of the permuted set: `n1 + 1 + Σ m n_m`.
    pub fn n(&self) -> i64 {
        self.n1 + 1 + self.counts.iter().map(|(m, n)| (m * n) as i64).sum::<i64>()
    }

    /// Cycle lengths that contribute a nontrivial factor: 1 and every `m`
    /// with `n_m != 0`.
    fn active_lengths(&self) -> Vec<u32> {
        let mut ls = vec![1];
        ls.extend(self.counts.keys().copied());
        ls
    }
}

/// `n1 = (fixed points) - 1`, other counts copied.
pub fn to_virtual(ct: &CycleType) -> VirtualCycleType {
    VirtualCycleType {
        n1: ct.fixed_points() as i64 - 1,
        counts: ct
            .counts
            .iter()
            .filter(|(&m, _)| m > 1)
            .map(|(&m, &n)| (m, n))
            .collect(),
    }
}

/// Möbius function by trial division.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n > 0, "mobius(0) is undefined");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Odd divisors of `l`, ascending.
fn odd_divisors(l: u32) -> impl Iterator<Item = u32> {
    (1..=l).step_by(2).filter(move |k| l % k == 0)
}

/// `γ_l(t) = Σ_{odd k | l} μ(k) t^{l(1 - 1/k)/2}`.
pub fn gamma(l: u32) -> SPoly {
    assert!(l >= 1);
    SPoly::from_terms(odd_divisors(l).map(|k| ((l - l / k) as i64, rat(mobius(k as u64)))))
}

/// `γ_l(1)`: 1 if `l` is a power of two, else 0.
fn gamma_at_one(l: u32) -> i64 {
    if l.is_power_of_two() {
        1
    } else {
        0
    }
}

/// `o_m = Σ_{k >= 1, 2^k | m} (m / 2^k) n_{m / 2^k}`, with virtual `n_1`.
pub fn o_value(m: u32, vct: &VirtualCycleType) -> i64 {
    o_from(m, |l| vct.count(l))
}

fn o_from(m: u32, count: impl Fn(u32) -> i64) -> i64 {
    let mut o = 0;
    let mut d = m;
    while d % 2 == 0 {
        d /= 2;
        o += d as i64 * count(d);
    }
    o
}

/// Product for one cycle length with count `n`:
/// `base · Π_{0 <= i <= n-2} (base + l(n-2-2i)·unit)`, where a negative range
/// means dividing by the factors with `n-1 <= i <= -1`.
fn cycle_factor(base: &SRatFunc, unit: &SRatFunc, l: u32, n: i64) -> Result<SRatFunc> {
    if n == 0 {
        return Ok(SRatFunc::one());
    }
    let factor = |i: i64| -> SRatFunc {
        let shift = l as i64 * (n - 2 - 2 * i);
        base + &unit.scale(&rat(shift))
    };
    let mut acc = base.clone();
    if n >= 1 {
        for i in 0..=n - 2 {
            acc = &acc * &factor(i);
        }
    } else {
        for i in n - 1..=-1 {
            acc = acc.checked_div(&factor(i))?;
        }
    }
    Ok(acc)
}

/// The full product as a rational function in `s = t^(1/2)`.
///
/// `odd_half_sign = -1` replaces `t^{l/2}` by `-t^{l/2}` for odd `l`, which
/// must leave the result unchanged.
pub fn graded_product(vct: &VirtualCycleType, odd_half_sign: i64) -> Result<SRatFunc> {
    assert!(odd_half_sign == 1 || odd_half_sign == -1);
    if vct.n() < 1 {
        return Err(Error::InvalidCycleType("empty permutation".into()));
    }
    let mut acc = SRatFunc::one();
    for l in vct.active_lengths() {
        let sign = if l % 2 == 1 { odd_half_sign } else { 1 };
        let unit = SRatFunc::from_poly(SPoly::monomial(l as i64, rat(sign)));
        let base = &SRatFunc::from_poly(gamma(l)) + &unit.scale(&rat(o_value(l, vct)));
        acc = &acc * &cycle_factor(&base, &unit, l, vct.count(l))?;
    }
    Ok(acc)
}

/// `Σ_k (-t)^k Tr(π | H^k)` for the permutation described by `vct`.
pub fn graded_character(vct: &VirtualCycleType) -> Result<GradedCharacter> {
    GradedCharacter::from_srat(&graded_product(vct, 1)?)
}

/// Convenience: graded character of an honest permutation of cycle type `ct`.
pub fn character_of(ct: &CycleType) -> Result<GradedCharacter> {
    graded_character(&to_virtual(ct))
}

/// `Π_l (c_l + o_l) Π_{0 <= i <= n_l - 2} (c_l + o_l + l(n_l - 2 - 2i))`, for
/// the literal cycle counts of `ct` (no virtual shift). Lengths with
/// `n_l = 0` contribute 1.
pub fn generalized_character(c: impl Fn(u32) -> SRatFunc, ct: &CycleType) -> Result<SRatFunc> {
    let counts: BTreeMap<u32, i64> = ct.counts.iter().map(|(&m, &n)| (m, n as i64)).collect();
    generalized_character_counts(c, &counts)
}

/// As [`generalized_character`] but with arbitrary integer counts, so that a
/// negative count inverts factors (a zero factor there is an error).
pub fn generalized_character_counts(
    c: impl Fn(u32) -> SRatFunc,
    counts: &BTreeMap<u32, i64>,
) -> Result<SRatFunc> {
    let count = |l: u32| counts.get(&l).copied().unwrap_or(0);
    let mut acc = SRatFunc::one();
    for (&l, &n) in counts {
        if n == 0 {
            continue;
        }
        let base = &c(l) + &SRatFunc::from_int(o_from(l, count));
        acc = &acc * &cycle_factor(&base, &SRatFunc::one(), l, n)?;
    }
    Ok(acc)
}

/// `Π_{0 <= i <= ⌊(n-3)/2⌋} (1 - (n-3-2i)^2 t)`.
pub fn poincare_polynomial(n: u32) -> GradedCharacter {
    assert!(n >= 1);
    let top = (n as i64 - 3).div_euclid(2);
    let mut acc = SPoly::one();
    for i in 0..=top {
        let a = n as i64 - 3 - 2 * i;
        acc = &acc * &SPoly::from_t_coeffs(&[1, -a * a]);
    }
    GradedCharacter::from_spoly(&acc).expect("integer polynomial")
}

/// Euler character at `π` (the character at `t = 1`), by the case analysis:
///
/// 1. `π` has a fixed point: nonzero iff every cycle length is a power of two
///    and, with `k` minimal such that `n_{2^k} != 1` (virtual `n_1`),
///    `n_{2^k}` is even.
/// 2. No fixed point: nonzero iff the shortest cycle length `d` has `n_d` odd
///    and every length is `2^j d`.
pub fn euler_character(ct: &CycleType) -> BigInt {
    let v = to_virtual(ct);
    let max_len = ct.counts.keys().copied().max().unwrap_or(1);
    let factor_at_one = |l: u32, g: i64| -> BigRational {
        let o = o_value(l, &v);
        let n = v.count(l);
        let base = rat(g + o);
        cycle_factor(
            &SRatFunc::from_rational(base),
            &SRatFunc::one(),
            l,
            n,
        )
        .ok()
        .and_then(|f| f.eval_at_t1().ok())
        .unwrap_or_else(BigRational::zero)
    };

    let value = if ct.fixed_points() > 0 {
        if !ct.counts.keys().all(|m| m.is_power_of_two()) {
            return BigInt::zero();
        }
        let mut k = 0u32;
        while v.count(1 << k) == 1 {
            k += 1;
        }
        if v.count(1 << k) % 2 != 0 {
            return BigInt::zero();
        }
        let mut acc = BigRational::from_integer(BigInt::from(2).pow(k * k.saturating_sub(1) / 2));
        let mut j = k;
        while (1u32 << j) <= max_len {
            acc *= factor_at_one(1 << j, 1);
            j += 1;
        }
        acc
    } else {
        let d = *ct.counts.keys().next().expect("nonempty permutation");
        let nd = ct.count(d) as i64;
        if nd % 2 == 0 {
            return BigInt::zero();
        }
        let all_dyadic = ct.counts.keys().all(|&m| m % d == 0 && (m / d).is_power_of_two());
        if !all_dyadic {
            return BigInt::zero();
        }
        let mut acc: BigRational = odd_divisors(d)
            .map(|k| BigRational::new(BigInt::from(mobius(k as u64) * d as i64), BigInt::from(2 * k)))
            .sum();
        for i in 0..=nd - 2 {
            acc *= rat(d as i64 * (nd - 2 - 2 * i));
        }
        let mut l = 2 * d;
        while l <= max_len {
            acc *= factor_at_one(l, gamma_at_one(l));
            l *= 2;
        }
        acc
    };
    assert!(value.is_integer(), "Euler character must be an integer");
    value.to_integer()
}

/// The nonvanishing criterion alone, stated on cycle counts.
pub fn euler_nonvanishing(ct: &CycleType) -> bool {
    let v = to_virtual(ct);
    if ct.fixed_points() > 0 {
        if !ct.counts.keys().all(|m| m.is_power_of_two()) {
            return false;
        }
        let mut k = 0;
        while v.count(1 << k) == 1 {
            k += 1;
        }
        v.count(1 << k) % 2 == 0
    } else {
        let Some(&d) = ct.counts.keys().next() else {
            return false;
        };
        d > 1
            && ct.count(d) % 2 == 1
            && ct.counts.keys().all(|&m| m % d == 0 && (m / d).is_power_of_two())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;
    use proptest::prelude::*;

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::from_partition(&Partition::new(parts.to_vec()).unwrap())
    }

    fn gc(parts: &[u32]) -> GradedCharacter {
        character_of(&ct(parts)).unwrap()
    }

    #[test]
    fn to_virtual_examples() {
        let id = to_virtual(&ct(&[1, 1, 1, 1]));
        assert_eq!(id.n1(), 3);
        let dbl = to_virtual(&ct(&[2, 2]));
        assert_eq!((dbl.n1(), dbl.count(2)), (-1, 2));
        let tr = to_virtual(&ct(&[2, 1, 1]));
        assert_eq!((tr.n1(), tr.count(2)), (1, 1));
        assert_eq!(dbl.n(), 4);
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    /// Oracle: solve Σ_{odd k | l} t^{-l/2k} γ_{l/k}(t) = t^{-l/2} recursively.
    fn gamma_by_recursion(l: u32) -> SPoly {
        // t^{-l/2} γ_l = t^{-l/2} - Σ_{odd k | l, k > 1} t^{-l/2k} γ_{l/k}
        let mut rhs = SPoly::s_pow(-(l as i64));
        for k in odd_divisors(l).filter(|&k| k > 1) {
            let g = gamma_by_recursion(l / k);
            rhs = &rhs - &g.shift(-((l / k) as i64));
        }
        rhs.shift(l as i64)
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(1), SPoly::one());
        assert_eq!(gamma(4), SPoly::one());
        assert_eq!(gamma(3), SPoly::from_t_coeffs(&[1, -1]));
        // μ(9) = 0, so no t^4 term.
        assert_eq!(gamma(9), SPoly::from_t_coeffs(&[1, 0, 0, -1]));
        assert_eq!(gamma(15), SPoly::from_t_coeffs(&[1, 0, 0, 0, 0, -1, -1, 1]));
        for l in 1..=60 {
            assert_eq!(gamma(l), gamma_by_recursion(l), "l = {l}");
            assert!(gamma(l).has_integer_t_powers());
        }
    }

    #[test]
    fn o_examples() {
        let four_cycle = to_virtual(&ct(&[4]));
        assert_eq!(o_value(4, &four_cycle), -1);
        assert_eq!(o_value(3, &four_cycle), 0);
        let transposition = to_virtual(&ct(&[2, 1, 1]));
        assert_eq!(o_value(4, &transposition), 3);
    }

    #[test]
    fn characters_in_s4() {
        let one_minus_t = GradedCharacter::from_i64s(&[1, -1]);
        let one_plus_t = GradedCharacter::from_i64s(&[1, 1]);
        assert_eq!(gc(&[1, 1, 1, 1]), one_minus_t);
        assert_eq!(gc(&[2, 2]), one_minus_t);
        assert_eq!(gc(&[4]), one_plus_t);
        assert_eq!(gc(&[2, 1, 1]), one_plus_t);
        assert_eq!(gc(&[3, 1]), one_minus_t);
    }

    #[test]
    fn fixed_point_free_factor_is_geometric() {
        let v = VirtualCycleType::new(-1, [(2, 1)]).unwrap();
        // (12) in S_2: 1/(1-t) times (1 - t).
        assert!(graded_character(&v).unwrap().is_one());
    }

    #[test]
    fn small_n_are_points() {
        assert!(gc(&[1]).is_one());
        assert!(gc(&[1, 1]).is_one());
        assert!(gc(&[2]).is_one());
        assert!(poincare_polynomial(1).is_one());
        assert!(poincare_polynomial(2).is_one());
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare_polynomial(4), GradedCharacter::from_i64s(&[1, -1]));
        assert_eq!(poincare_polynomial(5), GradedCharacter::from_i64s(&[1, -4]));
        assert_eq!(poincare_polynomial(6), GradedCharacter::from_i64s(&[1, -10, 9]));
        for n in 3..=20 {
            assert_eq!(gc(&vec![1; n as usize]), poincare_polynomial(n));
        }
    }

    #[test]
    fn single_cycle_generalized() {
        for m in 1..=6u32 {
            let c = |l: u32| SRatFunc::from_rational(ratio(l as i64 * 7 + 2, 3));
            let got = generalized_character(c, &ct(&[m])).unwrap();
            assert_eq!(got, c(m));
        }
    }

    #[test]
    fn chr_specialisation_is_finite() {
        let lambda = ratio(5, 3);
        let c = |l: u32| {
            if l == 1 {
                SRatFunc::from_rational(lambda.clone())
            } else if l.is_power_of_two() {
                SRatFunc::from_rational(-lambda.clone())
            } else {
                SRatFunc::zero()
            }
        };
        for n in 1..=8 {
            for p in Partition::all_of(n) {
                generalized_character(c, &CycleType::from_partition(&p)).unwrap();
            }
        }
    }

    #[test]
    fn generalized_reproduces_graded() {
        // c_l = t^{-l/2} γ_l; the character then carries t^{-n/2}.
        let c = |l: u32| SRatFunc::from_poly(gamma(l).shift(-(l as i64)));
        for m in 1..=8 {
            for p in Partition::all_of(m) {
                let ct = CycleType::from_partition(&p);
                let g = generalized_character(c, &ct).unwrap().shift(m as i64);
                let expected = character_of(&ct.with_fixed_point()).unwrap();
                assert_eq!(GradedCharacter::from_srat(&g).unwrap(), expected, "{p}");
            }
        }
    }

    #[test]
    fn negative_count_zero_factor_is_an_error() {
        let counts: BTreeMap<u32, i64> = [(1, -1)].into_iter().collect();
        // c_1 = 1: factors (1+1)(1-1) in the denominator.
        let r = generalized_character_counts(|_| SRatFunc::one(), &counts);
        assert_eq!(r, Err(Error::DivisionByZero));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_character(&ct(&[1, 1, 1, 1, 1])), BigInt::from(-3));
        assert_eq!(euler_character(&ct(&[1; 7])), BigInt::from(45));
        for n in [2usize, 4, 6, 8] {
            if n >= 4 {
                assert_eq!(euler_character(&ct(&vec![1; n])), BigInt::zero());
            }
        }
        assert_eq!(euler_character(&ct(&[4])), BigInt::from(2));
        assert_eq!(euler_character(&ct(&[2, 2])), BigInt::zero());
        // Cycles 3 and 6: γ_6(1) = 0, so the 6-cycle factor is o_6 = 3.
        assert_eq!(euler_character(&ct(&[6, 3])), BigInt::from(3));
    }

    #[test]
    fn euler_matches_value_at_one() {
        for n in 1..=12 {
            for p in Partition::all_of(n) {
                let c = CycleType::from_partition(&p);
                let direct = character_of(&c).unwrap().eval_at_one();
                let e = euler_character(&c);
                assert_eq!(e, direct, "{p}");
                assert_eq!(euler_nonvanishing(&c), !e.is_zero(), "{p}");
            }
        }
    }

    fn arb_ct() -> impl Strategy<Value = CycleType> {
        prop::collection::vec((1u32..7, 0u32..4), 0..4)
            .prop_map(|v| CycleType::from_counts(v).unwrap())
            .prop_filter("nonempty", |c| c.n() > 0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn odd_half_powers_cancel(c in arb_ct()) {
            let v = to_virtual(&c);
            prop_assert_eq!(graded_product(&v, 1).unwrap(), graded_product(&v, -1).unwrap());
        }

        #[test]
        fn output_is_integral(c in arb_ct()) {
            prop_assert!(character_of(&c).is_ok());
        }
    }
}
