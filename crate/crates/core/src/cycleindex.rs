//! Named cycle indices and reconstruction of an extended index from its
//! restriction to point stabilisers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalars::{rat, SPoly, SRatFunc};
use crate::symfunc::{
    make_arcsinh, make_cosh, make_exp, make_exp_inverse, make_x, plethysm, plethystic_inverse,
    SymFunc,
};

/// `c · p_1`.
fn scaled_p1(pbound: usize, c: SRatFunc) -> SymFunc {
    SymFunc::monomial(pbound, Partition::single(1), c)
}

/// `Arcsinh^~[s p_1]` and the untwisted `Arcsinh[s p_1]`.
fn arcsinh_at_s_p1(pbound: usize, twisted: bool) -> SymFunc {
    let mut a = make_arcsinh(pbound);
    if twisted {
        a = a.tilde();
    }
    plethysm(&a, &scaled_p1(pbound, SRatFunc::s_pow(1))).expect("no constant term")
}

/// `Z_{Λ'} = Exp[t^{-1/2} Arcsinh^~[t^{1/2} p_1]]`.
pub fn z_lambda_prime(pbound: usize) -> SymFunc {
    let inner = arcsinh_at_s_p1(pbound, true).scale(&SRatFunc::s_pow(-1));
    plethysm(&make_exp(pbound), &inner).expect("no constant term")
}

/// `Z^+_Λ = (-t p_1 + Cosh^~[Arcsinh^~[t^{1/2} p_1]]) / (1 - t) · Z_{Λ'}`.
pub fn z_extended(pbound: usize) -> SymFunc {
    let a = arcsinh_at_s_p1(pbound, true);
    let cosh = plethysm(&make_cosh(pbound).tilde(), &a).expect("no constant term");
    let prefactor = &cosh - &scaled_p1(pbound, SRatFunc::t_pow(1));
    let one_minus_t = SRatFunc::from_poly(SPoly::from_t_coeffs(&[1, -1]));
    let prefactor = prefactor.scale(&one_minus_t.recip().expect("nonzero"));
    prefactor.mul_trunc(&z_lambda_prime(pbound))
}

/// `(1 - Cosh[Arcsinh[t^{1/2} p_1]]) + t^{-1/2} Arcsinh[t^{1/2} p_1]`. The odd
/// p-degree part covers odd-size ground sets, the even part even sizes.
pub fn chr_index(pbound: usize) -> SymFunc {
    let a = arcsinh_at_s_p1(pbound, false);
    let cosh = plethysm(&make_cosh(pbound), &a).expect("no constant term");
    let odd = a.scale(&SRatFunc::s_pow(-1));
    &(&SymFunc::one(pbound) - &cosh) + &odd
}

/// `Exp[C]` where `C` is the plethystic inverse of
/// `(t^{-2}(Exp[t^2 p_1] - 1) - t^2 (Exp - 1)) / (1 - t^2)`.
pub fn complex_index(pbound: usize) -> SymFunc {
    let exp = make_exp(pbound);
    let one = SymFunc::one(pbound);
    let exp_t2 = plethysm(&exp, &scaled_p1(pbound, SRatFunc::t_pow(2))).expect("no constant term");
    let first = (&exp_t2 - &one).scale(&SRatFunc::t_pow(-2));
    let second = (&exp - &one).scale(&SRatFunc::t_pow(2));
    let denom = SRatFunc::from_poly(SPoly::from_t_coeffs(&[1, 0, -1]));
    let g = (&first - &second).scale(&denom.recip().expect("nonzero"));
    let c = plethystic_inverse(&g).expect("linear coefficient is 1");
    plethysm(&exp, &c).expect("no constant term")
}

/// `exp(Σ_l c_l X[p_l] / l)`, whose characters are given by the
/// generalized product formula.
pub fn generalized_index(pbound: usize, c: impl Fn(u32) -> SRatFunc) -> SymFunc {
    let x = make_x(pbound);
    let mut sum = SymFunc::zero(pbound);
    for l in 1..=pbound as u32 {
        let cl = c(l).scale(&BigRational::new(BigInt::one(), BigInt::from(l)));
        sum = &sum + &x.relabel(l).scale(&cl);
    }
    sum.exp().expect("X has no constant term")
}

/// Per-t-degree bound on the p-degree of `Exp^{-1} Z^+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeCap {
    /// The same bound in every t-degree.
    Uniform(usize),
    /// Bound `a·k` in t-degree `k`.
    Linear(usize),
}

impl DegreeCap {
    pub fn at(self, k: usize) -> usize {
        match self {
            DegreeCap::Uniform(c) => c,
            DegreeCap::Linear(a) => a * k,
        }
    }
}

/// Result of [`reconstruct_extended`]. With `t_precision = Some(K)` the
/// coefficients are exact modulo `t^{K+1}` (polynomials in `t` of degree
/// `<= K`); with `None` they are exact.
#[derive(Clone, Debug, PartialEq)]
pub struct Reconstruction {
    pub index: SymFunc,
    pub t_precision: Option<usize>,
}

impl Reconstruction {
    /// The constant `C_R`, i.e. the constant term of the extended index.
    pub fn constant(&self) -> SRatFunc {
        self.index.constant_term()
    }

    /// True if `other` agrees with the reconstruction to its precision.
    pub fn matches(&self, other: &SymFunc) -> bool {
        let pbound = self.index.pbound().min(other.pbound());
        let Some(k) = self.t_precision else {
            return self.index.truncate(pbound) == other.truncate(pbound);
        };
        let order = 2 * (k as i64 + 1);
        Partition::all_up_to(pbound).into_iter().all(|l| {
            SRatFunc::from_poly(other.coeff(&l).series(order)) == self.index.coeff(&l)
        })
    }
}

/// Recover `Z^+ = f · Exp` from `Z' = ∂Z^+/∂p_1`, given that each t-degree
/// of `f` has p-degree at most `cap`.
///
/// With `g = Z' · Exp^{-1}` one has `g = f + ∂f/∂p_1`, so
/// `f = Σ_j (-1)^j ∂^j g`. Solving in t-degree `k` needs every term of `g_k`,
/// so only t-degrees with `cap(k) <= pbound` are recovered.
pub fn reconstruct_extended(zrestr: &SymFunc, cap: DegreeCap) -> Result<Reconstruction> {
    let pbound = zrestr.pbound();
    let g = zrestr.mul_trunc(&make_exp_inverse(pbound));
    let exp = make_exp(pbound);
    match cap {
        DegreeCap::Uniform(c) => reconstruct_uniform(&g, c, &exp),
        DegreeCap::Linear(0) => reconstruct_uniform(&g, 0, &exp),
        DegreeCap::Linear(a) => reconstruct_t_adic(&g, a, pbound / a, &exp),
    }
}

fn reconstruct_uniform(g: &SymFunc, c: usize, exp: &SymFunc) -> Result<Reconstruction> {
    if c > g.pbound() {
        return Err(Error::InvalidInput(format!(
            "degree cap {c} exceeds truncation {}",
            g.pbound()
        )));
    }
    if let Some((l, _)) = g.iter().find(|(l, _)| l.size() > c) {
        return Err(Error::InconsistentReconstruction(format!(
            "term p_{l} beyond degree cap {c}"
        )));
    }
    let f = undo_shift(g);
    Ok(Reconstruction { index: f.mul_trunc(exp), t_precision: None })
}

fn reconstruct_t_adic(g: &SymFunc, a: usize, k_max: usize, exp: &SymFunc) -> Result<Reconstruction> {
    let pbound = g.pbound();
    let order = 2 * (k_max as i64 + 1);
    // Split g into t-homogeneous pieces g_k, k <= k_max.
    let mut pieces: Vec<SymFunc> = vec![SymFunc::zero(pbound); k_max + 1];
    for (l, v) in g.iter() {
        if let Some(lo) = v.numer().min_exp() {
            if lo < 0 {
                return Err(Error::InvalidInput(format!("negative t-power at p_{l}")));
            }
        }
        for (e, coeff) in v.series(order).terms() {
            if e % 2 != 0 {
                return Err(Error::NonIntegral(format!("half-integer t-power at p_{l}")));
            }
            let k = (e / 2) as usize;
            if l.size() > a * k {
                return Err(Error::InconsistentReconstruction(format!(
                    "t^{k} coefficient of p_{l} exceeds degree cap {}",
                    a * k
                )));
            }
            pieces[k].add_term(l.clone(), SRatFunc::from_rational(coeff.clone()));
        }
    }
    let mut f = SymFunc::zero(pbound);
    for (k, gk) in pieces.iter().enumerate() {
        f = &f + &undo_shift(gk).scale(&SRatFunc::t_pow(k as i64));
    }
    Ok(Reconstruction { index: f.mul_trunc(exp), t_precision: Some(k_max) })
}

/// `Σ_j (-1)^j ∂^j g`, the inverse of `f -> f + ∂f/∂p_1` on polynomials in `p_1`.
fn undo_shift(g: &SymFunc) -> SymFunc {
    let pbound = g.pbound();
    let mut out = SymFunc::zero(pbound);
    let mut term = g.clone();
    let mut sign = 1;
    while !term.is_zero() {
        let signed = if sign == 1 { term.clone() } else { -&term };
        out = &out + &signed;
        // Keep the original bound: ∂ only lowers degree.
        let mut next = SymFunc::zero(pbound);
        for (l, v) in term.iter() {
            let m = l.multiplicity(1);
            if m > 0 {
                next.add_term(l.without_part(1).unwrap(), v.scale(&rat(m as i64)));
            }
        }
        term = next;
        sign = -sign;
    }
    out
}

/// Graded characters `extract_character(z, λ)` as a map, for every `λ` of
/// size `n` (convenience for tables).
pub fn characters_of_size(z: &SymFunc, n: usize) -> Result<BTreeMap<Partition, SRatFunc>> {
    Partition::all_of(n)
        .into_iter()
        .map(|l| crate::symfunc::extract_character(z, &l).map(|c| (l, c)))
        .collect()
}

/// `Exp^{-1} Z`, split into t-degrees `0..=k_max`; entry `k` is the t^k part.
pub fn divide_by_exp_t_parts(z: &SymFunc, k_max: usize) -> Vec<SymFunc> {
    let pbound = z.pbound();
    let q = z.mul_trunc(&make_exp_inverse(pbound));
    let order = 2 * (k_max as i64 + 1);
    let mut parts = vec![SymFunc::zero(pbound); k_max + 1];
    for (l, v) in q.iter() {
        for (e, c) in v.series(order).terms() {
            if e >= 0 && e % 2 == 0 {
                parts[(e / 2) as usize].add_term(l.clone(), SRatFunc::from_rational(c.clone()));
            }
        }
    }
    parts
}
