//! Integer graded characters `Σ_k (-t)^k Tr(π | H^k)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{SPoly, SRatFunc};

/// Polynomial in integer powers of `t` with integer coefficients, stored as
/// `coeffs[k]` = coefficient of `t^k`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GradedCharacter {
    coeffs: Vec<BigInt>,
}

impl GradedCharacter {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// Build from traces `Tr(π | H^k)`, applying the `(-1)^k` sign.
    pub fn from_traces(traces: &[BigInt]) -> Self {
        Self::from_coeffs(
            traces
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// Accepts only integer coefficients on nonnegative integer powers of `t`.
    pub fn from_spoly(p: &SPoly) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (e, c) in p.terms() {
            if e < 0 || e % 2 != 0 || !c.is_integer() {
                return Err(Error::NonIntegral(p.to_string()));
            }
            let k = (e / 2) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] = c.to_integer();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn from_srat(f: &SRatFunc) -> Result<Self> {
        Self::from_spoly(&f.as_polynomial()?)
    }

    pub fn to_spoly(&self) -> SPoly {
        SPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (2 * k as i64, crate::scalars::BigRational::from_integer(c.clone()))),
        )
    }

    pub fn to_srat(&self) -> SRatFunc {
        SRatFunc::from_poly(self.to_spoly())
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `Tr(π | H^k) = (-1)^k` times the coefficient of `t^k`.
    pub fn traces(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Debug for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedCharacter({self})")
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, ratio};

    #[test]
    fn display() {
        assert_eq!(GradedCharacter::from_i64s(&[1, -10, 9]).to_string(), "1 - 10t + 9t^2");
        assert_eq!(GradedCharacter::from_i64s(&[0, 1]).to_string(), "t");
        assert_eq!(GradedCharacter::from_i64s(&[]).to_string(), "0");
    }

    #[test]
    fn traces_carry_sign() {
        let g = GradedCharacter::from_i64s(&[1, 1]);
        assert_eq!(g.traces(), vec![BigInt::from(1), BigInt::from(-1)]);
        assert_eq!(GradedCharacter::from_traces(&g.traces()), g);
    }

    #[test]
    fn rejects_non_integral() {
        assert!(GradedCharacter::from_spoly(&SPoly::monomial(1, rat(1))).is_err());
        assert!(GradedCharacter::from_spoly(&SPoly::monomial(2, ratio(1, 2))).is_err());
        assert!(GradedCharacter::from_spoly(&SPoly::monomial(-2, rat(1))).is_err());
    }
}
