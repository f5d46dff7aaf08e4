//! Equivariant homology of the poset of odd set partitions, by Lefschetz
//! counting of fixed chains.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::{rat, SPoly, SRatFunc};
use crate::sn;

/// A set partition of `0..m` as sorted block bitmasks.
pub type SetPartition = Vec<u32>;

/// All partitions of `0..m` into blocks of odd size.
pub fn odd_partitions(m: usize) -> Vec<SetPartition> {
    partitions_with(m, true)
}

/// All set partitions of `0..m`.
pub fn set_partitions(m: usize) -> Vec<SetPartition> {
    partitions_with(m, false)
}

fn partitions_with(m: usize, odd_only: bool) -> Vec<SetPartition> {
    assert!(m <= 31, "ground set too large for bitmask blocks");
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    gen(((1u64 << m) - 1) as u32, odd_only, &mut blocks, &mut out);
    out
}

fn gen(rest: u32, odd_only: bool, blocks: &mut Vec<u32>, out: &mut Vec<SetPartition>) {
    if rest == 0 {
        let mut p = blocks.clone();
        p.sort_unstable();
        out.push(p);
        return;
    }
    // The block containing the lowest remaining element.
    let low = rest & rest.wrapping_neg();
    let others = rest & !low;
    let mut sub = others;
    loop {
        let block = sub | low;
        if !odd_only || block.count_ones() % 2 == 1 {
            blocks.push(block);
            gen(rest & !block, odd_only, blocks, out);
            blocks.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
}

/// `x <= y` in refinement order.
fn refines(x: &SetPartition, y: &SetPartition) -> bool {
    x.iter().all(|&b| y.iter().any(|&c| b & c == b))
}

fn permute_block(perm: &[usize], b: u32) -> u32 {
    let mut out = 0;
    for (i, &p) in perm.iter().enumerate() {
        if b & (1 << i) != 0 {
            out |= 1 << p;
        }
    }
    out
}

fn is_fixed(perm: &[usize], x: &SetPartition) -> bool {
    let mut img: Vec<u32> = x.iter().map(|&b| permute_block(perm, b)).collect();
    img.sort_unstable();
    &img == x
}

/// Proper part of the poset (bottom and top removed), restricted to
/// elements fixed by `perm`, ordered finest first.
fn fixed_proper_part(perm: &[usize]) -> Vec<SetPartition> {
    let m = perm.len();
    let mut xs: Vec<SetPartition> = odd_partitions(m)
        .into_iter()
        .filter(|x| x.len() != m && x.len() != 1)
        .filter(|x| is_fixed(perm, x))
        .collect();
    xs.sort_by_key(|x| std::cmp::Reverse(x.len()));
    xs
}

/// Reduced Lefschetz number `Σ_{k >= -1} (-1)^k #{fixed k-chains}` of the
/// proper part, the empty chain counted in degree −1. Uses the recursion
/// `w(x) = 1 - Σ_{y < x} w(y)` for the signed count of chains ending at `x`.
pub fn reduced_lefschetz(perm: &[usize]) -> BigInt {
    let xs = fixed_proper_part(perm);
    let mut w: Vec<BigInt> = Vec::with_capacity(xs.len());
    for (i, x) in xs.iter().enumerate() {
        let mut v = BigInt::from(1);
        for (j, y) in xs[..i].iter().enumerate() {
            if y.len() > x.len() && refines(y, x) {
                v -= &w[j];
            }
        }
        w.push(v);
    }
    w.iter().fold(BigInt::from(-1), |acc, v| acc + v)
}

/// The same number by explicit depth-first enumeration of chains.
pub fn reduced_lefschetz_by_chains(perm: &[usize]) -> BigInt {
    let xs = fixed_proper_part(perm);
    fn dfs(xs: &[SetPartition], last: Option<usize>, len: i64, acc: &mut BigInt) {
        // A chain with `len` elements is a (len - 1)-chain.
        if (len - 1).rem_euclid(2) == 0 {
            *acc += 1;
        } else {
            *acc -= 1;
        }
        for (j, y) in xs.iter().enumerate() {
            let ok = match last {
                None => true,
                Some(i) => xs[i].len() > y.len() && refines(&xs[i], y),
            };
            if ok {
                dfs(xs, Some(j), len + 1, acc);
            }
        }
    }
    let mut acc = BigInt::zero();
    dfs(&xs, None, 0, &mut acc);
    acc
}

/// `Tr(π | H̃_n)` for `|T| = 2n + 1`, i.e. `(-1)^n` times the reduced
/// Lefschetz number. A one-point poset is taken to have homology ℚ in
/// degree 0.
pub fn homology_trace(perm: &[usize]) -> Result<BigInt> {
    let m = perm.len();
    if m % 2 == 0 {
        return Err(Error::InvalidInput(format!("|T| = {m} is even")));
    }
    if !sn::is_permutation(perm) {
        return Err(Error::InvalidInput(format!("not a permutation: {perm:?}")));
    }
    if m == 1 {
        return Ok(BigInt::from(1));
    }
    let n = (m - 1) / 2;
    let l = reduced_lefschetz(perm);
    Ok(if n % 2 == 0 { l } else { -l })
}

/// Graded character of `Λ'[T]`: `Tr(π | H̃_n) · sgn(π) · (-t)^n`.
pub fn poset_character(perm: &[usize]) -> Result<SRatFunc> {
    let tr = homology_trace(perm)?;
    let n = (perm.len() - 1) / 2;
    let sign = sn::cycle_type(perm).sign() as i64;
    let s = if n % 2 == 0 { sign } else { -sign };
    let c = num_rational::BigRational::from_integer(tr) * rat(s);
    Ok(SRatFunc::from_poly(SPoly::monomial(2 * n as i64, c)))
}
