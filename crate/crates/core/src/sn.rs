//! Small symmetric-group utilities: permutations, cycle types and irreducible
//! characters via the Murnaghan-Nakayama rule.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::Partition;

/// Cycle type of a permutation given by its image vector on `0..n`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("cycle lengths are positive")
}

/// `true` if `perm` is a bijection of `0..perm.len()`.
pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    true
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// A canonical permutation of `0..n` with cycle type `lambda`: consecutive
/// blocks, each cycled forward.
pub fn representative(lambda: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(lambda.size());
    let mut start = 0;
    for &len in lambda.parts() {
        let len = len as usize;
        for j in 0..len {
            perm.push(start + (j + 1) % len);
        }
        start += len;
    }
    perm
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// Irreducible character `χ^shape(μ)` by Murnaghan-Nakayama on beta-sets.
pub fn irreducible_character(shape: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(shape.size(), mu.size(), "shape and class must have equal size");
    let mut memo = HashMap::new();
    let len = shape.len();
    // Beta-set: parts plus staircase, strictly decreasing.
    let beta: Vec<i64> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
        .collect();
    mn(&beta, mu.parts(), &mut memo)
}

fn mn(beta: &[i64], mu: &[u32], memo: &mut HashMap<(Vec<i64>, usize), BigInt>) -> BigInt {
    let Some((&r, rest)) = mu.split_first() else {
        return BigInt::from(1);
    };
    let key = (beta.to_vec(), mu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = r as i64;
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        // Sign: parity of the beta entries strictly between nb and b.
        let crossed = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.to_vec();
        next[i] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(&next, rest, memo);
        if crossed % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Decompose a class function (given on every partition of `n`) into
/// multiplicities `⟨f, χ^shape⟩`, returned as exact rationals.
pub fn isotypic_multiplicities(
    n: usize,
    f: impl Fn(&Partition) -> num_rational::BigRational,
) -> Vec<(Partition, num_rational::BigRational)> {
    let classes = Partition::all_of(n);
    let values: Vec<_> = classes.iter().map(&f).collect();
    Partition::all_of(n)
        .into_iter()
        .map(|shape| {
            let mut acc = num_rational::BigRational::zero();
            for (mu, v) in classes.iter().zip(&values) {
                let chi = irreducible_character(&shape, mu);
                acc += v * num_rational::BigRational::from_integer(chi)
                    / num_rational::BigRational::from_integer(mu.z());
            }
            (shape, acc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&[1, 2, 0, 4, 3]), p(&[3, 2]));
        assert_eq!(cycle_type(&[0, 1, 2]), p(&[1, 1, 1]));
        for lambda in Partition::all_up_to(7) {
            assert_eq!(cycle_type(&representative(&lambda)), lambda);
        }
    }

    #[test]
    fn class_sizes_by_enumeration() {
        let mut counts: HashMap<Partition, u64> = HashMap::new();
        for perm in all_permutations(6) {
            *counts.entry(cycle_type(&perm)).or_default() += 1;
        }
        for lambda in Partition::all_of(6) {
            assert_eq!(BigInt::from(counts[&lambda]) * lambda.z(), BigInt::from(720));
        }
    }

    #[test]
    fn character_table_s4_column_of_identity() {
        let dims: Vec<i64> = Partition::all_of(4)
            .iter()
            .map(|s| irreducible_character(s, &Partition::ones(4)).try_into().unwrap())
            .collect();
        // shapes ascending: 1111, 211, 22, 31, 4
        assert_eq!(dims, vec![1, 3, 2, 3, 1]);
        assert_eq!(irreducible_character(&p(&[3, 1]), &p(&[2, 2])), BigInt::from(-1));
        assert_eq!(irreducible_character(&p(&[2, 2]), &p(&[3, 1])), BigInt::from(-1));
        assert_eq!(irreducible_character(&p(&[1, 1, 1, 1]), &p(&[4])), BigInt::from(-1));
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=7 {
            let classes = Partition::all_of(n);
            for a in &classes {
                for b in &classes {
                    let ip: BigRational = classes
                        .iter()
                        .map(|mu| {
                            BigRational::new(
                                irreducible_character(a, mu) * irreducible_character(b, mu),
                                mu.z(),
                            )
                        })
                        .sum();
                    let expected = if a == b { 1 } else { 0 };
                    assert_eq!(ip, BigRational::from_integer(expected.into()));
                }
            }
        }
    }

    #[test]
    fn sign_character_is_partition_sign() {
        for mu in Partition::all_of(6) {
            assert_eq!(irreducible_character(&Partition::ones(6), &mu), BigInt::from(mu.sign()));
        }
    }
}
