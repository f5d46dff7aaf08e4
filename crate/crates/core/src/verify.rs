//! Cross-validation suites. Each check returns a [`CheckReport`] that records
//! how many cases were compared and the first counterexample, if any.
//! Resource-cap errors from the oracle propagate as `Err`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::charformula::{
    character_of, euler_character, euler_nonvanishing, generalized_character_counts, poincare_polynomial,
    CycleType,
};
use crate::cycleindex::{
    chr_index, complex_index, divide_by_exp_t_parts, reconstruct_extended, z_extended, z_lambda_prime,
    DegreeCap,
};
use crate::error::Result;
use crate::graded::GradedCharacter;
use crate::oracle::{self, apply_map, poset, Algebra, BuildOptions, Kind};
use crate::partition::Partition;
use crate::scalars::{rat, SPoly, SRatFunc};
use crate::sn;
use crate::symfunc::{extract_character, make_arcsinh, make_sinh, plethysm, SymFunc};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn finish(name: &str, start: Instant, cases: usize, failure: Option<String>) -> Self {
        Self { name: name.to_string(), cases, failure, note: None, elapsed: start.elapsed() }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let plural = if self.cases == 1 { "" } else { "s" };
        write!(f, "{status} {} ({} case{plural}, {:.1?})", self.name, self.cases, self.elapsed)?;
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        if let Some(e) = &self.failure {
            write!(f, ": first counterexample: {e}")?;
        }
        Ok(())
    }
}

/// Settings shared by the oracle-backed checks.
#[derive(Clone, Debug)]
pub struct OracleSettings<'a> {
    pub max_ambient: usize,
    pub cache_dir: Option<&'a Path>,
}

impl Default for OracleSettings<'_> {
    fn default() -> Self {
        Self { max_ambient: 100_000, cache_dir: None }
    }
}

impl<'a> OracleSettings<'a> {
    fn build(&self, kind: Kind, m: usize) -> Result<Algebra> {
        let opts = BuildOptions { max_ambient: self.max_ambient, cache_dir: self.cache_dir };
        Algebra::build(kind, m, &opts)
    }
}

/// First failure in input order, computed in parallel.
fn first_failure<T: Sync, F>(items: &[T], check: F) -> Result<Option<String>>
where
    F: Fn(&T) -> Result<Option<String>> + Sync,
{
    let results: Vec<Result<Option<String>>> = items.par_iter().map(|x| check(x)).collect();
    for r in results {
        if let Some(msg) = r? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn show_perm(p: &[usize]) -> String {
    let one_based: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
    format!("[{}]", one_based.join(" "))
}

/// `graded_character(π + fixed point) = Tr(π | Λ'(S))` for every `π` in
/// `S_m`, `m` in `exhaustive`, and on class representatives for `m` in
/// `representatives`.
pub fn formula_vs_lambda_prime(
    exhaustive: &[usize],
    representatives: &[usize],
    settings: &OracleSettings,
) -> Result<CheckReport> {
    let start = Instant::now();
    let mut cases = 0;
    let jobs: Vec<(usize, bool)> = exhaustive
        .iter()
        .map(|&m| (m, true))
        .chain(representatives.iter().map(|&m| (m, false)))
        .collect();
    for (m, all) in jobs {
        let alg = settings.build(Kind::LambdaPrime, m)?;
        let perms: Vec<Vec<usize>> = if all {
            sn::all_permutations(m).collect()
        } else {
            Partition::all_of(m).iter().map(sn::representative).collect()
        };
        cases += perms.len();
        let fail = first_failure(&perms, |p| {
            let expected = character_of(&CycleType::of_permutation(p).with_fixed_point())?;
            let got = alg.graded_trace(p)?;
            Ok((got != expected).then(|| format!("m={m} π={} oracle {got} formula {expected}", show_perm(p))))
        })?;
        if fail.is_some() {
            return Ok(CheckReport::finish("formula vs oracle on Λ'", start, cases, fail));
        }
    }
    Ok(CheckReport::finish("formula vs oracle on Λ'", start, cases, None))
}

/// `graded_character(to_virtual(π)) = Tr(π | Λ(S))` for every `π ∈ S_n`.
pub fn formula_vs_lambda(ns: &[usize], settings: &OracleSettings) -> Result<CheckReport> {
    let start = Instant::now();
    let mut cases = 0;
    for &n in ns {
        let alg = settings.build(Kind::Lambda, n)?;
        let perms: Vec<Vec<usize>> = sn::all_permutations(n).collect();
        cases += perms.len();
        let fail = first_failure(&perms, |p| {
            let expected = character_of(&CycleType::of_permutation(p))?;
            let got = alg.graded_trace(p)?;
            Ok((got != expected).then(|| format!("n={n} π={} oracle {got} formula {expected}", show_perm(p))))
        })?;
        if fail.is_some() {
            return Ok(CheckReport::finish("formula vs oracle on Λ", start, cases, fail));
        }
    }
    Ok(CheckReport::finish("formula vs oracle on Λ", start, cases, None))
}

/// Oracle dimensions against the closed-form Poincaré polynomials.
pub fn oracle_dimensions(max_prime: usize, max_lambda: usize, settings: &OracleSettings) -> Result<CheckReport> {
    let start = Instant::now();
    let mut cases = 0;
    for m in 0..=max_prime {
        cases += 1;
        let got = settings.build(Kind::LambdaPrime, m)?.poincare();
        let expected = poincare_polynomial(m as u32 + 1);
        if got != expected {
            let msg = format!("Λ' m={m}: {got} vs {expected}");
            return Ok(CheckReport::finish("oracle dimensions", start, cases, Some(msg)));
        }
    }
    for n in 1..=max_lambda {
        cases += 1;
        let got = settings.build(Kind::Lambda, n)?.poincare();
        let expected = poincare_polynomial(n as u32);
        if got != expected {
            let msg = format!("Λ n={n}: {got} vs {expected}");
            return Ok(CheckReport::finish("oracle dimensions", start, cases, Some(msg)));
        }
    }
    Ok(CheckReport::finish("oracle dimensions", start, cases, None))
}

/// `Λ(g ∘ f) = Λ(f) then Λ(g)` in degrees `<= max_degree` for random maps
/// between ground sets of size `1..=max_ground`.
pub fn functoriality(
    max_ground: usize,
    max_degree: usize,
    instances: usize,
    seed: u64,
    settings: &OracleSettings,
) -> Result<CheckReport> {
    let start = Instant::now();
    let algebras: Vec<Algebra> =
        (1..=max_ground).map(|n| settings.build(Kind::Lambda, n)).collect::<Result<_>>()?;
    let alg = |n: usize| &algebras[n - 1];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut compared = 0;
    for i in 0..instances {
        let [a, b, c] = [0; 3].map(|_| rng.random_range(1..=max_ground));
        let f: Vec<usize> = (0..a).map(|_| rng.random_range(0..b)).collect();
        let g: Vec<usize> = (0..b).map(|_| rng.random_range(0..c)).collect();
        let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
        let mf = apply_map(alg(a), alg(b), &f)?;
        let mg = apply_map(alg(b), alg(c), &g)?;
        let mgf = apply_map(alg(a), alg(c), &gf)?;
        for d in 0..=max_degree {
            let (Some(x), Some(y), Some(z)) = (mf.get(d), mg.get(d), mgf.get(d)) else { continue };
            compared += x.rows.len();
            if &x.then(y) != z {
                let msg = format!("f={f:?} g={g:?} degree {d}");
                return Ok(CheckReport::finish("functoriality of Λ", start, i + 1, Some(msg)));
            }
        }
    }
    Ok(CheckReport::finish("functoriality of Λ", start, instances, None)
        .with_note(format!("{compared} nonempty matrix rows composed")))
}

/// Dimension of `Λ'[T]` in its single degree, from poset homology.
fn block_dimension(size: usize) -> (usize, BigInt) {
    match size {
        1 => (0, BigInt::from(1)),
        s if s % 2 == 0 => (0, BigInt::zero()),
        s => {
            let id: Vec<usize> = (0..s).collect();
            ((s - 1) / 2, poset::homology_trace(&id).expect("odd size"))
        }
    }
}

/// `dim Λ'(S)_d = Σ_ρ Π_i dim Λ'[ρ_i]` degreewise, for `|S| <= max_m`.
pub fn decomposition_consistency(max_m: usize, settings: &OracleSettings) -> Result<CheckReport> {
    let start = Instant::now();
    for m in 0..=max_m {
        let mut dims: BTreeMap<usize, BigInt> = BTreeMap::new();
        for rho in poset::set_partitions(m) {
            let mut deg = 0;
            let mut dim = BigInt::from(1);
            for b in rho {
                let (d, r) = block_dimension(b.count_ones() as usize);
                deg += d;
                dim *= r;
            }
            *dims.entry(deg).or_insert_with(BigInt::zero) += dim;
        }
        let alg = settings.build(Kind::LambdaPrime, m)?;
        for c in alg.components() {
            let expected = dims.get(&c.degree).cloned().unwrap_or_default();
            if BigInt::from(c.quotient_dim()) != expected {
                let msg = format!("m={m} degree {}: oracle {} vs blocks {expected}", c.degree, c.quotient_dim());
                return Ok(CheckReport::finish("decomposition by partitions", start, m + 1, Some(msg)));
            }
        }
    }
    Ok(CheckReport::finish("decomposition by partitions", start, max_m + 1, None))
}

/// `graded_character(identity of S_n)` against the Poincaré product.
pub fn poincare_identity(ns: std::ops::RangeInclusive<u32>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut cases = 0;
    for n in ns {
        cases += 1;
        let got = character_of(&CycleType::identity(n))?;
        let expected = poincare_polynomial(n);
        if got != expected {
            return Ok(CheckReport::finish("Poincaré identity", start, cases, Some(format!("n={n}: {got}"))));
        }
    }
    Ok(CheckReport::finish("Poincaré identity", start, cases, None))
}

fn compare_extractions(
    z: &SymFunc,
    partitions: &[Partition],
    expected: impl Fn(&Partition) -> Result<GradedCharacter> + Sync,
) -> Result<Option<String>> {
    first_failure(partitions, |l| {
        let e = expected(l)?;
        let got = extract_character(z, l)?;
        Ok((got != e.to_srat()).then(|| format!("λ={l}: index {got} formula {e}")))
    })
}

/// `extract(Z_{Λ'}, λ) = graded_character(λ + fixed point)` for `|λ| <= pbound`.
pub fn cycle_index_route(pbound: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let z = z_lambda_prime(pbound);
    let ls = Partition::all_up_to(pbound);
    let fail = compare_extractions(&z, &ls, |l| character_of(&CycleType::from_partition(l).with_fixed_point()))?;
    Ok(CheckReport::finish("cycle index of Λ' vs formula", start, ls.len(), fail))
}

/// The extended index: derivative, constant term, extraction and the
/// per-t-degree degree bound of `Exp^{-1} Z^+`.
pub fn extended_index(pbound: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let name = "extended cycle index of Λ";
    let z = z_extended(pbound);
    let zp = z_lambda_prime(pbound);
    if z.d_p1() != zp.truncate(pbound - 1) {
        return Ok(CheckReport::finish(name, start, 1, Some("∂Z⁺/∂p1 ≠ Z_Λ'".into())));
    }
    let c = SRatFunc::from_poly(SPoly::from_t_coeffs(&[1, -1])).recip()?;
    if z.constant_term() != c {
        return Ok(CheckReport::finish(name, start, 2, Some(format!("constant {}", z.constant_term()))));
    }
    let ls: Vec<Partition> = Partition::all_up_to(pbound).into_iter().filter(|l| !l.is_empty()).collect();
    let fpf = ls.iter().filter(|l| l.multiplicity(1) == 0).count();
    if let Some(f) = compare_extractions(&z, &ls, |l| character_of(&CycleType::from_partition(l)))? {
        return Ok(CheckReport::finish(name, start, 2 + ls.len(), Some(f)));
    }
    let k_max = pbound / 3 + 1;
    for (k, part) in divide_by_exp_t_parts(&z, k_max).iter().enumerate() {
        if part.max_degree().unwrap_or(0) > 3 * k {
            let msg = format!("t^{k} part of Exp^-1 Z⁺ has p-degree {:?}", part.max_degree());
            return Ok(CheckReport::finish(name, start, 2 + ls.len(), Some(msg)));
        }
    }
    Ok(CheckReport::finish(name, start, 3 + ls.len() + k_max, None)
        .with_note(format!("{fpf} fixed-point-free classes")))
}

/// Reconstruct `Z^+_Λ` from `Z_{Λ'}` under the cap `3k`.
pub fn reconstruction(pbound: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let r = reconstruct_extended(&z_lambda_prime(pbound), DegreeCap::Linear(3))?;
    let z = z_extended(pbound);
    let ok = r.matches(&z);
    let note = match r.t_precision {
        Some(k) => format!("exact modulo t^{}", k + 1),
        None => "exact".into(),
    };
    let fail = (!ok).then(|| "reconstructed index differs from Z⁺_Λ".to_string());
    Ok(CheckReport::finish("reconstruction of Z⁺_Λ", start, z.num_terms(), fail).with_note(note))
}

/// `extract(CHR, λ(π)) = sgn(π) · poset_character(π)` for every `π` on `T`.
pub fn chr_vs_poset(sizes: &[usize]) -> Result<CheckReport> {
    let start = Instant::now();
    let pbound = sizes.iter().copied().max().unwrap_or(1);
    let z = chr_index(pbound);
    let mut cases = 0;
    for &m in sizes {
        let perms: Vec<Vec<usize>> = sn::all_permutations(m).collect();
        cases += perms.len();
        let fail = first_failure(&perms, |p| {
            let ct = sn::cycle_type(p);
            let poset = poset::poset_character(p)?.scale(&rat(ct.sign() as i64));
            let got = extract_character(&z, &ct)?;
            Ok((got != poset).then(|| format!("|T|={m} π={}: index {got} poset {poset}", show_perm(p))))
        })?;
        if fail.is_some() {
            return Ok(CheckReport::finish("CHR index vs poset homology", start, cases, fail));
        }
    }
    for (m, rank) in [(1, 1), (3, 1), (5, 9), (7, 225)] {
        if !sizes.contains(&m) {
            continue;
        }
        cases += 1;
        let id: Vec<usize> = (0..m).collect();
        let got = poset::homology_trace(&id)?;
        if got != BigInt::from(rank) {
            let msg = format!("rank of top homology at |T|={m}: {got}, expected {rank}");
            return Ok(CheckReport::finish("CHR index vs poset homology", start, cases, Some(msg)));
        }
    }
    Ok(CheckReport::finish("CHR index vs poset homology", start, cases, None))
}

/// `Sinh[Arcsinh] = Arcsinh[Sinh] = p_1`, also after the tilde twist.
pub fn plethystic_round_trips(pbound: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let sinh = make_sinh(pbound);
    let asinh = make_arcsinh(pbound);
    let p1 = SymFunc::p(pbound, 1);
    let pairs = [
        ("Sinh[Arcsinh]", plethysm(&sinh, &asinh)?),
        ("Arcsinh[Sinh]", plethysm(&asinh, &sinh)?),
        ("Sinh~[Arcsinh~]", plethysm(&sinh.tilde(), &asinh.tilde())?),
        ("Arcsinh~[Sinh~]", plethysm(&asinh.tilde(), &sinh.tilde())?),
    ];
    for (i, (name, v)) in pairs.iter().enumerate() {
        if v != &p1 {
            return Ok(CheckReport::finish("plethystic round trips", start, i + 1, Some(format!("{name} ≠ p1"))));
        }
    }
    Ok(CheckReport::finish("plethystic round trips", start, pairs.len(), None))
}

/// Closed-form Euler characters against `t = 1` of the graded character, and
/// the nonvanishing criterion, for every class of `S_n`, `n <= max_n`.
pub fn euler(max_n: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let ls: Vec<Partition> = (1..=max_n).flat_map(Partition::all_of).collect();
    let fail = first_failure(&ls, |l| {
        let ct = CycleType::from_partition(l);
        let limit = character_of(&ct)?.eval_at_one();
        let e = euler_character(&ct);
        if e != limit {
            return Ok(Some(format!("λ={l}: closed form {e}, limit {limit}")));
        }
        if euler_nonvanishing(&ct) != !e.is_zero() {
            return Ok(Some(format!("λ={l}: nonvanishing criterion disagrees with value {e}")));
        }
        Ok(None)
    })?;
    if fail.is_some() {
        return Ok(CheckReport::finish("Euler characters", start, ls.len(), fail));
    }
    let known = [(5, -3), (7, 45)];
    for (n, v) in known {
        let e = euler_character(&CycleType::identity(n));
        if e != BigInt::from(v) {
            let msg = format!("identity n={n}: {e}, expected {v}");
            return Ok(CheckReport::finish("Euler characters", start, ls.len(), Some(msg)));
        }
    }
    Ok(CheckReport::finish("Euler characters", start, ls.len() + known.len(), None))
}

/// `P^1` and point checks on the complex cycle index.
pub fn complex_checks(pbound: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let z = complex_index(pbound.max(3));
    let checks = [
        (Partition::ones(2), SRatFunc::one()),
        (Partition::single(2), SRatFunc::one()),
        (Partition::ones(3), SRatFunc::from_poly(SPoly::from_t_coeffs(&[1, 0, 1]))),
    ];
    for (i, (l, expected)) in checks.iter().enumerate() {
        let got = extract_character(&z, l)?;
        if &got != expected {
            let msg = format!("λ={l}: {got}, expected {expected}");
            return Ok(CheckReport::finish("complex cycle index", start, i + 1, Some(msg)));
        }
    }
    Ok(CheckReport::finish("complex cycle index", start, checks.len(), None))
}

fn o_literal(m: u32, counts: &BTreeMap<u32, i64>) -> i64 {
    let mut o = 0;
    let mut d = m;
    while d % 2 == 0 {
        d /= 2;
        o += d as i64 * counts.get(&d).copied().unwrap_or(0);
    }
    o
}

/// Both recurrences of the generalized character on random instances:
/// raising the top count by two multiplies by `(c_m+o_m)^2 - (m n_m)^2`, and
/// adding a single new longest cycle multiplies by `c_m + o_m`.
pub fn recurrences(instances: usize, seed: u64) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..instances {
        let c_vals: Vec<BigRational> = (0..12)
            .map(|_| BigRational::new(rng.random_range(-20i64..=20).into(), rng.random_range(1i64..=9).into()))
            .collect();
        let c = |l: u32| SRatFunc::from_rational(c_vals[l as usize - 1].clone());
        let m: u32 = rng.random_range(1..=8);
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for l in 1..m {
            let n = rng.random_range(0..=3);
            if n > 0 {
                counts.insert(l, n);
            }
        }
        let base = generalized_character_counts(c, &counts)?;
        let com = &c(m) + &SRatFunc::from_int(o_literal(m, &counts));
        let (first, expected, label) = if i % 2 == 0 {
            // n_m -> n_m + 2 with n_m >= 0 random.
            let nm = rng.random_range(0..=2);
            let mut lower = counts.clone();
            if nm > 0 {
                lower.insert(m, nm);
            }
            let mut upper = counts.clone();
            upper.insert(m, nm + 2);
            let lo = generalized_character_counts(c, &lower)?;
            let factor = &(&com * &com) - &SRatFunc::from_int((m as i64 * nm).pow(2));
            (generalized_character_counts(c, &upper)?, &factor * &lo, format!("n_{m}: {nm} -> {}", nm + 2))
        } else {
            let mut upper = counts.clone();
            upper.insert(m, 1);
            (generalized_character_counts(c, &upper)?, &com * &base, format!("n_{m}: 0 -> 1"))
        };
        if first != expected {
            let msg = format!("instance {i}: counts {counts:?}, {label}: {first} vs {expected}");
            return Ok(CheckReport::finish("generalized character recurrences", start, i + 1, Some(msg)));
        }
    }
    Ok(CheckReport::finish("generalized character recurrences", start, instances, None))
}

/// Integer coefficients for every class of `S_n`, `n <= max_n`, and
/// nonnegative integer isotypic multiplicities degree by degree.
pub fn integrality(max_n: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut cases = 0;
    for n in 1..=max_n {
        let classes = Partition::all_of(n);
        let chars: Vec<GradedCharacter> = classes
            .iter()
            .map(|l| character_of(&CycleType::from_partition(l)))
            .collect::<Result<_>>()?;
        let top = chars.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
        for k in 0..=top {
            let value = |l: &Partition| {
                let i = classes.iter().position(|x| x == l).unwrap();
                BigRational::from_integer(chars[i].traces().get(k).cloned().unwrap_or_default())
            };
            for (shape, mult) in sn::isotypic_multiplicities(n, value) {
                cases += 1;
                if !mult.is_integer() || mult.is_negative() {
                    let msg = format!("n={n} degree {k} shape {shape}: multiplicity {mult}");
                    return Ok(CheckReport::finish("integrality", start, cases, Some(msg)));
                }
            }
        }
    }
    Ok(CheckReport::finish("integrality", start, cases, None))
}

/// The restriction `Z_{Λ'} = Exp[(odd part of CHR)^~]`.
pub fn chr_restriction(pbound: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let lhs = z_lambda_prime(pbound);
    let odd = chr_index(pbound).odd_part().tilde();
    let rhs = plethysm(&crate::symfunc::make_exp(pbound), &odd)?;
    let fail = (lhs != rhs).then(|| "Z_Λ' ≠ Exp[odd CHR~]".to_string());
    Ok(CheckReport::finish("CHR odd part generates Λ'", start, 1, fail))
}

/// Fail fast if one component of the oracle would exceed `cap`.
pub fn check_ambient(kind: Kind, ground: usize, degree: usize, cap: usize) -> Result<()> {
    let ambient = oracle::binomial(oracle::Generators::new(kind, ground).len(), degree);
    if ambient > cap as u128 {
        return Err(crate::error::Error::ResourceCap { ambient, cap });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_suites_pass() {
        let s = OracleSettings::default();
        for r in [
            formula_vs_lambda_prime(&[1, 2, 3, 4], &[5], &s).unwrap(),
            formula_vs_lambda(&[4], &s).unwrap(),
            oracle_dimensions(5, 5, &s).unwrap(),
            functoriality(5, 2, 10, 1, &s).unwrap(),
            decomposition_consistency(5, &s).unwrap(),
            poincare_identity(3..=12).unwrap(),
            cycle_index_route(6).unwrap(),
            extended_index(6).unwrap(),
            reconstruction(6).unwrap(),
            chr_vs_poset(&[1, 3, 5]).unwrap(),
            plethystic_round_trips(6).unwrap(),
            euler(7).unwrap(),
            complex_checks(4).unwrap(),
            recurrences(40, 7).unwrap(),
            integrality(6).unwrap(),
            chr_restriction(6).unwrap(),
        ] {
            println!("{r}");
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn report_shows_counterexample() {
        let r = CheckReport::finish("x", Instant::now(), 3, Some("λ=[2]".into()));
        assert!(r.to_string().starts_with("FAIL x (3 cases"));
        assert!(r.to_string().ends_with("first counterexample: λ=[2]"));
    }

    #[test]
    fn ambient_cap() {
        assert!(check_ambient(Kind::Lambda, 8, 3, 100_000).is_ok());
        assert!(check_ambient(Kind::Lambda, 8, 3, 50_000).is_err());
    }
}
