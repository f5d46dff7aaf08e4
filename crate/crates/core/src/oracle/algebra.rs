//! The quadratic algebras `Λ'(S)` (generators `ν_{ijk}`) and `Λ(S)`
//! (generators `ω_{ijkl}`), built from generators and relations.
//!
//! Generators are odd, so the ambient algebra is an exterior algebra with
//! monomials indexed by strictly increasing generator ids. The monomial
//! relations (`ν_{ijk}ν_{ijl}`, `ω_{ijkl}ω_{ijkm}`) are quotiented out first:
//! the working basis in degree `d` is the set of *admissible* monomials, in
//! which no two generators share exactly `arity - 1` indices. The five-term
//! relations, multiplied by admissible monomials, span the rest of the ideal,
//! which is put in reduced row echelon form.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::cache;
use super::echelon::{Echelon, Reduced, SparseRow};
use crate::error::{Error, Result};
use crate::graded::GradedCharacter;

/// Which algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// `Λ'(S)`, generators `ν_{ijk}`.
    LambdaPrime,
    /// `Λ(S)`, generators `ω_{ijkl}`.
    Lambda,
}

impl Kind {
    /// Number of indices on a generator.
    pub fn arity(self) -> usize {
        match self {
            Kind::LambdaPrime => 3,
            Kind::Lambda => 4,
        }
    }

    /// Degree of the five-term relation.
    fn relation_degree(self) -> usize {
        match self {
            Kind::LambdaPrime => 2,
            Kind::Lambda => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::LambdaPrime => "lambda-prime",
            Kind::Lambda => "lambda",
        }
    }
}

/// Generator ids of a monomial, strictly increasing.
pub type Monomial = Vec<u32>;

/// Sort `v` in place and return the parity of the sorting permutation, or
/// `None` if two entries coincide.
fn sort_with_sign<T: Ord + Copy>(v: &mut [T]) -> Option<i32> {
    let mut sign = 1;
    // Insertion sort: each swap is a transposition.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// The generators of one algebra on the ground set `0..ground`.
#[derive(Clone, Debug)]
pub struct Generators {
    kind: Kind,
    ground: usize,
    list: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, u32>,
}

impl Generators {
    pub fn new(kind: Kind, ground: usize) -> Self {
        let list: Vec<Vec<usize>> = itertools::Itertools::combinations(0..ground, kind.arity()).collect();
        let index = list.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        Self { kind, ground, list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    /// Sorted index tuple of generator `id`.
    pub fn indices(&self, id: u32) -> &[usize] {
        &self.list[id as usize]
    }

    /// The single sign convention: a product of generators written with
    /// arbitrary index orders and in arbitrary order equals
    /// `sign × canonical monomial`, where the sign is the product of the
    /// index-sorting parities and the generator-sorting parity. Repeated
    /// indices in a generator, or a repeated generator, give zero (`None`).
    pub fn canonicalize(&self, factors: &[&[usize]]) -> Option<(Monomial, i32)> {
        let mut sign = 1;
        let mut ids = Vec::with_capacity(factors.len());
        for f in factors {
            debug_assert_eq!(f.len(), self.kind.arity());
            let mut idx = f.to_vec();
            sign *= sort_with_sign(&mut idx)?;
            ids.push(self.index[&idx]);
        }
        sign *= sort_with_sign(&mut ids)?;
        Some((ids, sign))
    }

    /// Canonical form of a product given by generator ids in arbitrary order.
    pub fn canonicalize_ids(&self, ids: &[u32]) -> Option<(Monomial, i32)> {
        let mut v = ids.to_vec();
        let s = sort_with_sign(&mut v)?;
        Some((v, s))
    }

    fn shared(&self, a: u32, b: u32) -> usize {
        let (x, y) = (&self.list[a as usize], &self.list[b as usize]);
        x.iter().filter(|i| y.contains(i)).count()
    }

    /// No two generators share exactly `arity - 1` indices.
    pub fn admissible(&self, mono: &[u32]) -> bool {
        let bad = self.kind.arity() - 1;
        for (i, &a) in mono.iter().enumerate() {
            for &b in &mono[i + 1..] {
                if self.shared(a, b) == bad {
                    return false;
                }
            }
        }
        true
    }

    /// Image of generator `id` under a map of ground sets, as a canonical
    /// generator with sign, or `None` if two indices collide.
    pub fn map_generator(&self, f: &[usize], target: &Generators, id: u32) -> Option<(u32, i32)> {
        let img: Vec<usize> = self.list[id as usize].iter().map(|&i| f[i]).collect();
        let (m, s) = target.canonicalize(&[&img])?;
        Some((m[0], s))
    }

    /// All admissible monomials of degree `d`, in lexicographic order.
    pub fn admissible_monomials(&self, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        self.extend_admissible(d, 0, &mut cur, &mut out);
        out
    }

    fn extend_admissible(&self, d: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        let bad = self.kind.arity() - 1;
        for g in start..self.list.len() as u32 {
            if cur.iter().all(|&h| self.shared(h, g) != bad) {
                cur.push(g);
                self.extend_admissible(d, g + 1, cur, out);
                cur.pop();
            }
        }
    }

    /// The five-term relations over all ordered 5-tuples of distinct
    /// indices, as signed combinations of canonical monomials, with
    /// duplicates (up to scalar) removed.
    pub fn five_term_relations(&self) -> Vec<Vec<(Monomial, i32)>> {
        let mut seen: HashSet<Vec<(Monomial, i32)>> = HashSet::new();
        let mut out = Vec::new();
        for t in itertools::Itertools::permutations(0..self.ground, 5) {
            let [i, j, k, l, m] = [t[0], t[1], t[2], t[3], t[4]];
            let products: Vec<Vec<Vec<usize>>> = match self.kind {
                Kind::LambdaPrime => vec![
                    vec![vec![i, j, k], vec![k, l, m]],
                    vec![vec![j, k, l], vec![l, m, i]],
                    vec![vec![k, l, m], vec![m, i, j]],
                    vec![vec![l, m, i], vec![i, j, k]],
                    vec![vec![m, i, j], vec![j, k, l]],
                ],
                Kind::Lambda => vec![
                    vec![vec![i, j, k, l]],
                    vec![vec![j, k, l, m]],
                    vec![vec![k, l, m, i]],
                    vec![vec![l, m, i, j]],
                    vec![vec![m, i, j, k]],
                ],
            };
            let mut acc: BTreeMap<Monomial, i32> = BTreeMap::new();
            for p in &products {
                let refs: Vec<&[usize]> = p.iter().map(|v| v.as_slice()).collect();
                if let Some((mono, s)) = self.canonicalize(&refs) {
                    *acc.entry(mono).or_insert(0) += s;
                }
            }
            let mut rel: Vec<(Monomial, i32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
            if rel.is_empty() {
                continue;
            }
            if rel[0].1 < 0 {
                for e in rel.iter_mut() {
                    e.1 = -e.1;
                }
            }
            if seen.insert(rel.clone()) {
                out.push(rel);
            }
        }
        out
    }

    /// Action of a permutation of the ground set on generator ids.
    pub fn permutation_table(&self, perm: &[usize]) -> Vec<(u32, i32)> {
        assert_eq!(perm.len(), self.ground, "permutation size must match the ground set");
        (0..self.list.len() as u32)
            .map(|id| self.map_generator(perm, self, id).expect("bijection"))
            .collect()
    }
}

/// `C(n, k)` as `u128`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// One graded piece: admissible monomial basis plus the echelonized ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedComponent {
    pub kind: Kind,
    pub ground: usize,
    pub degree: usize,
    /// `C(#generators, degree)`: the exterior-algebra dimension.
    pub ambient_total: u128,
    basis: Vec<Monomial>,
    column: HashMap<Monomial, usize>,
    ideal: Reduced,
}

impl GradedComponent {
    pub(crate) fn from_parts(
        kind: Kind,
        ground: usize,
        degree: usize,
        ambient_total: u128,
        basis: Vec<Monomial>,
        ideal: Reduced,
    ) -> Self {
        let column = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Self { kind, ground, degree, ambient_total, basis, column, ideal }
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn ideal(&self) -> &Reduced {
        &self.ideal
    }

    pub fn column(&self, m: &Monomial) -> Option<usize> {
        self.column.get(m).copied()
    }

    /// Rank of the full degree-`d` ideal, monomial relations included.
    pub fn ideal_rank(&self) -> u128 {
        self.ambient_total - self.basis.len() as u128 + self.ideal.rank() as u128
    }

    /// `C(#generators, d) - rank(ideal)`.
    pub fn quotient_dim(&self) -> usize {
        (self.ambient_total - self.ideal_rank()) as usize
    }

    /// Columns not carrying a pivot: a basis of the quotient.
    pub fn standard_columns(&self) -> Vec<usize> {
        (0..self.basis.len()).filter(|&c| !self.ideal.is_pivot(c)).collect()
    }

    /// Trace of a ground-set permutation (given by its generator table and
    /// that of its inverse) on the quotient.
    fn trace(&self, table: &[(u32, i32)], inverse_table: &[(u32, i32)]) -> BigRational {
        let act = |m: &Monomial, t: &[(u32, i32)]| -> (Monomial, i32) {
            let mut s = 1;
            let mut ids: Vec<u32> = m
                .iter()
                .map(|&g| {
                    let (h, sg) = t[g as usize];
                    s *= sg;
                    h
                })
                .collect();
            s *= sort_with_sign(&mut ids).expect("bijections keep generators distinct");
            (ids, s)
        };
        let mut ambient = 0i64;
        for m in &self.basis {
            let (img, s) = act(m, table);
            if &img == m {
                ambient += s as i64;
            }
        }
        let ideal = self.ideal.restricted_trace(|c| {
            let (q, s) = act(&self.basis[c], inverse_table);
            (self.column[&q], s)
        });
        BigRational::from_integer(BigInt::from(ambient)) - ideal
    }
}

/// Build options for [`Algebra::build`].
#[derive(Clone, Debug)]
pub struct BuildOptions<'a> {
    /// Refuse components whose exterior-algebra dimension exceeds this.
    pub max_ambient: usize,
    /// Optional on-disk cache of echelonized components.
    pub cache_dir: Option<&'a Path>,
}

impl Default for BuildOptions<'_> {
    fn default() -> Self {
        Self { max_ambient: 100_000, cache_dir: None }
    }
}

/// All nonzero graded pieces of `Λ'(S)` or `Λ(S)`.
#[derive(Clone, Debug)]
pub struct Algebra {
    gens: Generators,
    components: Vec<GradedComponent>,
}

impl Algebra {
    /// Build components in increasing degree until the quotient vanishes
    /// (it then vanishes in every higher degree, being generated in degree 1).
    pub fn build(kind: Kind, ground: usize, opts: &BuildOptions) -> Result<Self> {
        let gens = Generators::new(kind, ground);
        let relations = gens.five_term_relations();
        let mut components = Vec::new();
        for d in 0.. {
            let c = build_component_with(&gens, &relations, d, opts)?;
            let done = c.quotient_dim() == 0;
            components.push(c);
            if done {
                break;
            }
        }
        Ok(Self { gens, components })
    }

    pub fn kind(&self) -> Kind {
        self.gens.kind
    }

    pub fn ground(&self) -> usize {
        self.gens.ground
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    /// Components in degrees `0..=top+1` (the last one is zero).
    pub fn components(&self) -> &[GradedComponent] {
        &self.components
    }

    pub fn component(&self, d: usize) -> Option<&GradedComponent> {
        self.components.get(d)
    }

    /// `Σ_d dim_d (-t)^d`.
    pub fn poincare(&self) -> GradedCharacter {
        GradedCharacter::from_traces(
            &self.components.iter().map(|c| BigInt::from(c.quotient_dim())).collect::<Vec<_>>(),
        )
    }

    /// `Σ_d (-t)^d Tr(π | degree d)`.
    pub fn graded_trace(&self, perm: &[usize]) -> Result<GradedCharacter> {
        if !crate::sn::is_permutation(perm) || perm.len() != self.ground() {
            return Err(Error::InvalidInput(format!(
                "not a permutation of {} points: {perm:?}",
                self.ground()
            )));
        }
        let table = self.gens.permutation_table(perm);
        let inverse_table = self.gens.permutation_table(&crate::sn::inverse(perm));
        let mut traces = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let tr = c.trace(&table, &inverse_table);
            if !tr.is_integer() {
                return Err(Error::NonIntegral(format!("trace {tr} in degree {}", c.degree)));
            }
            traces.push(tr.to_integer());
        }
        Ok(GradedCharacter::from_traces(&traces))
    }
}

/// Build a single graded component from scratch (or the cache).
pub fn build_component(kind: Kind, ground: usize, degree: usize, opts: &BuildOptions) -> Result<GradedComponent> {
    let gens = Generators::new(kind, ground);
    let relations = gens.five_term_relations();
    build_component_with(&gens, &relations, degree, opts)
}

fn build_component_with(
    gens: &Generators,
    relations: &[Vec<(Monomial, i32)>],
    d: usize,
    opts: &BuildOptions,
) -> Result<GradedComponent> {
    let ambient_total = binomial(gens.len(), d);
    if ambient_total > opts.max_ambient as u128 {
        return Err(Error::ResourceCap { ambient: ambient_total, cap: opts.max_ambient });
    }
    if let Some(dir) = opts.cache_dir {
        if let Some(c) = cache::load(dir, gens.kind, gens.ground, d) {
            return Ok(c);
        }
    }
    let basis = gens.admissible_monomials(d);
    let column: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let r = gens.kind.relation_degree();
    let mut ech = Echelon::new();
    if d >= r {
        for m in gens.admissible_monomials(d - r) {
            for rel in relations {
                let mut row: SparseRow = Vec::new();
                for (term, coef) in rel {
                    let mut ids = m.clone();
                    ids.extend_from_slice(term);
                    let Some((mono, s)) = gens.canonicalize_ids(&ids) else { continue };
                    if let Some(&col) = column.get(&mono) {
                        row.push((col, BigRational::from_integer(BigInt::from(s * coef))));
                    }
                }
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    let comp = GradedComponent::from_parts(gens.kind, gens.ground, d, ambient_total, basis, ech.into_reduced());
    if let Some(dir) = opts.cache_dir {
        // The cache is an optimisation; a failed write is not an error.
        let _ = cache::store(dir, &comp);
    }
    Ok(comp)
}

/// Matrix of `Λ(f)` in one degree, on the standard-monomial bases of source
/// and target quotients. Row `i` is the image of the `i`-th source basis
/// vector.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMap {
    pub degree: usize,
    pub rows: Vec<Vec<BigRational>>,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl QuotientMap {
    /// `self` followed by `next` (row-vector convention: `self · next`).
    pub fn then(&self, next: &QuotientMap) -> QuotientMap {
        assert_eq!(self.target_dim, next.source_dim);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..next.target_dim)
                    .map(|j| {
                        r.iter()
                            .zip(&next.rows)
                            .fold(BigRational::zero(), |acc, (a, row)| acc + a * &row[j])
                    })
                    .collect()
            })
            .collect();
        QuotientMap { degree: self.degree, rows, source_dim: self.source_dim, target_dim: next.target_dim }
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim
            && self.rows.iter().enumerate().all(|(i, r)| {
                r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }
}

/// `Λ(f)` for a map of ground sets `f: source → target`, degree by degree
/// up to the smaller top degree (higher degrees are zero on one side).
pub fn apply_map(source: &Algebra, target: &Algebra, f: &[usize]) -> Result<Vec<QuotientMap>> {
    if f.len() != source.ground() || f.iter().any(|&x| x >= target.ground()) {
        return Err(Error::InvalidInput(format!(
            "map {f:?} is not {} -> {} points",
            source.ground(),
            target.ground()
        )));
    }
    if source.kind() != target.kind() {
        return Err(Error::InvalidInput("source and target algebras differ".into()));
    }
    let degrees = source.components.len().max(target.components.len());
    let mut out = Vec::with_capacity(degrees);
    for d in 0..degrees {
        let src = source.component(d);
        let dst = target.component(d);
        let src_std = src.map(|c| c.standard_columns()).unwrap_or_default();
        let dst_std = dst.map(|c| c.standard_columns()).unwrap_or_default();
        let dst_pos: HashMap<usize, usize> = dst_std.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut rows = Vec::with_capacity(src_std.len());
        for &col in &src_std {
            let mut row = vec![BigRational::zero(); dst_std.len()];
            let (src, dst) = (src.unwrap(), dst.expect("nonzero source implies component"));
            let mono = &src.basis()[col];
            let mut sign = 1;
            let mut ids = Vec::with_capacity(mono.len());
            let mut zero = false;
            for &g in mono {
                match source.gens.map_generator(f, &target.gens, g) {
                    Some((h, s)) => {
                        ids.push(h);
                        sign *= s;
                    }
                    None => zero = true,
                }
            }
            if !zero {
                if let Some((img, s)) = target.gens.canonicalize_ids(&ids) {
                    if let Some(c) = dst.column(&img) {
                        let v: BTreeMap<usize, BigRational> =
                            [(c, BigRational::from_integer(BigInt::from(sign * s)))].into_iter().collect();
                        for (c2, x) in dst.ideal().normal_form(&v) {
                            row[dst_pos[&c2]] = x;
                        }
                    }
                }
            }
            rows.push(row);
        }
        out.push(QuotientMap { degree: d, rows, source_dim: src_std.len(), target_dim: dst_std.len() });
    }
    Ok(out)
}

/// Image of one generator (1-based indices, as written) under `f`
/// (1-based), or `None` if it is zero.
pub fn map_generator_indices(f: &[usize], indices: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut img: Vec<usize> = indices.iter().map(|&i| f[i - 1]).collect();
    let s = sort_with_sign(&mut img)?;
    Some((img, s))
}
