//! Exact sparse row reduction over ℚ with a deterministic pivot order.
//!
//! Rows are inserted one at a time and reduced against the existing pivots
//! (lowest column first); a surviving row is scaled so its pivot entry is 1.
//! [`Echelon::into_reduced`] then back-substitutes to reduced row echelon
//! form. The result depends only on the row space, not on insertion order.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse vector: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, BigRational)>;

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivot_of_col: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the current pivots; keep it if anything survives.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        let mut work: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, v) in row {
            if v.is_zero() {
                continue;
            }
            let e = work.entry(c).or_insert_with(BigRational::zero);
            *e += v;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        let mut out: SparseRow = Vec::new();
        while let Some((c, v)) = work.pop_first() {
            match self.pivot_of_col.get(&c) {
                Some(&r) => {
                    // Pivot entry is 1, so subtract v times the pivot row.
                    for (c2, v2) in self.rows[r].iter().skip(1) {
                        let e = work.entry(*c2).or_insert_with(BigRational::zero);
                        *e -= &v * v2;
                        if e.is_zero() {
                            work.remove(c2);
                        }
                    }
                }
                None => out.push((c, v)),
            }
        }
        if out.is_empty() {
            return false;
        }
        let lead = out[0].1.clone();
        if !lead.is_one() {
            for (_, v) in out.iter_mut() {
                *v /= &lead;
            }
        }
        self.pivot_of_col.insert(out[0].0, self.rows.len());
        self.rows.push(out);
        true
    }

    /// Back-substitute to reduced row echelon form, rows sorted by pivot.
    pub fn into_reduced(self) -> Reduced {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].first().map(|e| e.0));
        let mut rows: Vec<SparseRow> = order.into_iter().map(|r| self.rows[r].clone()).collect();
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let index: HashMap<usize, usize> = pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        // Process from the last pivot backwards so each row only references
        // already-reduced rows.
        for i in (0..rows.len()).rev() {
            let mut work: BTreeMap<usize, BigRational> = rows[i].iter().skip(1).cloned().collect();
            let mut changed = false;
            let cols: Vec<usize> = work.keys().copied().filter(|c| index.contains_key(c)).collect();
            for c in cols {
                let Some(v) = work.remove(&c) else { continue };
                changed = true;
                let r = &rows[index[&c]];
                for (c2, v2) in r.iter().skip(1) {
                    let e = work.entry(*c2).or_insert_with(BigRational::zero);
                    *e -= &v * v2;
                    if e.is_zero() {
                        work.remove(c2);
                    }
                }
            }
            if changed {
                let mut new_row = vec![rows[i][0].clone()];
                new_row.extend(work);
                rows[i] = new_row;
            }
        }
        Reduced { rows, index }
    }
}

/// Reduced row echelon basis of a subspace: each row has entry 1 at its
/// pivot and 0 at every other pivot column.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Reduced {
    rows: Vec<SparseRow>,
    index: HashMap<usize, usize>,
}

impl Reduced {
    pub fn from_rows(rows: Vec<SparseRow>) -> Self {
        let index = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        Self { rows, index }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivot(&self, r: usize) -> usize {
        self.rows[r][0].0
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.index.contains_key(&col)
    }

    /// `v - Σ v[pivot_r] b_r`: the representative of `v` supported on
    /// non-pivot columns.
    pub fn normal_form(&self, v: &BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigRational> {
        let mut out: BTreeMap<usize, BigRational> = v
            .iter()
            .filter(|(c, _)| !self.is_pivot(**c))
            .map(|(c, x)| (*c, x.clone()))
            .collect();
        for (c, x) in v {
            if let Some(&r) = self.index.get(c) {
                for (c2, v2) in self.rows[r].iter().skip(1) {
                    let e = out.entry(*c2).or_insert_with(BigRational::zero);
                    *e -= x * v2;
                    if e.is_zero() {
                        out.remove(c2);
                    }
                }
            }
        }
        out
    }

    /// Trace of a signed monomial permutation restricted to this (invariant)
    /// subspace. `preimage(c)` returns the column `q` and sign with
    /// `π(e_q) = sign · e_c`.
    pub fn restricted_trace(&self, preimage: impl Fn(usize) -> (usize, i32)) -> BigRational {
        let mut tr = BigRational::zero();
        for row in &self.rows {
            let (q, sign) = preimage(row[0].0);
            if let Ok(pos) = row.binary_search_by_key(&q, |e| e.0) {
                if sign > 0 {
                    tr += &row[pos].1;
                } else {
                    tr -= &row[pos].1;
                }
            }
        }
        tr
    }
}
