//! Sparse exact elimination over the coefficient field.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalars::FieldScalar;

pub type SparseVec<K> = BTreeMap<K, FieldScalar>;

/// `v += c * w`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &FieldScalar, w: &SparseVec<K>) {
    for (k, x) in w {
        let d = c * x;
        match v.get_mut(k) {
            Some(e) => {
                *e = &*e + &d;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !d.is_zero() {
                    v.insert(k.clone(), d);
                }
            }
        }
    }
}

fn normalize<K: Ord + Clone>(v: &mut SparseVec<K>) -> FieldScalar {
    let lead = v.last_key_value().expect("nonzero vector").1.clone();
    let inv = lead.inv().expect("nonzero lead");
    for x in v.values_mut() {
        *x = &*x * &inv;
    }
    inv
}

/// Row-echelon basis of a subspace, keyed by leading (largest) key; every
/// stored vector has leading coefficient one.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce until the leading key is not a pivot; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((k, c)) = v.last_key_value() {
            let Some(row) = self.rows.get(k) else { break };
            let c = -c;
            axpy(&mut v, &c, row);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        let lead = r.last_key_value().unwrap().0.clone();
        self.rows.insert(lead, r);
        true
    }

    /// Fully reduced basis, ordered by leading key.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K>> {
        let mut out: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        // Ascending leads: a row can only meet pivots of the rows already reduced.
        for (lead, row) in &self.rows {
            let mut r = row.clone();
            for (k, other) in &out {
                if let Some(c) = r.get(k).cloned() {
                    axpy(&mut r, &-c, other);
                }
            }
            out.insert(lead.clone(), r);
        }
        out.into_values().collect()
    }
}

/// Basis of the space of coefficient vectors `c` with `Σ c_j columns[j] = 0`.
pub fn kernel<K: Ord + Clone>(columns: &[SparseVec<K>], one: &FieldScalar) -> Vec<SparseVec<usize>> {
    // Pivot rows carry the combination of columns that produced them.
    let mut pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo: SparseVec<usize> = BTreeMap::new();
        combo.insert(j, one.clone());
        while let Some((k, c)) = v.last_key_value() {
            let Some((row, rc)) = pivots.get(k) else { break };
            let c = -c;
            axpy(&mut v, &c, row);
            axpy(&mut combo, &c, rc);
        }
        if v.is_empty() {
            out.push(combo);
        } else {
            let inv = normalize(&mut v);
            for x in combo.values_mut() {
                *x = &*x * &inv;
            }
            let lead = v.last_key_value().unwrap().0.clone();
            pivots.insert(lead, (v, combo));
        }
    }
    out
}
