//! Sparse Gaussian elimination over `Q(v)`.

use std::collections::BTreeMap;

use crate::ring::RatFunc;

pub type SparseVec<K> = BTreeMap<K, RatFunc>;

pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &RatFunc, x: &SparseVec<K>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let t = a * v;
        match y.get_mut(k) {
            Some(e) => {
                *e += &t;
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                y.insert(k.clone(), t);
            }
        }
    }
}

/// Row echelon form built incrementally. Each stored row remembers which
/// combination of inserted vectors (identified by their insertion index)
/// produced it, so solving also yields coordinates against the inputs.
///
/// Pivots are the smallest remaining key of each row; a later row has zeros
/// at all earlier pivots.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, SparseVec<K>, SparseVec<usize>)>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: Vec::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; returns the residual and the
    /// combination of inputs subtracted.
    fn reduce(&self, mut v: SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut combo = SparseVec::new();
        for (p, row, rc) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                let neg = -&c;
                axpy(&mut v, &neg, row);
                axpy(&mut combo, &c, rc);
            }
        }
        (v, combo)
    }

    /// Insert a vector; returns whether it increased the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (mut res, combo) = self.reduce(v);
        let Some((p, lead)) = res.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        for c in res.values_mut() {
            *c = &*c * &inv;
        }
        // row = (input_idx - combo) / lead
        let mut rc = SparseVec::new();
        rc.insert(idx, inv.clone());
        let neg = -&inv;
        axpy(&mut rc, &neg, &combo);
        // keep earlier rows free of the new pivot
        for (_, row, rcomb) in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                let neg = -&c;
                axpy(row, &neg, &res);
                axpy(rcomb, &neg, &rc);
            }
        }
        self.rows.push((p, res, rc));
        true
    }

    /// Express `v` in the span: coordinates against inserted vectors, or
    /// `Err(residual)` when `v` is outside the span.
    pub fn solve(&self, v: SparseVec<K>) -> Result<SparseVec<usize>, SparseVec<K>> {
        let (res, combo) = self.reduce(v);
        if res.is_empty() {
            Ok(combo)
        } else {
            Err(res)
        }
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
