use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::vector::{Vector, Q};

/// Incremental row-echelon basis over arbitrary ordered coordinates.
///
/// Every stored row has its smallest key as pivot with coefficient 1, and no
/// other stored row has a nonzero entry at that pivot's position below it in
/// the reduction order. Each row remembers the combination of inserted
/// vectors (by insertion index) it equals, so membership tests can return
/// coordinates with respect to the original inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, (Vector<K>, Vector<usize>)>,
    inserted: usize,
    track: bool,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
            inserted: 0,
            track: true,
        }
    }

    /// Echelon form that skips combination bookkeeping (rank-only use).
    pub fn untracked() -> Self {
        Echelon {
            rows: BTreeMap::new(),
            inserted: 0,
            track: false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &Vector<K>) -> (Vector<K>, Vector<usize>) {
        let mut rem = v.clone();
        let mut combo = Vector::zero();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => rem.keys().find(|k| self.rows.contains_key(k)).cloned(),
                Some(c) => rem
                    .keys()
                    .find(|k| *k > c && self.rows.contains_key(k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let c = rem.get(&k);
            let (row, rc) = &self.rows[&k];
            rem.add_scaled(row, &-c.clone());
            if self.track {
                combo.add_scaled(rc, &c);
            }
            cursor = Some(k);
        }
        (rem, combo)
    }

    /// Inserts `v`; returns true when it was independent of the previous rows.
    pub fn insert(&mut self, v: &Vector<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, combo) = self.reduce(v);
        if rem.is_zero() {
            return false;
        }
        let (pk, pc) = rem.first().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let inv = Q::one() / pc;
        let row = rem.scaled(&inv);
        let mut tag = Vector::zero();
        if self.track {
            tag.add_term(idx, Q::one());
            tag.sub(&combo);
            tag = tag.scaled(&inv);
        }
        self.rows.insert(pk, (row, tag));
        true
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coordinates of `v` in terms of inserted vectors, if `v` is in the span.
    pub fn express(&self, v: &Vector<K>) -> Option<Vector<usize>> {
        let (rem, combo) = self.reduce(v);
        rem.is_zero().then_some(combo)
    }

    /// Reduced row echelon rows (pivot, row) with pivots eliminated everywhere.
    pub fn rref_rows(&self) -> Vec<(K, Vector<K>)> {
        let mut rows: Vec<(K, Vector<K>)> = self
            .rows
            .iter()
            .map(|(k, (r, _))| (k.clone(), r.clone()))
            .collect();
        for i in (0..rows.len()).rev() {
            let (pk, prow) = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                let c = row.1.get(&pk);
                if !c.is_zero() {
                    row.1.add_scaled(&prow, &-c);
                }
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::vector::q;

    fn v(xs: &[i64]) -> Vector<usize> {
        Vector::from_terms(xs.iter().enumerate().map(|(i, x)| (i, q(*x))))
    }

    #[test]
    fn express_recovers_combination() {
        let mut e = Echelon::new();
        assert!(e.insert(&v(&[1, 2, 0])));
        assert!(e.insert(&v(&[0, 1, 1])));
        assert!(!e.insert(&v(&[2, 5, 1])));
        let target = v(&[3, 7, 1]);
        let c = e.express(&target).unwrap();
        let mut rebuilt = v(&[1, 2, 0]).scaled(&c.get(&0));
        rebuilt.add_scaled(&v(&[0, 1, 1]), &c.get(&1));
        assert_eq!(rebuilt, target);
        assert!(e.express(&v(&[0, 0, 1])).is_none());
    }
}
