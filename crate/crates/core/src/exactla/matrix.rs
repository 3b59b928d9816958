use num_traits::Zero;

use super::echelon::Echelon;
use super::vector::{Vector, Q};
use crate::error::{Error, Result};

/// Sparse column vector indexed by row position.
pub type SparseVec = Vector<usize>;

/// Sparse rational matrix stored by rows. Zero entries are never stored,
/// so two matrices are equal exactly when their entries agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vector::zero(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Q::from_integer(1.into()));
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged dense matrix");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Builds a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter() {
                assert!(*i < rows, "column entry out of range");
                m.data[*i].add_term(j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i},{j}) out of range"
        );
        let cur = self.data[i].get(&j);
        self.data[i].add_term(j, x - cur);
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i].get(&j)
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn column(&self, j: usize) -> SparseVec {
        Vector::from_terms(self.data.iter().enumerate().map(|(i, r)| (i, r.get(&j))))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for (i, j, x) in self.entries() {
            t.data[j].add_term(i, x.clone());
        }
        t
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vector::zero();
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = Q::zero();
            for (j, x) in r.iter() {
                if let Some(c) = v.coeff(j) {
                    acc += x * c;
                }
            }
            out.add_term(i, acc);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = Vector::zero();
            for (k, x) in r.iter() {
                acc.add_scaled(&other.data[*k], x);
            }
            out.data[i] = acc;
        }
        Ok(out)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::untracked();
        for r in &self.data {
            e.insert(r);
        }
        e.rank()
    }

    /// Basis of the null space, one vector per non-pivot column; empty when
    /// the matrix has full column rank.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut e = Echelon::untracked();
        for r in &self.data {
            e.insert(r);
        }
        let rref = e.rref_rows();
        let pivots: std::collections::BTreeSet<usize> = rref.iter().map(|(p, _)| *p).collect();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|j| !pivots.contains(j)) {
            let mut v = Vector::unit(free);
            for (p, row) in &rref {
                let c = row.get(&free);
                if !c.is_zero() {
                    v.add_term(*p, -c);
                }
            }
            out.push(v);
        }
        out
    }

    /// A particular solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let n = self.cols;
        let mut e = Echelon::untracked();
        for (i, r) in self.data.iter().enumerate() {
            let mut row = r.clone();
            row.add_term(n, b.get(&i));
            e.insert(&row);
        }
        let rref = e.rref_rows();
        let mut x = Vector::zero();
        for (p, row) in &rref {
            if *p == n {
                return None;
            }
            x.add_term(*p, row.get(&n));
        }
        Some(x)
    }
}

/// Dimension of `ker(d_out) / im(d_in)`.
pub fn homology_dim(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<usize> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch(format!(
            "d_in lands in dimension {} but d_out starts from {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::CompositeNonzero);
    }
    let ker = d_out.cols() - d_out.rank();
    Ok(ker - d_in.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::vector::q;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|x| q(*x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SparseMatrix::identity(2).rank(), 2);
        assert_eq!(SparseMatrix::zero(3, 4).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(SparseMatrix::identity(3).kernel_basis().is_empty());
        let k = SparseMatrix::zero(2, 2).kernel_basis();
        assert_eq!(k, vec![Vector::unit(0), Vector::unit(1)]);
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // span{(1,-1)}: the returned vector is proportional to it.
        assert_eq!(k[0].get(&0), -k[0].get(&1));
        assert!(m(&[&[1, 1]]).apply(&k[0]).is_zero());
    }

    #[test]
    fn homology_examples() {
        assert_eq!(
            homology_dim(&SparseMatrix::zero(3, 1), &SparseMatrix::zero(1, 3)).unwrap(),
            3
        );
        assert_eq!(
            homology_dim(&SparseMatrix::identity(2), &SparseMatrix::zero(1, 2)).unwrap(),
            0
        );
        // 0 -> k -> k with d_out an isomorphism.
        assert_eq!(
            homology_dim(&SparseMatrix::zero(1, 0), &m(&[&[1]])).unwrap(),
            0
        );
        assert!(matches!(
            homology_dim(&SparseMatrix::identity(1), &SparseMatrix::identity(1)),
            Err(Error::CompositeNonzero)
        ));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a
            .solve(&Vector::from_terms([(0, q(2)), (1, q(0))]))
            .unwrap();
        assert_eq!(x, Vector::from_terms([(0, q(1)), (1, q(1))]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b
            .solve(&Vector::from_terms([(0, q(1)), (1, q(3))]))
            .is_none());
    }
}
