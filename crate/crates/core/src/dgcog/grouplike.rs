//! Group-like elements as characters of the dual algebra.
//!
//! A degree-0 group-like `g` is a character of `A = C*` restricted to
//! degree 0. Such characters kill the products `A^n A^{-n}` for `n != 0`, so
//! they are characters of `B = A^0 / I`, whose dual is the subspace
//! `U = I^⊥ ⊆ C^0`. `B` splits into local blocks by simultaneous
//! generalized eigenspaces of multiplication operators; blocks whose residue
//! field is `Q` give exactly one character each, and blocks where some
//! operator has irrational eigenvalues carry no rational point.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Coalgebra, Tensor2};
use crate::error::{Error, Result};
use crate::exactla::{poly, Frame, SparseMatrix, Vector, Q};
use crate::graded::Element;

pub(crate) struct Characters {
    /// Every rational group-like, closed under d or not, in canonical order.
    pub all: Vec<Element>,
    /// Total dimension of blocks without a rational character.
    pub unsplit_dim: usize,
}

type Dense = Vec<Vec<Q>>;

fn mat_vec(m: &Dense, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| (0..b.len()).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

fn shifted_power(m: &Dense, lambda: &Q, p: usize) -> Dense {
    let n = m.len();
    let mut s = m.clone();
    for (i, row) in s.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let mut out: Dense = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    for _ in 0..p {
        out = mat_mul(&out, &s);
    }
    out
}

fn to_sparse(v: &[Q]) -> Vector<usize> {
    Vector::from_terms(v.iter().cloned().enumerate())
}

fn to_dense(v: &Vector<usize>, n: usize) -> Vec<Q> {
    (0..n).map(|i| v.get(&i)).collect()
}

struct Block {
    vectors: Vec<Vector<usize>>,
    eigen: Vec<Q>,
    rational: bool,
}

pub(crate) fn characters(c: &Coalgebra) -> Result<Characters> {
    let idx0 = c.space.indices_in_degree(0);
    let n0 = idx0.len();
    let pos: BTreeMap<usize, usize> = idx0.iter().enumerate().map(|(p, i)| (*i, p)).collect();

    // Products A^n A^{-n} (n != 0) restricted to degree 0.
    let mut mixed: BTreeMap<(usize, usize), Vector<usize>> = BTreeMap::new();
    for (p, i) in idx0.iter().enumerate() {
        for ((j, k), x) in c.comul_basis(*i).iter() {
            if c.space.degree(*j) != 0 {
                mixed.entry((*j, *k)).or_default().add_term(p, x.clone());
            }
        }
    }
    let rows: Vec<_> = mixed.into_values().collect();
    let mut m = SparseMatrix::zero(rows.len(), n0);
    for (r, row) in rows.iter().enumerate() {
        for (p, x) in row.iter() {
            m.set(r, *p, x.clone());
        }
    }
    let u = m.kernel_basis();
    let dim = u.len();
    if dim == 0 {
        return Ok(Characters {
            all: vec![],
            unsplit_dim: 0,
        });
    }
    let frame = Frame::new(u.clone(), n0)?;
    let beta = |p: usize| frame.coords(&Vector::unit(p));

    // Structure constants of B in the basis dual to u.
    let mut mult: Vec<Dense> = vec![vec![vec![Q::zero(); dim]; dim]; dim];
    for (cidx, uc) in u.iter().enumerate() {
        let cel: Element = uc.map_keys(|p| idx0[*p]);
        let t: Tensor2 = c.comul(&cel);
        for ((j, k), x) in t.iter() {
            let (Some(pj), Some(pk)) = (pos.get(j), pos.get(k)) else {
                continue;
            };
            let (bj, bk) = (beta(*pj), beta(*pk));
            for (a, ya) in bj.iter() {
                for (b, yb) in bk.iter() {
                    // L_a[c][b] = coefficient of beta_c in beta_a beta_b
                    mult[*a][cidx][*b] += x * ya * yb;
                }
            }
        }
    }

    let mut blocks = vec![Block {
        vectors: (0..dim).map(Vector::unit).collect(),
        eigen: vec![],
        rational: true,
    }];
    for la in &mult {
        let mut next = Vec::new();
        for blk in blocks {
            let r = blk.vectors.len();
            let wf = Frame::new(blk.vectors.clone(), dim)?;
            let mrest: Dense = {
                let cols: Vec<Vec<Q>> = blk
                    .vectors
                    .iter()
                    .map(|w| {
                        let img = to_sparse(&mat_vec(la, &to_dense(w, dim)));
                        let coords = wf.coords_in(&img).ok_or_else(|| {
                            Error::IncompleteOverQ(
                                "block of the dual algebra is not an ideal".into(),
                            )
                        });
                        coords.map(|cv| to_dense(&cv, r))
                    })
                    .collect::<Result<_>>()?;
                (0..r)
                    .map(|i| (0..r).map(|j| cols[j][i].clone()).collect())
                    .collect()
            };
            let cp = poly::char_poly(&mrest);
            let roots = poly::rational_roots(&cp).ok_or_else(|| {
                Error::IncompleteOverQ(
                    "characteristic polynomial too large for exact root search".into(),
                )
            })?;
            let mut covered = 0;
            let mut rest: Dense = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| if i == j { Q::one() } else { Q::zero() })
                        .collect()
                })
                .collect();
            for (lambda, mu) in &roots {
                covered += mu;
                let nmat = shifted_power(&mrest, lambda, r);
                rest = mat_mul(&rest, &nmat);
                let ker = SparseMatrix::from_dense(&nmat).kernel_basis();
                debug_assert_eq!(ker.len(), *mu);
                let vectors = ker.iter().map(|k| wf.lift(k)).collect();
                let mut eigen = blk.eigen.clone();
                eigen.push(lambda.clone());
                next.push(Block {
                    vectors,
                    eigen,
                    rational: blk.rational,
                });
            }
            if covered < r {
                let img = SparseMatrix::from_dense(&rest);
                let mut e = crate::exactla::Echelon::untracked();
                let mut vectors = Vec::new();
                for j in 0..r {
                    let col = img.column(j);
                    if e.insert(&col) {
                        vectors.push(wf.lift(&col));
                    }
                }
                debug_assert_eq!(vectors.len(), r - covered);
                let mut eigen = blk.eigen.clone();
                eigen.push(Q::zero());
                next.push(Block {
                    vectors,
                    eigen,
                    rational: false,
                });
            }
        }
        blocks = next;
    }

    let mut all = Vec::new();
    let mut unsplit_dim = 0;
    for blk in blocks {
        if !blk.rational {
            unsplit_dim += blk.vectors.len();
            continue;
        }
        let mut g = Element::zero();
        for (a, lambda) in blk.eigen.iter().enumerate() {
            g.add_scaled(&u[a].map_keys(|p| idx0[*p]), lambda);
        }
        let gg = Tensor2::from_terms(
            g.iter()
                .flat_map(|(j, x)| g.iter().map(move |(k, y)| ((*j, *k), x * y))),
        );
        if c.comul(&g) != gg || !c.counit(&g).is_one() {
            return Err(Error::IncompleteOverQ(format!(
                "character {} is not group-like",
                c.render(&g)
            )));
        }
        all.push(g);
    }
    all.sort();
    Ok(Characters { all, unsplit_dim })
}

/// Rational group-like elements that are cycles, in canonical order.
pub fn group_likes(c: &Coalgebra) -> Result<Vec<Element>> {
    Ok(characters(c)?
        .all
        .into_iter()
        .filter(|g| c.diff(g).is_zero())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgcog::tests::{g2, k, p1};
    use crate::exactla::q;

    #[test]
    fn examples() {
        assert_eq!(group_likes(&k()).unwrap(), vec![Element::unit(0)]);
        assert_eq!(
            group_likes(&g2()).unwrap(),
            vec![Element::unit(0), Element::unit(1)]
        );
        assert_eq!(group_likes(&p1()).unwrap(), vec![Element::unit(0)]);
    }

    #[test]
    fn irrational_points_are_reported_unsplit() {
        // Dual of Q(√2): basis 1, s with s·s = 2.
        let c = Coalgebra::from_triples(
            &[("one", 0), ("s", 0)],
            &[&[(q(1), 0, 0), (q(2), 1, 1)], &[(q(1), 0, 1), (q(1), 1, 0)]],
            &[(0, q(1))],
            &[],
        )
        .unwrap();
        assert!(c.validate().passed());
        let ch = characters(&c).unwrap();
        assert!(ch.all.is_empty());
        assert_eq!(ch.unsplit_dim, 2);
    }

    #[test]
    fn non_cycle_group_like_is_filtered() {
        // g:0 with dg = h, h:1 primitive.
        let c = Coalgebra::from_triples(
            &[("g", 0), ("h", 1)],
            &[&[(q(1), 0, 0)], &[(q(1), 1, 0), (q(1), 0, 1)]],
            &[(0, q(1))],
            &[&[(1, q(1))], &[]],
        )
        .unwrap();
        assert!(c.validate().passed());
        assert_eq!(characters(&c).unwrap().all.len(), 1);
        assert!(group_likes(&c).unwrap().is_empty());
    }
}
