use num_traits::{One, Zero};

use super::{Coalgebra, Tensor2};
use crate::error::{Error, Result};
use crate::exactla::{fmt_q, Vector, Q};
use crate::graded::{BasisElem, Element, GradedSpace};

/// `C = k·eps ⊕ C̄` with `C̄ = ker(counit)`, and the pieces of Δ and d
/// along this splitting.
#[derive(Clone, Debug)]
pub struct ReducedCoalgebra {
    pub source: Coalgebra,
    pub eps: Element,
    pub cbar: GradedSpace,
    /// C̄ basis vectors in the coordinates of `source`.
    pub basis: Vec<Element>,
    pub delta_bar: Vec<Tensor2>,
    pub diff_bar: Vec<Element>,
    pub delta_k: Tensor2,
    pub diff_k: Element,
    pivot: usize,
    // source index -> C̄ index (None for the pivot)
    slot: Vec<Option<usize>>,
}

pub fn reduce(c: &Coalgebra, eps: &Element) -> Result<ReducedCoalgebra> {
    if let Some(d) = c.space.degree_of(eps)? {
        if d != 0 {
            return Err(Error::WrongDegree {
                expected: 0,
                found: d,
            });
        }
    }
    let e = c.counit(eps);
    if !e.is_one() {
        return Err(Error::BadCounitNormalization(fmt_q(&e)));
    }
    let counit = c.counit_functional();
    let pivot = *counit
        .keys()
        .last()
        .expect("counit(eps) = 1 forces a nonzero counit");
    let ep = counit.get(&pivot);
    let mut basis = Vec::new();
    let mut names = Vec::new();
    let mut slot = vec![None; c.dim()];
    for i in 0..c.dim() {
        if i == pivot {
            continue;
        }
        let ei = counit.get(&i);
        let mut v = Element::unit(i);
        if !ei.is_zero() {
            v.add_term(pivot, -(ei / &ep));
        }
        slot[i] = Some(basis.len());
        basis.push(v);
        names.push(BasisElem {
            name: c.name(i).to_string(),
            degree: c.space.degree(i),
        });
    }
    let mut r = ReducedCoalgebra {
        source: c.clone(),
        eps: eps.clone(),
        cbar: GradedSpace::new(names)?,
        basis,
        delta_bar: vec![],
        diff_bar: vec![],
        delta_k: Tensor2::zero(),
        diff_k: Element::zero(),
        pivot,
        slot,
    };
    r.delta_bar = r.basis.iter().map(|v| r.project2(&c.comul(v))).collect();
    r.diff_bar = r.basis.iter().map(|v| r.project(&c.diff(v))).collect();
    r.delta_k = r.project2(&c.comul(eps));
    r.diff_k = r.project(&c.diff(eps));
    Ok(r)
}

impl ReducedCoalgebra {
    pub fn dim(&self) -> usize {
        self.cbar.dim()
    }

    /// `π̄(x) = x - ε(x) eps`, in C̄ coordinates.
    pub fn project(&self, x: &Element) -> Element {
        let mut y = x.clone();
        y.add_scaled(&self.eps, &-self.source.counit(x));
        // On ker(counit) the coordinates along the C̄ basis are the
        // non-pivot coordinates.
        let mut out = Element::zero();
        for (i, c) in y.iter() {
            if let Some(s) = self.slot[*i] {
                out.add_term(s, c.clone());
            }
        }
        out
    }

    pub fn project2(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        let mut cache = std::collections::BTreeMap::new();
        let mut proj = |i: usize| -> Element {
            cache
                .entry(i)
                .or_insert_with(|| self.project(&Element::unit(i)))
                .clone()
        };
        for ((j, k), c) in t.iter() {
            let a = proj(*j);
            let b = proj(*k);
            for (x, p) in a.iter() {
                for (y, q) in b.iter() {
                    out.add_term((*x, *y), c * p * q);
                }
            }
        }
        out
    }

    /// C̄ coordinates back to the source coalgebra.
    pub fn lift(&self, x: &Element) -> Element {
        x.map_linear(|i| self.basis[*i].clone())
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn is_true_coaugmentation(&self) -> bool {
        self.delta_k.is_zero() && self.diff_k.is_zero()
    }

    /// Rebuilds a coalgebra on the basis `(1, C̄)` from the four pieces:
    /// `Δ1 = 1⊗1 + Δ_k`, `Δc = 1⊗c + c⊗1 + Δ̄c`, `d1 = δ_k`, `dc = δ̄c`.
    pub fn reassemble(&self) -> Result<Coalgebra> {
        let n = self.dim();
        let sh = |t: &Tensor2| t.map_keys(|(a, b)| (a + 1, b + 1));
        let mut basis = vec![BasisElem {
            name: "1".into(),
            degree: 0,
        }];
        basis.extend(self.cbar.basis().iter().cloned());
        let mut comul = Vec::with_capacity(n + 1);
        let mut d1 = sh(&self.delta_k);
        d1.add_term((0, 0), Q::one());
        comul.push(d1);
        let mut diff = vec![self.diff_k.map_keys(|a| a + 1)];
        for i in 0..n {
            let mut t = sh(&self.delta_bar[i]);
            t.add_term((0, i + 1), Q::one());
            t.add_term((i + 1, 0), Q::one());
            comul.push(t);
            diff.push(self.diff_bar[i].map_keys(|a| a + 1));
        }
        Coalgebra::new(
            GradedSpace::new(basis)?,
            comul,
            Vector::unit(0),
            diff,
            Some(Element::unit(0)),
        )
    }

    /// The source coalgebra rewritten in the basis `(eps, C̄)`; equal to
    /// [`ReducedCoalgebra::reassemble`] on the nose.
    pub fn source_in_split_basis(&self) -> Result<Coalgebra> {
        let mut vs = vec![self.eps.clone()];
        vs.extend(self.basis.iter().cloned());
        let mut names = vec!["1".to_string()];
        names.extend(self.cbar.basis().iter().map(|b| b.name.clone()));
        let mut c = self.source.restrict(vs, names)?;
        c.coaug = Some(Element::unit(0));
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgcog::tests::{g2, k, p1};
    use crate::exactla::{q, qf};

    #[test]
    fn k_with_its_point() {
        let r = reduce(&k(), &Element::unit(0)).unwrap();
        assert_eq!(r.dim(), 0);
        assert!(r.is_true_coaugmentation());
    }

    #[test]
    fn g2_with_midpoint() {
        let eps = Element::from_terms([(0, qf(1, 2)), (1, qf(1, 2))]);
        let r = reduce(&g2(), &eps).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.basis[0], Element::from_terms([(0, q(1)), (1, q(-1))]));
        // oracle: g1⊗g1 + g2⊗g2 halved, with g1 = eps + w/2 and g2 = eps - w/2;
        // the w⊗w coefficient is (1/4 + 1/4)/2.
        assert_eq!(r.delta_k, Tensor2::term((0, 0), qf(1, 4)));
        assert!(r.delta_bar[0].is_zero());
        assert!(r.diff_k.is_zero() && r.diff_bar[0].is_zero());
        assert_eq!(r.reassemble().unwrap(), r.source_in_split_basis().unwrap());
    }

    #[test]
    fn p1_true_coaugmentation() {
        let r = reduce(&p1(), &Element::unit(0)).unwrap();
        assert!(r.is_true_coaugmentation());
        assert!(r.delta_bar[0].is_zero());
        assert_eq!(r.reassemble().unwrap(), r.source_in_split_basis().unwrap());
    }

    #[test]
    fn bad_normalization() {
        let eps = Element::from_terms([(0, q(1)), (1, q(1))]);
        assert!(matches!(
            reduce(&g2(), &eps),
            Err(Error::BadCounitNormalization(_))
        ));
    }
}
