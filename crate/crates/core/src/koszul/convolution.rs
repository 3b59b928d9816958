use num_traits::Zero;

use crate::culie::{to_element, CurvedLie};
use crate::dgcog::{reduce, Coalgebra};
use crate::error::{Error, Result};
use crate::freealg::{gen, Poly};
use crate::graded::{sign, BasisElem, Element, GradedSpace};

/// `Hom(C̄, g)` on the basis `c_i* ⊗ e_k` (degree `|e_k| - |c_i|`) with
/// `[f,h](x) = (-1)^{|h||x1|} [f(x1), h(x2)]` and `∂f = d f - (-1)^{|f|} f δ`.
#[derive(Clone, Debug)]
pub struct Convolution {
    pub algebra: CurvedLie,
    /// Set when `g` is curved or `eps` is not a true coaugmentation: the
    /// output then need not be a dg Lie algebra.
    pub flagged: bool,
    cbar_dim: usize,
    g_dim: usize,
}

pub fn convolution(c: &Coalgebra, eps: &Element, g: &CurvedLie) -> Result<Convolution> {
    if !g.is_finite() {
        return Err(Error::NotFiniteDimensional(
            "convolution needs a finite-dimensional carrier".into(),
        ));
    }
    let r = reduce(c, eps)?;
    let (n, m) = (r.dim(), g.ngens());
    let idx = |i: usize, k: usize| i * m + k;
    let cdeg = |i: usize| r.cbar.degree(i);
    let edeg = |k: usize| g.gens.degree(k);
    let mut basis = Vec::with_capacity(n * m);
    for i in 0..n {
        for k in 0..m {
            basis.push(BasisElem {
                name: format!("{}*⊗{}", r.cbar.name(i), g.gens.name(k)),
                degree: edeg(k) - cdeg(i),
            });
        }
    }
    let space = GradedSpace::new(basis)?;
    let gb = |k: usize, l: usize| to_element(&g.bracket(&gen(k), &gen(l)));
    let mut brackets = Vec::new();
    for (f, (i, k)) in (0..n).flat_map(|i| (0..m).map(move |k| (i, k))).enumerate() {
        for (h, (j, l)) in (0..n).flat_map(|j| (0..m).map(move |l| (j, l))).enumerate() {
            if h < f {
                continue;
            }
            let e = gb(k, l);
            if e.is_zero() {
                continue;
            }
            let hdeg = edeg(l) - cdeg(j);
            let mut out = Element::zero();
            for (mm, t) in r.delta_bar.iter().enumerate() {
                let a = t.get(&(i, j));
                if a.is_zero() {
                    continue;
                }
                for (p, x) in e.iter() {
                    out.add_term(idx(mm, *p), &a * x * sign(hdeg * cdeg(i)));
                }
            }
            brackets.push(((f, h), out));
        }
    }
    let mut diff = Vec::with_capacity(n * m);
    for i in 0..n {
        for k in 0..m {
            let fdeg = edeg(k) - cdeg(i);
            let mut v = Element::zero();
            for (p, x) in to_element(&g.diff.values[k]).iter() {
                v.add_term(idx(i, *p), x.clone());
            }
            for (mm, d) in r.diff_bar.iter().enumerate() {
                let a = d.get(&i);
                if !a.is_zero() {
                    v.add_term(idx(mm, k), -(a * sign(fdeg)));
                }
            }
            diff.push(v);
        }
    }
    let flagged = !g.curvature.is_zero() || !r.is_true_coaugmentation();
    let algebra = CurvedLie::finite(space, &brackets, diff, Element::zero())?;
    Ok(Convolution {
        algebra,
        flagged,
        cbar_dim: n,
        g_dim: m,
    })
}

impl Convolution {
    /// The element `Σ c_i* ⊗ τ(c_i)` for values `τ(c_i)` in `g`.
    pub fn element(&self, values: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (i, v) in values.iter().enumerate().take(self.cbar_dim) {
            for (k, x) in to_element(v).iter() {
                out.add_term(vec![(i * self.g_dim + k) as u32], x.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::tests::{l1, nonab};
    use crate::culie::CurvedMorphism;
    use crate::dgcog::tests::{g2, k, p1};
    use crate::exactla::{q, qf};
    use crate::koszul::harrison;

    fn le1() -> CurvedLie {
        CurvedLie::finite(
            GradedSpace::from_pairs(&[("e", 1)]),
            &[],
            vec![Element::zero()],
            Element::zero(),
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            convolution(&k(), &Element::unit(0), &l1())
                .unwrap()
                .algebra
                .ngens(),
            0
        );
        let cv = convolution(&p1(), &Element::unit(0), &l1()).unwrap();
        assert_eq!(cv.algebra.gens.basis()[0].degree, 0);
        assert!(cv.algebra.check_curved().passed());
        assert!(!cv.flagged);
        let g = convolution(
            &g2(),
            &Element::from_terms([(0, qf(1, 2)), (1, qf(1, 2))]),
            &l1(),
        )
        .unwrap();
        assert!(g.flagged);
    }

    #[test]
    fn dg_lie_on_graded_input() {
        let c = Coalgebra::from_triples(
            &[("g", 0), ("c", 0), ("a", 1), ("b", 1)],
            &[
                &[(q(1), 0, 0)],
                &[(q(1), 0, 1), (q(1), 1, 0)],
                &[(q(1), 0, 2), (q(1), 2, 0)],
                &[(q(1), 0, 3), (q(1), 3, 0), (q(1), 1, 2), (q(1), 2, 1)],
            ],
            &[(0, q(1))],
            &[&[], &[(2, q(1))], &[], &[]],
        )
        .unwrap();
        for g in [nonab(), le1(), l1()] {
            let cv = convolution(&c, &Element::unit(0), &g).unwrap();
            let cert = cv.algebra.check_curved();
            assert!(cert.passed(), "{:?}", cert.witness);
        }
    }

    #[test]
    fn mc_elements_are_harrison_morphisms() {
        let h = harrison(&p1(), &Element::unit(0), 4).unwrap();
        let cv = convolution(&p1(), &Element::unit(0), &le1()).unwrap();
        for lam in [q(0), q(2), qf(-1, 3)] {
            let tau = vec![gen(0).scaled(&lam)];
            let m =
                CurvedMorphism::new(h.algebra.clone(), le1(), tau.clone(), Poly::zero()).unwrap();
            assert!(m.check().passed());
            assert!(cv.algebra.mc_residual(&cv.element(&tau)).unwrap().is_zero());
        }
    }
}
