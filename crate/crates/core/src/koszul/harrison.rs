use crate::culie::{CurvedLie, CurvedMorphism, TruncKind, Truncation};
use crate::dgcog::{
    coradical_filtration, reduce, Coalgebra, CoalgebraMap, Coradical, ReducedCoalgebra, Tensor2,
};
use crate::error::{Error, Result};
use crate::freealg::Poly;
use crate::graded::{sign, BasisElem, Element, GradedSpace};

/// Free curved Lie algebra on `s⁻¹C̄` (generator `y_c` of degree `|c|+1`)
/// with `d = d1 + d2` and curvature read off from `Δ` and `d` along
/// `C = k·eps ⊕ C̄`.
#[derive(Clone, Debug)]
pub struct Harrison {
    pub reduced: ReducedCoalgebra,
    pub algebra: CurvedLie,
    /// Linear part of `d` on each generator.
    pub linear: Vec<Poly>,
    /// Quadratic part of `d` on each generator.
    pub quadratic: Vec<Poly>,
}

fn ys(v: &Element) -> Poly {
    v.map_keys(|i| vec![*i as u32])
}

fn quadratic(cbar: &GradedSpace, t: &Tensor2) -> Poly {
    let mut out = Poly::zero();
    for ((j, k), c) in t.iter() {
        out.add_term(vec![*j as u32, *k as u32], c * sign(cbar.degree(*j) + 1));
    }
    out
}

pub fn harrison(c: &Coalgebra, eps: &Element, w: u32) -> Result<Harrison> {
    let n = reduce(c, eps)?.dim();
    harrison_with(c, eps, Truncation::quotient(n, w))
}

pub fn harrison_with(c: &Coalgebra, eps: &Element, trunc: Truncation) -> Result<Harrison> {
    let r = reduce(c, eps)?;
    if trunc.weights.len() != r.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for {} generators",
            trunc.weights.len(),
            r.dim()
        )));
    }
    let gens = GradedSpace::new(
        r.cbar
            .basis()
            .iter()
            .map(|b| BasisElem {
                name: format!("y_{}", b.name),
                degree: b.degree + 1,
            })
            .collect(),
    )?;
    let linear: Vec<Poly> = r.diff_bar.iter().map(|v| ys(v).neg()).collect();
    let quad: Vec<Poly> = r.delta_bar.iter().map(|t| quadratic(&r.cbar, t)).collect();
    let diff: Vec<Poly> = linear.iter().zip(&quad).map(|(a, b)| a.plus(b)).collect();
    if trunc.kind == TruncKind::Filtration {
        for (i, v) in diff.iter().enumerate() {
            if v.keys().any(|w| trunc.weight(w) > trunc.weights[i]) {
                return Err(Error::Invalid(format!(
                    "d raises weight on {}",
                    gens.name(i)
                )));
            }
        }
    }
    let mut curvature = quadratic(&r.cbar, &r.delta_k);
    curvature.sub(&ys(&r.diff_k));
    let algebra = CurvedLie::free(gens, diff, curvature, trunc)?;
    Ok(Harrison {
        reduced: r,
        algebra,
        linear,
        quadratic: quad,
    })
}

/// Harrison algebra of a conilpotent coalgebra over its group-like `g`,
/// in a basis adapted to the coradical filtration and truncated to
/// filtration weight at most `w`.
pub fn harrison_coradical(c: &Coalgebra, g: &Element, w: u32) -> Result<(Harrison, Coradical)> {
    let cr = coradical_filtration(c, g)?;
    let trunc = Truncation {
        kind: TruncKind::Filtration,
        max_weight: w,
        weights: cr.weights[1..].to_vec(),
    };
    let h = harrison_with(&cr.coalgebra, &Element::unit(0), trunc)?;
    Ok((h, cr))
}

impl Harrison {
    /// `y_{π̄ x}` for an element of the source coalgebra.
    pub fn y(&self, x: &Element) -> Poly {
        self.algebra.trunc(&ys(&self.reduced.project(x)))
    }

    /// The MC element `y_{g - eps}` attached to a group-like `g`.
    pub fn grouplike_mc(&self, g: &Element) -> Poly {
        self.y(g)
    }
}

/// `Harr(f)`: `y_c ↦ y_{f(c)}` with curvature change `y_{f(eps)}`.
pub fn harrison_map(f: &CoalgebraMap, src: &Harrison, tgt: &Harrison) -> Result<CurvedMorphism> {
    if f.source != src.reduced.source || f.target != tgt.reduced.source {
        return Err(Error::SourceTargetMismatch(
            "map does not match the Harrison algebras".into(),
        ));
    }
    let images = src
        .reduced
        .basis
        .iter()
        .map(|b| tgt.y(&f.apply(b)))
        .collect();
    let a = tgt.y(&f.apply(&src.reduced.eps));
    CurvedMorphism::new(src.algebra.clone(), tgt.algebra.clone(), images, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::mc_solve_linear;
    use crate::dgcog::tests::{g2, k, p1};
    use crate::exactla::{q, qf};
    use crate::freealg::gen;

    fn coeff(p: &Poly, w: &[u32]) -> crate::exactla::Q {
        p.get(&w.to_vec())
    }

    fn half_sum() -> Element {
        Element::from_terms([(0, qf(1, 2)), (1, qf(1, 2))])
    }

    #[test]
    fn g2_curvature_and_witnesses() {
        let h = harrison(&g2(), &half_sum(), 4).unwrap();
        let a = &h.algebra;
        assert_eq!(a.ngens(), 1);
        assert!(a.diff.values[0].is_zero());
        // ω = -1/8 [y,y] = -1/4 y·y
        assert_eq!(a.curvature, a.bracket(&gen(0), &gen(0)).scaled(&qf(-1, 8)));
        assert_eq!(coeff(&a.curvature, &[0, 0]), qf(-1, 4));
        assert!(a.check_curved().passed());
        let mc: Vec<Poly> = mc_solve_linear(a)
            .unwrap()
            .into_iter()
            .map(|w| w.element)
            .collect();
        assert_eq!(
            mc,
            vec![gen(0).scaled(&qf(-1, 2)), gen(0).scaled(&qf(1, 2))]
        );
        for (i, g) in [Element::unit(0), Element::unit(1)].iter().enumerate() {
            let x = h.grouplike_mc(g);
            assert!(a.mc_residual(&x).unwrap().is_zero(), "group-like {i}");
        }
    }

    #[test]
    fn p1_and_k() {
        let h = harrison(&p1(), &Element::unit(0), 5).unwrap();
        assert!(h.algebra.curvature.is_zero());
        assert!(h.algebra.diff.values[0].is_zero());
        let dims: Vec<usize> = (1..=3).map(|d| h.algebra.degree_part(d).len()).collect();
        assert_eq!(dims, vec![1, 1, 0]);
        let z = harrison(&k(), &Element::unit(0), 5).unwrap();
        assert_eq!(z.algebra.ngens(), 0);
        assert!(z.algebra.curvature.is_zero());
    }

    #[test]
    fn graded_coalgebra_gives_curved_algebra() {
        // symmetric coalgebra on c:0, a:1 with dc = a; b = c·a
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
        assert!(c.validate().passed());
        for eps in [
            Element::unit(0),
            Element::from_terms([(0, q(1)), (1, q(1))]),
        ] {
            let h = harrison(&c, &eps, 5).unwrap();
            assert!(
                h.algebra.check_curved().passed(),
                "{:?}",
                h.algebra.check_curved().witness
            );
        }
    }

    #[test]
    fn harrison_of_a_map() {
        let swap = CoalgebraMap::new(g2(), g2(), vec![Element::unit(1), Element::unit(0)]).unwrap();
        let h = harrison(&g2(), &half_sum(), 4).unwrap();
        let f = harrison_map(&swap, &h, &h).unwrap();
        assert_eq!(f.f, vec![gen(0).scaled(&q(-1))]);
        assert!(f.is_strict());
        assert!(f.check().passed());
        // onto a different coaugmentation: a curved morphism
        let h1 = harrison(&g2(), &Element::unit(0), 4).unwrap();
        let f = harrison_map(&CoalgebraMap::identity(&g2()), &h, &h1).unwrap();
        assert!(!f.is_strict());
        assert!(f.check().passed());
    }

    #[test]
    fn coradical_harrison_is_filtered() {
        let (h, cr) = harrison_coradical(&p1(), &Element::unit(0), 3).unwrap();
        assert_eq!(cr.weights, vec![0, 1]);
        assert!(h.algebra.check_curved().passed());
        assert!(h.reduced.is_true_coaugmentation());
    }
}
