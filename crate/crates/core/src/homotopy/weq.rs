use serde::Serialize;

use super::complex::{quasi_iso, DegreeWindow};
use super::lie::{lie_chain_map, LieComplex};
use crate::cert::{Certificate, Params};
use crate::culie::{mc_solve_linear, CurvedMorphism, MCWitness};
use crate::dgcog::{decompose, CoalgebraMap, Component};
use crate::error::{Error, Result};
use crate::exactla::Frame;
use crate::freealg::Poly;
use crate::graded::Element;
use crate::koszul::{harrison_coradical, harrison_map};

#[derive(Serialize)]
struct Pair {
    source: String,
    target: Option<String>,
}

/// Strict morphism between dg Lie algebras: quasi-iso on the window.
fn strict_qiso(m: &CurvedMorphism, win: DegreeWindow) -> Result<Certificate> {
    let src = LieComplex::new(&m.source, win)?;
    let tgt = LieComplex::new(&m.target, win)?;
    quasi_iso(&lie_chain_map(m, &src, &tgt)?, win)
}

/// `f` is a weak equivalence of curved Lie algebras: it induces a bijection
/// between the listed MC elements, and for each `x` the map `f` between the
/// twists by `x` and by `f(x) + a` is a quasi-isomorphism on the window.
pub fn weq_curvedlie(
    m: &CurvedMorphism,
    src_mc: &[Poly],
    tgt_mc: &[Poly],
    win: DegreeWindow,
) -> Result<Certificate> {
    let mut cert = Certificate::new("weq_curvedlie").with_params(Params {
        window: Some((win.lo, win.hi)),
        ..m.source.params()
    });
    let verify = |g: &crate::culie::CurvedLie, xs: &[Poly]| -> Result<Vec<MCWitness>> {
        xs.iter()
            .map(|x| {
                let w = MCWitness::new(g, x.clone())?;
                if !w.is_mc() {
                    return Err(Error::WitnessNotMC(g.render(x)));
                }
                Ok(w)
            })
            .collect()
    };
    let xs = verify(&m.source, src_mc)?;
    let ys = verify(&m.target, tgt_mc)?;
    let mut hit = vec![false; ys.len()];
    let mut pairs = Vec::new();
    for x in &xs {
        let mut y = m.apply(&x.element);
        y.add(&m.a);
        let j = ys.iter().position(|w| w.element == y);
        if let Some(j) = j {
            if hit[j] {
                cert.fail(
                    "MC bijection",
                    m.source.render(&x.element),
                    "two MC elements share an image",
                );
            }
            hit[j] = true;
        } else {
            cert.fail(
                "MC bijection",
                m.source.render(&x.element),
                format!("image {} is not listed", m.target.render(&y)),
            );
        }
        pairs.push(Pair {
            source: m.source.render(&x.element),
            target: j.map(|j| m.target.render(&ys[j].element)),
        });
    }
    for (j, h) in hit.iter().enumerate() {
        if !h {
            cert.fail(
                "MC bijection",
                m.target.render(&ys[j].element),
                "not the image of a listed MC element",
            );
        }
    }
    cert.table("mc_bijection", &pairs);
    let complete = |g, n| mc_solve_linear(g).map(|s| s.len() == n).ok();
    cert.table(
        "mc_lists_complete",
        [complete(&m.source, xs.len()), complete(&m.target, ys.len())],
    );
    if !cert.passed() {
        return Ok(cert);
    }
    for (x, p) in xs.iter().zip(&pairs) {
        let y = ys
            .iter()
            .find(|w| Some(m.target.render(&w.element)) == p.target)
            .expect("paired");
        let src = m.source.twist(&x.element)?;
        let tgt = m.target.twist(&y.element)?;
        let strict = CurvedMorphism::new(src, tgt, m.f.clone(), Poly::zero())?;
        let mut q = strict_qiso(&strict, win)?;
        q.check = format!("twist[{}]", p.source);
        cert.merge(&q);
    }
    Ok(cert)
}

fn component_of(comps: &[Component], g: &Element) -> Option<usize> {
    comps.iter().position(|k| &k.group_like == g)
}

/// `f` is a weak equivalence of coalgebras: a bijection on group-likes, and
/// on each conilpotent component the induced map of Harrison algebras
/// (built on the coradical filtration, cut at weight `w`) is a
/// quasi-isomorphism on the window.
pub fn weq_coalgebra(f: &CoalgebraMap, win: DegreeWindow, w: u32) -> Result<Certificate> {
    let mut cert = Certificate::new("weq_coalgebra").with_params(Params {
        max_weight: Some(w as usize),
        reliable_weight: Some(w as usize),
        window: Some((win.lo, win.hi)),
    });
    let cs = decompose(&f.source)?;
    let ct = decompose(&f.target)?;
    let mut hit = vec![false; ct.len()];
    let mut pairs = Vec::new();
    let mut matched = Vec::new();
    for (i, k) in cs.iter().enumerate() {
        let fg = f.apply(&k.group_like);
        let j = component_of(&ct, &fg);
        match j {
            Some(j) if hit[j] => cert.fail(
                "group-like bijection",
                f.source.render(&k.group_like),
                "two group-likes share an image",
            ),
            Some(j) => {
                hit[j] = true;
                matched.push((i, j));
            }
            None => cert.fail(
                "group-like bijection",
                f.source.render(&k.group_like),
                format!("image {} is not group-like", f.target.render(&fg)),
            ),
        }
        pairs.push(Pair {
            source: f.source.render(&k.group_like),
            target: j.map(|j| f.target.render(&ct[j].group_like)),
        });
    }
    for (j, h) in hit.iter().enumerate() {
        if !h {
            cert.fail(
                "group-like bijection",
                f.target.render(&ct[j].group_like),
                "not the image of a group-like",
            );
        }
    }
    cert.table("gp_bijection", &pairs);
    if !cert.passed() {
        return Ok(cert);
    }
    for (i, j) in matched {
        let (ks, kt) = (&cs[i], &ct[j]);
        let (hs, rs) = harrison_coradical(&ks.coalgebra, &Element::unit(0), w)?;
        let (ht, rt) = harrison_coradical(&kt.coalgebra, &Element::unit(0), w)?;
        let amb = Frame::new(kt.inclusion.clone(), f.target.dim())?;
        let rad = Frame::new(rt.basis.clone(), kt.coalgebra.dim())?;
        let mut images = Vec::with_capacity(rs.basis.len());
        for b in &rs.basis {
            let x = f.apply(&b.map_linear(|p| ks.inclusion[*p].clone()));
            let y = amb.coords_in(&x).ok_or_else(|| {
                Error::ComponentMismatch(format!(
                    "{} leaves the component of its group-like",
                    f.target.render(&x)
                ))
            })?;
            images.push(rad.coords(&y));
        }
        let g = CoalgebraMap::new(rs.coalgebra.clone(), rt.coalgebra.clone(), images)?;
        let m = harrison_map(&g, &hs, &ht)?;
        let mut q = strict_qiso(&m, win)?;
        q.check = format!("component[{}]", f.source.render(&ks.group_like));
        cert.merge(&q);
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::tests::{l1, lx};
    use crate::dgcog::tests::{g2, k, p1};

    fn win() -> DegreeWindow {
        DegreeWindow::new(-1, 3).unwrap()
    }

    #[test]
    fn coalgebra_examples() {
        assert!(weq_coalgebra(&CoalgebraMap::identity(&g2()), win(), 4)
            .unwrap()
            .passed());
        assert!(weq_coalgebra(&CoalgebraMap::identity(&p1()), win(), 4)
            .unwrap()
            .passed());
        let swap = CoalgebraMap::new(g2(), g2(), vec![Element::unit(1), Element::unit(0)]).unwrap();
        assert!(weq_coalgebra(&swap, win(), 4).unwrap().passed());
        let fold = CoalgebraMap::new(g2(), k(), vec![Element::unit(0), Element::unit(0)]).unwrap();
        let cert = weq_coalgebra(&fold, win(), 4).unwrap();
        assert_eq!(cert.failed_axiom(), Some("group-like bijection"));
        let inc = CoalgebraMap::new(k(), p1(), vec![Element::unit(0)]).unwrap();
        let cert = weq_coalgebra(&inc, win(), 4).unwrap();
        assert_eq!(cert.failed_axiom(), Some("H(f) is an isomorphism"));
    }

    #[test]
    fn lie_examples() {
        let g = lx();
        let mc: Vec<Poly> = mc_solve_linear(&g)
            .unwrap()
            .into_iter()
            .map(|w| w.element)
            .collect();
        let id = CurvedMorphism::identity(&g);
        assert!(weq_curvedlie(&id, &mc, &mc, win()).unwrap().passed());
        let x = mc[0].clone();
        let tw = CurvedMorphism::twist_iso(&g, &x).unwrap();
        let cert = weq_curvedlie(&tw, &[Poly::zero()], &mc, win()).unwrap();
        assert!(cert.passed(), "{:?}", cert.witness);
        assert!(matches!(
            weq_curvedlie(&id, &[Poly::zero()], &mc, win()),
            Err(Error::WitnessNotMC(_))
        ));
        let zero = CurvedMorphism::new(l1(), l1(), vec![Poly::zero()], Poly::zero()).unwrap();
        assert!(zero.check().passed());
        let cert = weq_curvedlie(&zero, &[Poly::zero()], &[Poly::zero()], win()).unwrap();
        assert_eq!(cert.failed_axiom(), Some("H(f) is an isomorphism"));
        let cert = weq_curvedlie(&id, &mc, &[], win()).unwrap();
        assert_eq!(cert.failed_axiom(), Some("MC bijection"));
    }

    #[test]
    fn unit_and_counit() {
        use crate::culie::tests::nonab;
        use crate::koszul::{counit, unit_map};
        for c in [k(), p1(), g2()] {
            let eps = crate::dgcog::group_likes(&c).unwrap()[0].clone();
            let u = unit_map(&c, &eps, 4, 4).unwrap();
            let cert = weq_coalgebra(&u.map, win(), 4).unwrap();
            assert!(cert.passed(), "{:?}", cert.witness);
        }
        let w = DegreeWindow::new(-2, 3).unwrap();
        for g in [l1(), nonab()] {
            let e = counit(&g, &[Poly::zero()], 5, 5).unwrap();
            let src: Vec<Poly> = (0..e.ce.components.len())
                .map(|j| e.harrison.grouplike_mc(&e.ce.embed(j, &Element::unit(0))))
                .collect();
            let cert = weq_curvedlie(&e.morphism, &src, &[Poly::zero()], w).unwrap();
            assert!(cert.passed(), "{:?} {:?}", cert.witness, cert.tables);
        }
    }

    #[test]
    fn functors_preserve_weak_equivalences() {
        use crate::dgcog::Coalgebra;
        use crate::exactla::{q, qf};
        use crate::koszul::{ce, ce_map, harrison};
        let eps = Element::from_terms([(0, qf(1, 2)), (1, qf(1, 2))]);
        let h = harrison(&g2(), &eps, 4).unwrap();
        let swap = CoalgebraMap::new(g2(), g2(), vec![Element::unit(1), Element::unit(0)]).unwrap();
        let m = harrison_map(&swap, &h, &h).unwrap();
        let mc: Vec<Poly> = mc_solve_linear(&h.algebra)
            .unwrap()
            .into_iter()
            .map(|w| w.element)
            .collect();
        let cert = weq_curvedlie(&m, &mc, &mc, win()).unwrap();
        assert!(cert.passed(), "{:?}", cert.witness);

        // P1 with an acyclic pair a -> b attached, projected back onto P1
        let big = Coalgebra::from_triples(
            &[("g", 0), ("c", 0), ("a", 1), ("b", 2)],
            &[
                &[(q(1), 0, 0)],
                &[(q(1), 1, 0), (q(1), 0, 1)],
                &[(q(1), 2, 0), (q(1), 0, 2)],
                &[(q(1), 3, 0), (q(1), 0, 3)],
            ],
            &[(0, q(1))],
            &[&[], &[], &[(3, q(1))], &[]],
        )
        .unwrap();
        assert!(big.validate().passed());
        let proj = CoalgebraMap::new(
            big.clone(),
            p1(),
            vec![
                Element::unit(0),
                Element::unit(1),
                Element::zero(),
                Element::zero(),
            ],
        )
        .unwrap();
        assert!(proj.check().passed());
        assert!(weq_coalgebra(&proj, win(), 4).unwrap().passed());
        let (hb, hp) = (
            harrison(&big, &Element::unit(0), 4).unwrap(),
            harrison(&p1(), &Element::unit(0), 4).unwrap(),
        );
        let m = harrison_map(&proj, &hb, &hp).unwrap();
        let cert = weq_curvedlie(&m, &[Poly::zero()], &[Poly::zero()], win()).unwrap();
        assert!(cert.passed(), "{:?}", cert.witness);

        let g = lx();
        let x = mc_solve_linear(&g).unwrap()[0].element.clone();
        let tw = CurvedMorphism::twist_iso(&g, &x).unwrap();
        let src = ce(&tw.source, &[Poly::zero()], 4).unwrap();
        let tgt = ce(&g, &[x], 4).unwrap();
        let f = ce_map(&tw, &src, &tgt).unwrap();
        let cert = weq_coalgebra(&f, win(), 4).unwrap();
        assert!(cert.passed(), "{:?}", cert.witness);
    }
}
