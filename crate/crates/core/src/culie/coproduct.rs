use super::{Carrier, CurvedLie, CurvedMorphism, TruncKind, Truncation};
use crate::error::{Error, Result};
use crate::exactla::{qf, Echelon, SparseMatrix, Vector};
use crate::freealg::{gen, Poly, Word};
use crate::graded::{BasisElem, GradedSpace};

/// Curved coproduct `g ∐ h`: free on `gens(g) ⊔ gens(h) ⊔ {x}` with
/// `d̃|g = d_g`, `d̃|h = d_h - [x,-]`, `d̃x = ω_h - ω_g - ½[x,x]`, curvature `ω_g`.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub algebra: CurvedLie,
    pub i_g: CurvedMorphism,
    pub i_h: CurvedMorphism,
    /// Generator index of `x`.
    pub x: usize,
}

fn require_free(g: &CurvedLie) -> Result<()> {
    match &g.carrier {
        Carrier::Free(t) if t.kind == TruncKind::Quotient && t.weights.iter().all(|&w| w == 1) => {
            Ok(())
        }
        Carrier::Free(_) => Err(Error::UnsupportedCarrier(
            "coproduct needs word-length truncations".into(),
        )),
        Carrier::Finite { .. } => Err(Error::UnsupportedCarrier(
            "coproduct needs generator-presented (free) carriers".into(),
        )),
    }
}

fn shift(p: &Poly, off: u32) -> Poly {
    p.map_keys(|w| w.iter().map(|a| a + off).collect::<Word>())
}

pub fn coproduct(g: &CurvedLie, h: &CurvedLie, w: u32) -> Result<Coproduct> {
    require_free(g)?;
    require_free(h)?;
    let (ng, nh) = (g.ngens(), h.ngens());
    let clash = g
        .gens
        .basis()
        .iter()
        .any(|b| h.gens.index_of(&b.name).is_some());
    let mut basis: Vec<BasisElem> = Vec::new();
    for (tag, sp) in [("g", &g.gens), ("h", &h.gens)] {
        for b in sp.basis() {
            let name = if clash {
                format!("{tag}.{}", b.name)
            } else {
                b.name.clone()
            };
            basis.push(BasisElem {
                name,
                degree: b.degree,
            });
        }
    }
    let mut xname = "x".to_string();
    while basis.iter().any(|b| b.name == xname) {
        xname.push('\'');
    }
    basis.push(BasisElem {
        name: xname,
        degree: 1,
    });
    let gens = GradedSpace::new(basis)?;
    let n = ng + nh + 1;
    let xi = ng + nh;
    let x = gen(xi);
    let mut tmp = CurvedLie::free_plain(gens.clone(), w);
    let mut values = Vec::with_capacity(n);
    for v in &g.diff.values {
        values.push(shift(v, 0));
    }
    for (i, v) in h.diff.values.iter().enumerate() {
        let mut d = shift(v, ng as u32);
        d.sub(&tmp.bracket(&x, &gen(ng + i)));
        values.push(d);
    }
    let mut dx = shift(&h.curvature, ng as u32);
    dx.sub(&shift(&g.curvature, 0));
    dx.add_scaled(&tmp.bracket(&x, &x), &-qf(1, 2));
    values.push(dx);
    tmp = CurvedLie::free(
        gens,
        values,
        shift(&g.curvature, 0),
        Truncation::quotient(n, w),
    )?;
    let i_g = CurvedMorphism::new(
        g.clone(),
        tmp.clone(),
        (0..ng).map(gen).collect(),
        Poly::zero(),
    )?;
    let i_h = CurvedMorphism::new(
        h.clone(),
        tmp.clone(),
        (0..nh).map(|i| gen(ng + i)).collect(),
        x,
    )?;
    Ok(Coproduct {
        algebra: tmp,
        i_g,
        i_h,
        x: xi,
    })
}

/// The morphism out of the coproduct induced by `(f_g, a)` and `(f_h, b)`:
/// `f|g = f_g`, `f|h = f_h`, `f(x) = b - a`, curvature change `a`.
pub fn mediating_morphism(
    cp: &Coproduct,
    fg: &CurvedMorphism,
    fh: &CurvedMorphism,
) -> Result<CurvedMorphism> {
    if fg.target != fh.target {
        return Err(Error::SourceTargetMismatch(
            "the two morphisms have different targets".into(),
        ));
    }
    if fg.source != cp.i_g.source || fh.source != cp.i_h.source {
        return Err(Error::SourceTargetMismatch(
            "morphism sources do not match the coproduct factors".into(),
        ));
    }
    let mut f: Vec<Poly> = fg.f.clone();
    f.extend(fh.f.iter().cloned());
    f.push(fh.a.minus(&fg.a));
    CurvedMorphism::new(cp.algebra.clone(), fg.target.clone(), f, fg.a.clone())
}

/// Every generator-level solution `(v, c)` with `v = f(x)` and `c` the
/// curvature change, subject to both triangles commuting
/// (`c = a`, `c + v = b`) and to the curved-morphism axioms. The unknowns
/// range over the degree-1 part of the target.
pub fn mediating_solutions(
    cp: &Coproduct,
    fg: &CurvedMorphism,
    fh: &CurvedMorphism,
) -> Result<Vec<CurvedMorphism>> {
    let e = &fg.target;
    let v1 = e.degree_part(1);
    let r = v1.len();
    let mut ech: Echelon<Word> = Echelon::new();
    for v in &v1 {
        ech.insert(v);
    }
    let express = |p: &Poly| {
        ech.express(p)
            .ok_or_else(|| Error::Invalid(format!("{} is not in the degree-1 part", e.render(p))))
    };
    let (ca, cb) = (express(&fg.a)?, express(&fh.a)?);
    // unknowns: v_1..v_r, c_1..c_r
    let mut m = SparseMatrix::zero(2 * r, 2 * r);
    let mut rhs = Vector::zero();
    for k in 0..r {
        m.set(k, r + k, crate::exactla::q(1));
        rhs.add_term(k, ca.get(&k));
        m.set(r + k, k, crate::exactla::q(1));
        m.set(r + k, r + k, crate::exactla::q(1));
        rhs.add_term(r + k, cb.get(&k));
    }
    let Some(sol) = m.solve(&rhs) else {
        return Ok(vec![]);
    };
    if !m.kernel_basis().is_empty() {
        return Err(Error::NotSolvableExactly(
            "the triangle equations leave free parameters".into(),
        ));
    }
    let combine = |off: usize| {
        let mut p = Poly::zero();
        for k in 0..r {
            p.add_scaled(&v1[k], &sol.get(&(off + k)));
        }
        p
    };
    let mut f: Vec<Poly> = fg.f.clone();
    f.extend(fh.f.iter().cloned());
    f.push(combine(0));
    let m = CurvedMorphism::new(cp.algebra.clone(), e.clone(), f, combine(r))?;
    Ok(if m.check().passed() { vec![m] } else { vec![] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::mc::MCWitness;
    use crate::culie::tests::lx;
    use crate::exactla::q;

    fn zero_alg(w: u32) -> CurvedLie {
        CurvedLie::free_plain(GradedSpace::default(), w)
    }

    #[test]
    fn coproduct_of_zeros() {
        let cp = coproduct(&zero_alg(4), &zero_alg(4), 4).unwrap();
        let a = &cp.algebra;
        assert_eq!(a.ngens(), 1);
        assert_eq!(
            a.diff.values[0],
            a.bracket(&gen(0), &gen(0)).scaled(&qf(-1, 2))
        );
        assert!(a.check_curved().passed());
        assert!(MCWitness::new(a, Poly::zero()).unwrap().is_mc());
        assert!(MCWitness::new(a, gen(0)).unwrap().is_mc());
        assert!(cp.i_g.check().passed() && cp.i_h.check().passed());
    }

    #[test]
    fn universal_property() {
        let g = CurvedLie::free_plain(GradedSpace::from_pairs(&[("u", 1)]), 4);
        let h = zero_alg(4);
        let e = lx();
        let mx = gen(0).scaled(&q(-1));
        let fg = CurvedMorphism::new(g.clone(), e.clone(), vec![Poly::zero()], mx.clone()).unwrap();
        let fh = CurvedMorphism::new(h.clone(), e.clone(), vec![], mx).unwrap();
        assert!(fg.check().passed() && fh.check().passed());
        let cp = coproduct(&g, &h, 4).unwrap();
        assert!(cp.i_g.check().passed() && cp.i_h.check().passed());
        let f = mediating_morphism(&cp, &fg, &fh).unwrap();
        assert!(f.check().passed());
        assert!(f.f[cp.x].is_zero());
        assert_eq!(f.compose(&cp.i_g).unwrap(), fg);
        assert_eq!(f.compose(&cp.i_h).unwrap(), fh);
        assert_eq!(mediating_solutions(&cp, &fg, &fh).unwrap(), vec![f]);
    }

    #[test]
    fn finite_carriers_are_rejected() {
        assert!(matches!(
            coproduct(&lx(), &zero_alg(3), 3),
            Err(Error::UnsupportedCarrier(_))
        ));
    }
}
