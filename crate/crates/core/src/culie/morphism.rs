use super::CurvedLie;
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exactla::qf;
use crate::freealg::{gen, Poly};

/// Curved morphism `(f, a)`: a graded Lie map given on generators (or basis
/// vectors) and a degree-1 element `a` of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvedMorphism {
    pub source: CurvedLie,
    pub target: CurvedLie,
    pub f: Vec<Poly>,
    pub a: Poly,
}

impl CurvedMorphism {
    pub fn new(source: CurvedLie, target: CurvedLie, f: Vec<Poly>, a: Poly) -> Result<Self> {
        if f.len() != source.ngens() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                f.len(),
                source.ngens()
            )));
        }
        let f = f.iter().map(|p| target.trunc(p)).collect();
        Ok(CurvedMorphism {
            source,
            target,
            f,
            a,
        })
    }

    pub fn identity(g: &CurvedLie) -> Self {
        CurvedMorphism {
            source: g.clone(),
            target: g.clone(),
            f: (0..g.ngens()).map(gen).collect(),
            a: Poly::zero(),
        }
    }

    /// `(Id, a)` from the twist `g^a` to `g`.
    pub fn twist_iso(g: &CurvedLie, a: &Poly) -> Result<Self> {
        let src = g.twist(a)?;
        Ok(CurvedMorphism {
            source: src,
            target: g.clone(),
            f: (0..g.ngens()).map(gen).collect(),
            a: a.clone(),
        })
    }

    pub fn apply(&self, u: &Poly) -> Poly {
        self.source.map_into(u, &self.f, &self.target)
    }

    /// `(g, b) ∘ (f, a) = (g f, b + g(a))`.
    pub fn compose(&self, inner: &CurvedMorphism) -> Result<CurvedMorphism> {
        if inner.target != self.source {
            return Err(Error::SourceTargetMismatch(
                "target of the inner morphism is not the source of the outer".into(),
            ));
        }
        let f = inner.f.iter().map(|p| self.apply(p)).collect();
        let mut a = self.a.clone();
        a.add(&self.apply(&inner.a));
        CurvedMorphism::new(inner.source.clone(), self.target.clone(), f, a)
    }

    /// Checks degrees, `f(dx) = d f(x) + [a, f(x)]` on generators (both sides
    /// are derivations along `f`, so generators suffice), brackets on basis
    /// pairs for finite sources, and `f(ω) = ω' + da + ½[a,a]`.
    pub fn check(&self) -> Certificate {
        let mut cert = Certificate::new("curved_morphism").with_params(self.target.params());
        let (s, t) = (&self.source, &self.target);
        for (i, fi) in self.f.iter().enumerate() {
            if !fi.is_zero() && t.degree_of(fi) != Some(s.gens.degree(i)) {
                cert.fail("degree", s.gens.name(i), t.render(fi));
            }
        }
        if !self.a.is_zero() && t.degree_of(&self.a) != Some(1) {
            cert.fail("degree of a", t.render(&self.a), "a must have degree 1");
        }
        for i in 0..s.ngens() {
            let lhs = self.apply(&s.d(&gen(i)));
            let mut rhs = t.d(&self.f[i]);
            rhs.add(&t.bracket(&self.a, &self.f[i]));
            if lhs != rhs {
                cert.fail(
                    "f d = d f + [a, f]",
                    s.gens.name(i),
                    format!("{} vs {}", t.render(&lhs), t.render(&rhs)),
                );
            }
        }
        if s.is_finite() {
            for i in 0..s.ngens() {
                for j in 0..s.ngens() {
                    let lhs = self.apply(&s.bracket(&gen(i), &gen(j)));
                    let rhs = t.bracket(&self.f[i], &self.f[j]);
                    if lhs != rhs {
                        cert.fail(
                            "bracket",
                            format!("[{},{}]", s.gens.name(i), s.gens.name(j)),
                            t.render(&lhs),
                        );
                    }
                }
            }
        }
        let lhs = self.apply(&s.curvature);
        let mut rhs = t.curvature.clone();
        rhs.add(&t.d(&self.a));
        rhs.add_scaled(&t.bracket(&self.a, &self.a), &qf(1, 2));
        if lhs != rhs {
            cert.fail("curvature", t.render(&lhs), t.render(&rhs));
        }
        cert
    }

    /// Whether `a = 0`.
    pub fn is_strict(&self) -> bool {
        self.a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::tests::{lx, nonab};
    use crate::exactla::q;

    #[test]
    fn composition_laws() {
        let g = lx();
        let id = CurvedMorphism::identity(&g);
        let mx = gen(0).scaled(&q(-1));
        let tw = CurvedMorphism::twist_iso(&g, &mx).unwrap();
        assert!(tw.check().passed());
        assert_eq!(id.compose(&tw).unwrap(), tw);
        let id_src = CurvedMorphism::identity(&tw.source);
        assert_eq!(tw.compose(&id_src).unwrap(), tw);
        // (Id, b)∘(Id, a) = (Id, a + b)
        let back = CurvedMorphism::twist_iso(&tw.source, &gen(0)).unwrap();
        let both = tw.compose(&back).unwrap();
        assert!(both.a.is_zero());
        assert!(both.check().passed());
        assert!(matches!(
            tw.compose(&tw),
            Err(Error::SourceTargetMismatch(_))
        ));
    }

    #[test]
    fn check_detects_broken_maps() {
        let g = nonab();
        let swap =
            CurvedMorphism::new(g.clone(), g.clone(), vec![gen(1), gen(0)], Poly::zero()).unwrap();
        assert!(!swap.check().passed());
        assert!(CurvedMorphism::identity(&g).check().passed());
    }
}
