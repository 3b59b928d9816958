use crate::cert::{Certificate, Params};
use crate::error::{Error, Result};
use crate::freealg::{bracket, gen, mul, poly_degree, render_poly, Derivation, FreeAssoc, Poly};
use crate::graded::{BasisElem, GradedSpace};

/// Free associative algebra with a degree-1 derivation and a curvature `h`
/// satisfying `dh = 0` and `d²a = ha - ah`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvedAssoc {
    pub alg: FreeAssoc,
    pub curvature: Poly,
    /// Generator index of the adjoined `x` in `A ∐ 0`, if any.
    pub x: Option<usize>,
}

impl CurvedAssoc {
    pub fn dg(alg: FreeAssoc) -> Self {
        CurvedAssoc {
            alg,
            curvature: Poly::zero(),
            x: None,
        }
    }

    pub fn gens(&self) -> &GradedSpace {
        &self.alg.gens
    }

    pub fn d(&self, p: &Poly) -> Poly {
        self.alg.d(p)
    }

    pub fn render(&self, p: &Poly) -> String {
        render_poly(&self.alg.gens, p)
    }

    pub fn check(&self) -> Certificate {
        let mut cert = Certificate::new("curved_assoc").with_params(Params::default());
        let dh = self.d(&self.curvature);
        if !dh.is_zero() {
            cert.fail(
                "d(curvature) = 0",
                self.render(&self.curvature),
                self.render(&dh),
            );
        }
        for i in 0..self.gens().dim() {
            let dd = self.d(&self.d(&gen(i)));
            let ad = bracket(self.gens(), &self.curvature, &gen(i));
            if dd != ad {
                cert.fail("d^2 = [h, -]", self.gens().name(i), self.render(&dd));
            }
        }
        cert
    }

    /// `h + dξ + ξ·ξ` for odd `ξ`.
    pub fn mc_residual(&self, xi: &Poly) -> Result<Poly> {
        if !xi.is_zero() && poly_degree(self.gens(), xi) != Some(1) {
            return Err(Error::WrongDegree {
                expected: 1,
                found: poly_degree(self.gens(), xi).unwrap_or(0),
            });
        }
        let mut r = self.curvature.clone();
        r.add(&self.d(xi));
        r.add(&mul(xi, xi));
        Ok(r)
    }

    /// `d^ξ = d + [ξ,-]`, curvature `h + dξ + ξ·ξ`.
    pub fn twist(&self, xi: &Poly) -> Result<CurvedAssoc> {
        let curvature = self.mc_residual(xi)?;
        let values = (0..self.gens().dim())
            .map(|i| {
                let mut v = self.alg.diff.values[i].clone();
                v.add(&bracket(self.gens(), xi, &gen(i)));
                v
            })
            .collect();
        Ok(CurvedAssoc {
            alg: FreeAssoc {
                gens: self.alg.gens.clone(),
                diff: Derivation { degree: 1, values },
            },
            curvature,
            x: self.x,
        })
    }
}

/// `A ∐ 0`: adjoin a degree-1 generator `x` with `dx = -x·x`. Both `0` and
/// `x` are checked to be MC.
pub fn assoc_coproduct_zero(a: &CurvedAssoc) -> Result<CurvedAssoc> {
    if !a.curvature.is_zero() {
        return Err(Error::Invalid("A ∐ 0 needs a dg (uncurved) algebra".into()));
    }
    if a.x.is_some() {
        return Err(Error::Invalid("algebra already has an adjoined x".into()));
    }
    let n = a.gens().dim();
    let mut name = "x".to_string();
    while a.gens().index_of(&name).is_some() {
        name.push('\'');
    }
    let mut basis = a.gens().basis().to_vec();
    basis.push(BasisElem { name, degree: 1 });
    let mut values = a.alg.diff.values.clone();
    values.push(Poly::term(vec![n as u32, n as u32], crate::exactla::q(-1)));
    let alg = FreeAssoc::new(GradedSpace::new(basis)?, values)?;
    let out = CurvedAssoc {
        alg,
        curvature: Poly::zero(),
        x: Some(n),
    };
    for xi in [Poly::zero(), gen(n)] {
        let r = out.mc_residual(&xi)?;
        if !r.is_zero() {
            return Err(Error::ResidualNonzero(out.render(&r)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_coproduct_zero_has_two_witnesses() {
        for gens in [GradedSpace::default(), GradedSpace::from_pairs(&[("a", 0)])] {
            let a = CurvedAssoc::dg(FreeAssoc::free(gens));
            let c = assoc_coproduct_zero(&a).unwrap();
            assert!(c.check().passed());
            let x = gen(c.x.unwrap());
            assert!(c.mc_residual(&Poly::zero()).unwrap().is_zero());
            assert!(c.mc_residual(&x).unwrap().is_zero());
            let t = c.twist(&x).unwrap();
            assert!(t.curvature.is_zero());
            assert_eq!(t.d(&x), mul(&x, &x));
        }
    }
}
