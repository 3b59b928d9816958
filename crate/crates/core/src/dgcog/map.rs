use super::{Coalgebra, Tensor2};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exactla::{SparseMatrix, Vector};
use crate::graded::Element;

/// Degree-0 linear map between coalgebras, given on basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraMap {
    pub source: Coalgebra,
    pub target: Coalgebra,
    images: Vec<Element>,
}

impl CoalgebraMap {
    pub fn new(source: Coalgebra, target: Coalgebra, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a {}-dimensional source",
                images.len(),
                source.dim()
            )));
        }
        for (i, v) in images.iter().enumerate() {
            for (j, _) in v.iter() {
                if *j >= target.dim() {
                    return Err(Error::DimensionMismatch(format!(
                        "image index {j} out of range"
                    )));
                }
                if target.space.degree(*j) != source.space.degree(i) {
                    return Err(Error::WrongDegree {
                        expected: source.space.degree(i),
                        found: target.space.degree(*j),
                    });
                }
            }
        }
        Ok(CoalgebraMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(c: &Coalgebra) -> Self {
        CoalgebraMap {
            source: c.clone(),
            target: c.clone(),
            images: (0..c.dim()).map(Element::unit).collect(),
        }
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, v: &Element) -> Element {
        v.map_linear(|i| self.images[*i].clone())
    }

    pub fn apply2(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((j, k), c) in t.iter() {
            for (a, x) in self.images[*j].iter() {
                for (b, y) in self.images[*k].iter() {
                    out.add_term((*a, *b), c * x * y);
                }
            }
        }
        out
    }

    pub fn compose(&self, inner: &CoalgebraMap) -> Result<CoalgebraMap> {
        if inner.target != self.source {
            return Err(Error::SourceTargetMismatch(
                "coalgebra maps do not compose".into(),
            ));
        }
        let images = inner.images.iter().map(|v| self.apply(v)).collect();
        CoalgebraMap::new(inner.source.clone(), self.target.clone(), images)
    }

    /// Checks that the map commutes with Δ, counit and d.
    pub fn check(&self) -> Certificate {
        let mut cert = Certificate::new("coalgebra_map");
        for i in 0..self.source.dim() {
            let at = self.source.name(i).to_string();
            let f = &self.images[i];
            if self.target.comul(f) != self.apply2(self.source.comul_basis(i)) {
                cert.fail("comultiplication", &at, self.target.render(f));
            }
            if self.target.counit(f) != self.source.counit(&Element::unit(i)) {
                cert.fail("counit", &at, self.target.render(f));
            }
            if self.target.diff(f) != self.apply(self.source.diff_basis(i)) {
                cert.fail("differential", &at, self.target.render(f));
            }
        }
        cert
    }

    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.target.dim(), &self.images)
    }

    /// Cofibrations are exactly the injective maps.
    pub fn is_injective(&self) -> bool {
        self.matrix().rank() == self.source.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// Change of basis: the coalgebra transported along an invertible
    /// degree-preserving matrix, together with the isomorphism onto it.
    pub fn transport(c: &Coalgebra, new_basis: Vec<Element>) -> Result<CoalgebraMap> {
        let names = (0..new_basis.len()).map(|i| format!("v{i}")).collect();
        let d = c.restrict(new_basis.clone(), names)?;
        if d.dim() != c.dim() {
            return Err(Error::Invalid("change of basis must be invertible".into()));
        }
        let frame = crate::exactla::Frame::new(new_basis, c.dim())?;
        let images = (0..c.dim())
            .map(|i| frame.coords(&Vector::unit(i)))
            .collect();
        CoalgebraMap::new(c.clone(), d, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgcog::group_likes;
    use crate::dgcog::tests::{g2, p1};
    use crate::exactla::q;

    #[test]
    fn identity_and_swap() {
        assert!(CoalgebraMap::identity(&p1()).check().passed());
        let swap = CoalgebraMap::new(g2(), g2(), vec![Element::unit(1), Element::unit(0)]).unwrap();
        assert!(swap.check().passed());
        assert!(swap.is_isomorphism());
        let collapse =
            CoalgebraMap::new(g2(), g2(), vec![Element::unit(0), Element::unit(0)]).unwrap();
        assert!(collapse.check().passed());
        assert!(!collapse.is_injective());
        let bad =
            CoalgebraMap::new(g2(), g2(), vec![Element::term(0, q(2)), Element::unit(1)]).unwrap();
        assert!(!bad.check().passed());
    }

    #[test]
    fn transport_preserves_group_likes() {
        let b = vec![
            Element::from_terms([(0, q(1)), (1, q(1))]),
            Element::from_terms([(0, q(2)), (1, q(-1))]),
        ];
        let m = CoalgebraMap::transport(&g2(), b).unwrap();
        assert!(m.check().passed());
        assert_eq!(group_likes(&m.target).unwrap().len(), 2);
    }
}
