//! Finite-dimensional dg cocommutative coalgebras.

mod decompose;
mod grouplike;
mod map;
mod reduce;

pub use decompose::{coradical_filtration, decompose, Component, Coradical};
pub use grouplike::group_likes;
pub use map::CoalgebraMap;
pub use reduce::{reduce, ReducedCoalgebra};

use num_traits::{One, Zero};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exactla::{Frame, Vector, Q};
use crate::graded::{koszul_sign, sign, Element, GradedSpace};

/// Element of `C ⊗ C` by pairs of basis indices.
pub type Tensor2 = Vector<(usize, usize)>;
pub type Tensor3 = Vector<(usize, usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub space: GradedSpace,
    comul: Vec<Tensor2>,
    counit: Vector<usize>,
    diff: Vec<Element>,
    pub coaug: Option<Element>,
}

impl Coalgebra {
    /// Checks shapes and degrees; the axioms are checked by [`Coalgebra::validate`].
    pub fn new(
        space: GradedSpace,
        comul: Vec<Tensor2>,
        counit: Vector<usize>,
        diff: Vec<Element>,
        coaug: Option<Element>,
    ) -> Result<Coalgebra> {
        let n = space.dim();
        if comul.len() != n || diff.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{n} basis elements but {} coproducts and {} differentials",
                comul.len(),
                diff.len()
            )));
        }
        let check = |i: usize| -> Result<()> {
            if i >= n {
                return Err(Error::DimensionMismatch(format!(
                    "basis index {i} out of range"
                )));
            }
            Ok(())
        };
        for (i, t) in comul.iter().enumerate() {
            for ((j, k), _) in t.iter() {
                check(*j)?;
                check(*k)?;
                let found = space.degree(*j) + space.degree(*k);
                if found != space.degree(i) {
                    return Err(Error::WrongDegree {
                        expected: space.degree(i),
                        found,
                    });
                }
            }
        }
        for (i, _) in counit.iter() {
            check(*i)?;
            if space.degree(*i) != 0 {
                return Err(Error::WrongDegree {
                    expected: 0,
                    found: space.degree(*i),
                });
            }
        }
        for (i, v) in diff.iter().enumerate() {
            for (j, _) in v.iter() {
                check(*j)?;
                if space.degree(*j) != space.degree(i) + 1 {
                    return Err(Error::WrongDegree {
                        expected: space.degree(i) + 1,
                        found: space.degree(*j),
                    });
                }
            }
        }
        if let Some(e) = &coaug {
            for (j, _) in e.iter() {
                check(*j)?;
            }
            if let Some(d) = space.degree_of(e)? {
                if d != 0 {
                    return Err(Error::WrongDegree {
                        expected: 0,
                        found: d,
                    });
                }
            }
        }
        Ok(Coalgebra {
            space,
            comul,
            counit,
            diff,
            coaug,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn comul_basis(&self, i: usize) -> &Tensor2 {
        &self.comul[i]
    }

    pub fn diff_basis(&self, i: usize) -> &Element {
        &self.diff[i]
    }

    pub fn counit_functional(&self) -> &Vector<usize> {
        &self.counit
    }

    pub fn comul(&self, v: &Element) -> Tensor2 {
        v.map_linear(|i| self.comul[*i].clone())
    }

    pub fn diff(&self, v: &Element) -> Element {
        v.map_linear(|i| self.diff[*i].clone())
    }

    pub fn counit(&self, v: &Element) -> Q {
        v.iter().map(|(i, c)| c * self.counit.get(i)).sum()
    }

    pub fn is_differential_zero(&self) -> bool {
        self.diff.iter().all(|v| v.is_zero())
    }

    /// `(d ⊗ 1 + 1 ⊗ d)` with the Koszul sign on the second term.
    pub fn diff_tensor(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((j, k), c) in t.iter() {
            for (a, x) in self.diff[*j].iter() {
                out.add_term((*a, *k), c * x);
            }
            let s = sign(self.space.degree(*j));
            for (b, x) in self.diff[*k].iter() {
                out.add_term((*j, *b), c * x * &s);
            }
        }
        out
    }

    /// Signed swap `a ⊗ b -> (-1)^{|a||b|} b ⊗ a`.
    pub fn swap(&self, t: &Tensor2) -> Tensor2 {
        Tensor2::from_terms(t.iter().map(|((j, k), c)| {
            (
                (*k, *j),
                c * koszul_sign(self.space.degree(*j), self.space.degree(*k)),
            )
        }))
    }

    pub fn name(&self, i: usize) -> &str {
        self.space.name(i)
    }

    pub fn render(&self, v: &Element) -> String {
        self.space.render(v)
    }

    pub fn render2(&self, t: &Tensor2) -> String {
        crate::graded::render_with(t, |(j, k)| format!("{}⊗{}", self.name(*j), self.name(*k)))
    }

    /// Checks every coalgebra axiom exactly; the first failing axiom and a
    /// basis element where it fails are reported as the witness.
    pub fn validate(&self) -> Certificate {
        let mut cert = Certificate::new("coalgebra");
        cert.table("dims_by_degree", self.space.dims_by_degree());
        for i in 0..self.dim() {
            let at = self.name(i).to_string();
            let d = &self.comul[i];
            // coassociativity
            let mut l = Tensor3::zero();
            let mut r = Tensor3::zero();
            for ((j, k), c) in d.iter() {
                for ((a, b), x) in self.comul[*j].iter() {
                    l.add_term((*a, *b, *k), c * x);
                }
                for ((a, b), x) in self.comul[*k].iter() {
                    r.add_term((*j, *a, *b), c * x);
                }
            }
            if l != r {
                cert.fail("coassociativity", &at, format!("{:?} vs {:?}", l, r));
            }
            if &self.swap(d) != d {
                cert.fail("cocommutativity", &at, self.render2(d));
            }
            let mut left = Element::zero();
            let mut right = Element::zero();
            for ((j, k), c) in d.iter() {
                left.add_term(*k, c * self.counit.get(j));
                right.add_term(*j, c * self.counit.get(k));
            }
            if left != Element::unit(i) || right != Element::unit(i) {
                cert.fail(
                    "counit",
                    &at,
                    format!(
                        "(ε⊗1)Δ = {}, (1⊗ε)Δ = {}",
                        self.render(&left),
                        self.render(&right)
                    ),
                );
            }
            let dd = self.diff(&self.diff[i]);
            if !dd.is_zero() {
                cert.fail("d^2 = 0", &at, self.render(&dd));
            }
            let lhs = self.comul(&self.diff[i]);
            let rhs = self.diff_tensor(d);
            if lhs != rhs {
                cert.fail(
                    "coderivation",
                    &at,
                    format!(
                        "Δd = {}, (d⊗1+1⊗d)Δ = {}",
                        self.render2(&lhs),
                        self.render2(&rhs)
                    ),
                );
            }
            if !self.counit(&self.diff[i]).is_zero() {
                cert.fail("counit kills d", &at, "ε(d b) ≠ 0");
            }
        }
        if let Some(e) = &self.coaug {
            let c = self.counit(e);
            if !c.is_one() {
                cert.fail(
                    "coaugmentation counit",
                    self.render(e),
                    crate::exactla::fmt_q(&c),
                );
            }
        }
        cert
    }

    /// The subcoalgebra spanned by `basis` (expressed in this coalgebra's
    /// basis), with the given names. Fails unless the span is closed under
    /// Δ and d. The coaugmentation is carried over when it lies in the span.
    pub fn restrict(&self, basis: Vec<Element>, names: Vec<String>) -> Result<Coalgebra> {
        let degrees = basis
            .iter()
            .map(|v| {
                self.space
                    .degree_of(v)?
                    .ok_or_else(|| Error::Invalid("zero basis vector".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let space = GradedSpace::new(
            names
                .into_iter()
                .zip(degrees)
                .map(|(name, degree)| crate::graded::BasisElem { name, degree })
                .collect(),
        )?;
        let frame = Frame::new(basis, self.dim())?;
        let coords2 = |t: &Tensor2| -> Tensor2 {
            let mut out = Tensor2::zero();
            for ((j, k), c) in t.iter() {
                let a = frame.coords(&Element::unit(*j));
                let b = frame.coords(&Element::unit(*k));
                for (x, p) in a.iter() {
                    for (y, r) in b.iter() {
                        out.add_term((*x, *y), c * p * r);
                    }
                }
            }
            out
        };
        let lift2 = |t: &Tensor2| -> Tensor2 {
            let mut out = Tensor2::zero();
            for ((x, y), c) in t.iter() {
                for (j, p) in frame.vectors()[*x].iter() {
                    for (k, r) in frame.vectors()[*y].iter() {
                        out.add_term((*j, *k), c * p * r);
                    }
                }
            }
            out
        };
        let mut comul = Vec::new();
        let mut diff = Vec::new();
        let mut counit = Vector::zero();
        for (a, v) in frame.vectors().iter().enumerate() {
            let dv = self.comul(v);
            let cd = coords2(&dv);
            if lift2(&cd) != dv {
                return Err(Error::Invalid(
                    "span is not closed under the comultiplication".into(),
                ));
            }
            comul.push(cd);
            let d = self.diff(v);
            diff.push(
                frame
                    .coords_in(&d)
                    .ok_or_else(|| Error::Invalid("span is not closed under d".into()))?,
            );
            counit.add_term(a, self.counit(v));
        }
        let coaug = self.coaug.as_ref().and_then(|e| frame.coords_in(e));
        Coalgebra::new(space, comul, counit, diff, coaug)
    }

    /// Same coalgebra with a different coaugmentation.
    pub fn with_coaug(&self, eps: Option<Element>) -> Result<Coalgebra> {
        Coalgebra::new(
            self.space.clone(),
            self.comul.clone(),
            self.counit.clone(),
            self.diff.clone(),
            eps,
        )
    }

    /// Direct sum (coproduct) of coalgebras; names get a `k.` prefix when
    /// they would collide.
    pub fn direct_sum(parts: &[Coalgebra]) -> Result<Coalgebra> {
        let mut basis = Vec::new();
        let mut comul = Vec::new();
        let mut diff = Vec::new();
        let mut counit = Vector::zero();
        let mut seen = std::collections::BTreeSet::new();
        let collide = parts
            .iter()
            .flat_map(|p| p.space.basis().iter().map(|b| b.name.clone()))
            .any(|n| !seen.insert(n));
        let mut off = 0;
        for (k, p) in parts.iter().enumerate() {
            for (i, b) in p.space.basis().iter().enumerate() {
                let name = if collide {
                    format!("{k}.{}", b.name)
                } else {
                    b.name.clone()
                };
                basis.push(crate::graded::BasisElem {
                    name,
                    degree: b.degree,
                });
                comul.push(p.comul[i].map_keys(|(a, c)| (a + off, c + off)));
                diff.push(p.diff[i].map_keys(|a| a + off));
                counit.add_term(i + off, p.counit.get(&i));
            }
            off += p.dim();
        }
        Coalgebra::new(GradedSpace::new(basis)?, comul, counit, diff, None)
    }

    /// Builder used by fixtures and tests: `comul[i]` as (coeff, j, k) triples.
    pub fn from_triples(
        pairs: &[(&str, i64)],
        comul: &[&[(Q, usize, usize)]],
        counit: &[(usize, Q)],
        diff: &[&[(usize, Q)]],
    ) -> Result<Coalgebra> {
        let space = GradedSpace::from_pairs(pairs);
        let comul = comul
            .iter()
            .map(|ts| Tensor2::from_terms(ts.iter().map(|(c, j, k)| ((*j, *k), c.clone()))))
            .collect();
        let counit = Vector::from_terms(counit.iter().cloned());
        let diff = if diff.is_empty() {
            vec![Element::zero(); pairs.len()]
        } else {
            diff.iter()
                .map(|ts| Element::from_terms(ts.iter().cloned()))
                .collect()
        };
        Coalgebra::new(space, comul, counit, diff, None)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactla::q;

    pub fn k() -> Coalgebra {
        Coalgebra::from_triples(&[("g", 0)], &[&[(q(1), 0, 0)]], &[(0, q(1))], &[]).unwrap()
    }

    pub fn p1() -> Coalgebra {
        Coalgebra::from_triples(
            &[("g", 0), ("c", 0)],
            &[&[(q(1), 0, 0)], &[(q(1), 1, 0), (q(1), 0, 1)]],
            &[(0, q(1))],
            &[],
        )
        .unwrap()
    }

    pub fn g2() -> Coalgebra {
        Coalgebra::from_triples(
            &[("g1", 0), ("g2", 0)],
            &[&[(q(1), 0, 0)], &[(q(1), 1, 1)]],
            &[(0, q(1)), (1, q(1))],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(k().validate().passed());
        assert!(p1().validate().passed());
        assert!(g2().validate().passed());
        let bad =
            Coalgebra::from_triples(&[("g", 0)], &[&[(q(2), 0, 0)]], &[(0, q(1))], &[]).unwrap();
        let cert = bad.validate();
        assert_eq!(cert.failed_axiom(), Some("counit"));
    }

    #[test]
    fn odd_primitive_pair_is_a_dg_coalgebra() {
        // g:0, a:1, b:2 primitive with da = b
        let c = Coalgebra::from_triples(
            &[("g", 0), ("a", 1), ("b", 2)],
            &[
                &[(q(1), 0, 0)],
                &[(q(1), 1, 0), (q(1), 0, 1)],
                &[(q(1), 2, 0), (q(1), 0, 2)],
            ],
            &[(0, q(1))],
            &[&[], &[(2, q(1))], &[]],
        )
        .unwrap();
        assert!(c.validate().passed());
    }

    #[test]
    fn restrict_to_new_basis() {
        let c = g2();
        let sum = Element::from_terms([(0, q(1)), (1, q(1))]);
        let diff = Element::from_terms([(0, q(1)), (1, q(-1))]);
        let r = c
            .restrict(vec![sum, diff], vec!["s".into(), "w".into()])
            .unwrap();
        assert!(r.validate().passed());
        assert_eq!(r.counit_functional(), &Vector::from_terms([(0, q(2))]));
        assert!(c
            .restrict(
                vec![Element::from_terms([(0, q(1)), (1, q(1))])],
                vec!["s".into()]
            )
            .is_err());
    }

    #[test]
    fn wrong_degree_is_an_input_error() {
        let r = Coalgebra::from_triples(
            &[("g", 0), ("a", 1)],
            &[&[(q(1), 0, 1)], &[]],
            &[(0, q(1))],
            &[],
        );
        assert!(matches!(r, Err(Error::WrongDegree { .. })));
    }
}
