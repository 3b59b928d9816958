//! Free associative dg algebras with staged cells.

use super::tensor::{poly_degree, Derivation, Poly};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::graded::{BasisElem, GradedSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAssoc {
    pub gens: GradedSpace,
    pub diff: Derivation,
}

impl FreeAssoc {
    pub fn new(gens: GradedSpace, values: Vec<Poly>) -> Result<FreeAssoc> {
        if values.len() != gens.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} differential values for {} generators",
                values.len(),
                gens.dim()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            check_value(&gens, v, gens.degree(i) + 1, gens.dim())?;
            if v.coeff(&Vec::new()).is_some() {
                return Err(Error::NotAugmented(format!(
                    "d({}) has a constant term",
                    gens.name(i)
                )));
            }
        }
        Ok(FreeAssoc {
            gens,
            diff: Derivation { degree: 1, values },
        })
    }

    pub fn free(gens: GradedSpace) -> FreeAssoc {
        let n = gens.dim();
        FreeAssoc {
            gens,
            diff: Derivation::zero(n, 1),
        }
    }

    pub fn d(&self, p: &Poly) -> Poly {
        self.diff.apply(&self.gens, p)
    }

    /// Coefficient of the empty word.
    pub fn augmentation(&self, p: &Poly) -> crate::exactla::Q {
        p.get(&Vec::new())
    }

    /// `d^2 = 0` on generators (enough, since `d^2 = [d,d]/2` is a derivation).
    pub fn check_d_squared(&self) -> Certificate {
        let mut cert = Certificate::new("d_squared");
        for i in 0..self.gens.dim() {
            let dd = self.d(&self.diff.values[i]);
            if !dd.is_zero() {
                cert.fail(
                    "d^2 = 0",
                    self.gens.name(i),
                    super::render_poly(&self.gens, &dd),
                );
            }
        }
        cert
    }

    /// Stage of each generator when the differential is triangular
    /// (each `d(x)` only mentions generators of strictly lower stage).
    pub fn stages(&self) -> Option<Vec<usize>> {
        let n = self.gens.dim();
        let mut stage: Vec<Option<usize>> = vec![None; n];
        for _ in 0..=n {
            let mut progress = false;
            for i in 0..n {
                if stage[i].is_some() {
                    continue;
                }
                let deps: Vec<usize> = self.diff.values[i]
                    .keys()
                    .flat_map(|w| w.iter().map(|&a| a as usize))
                    .collect();
                if deps.iter().all(|&j| stage[j].is_some()) {
                    let s = deps
                        .iter()
                        .map(|&j| stage[j].unwrap() + 1)
                        .max()
                        .unwrap_or(0);
                    stage[i] = Some(s);
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
        stage.into_iter().collect()
    }

    /// New algebra with one more generator whose differential is `dvalue`,
    /// written over the enlarged alphabet (the new letter has the last index).
    pub fn adjoin_cell(&self, name: &str, degree: i64, dvalue: Poly) -> Result<FreeAssoc> {
        let n = self.gens.dim() as u32;
        if dvalue.keys().any(|w| w.contains(&n)) {
            return Err(Error::StageViolation(format!("d({name}) mentions {name}")));
        }
        let mut basis = self.gens.basis().to_vec();
        basis.push(BasisElem {
            name: name.into(),
            degree,
        });
        let gens = GradedSpace::new(basis)?;
        let mut values = self.diff.values.clone();
        values.push(dvalue);
        FreeAssoc::new(gens, values)
    }
}

fn check_value(gens: &GradedSpace, v: &Poly, expected: i64, n: usize) -> Result<()> {
    if v.keys().any(|w| w.iter().any(|&a| a as usize >= n)) {
        return Err(Error::DimensionMismatch("letter out of range".into()));
    }
    if v.is_zero() {
        return Ok(());
    }
    match poly_degree(gens, v) {
        Some(d) if d == expected => Ok(()),
        Some(d) => Err(Error::WrongDegree { expected, found: d }),
        None => Err(Error::NotHomogeneous),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;
    use crate::freealg::gen;

    #[test]
    fn adjoin_examples() {
        let a = FreeAssoc::free(GradedSpace::from_pairs(&[("a", 0)]));
        let bad = a.adjoin_cell("x", 1, Poly::term(vec![1, 1], q(-1)));
        assert!(matches!(bad, Err(Error::StageViolation(_))));
        let b = a.adjoin_cell("y0", -1, gen(0)).unwrap();
        assert_eq!(b.stages(), Some(vec![0, 1]));
        assert!(b.check_d_squared().passed());
        assert!(matches!(
            a.adjoin_cell("y0", 0, gen(0)),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn self_referential_differential_has_no_stages() {
        let x = FreeAssoc::new(
            GradedSpace::from_pairs(&[("x", 1)]),
            vec![Poly::term(vec![0, 0], q(-1))],
        )
        .unwrap();
        assert_eq!(x.stages(), None);
        assert!(x.check_d_squared().passed());
    }
}
