use std::collections::BTreeMap;

use super::complex::{ChainMap, Complex, DegreeWindow, Reliability};
use crate::culie::{Carrier, CurvedLie, CurvedMorphism, TruncKind};
use crate::error::{Error, Result};
use crate::exactla::Echelon;
use crate::freealg::{Poly, Word};
use crate::graded::{BasisElem, Element, GradedSpace};

/// Degree range of `g` in which truncation cannot change homology. A
/// word-length quotient at `w` only drops words of degree at least
/// `(w+1)·m` when every generator has degree `m ≥ 1`.
pub fn reliability(g: &CurvedLie) -> Reliability {
    match &g.carrier {
        Carrier::Finite { .. } => Reliability::Exact,
        Carrier::Free(t) if t.kind == TruncKind::Filtration => Reliability::Exact,
        Carrier::Free(t) => {
            let m = (0..g.ngens()).map(|i| g.gens.degree(i)).min();
            match m {
                None => Reliability::Exact,
                Some(m) if m >= 1 && t.weights.iter().all(|&w| w == 1) => {
                    Reliability::UpTo((t.max_weight as i64 + 1) * m - 2)
                }
                Some(_) => Reliability::Nowhere,
            }
        }
    }
}

/// The underlying complex of a dg Lie algebra, on the degrees
/// `lo-1 ..= hi+1` of the window. Differentials out of degree `hi+1` are
/// not needed for homology on the window and are left out.
#[derive(Clone, Debug)]
pub struct LieComplex {
    pub complex: Complex,
    pub basis: Vec<Poly>,
    by_degree: BTreeMap<i64, (usize, Echelon<Word>)>,
}

impl LieComplex {
    pub fn new(g: &CurvedLie, win: DegreeWindow) -> Result<LieComplex> {
        if !g.curvature.is_zero() {
            return Err(Error::NotAComplex(format!(
                "curvature {} is nonzero",
                g.render(&g.curvature)
            )));
        }
        let mut basis = Vec::new();
        let mut elems = Vec::new();
        let mut by_degree = BTreeMap::new();
        for d in win.lo - 1..=win.hi + 1 {
            let part = g.degree_part(d);
            let mut e = Echelon::new();
            for z in &part {
                e.insert(z);
            }
            by_degree.insert(d, (basis.len(), e));
            for z in part {
                elems.push(BasisElem {
                    name: format!("{}#{}", g.render(&z), basis.len()),
                    degree: d,
                });
                basis.push(z);
            }
        }
        let mut lc = LieComplex {
            complex: Complex {
                space: GradedSpace::new(elems)?,
                diff: vec![],
                reliability: reliability(g),
            },
            basis,
            by_degree,
        };
        let mut diff = Vec::with_capacity(lc.basis.len());
        for (i, z) in lc.basis.iter().enumerate() {
            let d = lc.complex.space.degree(i);
            if d > win.hi {
                diff.push(Element::zero());
                continue;
            }
            let dz = g.d(z);
            diff.push(lc.coords(d + 1, &dz).ok_or_else(|| {
                Error::NotAComplex(format!("d({}) leaves the Lie span", g.render(z)))
            })?);
        }
        lc.complex = Complex::new(lc.complex.space.clone(), diff, lc.complex.reliability)?;
        Ok(lc)
    }

    /// Coordinates of a degree-`d` Lie element in the complex's basis.
    pub fn coords(&self, d: i64, p: &Poly) -> Option<Element> {
        if p.is_zero() {
            return Some(Element::zero());
        }
        let (off, e) = self.by_degree.get(&d)?;
        e.express(p).map(|v| v.map_keys(|i| i + off))
    }
}

/// The chain map underlying a strict morphism of dg Lie algebras.
pub fn lie_chain_map(m: &CurvedMorphism, src: &LieComplex, tgt: &LieComplex) -> Result<ChainMap> {
    if !m.is_strict() {
        return Err(Error::NotChainMap(
            "a curved morphism with a ≠ 0 is not a chain map".into(),
        ));
    }
    let mut images = Vec::with_capacity(src.basis.len());
    for (i, z) in src.basis.iter().enumerate() {
        let d = src.complex.space.degree(i);
        let fz = m.apply(z);
        images.push(tgt.coords(d, &fz).ok_or_else(|| {
            Error::NotChainMap(format!(
                "image of {} is outside the target window",
                m.source.render(z)
            ))
        })?);
    }
    Ok(ChainMap {
        source: src.complex.clone(),
        target: tgt.complex.clone(),
        images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::tests::nonab;
    use crate::homotopy::complex::{homology_table, quasi_iso};

    #[test]
    fn free_odd_generator() {
        let g = CurvedLie::free_plain(GradedSpace::from_pairs(&[("y", 1)]), 4);
        assert_eq!(reliability(&g), Reliability::UpTo(3));
        let lc = LieComplex::new(&g, DegreeWindow::new(0, 3).unwrap()).unwrap();
        let h: Vec<usize> = homology_table(&lc.complex, DegreeWindow::new(0, 3).unwrap())
            .unwrap()
            .into_values()
            .collect();
        assert_eq!(h, vec![0, 1, 1, 0]);
    }

    #[test]
    fn identity_is_quasi_iso() {
        let win = DegreeWindow::new(-1, 2).unwrap();
        let g = nonab();
        let lc = LieComplex::new(&g, win).unwrap();
        let f = lie_chain_map(&CurvedMorphism::identity(&g), &lc, &lc).unwrap();
        assert!(quasi_iso(&f, win).unwrap().passed());
    }
}
