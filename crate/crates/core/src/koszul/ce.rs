use std::collections::BTreeMap;

use num_traits::Zero;

use super::sym::{Mono, SymAlg, SymPoly};
use crate::cert::{Certificate, Params};
use crate::culie::{mc_pushforward, to_element, CurvedLie, CurvedMorphism, MCWitness};
use crate::dgcog::{Coalgebra, CoalgebraMap, Tensor2};
use crate::error::{Error, Result};
use crate::exactla::{homology_dim, qf, SparseMatrix, Vector};
use crate::freealg::Poly;
use crate::graded::{sign, BasisElem, Element, GradedSpace};

/// Generators `t_k` of degree `1 - |e_k|` and the derivation `D` with
/// `D t_k = -ω^k - Σ (-1)^{|t_i|} d_{ki} t_i - ½ Σ (-1)^{|e_i||t_j|} c^k_{ij} t_i t_j`,
/// which makes `Σ t_k ⊗ e_k` a Maurer-Cartan element.
pub fn ce_algebra(g: &CurvedLie) -> Result<(SymAlg, Vec<SymPoly>)> {
    if !g.is_finite() {
        return Err(Error::NotFiniteDimensional(
            "CE needs a finite-dimensional carrier".into(),
        ));
    }
    let n = g.ngens();
    let deg = |i: usize| g.gens.degree(i);
    let gens = GradedSpace::new(
        g.gens
            .basis()
            .iter()
            .map(|b| BasisElem {
                name: format!("t_{}", b.name),
                degree: 1 - b.degree,
            })
            .collect(),
    )?;
    let sym = SymAlg::new(gens);
    let omega = to_element(&g.curvature);
    let mut values = vec![SymPoly::zero(); n];
    for (k, v) in values.iter_mut().enumerate() {
        let c = omega.get(&k);
        if !c.is_zero() {
            v.add_term(Mono::new(), -c);
        }
    }
    for i in 0..n {
        let di = to_element(&g.diff.values[i]);
        for (k, c) in di.iter() {
            values[*k].add_term(vec![i as u32], -(c * sign(1 - deg(i))));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let b =
                to_element(&g.bracket(&Poly::unit(vec![i as u32]), &Poly::unit(vec![j as u32])));
            for (k, c) in b.iter() {
                let s = sign(deg(i) * (1 - deg(j)));
                if let Some((s2, m)) = sym.mul_mono(&[i as u32], &[j as u32]) {
                    values[*k].add_term(m, -(c * s * s2 * qf(1, 2)));
                }
            }
        }
    }
    Ok((sym, values))
}

/// `D² = 0` on every monomial of weight at most `w`, computed without
/// truncation.
pub fn check_ce_square(g: &CurvedLie, w: usize) -> Result<Certificate> {
    let (sym, d) = ce_algebra(g)?;
    let mut cert = Certificate::new("ce_square").with_params(Params {
        max_weight: Some(w),
        reliable_weight: Some(w),
        window: None,
    });
    for m in sym.monomials(w) {
        let p = SymPoly::unit(m.clone());
        let dd = sym.derive(&d, &sym.derive(&d, &p));
        if !dd.is_zero() {
            cert.fail("D^2 = 0", sym.render_mono(&m), render_sym(&sym, &dd));
        }
    }
    Ok(cert)
}

pub fn render_sym(sym: &SymAlg, p: &SymPoly) -> String {
    crate::graded::render_with(p, |m| sym.render_mono(m))
}

/// One conilpotent piece of `ČE(g)`: the dual of `S_{≤N}` for the twist
/// `g^x` at a Maurer-Cartan element `x`.
#[derive(Clone, Debug)]
pub struct CEComponent {
    pub witness: MCWitness,
    pub twisted: CurvedLie,
    pub sym: SymAlg,
    /// `D` on generators.
    pub derivation: Vec<SymPoly>,
    /// Monomial dual to each coalgebra basis vector; `1` comes first.
    pub monomials: Vec<Mono>,
    pub coalgebra: Coalgebra,
}

impl CEComponent {
    fn build(g: &CurvedLie, witness: MCWitness, w: usize) -> Result<CEComponent> {
        let twisted = g.twist(&witness.element)?;
        let (sym, derivation) = ce_algebra(&twisted)?;
        let monomials = sym.monomials(w);
        let index: BTreeMap<&Mono, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let basis: Vec<BasisElem> = monomials
            .iter()
            .map(|m| BasisElem {
                name: format!("{}*", sym.render_mono(m)),
                degree: -sym.degree(m),
            })
            .collect();
        let mut comul = Vec::with_capacity(monomials.len());
        for m in &monomials {
            let mut t = Tensor2::zero();
            for (m1, m2, s) in sym.splittings(m) {
                let k = sign(sym.degree(&m1) * sym.degree(&m2));
                t.add_term((index[&m1], index[&m2]), s * k);
            }
            comul.push(t);
        }
        let mut diff = vec![Element::zero(); monomials.len()];
        for (j, m2) in monomials.iter().enumerate() {
            let dm = sym.derive(&derivation, &SymPoly::unit(m2.clone()));
            for (m, c) in dm.iter() {
                if let Some(&i) = index.get(m) {
                    diff[i].add_term(j, c * sign(sym.degree(m)));
                }
            }
        }
        let coalgebra = Coalgebra::new(
            GradedSpace::new(basis)?,
            comul,
            Vector::unit(0),
            diff,
            Some(Element::unit(0)),
        )?;
        Ok(CEComponent {
            witness,
            twisted,
            sym,
            derivation,
            monomials,
            coalgebra,
        })
    }

    /// Index of the dual of generator `t_k`.
    pub fn generator_index(&self, k: usize) -> usize {
        self.monomials
            .iter()
            .position(|m| m == &vec![k as u32])
            .expect("weight 1 is always kept")
    }

    /// Homology of the coalgebra, keyed by degree in the CE algebra.
    pub fn homology(&self) -> Result<BTreeMap<i64, usize>> {
        let c = &self.coalgebra;
        let mut out = BTreeMap::new();
        let block = |d: i64| {
            let src = c.space.indices_in_degree(d);
            let tgt = c.space.indices_in_degree(d + 1);
            let mut m = SparseMatrix::zero(tgt.len(), src.len());
            for (col, i) in src.iter().enumerate() {
                for (j, x) in c.diff_basis(*i).iter() {
                    let row = tgt
                        .iter()
                        .position(|t| t == j)
                        .expect("degree-1 differential");
                    m.set(row, col, x.clone());
                }
            }
            m
        };
        for (d, _) in c.space.dims_by_degree() {
            out.insert(-d, homology_dim(&block(d - 1), &block(d))?);
        }
        Ok(out)
    }
}

/// `ČE(g) = ⊕_x CE(g^x)` over the given Maurer-Cartan witnesses, each
/// truncated at monomial weight `w`.
#[derive(Clone, Debug)]
pub struct CEOutput {
    pub algebra: CurvedLie,
    pub max_weight: usize,
    pub components: Vec<CEComponent>,
    pub total: Coalgebra,
    offsets: Vec<usize>,
}

pub fn ce(g: &CurvedLie, witnesses: &[Poly], w: usize) -> Result<CEOutput> {
    if !g.is_finite() {
        return Err(Error::NotFiniteDimensional(
            "CE needs a finite-dimensional carrier".into(),
        ));
    }
    let mut components = Vec::new();
    for x in witnesses {
        let wit = MCWitness::new(g, x.clone())?;
        if !wit.is_mc() {
            return Err(Error::WitnessNotMC(format!(
                "{} has residual {}",
                g.render(x),
                g.render(&wit.residual)
            )));
        }
        if components
            .iter()
            .any(|c: &CEComponent| &c.witness.element == x)
        {
            return Err(Error::Invalid(format!(
                "witness {} is listed twice",
                g.render(x)
            )));
        }
        components.push(CEComponent::build(g, wit, w)?);
    }
    let parts: Vec<Coalgebra> = components.iter().map(|c| c.coalgebra.clone()).collect();
    let total = Coalgebra::direct_sum(&parts)?;
    let mut offsets = Vec::new();
    let mut off = 0;
    for p in &parts {
        offsets.push(off);
        off += p.dim();
    }
    Ok(CEOutput {
        algebra: g.clone(),
        max_weight: w,
        components,
        total,
        offsets,
    })
}

impl CEOutput {
    pub fn offset(&self, j: usize) -> usize {
        self.offsets[j]
    }

    pub fn component_of(&self, x: &Poly) -> Option<usize> {
        self.components.iter().position(|c| &c.witness.element == x)
    }

    /// Includes an element of component `j` into the total coalgebra.
    pub fn embed(&self, j: usize, v: &Element) -> Element {
        v.map_keys(|i| i + self.offsets[j])
    }

    /// Splits an element of the total coalgebra by component.
    pub fn split(&self, v: &Element) -> Vec<Element> {
        let mut out = vec![Element::zero(); self.components.len()];
        for (i, c) in v.iter() {
            let j = self.offsets.partition_point(|&o| o <= *i) - 1;
            out[j].add_term(i - self.offsets[j], c.clone());
        }
        out
    }
}

/// `ČE(f, a)`: the component at `x` goes to the component at `f(x) + a`
/// through the dual of the algebra map `t'_k ↦ Σ_i f_{ki} t_i`.
pub fn ce_map(m: &CurvedMorphism, src: &CEOutput, tgt: &CEOutput) -> Result<CoalgebraMap> {
    if m.source != src.algebra || m.target != tgt.algebra {
        return Err(Error::SourceTargetMismatch(
            "morphism does not match the CE coalgebras".into(),
        ));
    }
    let mut images = vec![Element::zero(); src.total.dim()];
    for (j, comp) in src.components.iter().enumerate() {
        let y = mc_pushforward(m, &comp.witness)?;
        let jt = tgt.component_of(&y.element).ok_or_else(|| {
            Error::Invalid(format!(
                "{} is not among the target witnesses",
                tgt.algebra.render(&y.element)
            ))
        })?;
        let tc = &tgt.components[jt];
        // A(t'_k) = Σ_i f_{ki} t_i
        let mut gen_images = vec![SymPoly::zero(); tc.sym.gens.dim()];
        for (i, fi) in m.f.iter().enumerate() {
            for (k, c) in to_element(fi).iter() {
                gen_images[*k].add_term(vec![i as u32], c.clone());
            }
        }
        let sindex: BTreeMap<&Mono, usize> = comp
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        for (b, mono) in tc.monomials.iter().enumerate() {
            let mut a = SymPoly::unit(Mono::new());
            for &k in mono {
                a = comp.sym.mul(&a, &gen_images[k as usize]);
            }
            for (ms, c) in a.iter() {
                if let Some(&i) = sindex.get(ms) {
                    images[src.offset(j) + i].add_term(tgt.offset(jt) + b, c.clone());
                }
            }
        }
    }
    CoalgebraMap::new(src.total.clone(), tgt.total.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::tests::{l1, lh, lx, nonab};
    use crate::dgcog::group_likes;
    use crate::exactla::q;
    use crate::freealg::gen;

    #[test]
    fn d_squares_to_zero() {
        for g in [l1(), lx(), lh(), nonab()] {
            assert!(check_ce_square(&g, 6).unwrap().passed());
        }
    }

    #[test]
    fn l1_component() {
        let out = ce(&l1(), &[Poly::zero()], 6).unwrap();
        let c = &out.components[0].coalgebra;
        assert_eq!(c.dim(), 2);
        assert_eq!(c.name(1), "t_e*");
        assert!(c.is_differential_zero());
        assert!(c.validate().passed());
    }

    #[test]
    fn nonabelian_component() {
        let out = ce(&nonab(), &[Poly::zero()], 6).unwrap();
        let comp = &out.components[0];
        assert!(
            comp.coalgebra.validate().passed(),
            "{:?}",
            comp.coalgebra.validate().witness
        );
        let dims: Vec<usize> = comp
            .coalgebra
            .space
            .dims_by_degree()
            .values()
            .rev()
            .copied()
            .collect();
        assert_eq!(dims, vec![1, 2, 1]);
        let h: Vec<usize> = comp.homology().unwrap().values().copied().collect();
        assert_eq!(h, vec![1, 1, 0]);
    }

    #[test]
    fn witnesses_and_group_likes() {
        let out = ce(&lx(), &[gen(0).scaled(&q(-1))], 4).unwrap();
        assert!(out.total.validate().passed());
        assert_eq!(group_likes(&out.total).unwrap().len(), 1);
        assert!(matches!(
            ce(&lx(), &[Poly::zero()], 4),
            Err(Error::WitnessNotMC(_))
        ));
        assert_eq!(ce(&lh(), &[], 4).unwrap().total.dim(), 0);
        let free = CurvedLie::free_plain(GradedSpace::from_pairs(&[("y", 1)]), 3);
        assert!(matches!(
            ce(&free, &[], 3),
            Err(Error::NotFiniteDimensional(_))
        ));
    }

    #[test]
    fn functorial_maps_are_coalgebra_maps() {
        let g = nonab();
        // a ↦ a + 2b, b ↦ 3b
        let f = CurvedMorphism::new(
            g.clone(),
            g.clone(),
            vec![gen(0).plus(&gen(1).scaled(&q(2))), gen(1).scaled(&q(3))],
            Poly::zero(),
        )
        .unwrap();
        assert!(f.check().passed());
        let c = ce(&g, &[Poly::zero()], 4).unwrap();
        let m = ce_map(&f, &c, &c).unwrap();
        assert!(m.check().passed(), "{:?}", m.check().witness);
        assert!(m.is_isomorphism());
        let mx = gen(0).scaled(&q(-1));
        let tw = CurvedMorphism::twist_iso(&lx(), &mx).unwrap();
        let src = ce(&tw.source, &[Poly::zero()], 4).unwrap();
        let tgt = ce(&lx(), &[mx], 4).unwrap();
        let m = ce_map(&tw, &src, &tgt).unwrap();
        assert!(m.check().passed());
        assert!(m.is_isomorphism());
    }
}
