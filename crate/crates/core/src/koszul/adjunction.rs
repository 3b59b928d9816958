use num_traits::Zero;

use super::ce::{ce, CEOutput};
use super::harrison::{harrison, harrison_with, Harrison};
use super::sym::Mono;
use crate::culie::{
    mc_solve_linear, to_element, CurvedLie, CurvedMorphism, FiniteModel, TruncKind, Truncation,
};
use crate::dgcog::{decompose, Coalgebra, CoalgebraMap, Component};
use crate::error::{Error, Result};
use crate::exactla::{Frame, Vector};
use crate::freealg::{gen, Poly};
use crate::graded::{sign, Element};

/// `(λμ)(c) = Σ (-1)^{|c1||c2|} λ(c1) μ(c2)` on the dual algebra `C*`.
fn convolve(c: &Coalgebra, l: &Vector<usize>, m: &Vector<usize>) -> Vector<usize> {
    let mut out = Vector::zero();
    for i in 0..c.dim() {
        let mut s = crate::exactla::Q::zero();
        for ((j, k), x) in c.comul_basis(i).iter() {
            let (a, b) = (l.get(j), m.get(k));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            s += x * a * b * sign(c.space.degree(*j) * c.space.degree(*k));
        }
        out.add_term(i, s);
    }
    out
}

struct Split {
    comps: Vec<Component>,
    frame: Frame,
    offsets: Vec<usize>,
}

impl Split {
    fn new(c: &Coalgebra) -> Result<Split> {
        let comps = decompose(c)?;
        let mut vectors = Vec::new();
        let mut offsets = Vec::new();
        for k in &comps {
            offsets.push(vectors.len());
            vectors.extend(k.inclusion.iter().cloned());
        }
        Ok(Split {
            frame: Frame::new(vectors, c.dim())?,
            comps,
            offsets,
        })
    }

    /// Component coordinates of an element of `C`.
    fn parts(&self, v: &Element) -> Vec<Element> {
        let coords = self.frame.coords(v);
        let mut out = vec![Element::zero(); self.comps.len()];
        for (i, x) in coords.iter() {
            let j = self.offsets.partition_point(|&o| o <= *i) - 1;
            out[j].add_term(i - self.offsets[j], x.clone());
        }
        out
    }
}

fn check_ends(m: &CurvedMorphism, h: &Harrison, ce: &CEOutput) -> Result<()> {
    if m.source != h.algebra {
        return Err(Error::SourceTargetMismatch(
            "morphism source is not the Harrison algebra".into(),
        ));
    }
    if m.target != ce.algebra {
        return Err(Error::SourceTargetMismatch(
            "morphism target is not the CE input".into(),
        ));
    }
    Ok(())
}

/// The coalgebra map `C → ČE(g)` adjoint to a curved morphism
/// `(F, a): Harr(C) → g`. On the component of a group-like `γ` it is the
/// dual of the algebra map `S → C_γ*` with `t_k ↦ λ_k`,
/// `λ_k(c) = [F(y_{c - ε(c)γ})]_k`, landing in the component of
/// `F(y_{γ - eps}) + a`.
pub fn adjoint_to_cog(m: &CurvedMorphism, h: &Harrison, ce: &CEOutput) -> Result<CoalgebraMap> {
    check_ends(m, h, ce)?;
    let c = &h.reduced.source;
    let split = Split::new(c)?;
    let n = ce.max_weight;
    // per component: target component and images of its basis vectors
    let mut comp_images: Vec<(usize, Vec<Element>)> = Vec::new();
    for comp in &split.comps {
        let g = &comp.group_like;
        let mut x = m.apply(&h.grouplike_mc(g));
        x.add(&m.a);
        if !ce.algebra.mc_residual(&x)?.is_zero() {
            return Err(Error::WitnessNotMC(ce.algebra.render(&x)));
        }
        let jt = ce.component_of(&x).ok_or_else(|| {
            Error::ComponentMismatch(format!(
                "{} is not among the CE witnesses",
                ce.algebra.render(&x)
            ))
        })?;
        let tc = &ce.components[jt];
        let cj = &comp.coalgebra;
        let ngen = tc.sym.gens.dim();
        let mut lambda = vec![Vector::<usize>::zero(); ngen];
        for (i, v) in comp.inclusion.iter().enumerate().skip(1) {
            let bar = v.minus(&g.scaled(&c.counit(v)));
            let tau = to_element(&m.apply(&h.y(&bar)));
            for (k, x) in tau.iter() {
                lambda[*k].add_term(i, x.clone());
            }
        }
        let unit = cj.counit_functional().clone();
        let value = |mono: &Mono| {
            mono.iter().fold(unit.clone(), |acc, &k| {
                convolve(cj, &acc, &lambda[k as usize])
            })
        };
        for mono in tc
            .sym
            .monomials(n + 1)
            .iter()
            .filter(|mm| mm.len() == n + 1)
        {
            if !value(mono).is_zero() {
                return Err(Error::Invalid(format!(
                    "CE truncation weight {n} is below the coradical length of the component of {}",
                    c.render(g)
                )));
            }
        }
        let mut images = vec![Element::zero(); cj.dim()];
        for (b, mono) in tc.monomials.iter().enumerate() {
            for (i, x) in value(mono).iter() {
                images[*i].add_term(ce.offset(jt) + b, x.clone());
            }
        }
        comp_images.push((jt, images));
    }
    let mut images = Vec::with_capacity(c.dim());
    for i in 0..c.dim() {
        let mut v = Element::zero();
        for (j, part) in split.parts(&Element::unit(i)).iter().enumerate() {
            for (b, x) in part.iter() {
                v.add_scaled(&comp_images[j].1[*b], x);
            }
        }
        images.push(v);
    }
    CoalgebraMap::new(c.clone(), ce.total.clone(), images)
}

/// The curved morphism `Harr(C) → g` adjoint to a coalgebra map
/// `φ: C → ČE(g)`: on `y_c` it is `Σ_γ ε(c_γ) x_γ + ψ_γ(c_γ - ε(c_γ)γ)`
/// where `x_γ` is the witness of the component hit by `γ` and `ψ_γ` reads
/// off the `t_k*` coordinates; `a` is the same expression at `eps`.
pub fn adjoint_to_lie(phi: &CoalgebraMap, h: &Harrison, ce: &CEOutput) -> Result<CurvedMorphism> {
    let c = &h.reduced.source;
    if &phi.source != c || phi.target != ce.total {
        return Err(Error::SourceTargetMismatch(
            "map does not go from the Harrison input to ČE".into(),
        ));
    }
    let split = Split::new(c)?;
    let mut hit = Vec::new();
    for comp in &split.comps {
        let img = phi.apply(&comp.group_like);
        let jt = (0..ce.components.len())
            .find(|&j| img == ce.embed(j, &Element::unit(0)))
            .ok_or_else(|| {
                Error::ComponentMismatch(format!(
                    "{} does not go to a group-like of ČE",
                    c.render(&comp.group_like)
                ))
            })?;
        hit.push(jt);
    }
    let value = |v: &Element| -> Poly {
        let mut out = Poly::zero();
        for (j, part) in split.parts(v).iter().enumerate() {
            let comp = &split.comps[j];
            let jt = hit[j];
            let tc = &ce.components[jt];
            let cv = comp.coalgebra.counit(part);
            out.add_scaled(&tc.witness.element, &cv);
            let mut bar = part.clone();
            bar.add_term(0, -cv);
            let img =
                ce.split(&phi.apply(&bar.map_linear(|i| comp.inclusion[*i].clone())))[jt].clone();
            for k in 0..tc.sym.gens.dim() {
                let x = img.get(&tc.generator_index(k));
                if !x.is_zero() {
                    out.add_scaled(&gen(k), &x);
                }
            }
        }
        out
    };
    let f = h.reduced.basis.iter().map(&value).collect();
    let a = value(&h.reduced.eps);
    CurvedMorphism::new(h.algebra.clone(), ce.algebra.clone(), f, a)
}

/// `η_C: C → ČE(Harr C)`, with `Harr C` truncated at word length `w`,
/// rewritten on a Lie basis, and all of its Maurer-Cartan elements used as
/// witnesses.
#[derive(Clone, Debug)]
pub struct UnitMap {
    pub harrison: Harrison,
    pub model: FiniteModel,
    pub ce: CEOutput,
    pub map: CoalgebraMap,
}

pub fn unit_map(c: &Coalgebra, eps: &Element, w: u32, ce_weight: usize) -> Result<UnitMap> {
    let h = harrison(c, eps, w)?;
    let model = h.algebra.finite_model()?;
    let witnesses: Vec<Poly> = mc_solve_linear(&model.algebra)?
        .into_iter()
        .map(|x| x.element)
        .collect();
    let ce_out = ce(&model.algebra, &witnesses, ce_weight)?;
    let f = (0..h.algebra.ngens())
        .map(|i| {
            model
                .to_finite(&gen(i))
                .ok_or_else(|| Error::Invalid("generator outside the Lie basis".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let id = CurvedMorphism::new(h.algebra.clone(), model.algebra.clone(), f, Poly::zero())?;
    let map = adjoint_to_cog(&id, &h, &ce_out)?;
    Ok(UnitMap {
        harrison: h,
        model,
        ce: ce_out,
        map,
    })
}

/// `ε_g: Harr(ČE g) → g`. With a single witness the Harrison algebra is
/// truncated by monomial weight (a filtration, so homology is exact in
/// every degree); otherwise by word length.
#[derive(Clone, Debug)]
pub struct Counit {
    pub ce: CEOutput,
    pub harrison: Harrison,
    pub morphism: CurvedMorphism,
}

pub fn counit(g: &CurvedLie, witnesses: &[Poly], ce_weight: usize, w: u32) -> Result<Counit> {
    let ce_out = ce(g, witnesses, ce_weight)?;
    if ce_out.components.is_empty() {
        return Err(Error::Invalid("ČE(g) is empty: no witnesses".into()));
    }
    let c = &ce_out.total;
    let eps = Element::unit(0);
    let h = if ce_out.components.len() == 1 {
        let weights: Vec<u32> = ce_out.components[0].monomials[1..]
            .iter()
            .map(|m| m.len() as u32)
            .collect();
        harrison_with(
            c,
            &eps,
            Truncation {
                kind: TruncKind::Filtration,
                max_weight: w,
                weights,
            },
        )?
    } else {
        harrison(c, &eps, w)?
    };
    let morphism = adjoint_to_lie(&CoalgebraMap::identity(c), &h, &ce_out)?;
    Ok(Counit {
        ce: ce_out,
        harrison: h,
        morphism,
    })
}
