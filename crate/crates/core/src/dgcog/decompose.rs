use super::grouplike::characters;
use super::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::{Echelon, SparseMatrix, Vector};
use crate::graded::Element;

/// A conilpotent component: the subcoalgebra `C_g` of everything lying over
/// the group-like `g`, with `g` as its first basis vector and coaugmentation.
#[derive(Clone, Debug)]
pub struct Component {
    pub group_like: Element,
    pub coalgebra: Coalgebra,
    /// Images of the component's basis vectors in the ambient coalgebra.
    pub inclusion: Vec<Element>,
}

fn annihilator(vs: &[Element], n: usize) -> Vec<Vector<usize>> {
    let mut m = SparseMatrix::zero(vs.len(), n);
    for (r, v) in vs.iter().enumerate() {
        for (i, x) in v.iter() {
            m.set(r, *i, x.clone());
        }
    }
    m.kernel_basis()
}

/// `V ∧ kg = Δ⁻¹(V ⊗ C + C ⊗ kg)`, computed degree by degree.
fn wedge_with_point(c: &Coalgebra, v: &[Element], g: &Element) -> Vec<Element> {
    let n = c.dim();
    let phi = annihilator(v, n);
    let psi = annihilator(std::slice::from_ref(g), n);
    let mut out = Vec::new();
    for (d, _) in c.space.dims_by_degree() {
        let cols = c.space.indices_in_degree(d);
        let mut m = SparseMatrix::zero(phi.len() * psi.len(), cols.len());
        for (ci, i) in cols.iter().enumerate() {
            for ((j, k), x) in c.comul_basis(*i).iter() {
                for (a, f) in phi.iter().enumerate() {
                    let fj = f.get(j);
                    if num_traits::Zero::is_zero(&fj) {
                        continue;
                    }
                    for (b, h) in psi.iter().enumerate() {
                        let hk = h.get(k);
                        let r = a * psi.len() + b;
                        let cur = m.get(r, ci);
                        m.set(r, ci, cur + x * &fj * hk);
                    }
                }
            }
        }
        for kv in m.kernel_basis() {
            out.push(kv.map_keys(|p| cols[*p]));
        }
    }
    out
}

fn component_space(c: &Coalgebra, g: &Element) -> Vec<Element> {
    let mut v = vec![g.clone()];
    loop {
        let next = wedge_with_point(c, &v, g);
        if next.len() == v.len() {
            return v;
        }
        v = next;
    }
}

/// Splits `c` into conilpotent components, ordered by their group-likes.
pub fn decompose(c: &Coalgebra) -> Result<Vec<Component>> {
    let ch = characters(c)?;
    if ch.unsplit_dim > 0 {
        return Err(Error::NotSplitOverQ(format!(
            "{} dimensions of the coradical have no rational group-like",
            ch.unsplit_dim
        )));
    }
    let mut total = Echelon::untracked();
    let mut comps = Vec::new();
    for g in &ch.all {
        if !c.diff(g).is_zero() {
            return Err(Error::Invalid(format!(
                "group-like {} is not a cycle",
                c.render(g)
            )));
        }
        let span = component_space(c, g);
        // g first, then the remaining span vectors reduced against it.
        let mut e = Echelon::untracked();
        let mut basis = Vec::new();
        let mut names = Vec::new();
        for v in std::iter::once(g).chain(span.iter()) {
            let (rem, _) = e.reduce(v);
            if rem.is_zero() {
                continue;
            }
            let lead = *rem.first().expect("nonzero").0;
            e.insert(v);
            names.push(c.name(lead).to_string());
            basis.push(v.clone());
        }
        for v in &basis {
            total.insert(v);
        }
        let mut sub = c.restrict(basis.clone(), names)?;
        sub.coaug = Some(Element::unit(0));
        comps.push(Component {
            group_like: g.clone(),
            coalgebra: sub,
            inclusion: basis,
        });
    }
    if total.rank() != c.dim() || comps.iter().map(|k| k.inclusion.len()).sum::<usize>() != c.dim()
    {
        return Err(Error::NotSplitOverQ(format!(
            "components span {} of {} dimensions",
            total.rank(),
            c.dim()
        )));
    }
    Ok(comps)
}

/// Basis of a conilpotent coalgebra adapted to its coradical filtration
/// `F_k = Δ⁻¹(F_{k-1} ⊗ C + C ⊗ kg)`, with `g` first.
#[derive(Clone, Debug)]
pub struct Coradical {
    pub coalgebra: Coalgebra,
    /// Filtration index of each basis vector (`0` for `g`).
    pub weights: Vec<u32>,
    /// Basis vectors in the coordinates of the original coalgebra.
    pub basis: Vec<Element>,
}

pub fn coradical_filtration(c: &Coalgebra, g: &Element) -> Result<Coradical> {
    let mut e = Echelon::untracked();
    let mut basis = vec![g.clone()];
    let mut names = Vec::new();
    let mut weights = vec![0];
    let lead = |e: &Echelon<usize>, v: &Element| *e.reduce(v).0.first().expect("independent").0;
    names.push(c.name(lead(&e, g)).to_string());
    e.insert(g);
    let mut v = vec![g.clone()];
    let mut k = 0;
    while basis.len() < c.dim() {
        k += 1;
        let next = wedge_with_point(c, &v, g);
        if next.len() == v.len() {
            return Err(Error::Invalid(format!(
                "coalgebra is not conilpotent over {}: filtration stops at {} of {} dimensions",
                c.render(g),
                v.len(),
                c.dim()
            )));
        }
        for x in &next {
            let y = x.minus(&g.scaled(&c.counit(x)));
            if y.is_zero() || e.contains(&y) {
                continue;
            }
            names.push(c.name(lead(&e, &y)).to_string());
            e.insert(&y);
            basis.push(y);
            weights.push(k);
        }
        v = next;
    }
    let mut sub = c.restrict(basis.clone(), names)?;
    sub.coaug = Some(Element::unit(0));
    Ok(Coradical {
        coalgebra: sub,
        weights,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgcog::tests::{g2, k, p1};
    use crate::exactla::q;

    #[test]
    fn examples() {
        let comps = decompose(&g2()).unwrap();
        assert_eq!(comps.len(), 2);
        for (comp, kk) in comps.iter().zip(["g1", "g2"]) {
            assert_eq!(comp.coalgebra.dim(), 1);
            assert_eq!(comp.coalgebra.name(0), kk);
            let point =
                Coalgebra::from_triples(&[(kk, 0)], &[&[(q(1), 0, 0)]], &[(0, q(1))], &[]).unwrap();
            assert_eq!(comp.coalgebra.with_coaug(None).unwrap(), point);
        }
        let comps = decompose(&p1()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].coalgebra.with_coaug(None).unwrap(), p1());
        assert_eq!(decompose(&k()).unwrap().len(), 1);
    }

    #[test]
    fn coradical_of_p1_and_k() {
        let r = coradical_filtration(&p1(), &Element::unit(0)).unwrap();
        assert_eq!(r.weights, vec![0, 1]);
        let r = coradical_filtration(&k(), &Element::unit(0)).unwrap();
        assert_eq!(r.weights, vec![0]);
        assert!(coradical_filtration(&g2(), &Element::unit(0)).is_err());
    }

    #[test]
    fn mixed_sum_with_graded_part() {
        // P1 ⊕ G2-with-an-odd-primitive-pair over g2.
        let c = Coalgebra::from_triples(
            &[("g", 0), ("c", 0), ("h", 0), ("a", 1), ("b", 2)],
            &[
                &[(q(1), 0, 0)],
                &[(q(1), 1, 0), (q(1), 0, 1)],
                &[(q(1), 2, 2)],
                &[(q(1), 3, 2), (q(1), 2, 3)],
                &[(q(1), 4, 2), (q(1), 2, 4)],
            ],
            &[(0, q(1)), (2, q(1))],
            &[&[], &[], &[], &[(4, q(1))], &[]],
        )
        .unwrap();
        assert!(c.validate().passed());
        let comps = decompose(&c).unwrap();
        assert_eq!(
            comps.iter().map(|k| k.coalgebra.dim()).collect::<Vec<_>>(),
            vec![2, 3]
        );
        for k in &comps {
            assert!(k.coalgebra.validate().passed());
        }
    }
}
