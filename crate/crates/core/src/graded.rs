//! Finite-dimensional cohomologically graded vector spaces, homogeneous maps,
//! and the Koszul sign rule.
//!
//! Conventions used throughout the crate:
//! * swapping homogeneous `a` and `b` costs `(-1)^{|a||b|}`;
//! * the dual of a map `f` of degree `d` is `f*(phi) = (-1)^{d|phi|} phi . f`;
//! * a space is identified with its double dual via `v -> (phi -> (-1)^{|v||phi|} phi(v))`,
//!   under which `f** = f` on the nose.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{SparseMatrix, Vector, Q};

/// `(-1)^n`.
pub fn sign(n: i64) -> Q {
    if n.rem_euclid(2) == 0 {
        Q::from_integer(1.into())
    } else {
        Q::from_integer((-1).into())
    }
}

/// Koszul sign for swapping elements of degrees `a` and `b`.
pub fn koszul_sign(a: i64, b: i64) -> Q {
    sign(a * b)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElem {
    pub name: String,
    pub degree: i64,
}

/// Ordered basis of named homogeneous vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    basis: Vec<BasisElem>,
}

/// A vector in a [`GradedSpace`], by basis index.
pub type Element = Vector<usize>;

impl GradedSpace {
    pub fn new(basis: Vec<BasisElem>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for b in &basis {
            if !seen.insert(b.name.as_str()) {
                return Err(Error::Invalid(format!("duplicate basis name `{}`", b.name)));
            }
        }
        Ok(GradedSpace { basis })
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|(n, d)| BasisElem {
                    name: n.to_string(),
                    degree: *d,
                })
                .collect(),
        )
        .expect("fixture names are unique")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Basis indices in degree `d`, in basis order.
    pub fn indices_in_degree(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == d).collect()
    }

    /// Dimension per degree.
    pub fn dims_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for b in &self.basis {
            *m.entry(b.degree).or_insert(0) += 1;
        }
        m
    }

    /// Degree of a homogeneous element; `None` for zero, error if mixed.
    pub fn degree_of(&self, v: &Element) -> Result<Option<i64>> {
        let mut deg = None;
        for (i, _) in v.iter() {
            let d = self.degree(*i);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Homogeneous components of `v` keyed by degree.
    pub fn components(&self, v: &Element) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (i, c) in v.iter() {
            out.entry(self.degree(*i))
                .or_default()
                .add_term(*i, c.clone());
        }
        out
    }

    /// Every basis degree moved by `offset`. Names get an `s^k` prefix so the
    /// provenance stays readable; a zero shift returns the space unchanged.
    pub fn shift(&self, offset: i64) -> GradedSpace {
        if offset == 0 {
            return self.clone();
        }
        GradedSpace {
            basis: self
                .basis
                .iter()
                .map(|b| BasisElem {
                    name: shift_name(&b.name, offset),
                    degree: b.degree + offset,
                })
                .collect(),
        }
    }

    /// Dual space: `b` of degree `n` becomes `b*` of degree `-n`; dualizing
    /// twice returns the original names and degrees.
    pub fn dual(&self) -> GradedSpace {
        GradedSpace {
            basis: self
                .basis
                .iter()
                .map(|b| BasisElem {
                    name: dual_name(&b.name),
                    degree: -b.degree,
                })
                .collect(),
        }
    }

    pub fn render(&self, v: &Element) -> String {
        render_with(v, |i| self.name(*i).to_string())
    }
}

fn shift_name(name: &str, offset: i64) -> String {
    // Collapse an existing shift marker so that shift(+1) then shift(-1)
    // restores the original name.
    if let Some(rest) = name.strip_prefix("s^") {
        if let Some((k, inner)) = rest.split_once(':') {
            if let Ok(k) = k.parse::<i64>() {
                let total = k + offset;
                return if total == 0 {
                    inner.to_string()
                } else {
                    format!("s^{total}:{inner}")
                };
            }
        }
    }
    format!("s^{offset}:{name}")
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(inner) => inner.to_string(),
        None => format!("{name}*"),
    }
}

/// Renders a linear combination with the given key printer, e.g. `1/2 g1 - g2`.
pub fn render_with<K: Ord + Clone, F: Fn(&K) -> String>(v: &Vector<K>, name: F) -> String {
    use num_traits::{One, Signed};
    if v.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (k, c)) in v.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            s.push_str(&crate::exactla::fmt_q(&a));
            s.push(' ');
        }
        s.push_str(&name(k));
    }
    s
}

/// Swaps two homogeneous elements: returns `(b, a)` and the Koszul sign.
pub fn koszul_swap(space: &GradedSpace, a: &Element, b: &Element) -> Result<(Element, Element, Q)> {
    let da = space.degree_of(a)?.unwrap_or(0);
    let db = space.degree_of(b)?.unwrap_or(0);
    Ok((b.clone(), a.clone(), koszul_sign(da, db)))
}

/// Degree-homogeneous linear map between graded spaces, stored as the image
/// of every source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub degree: i64,
    images: Vec<Element>,
}

impl GradedMap {
    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        degree: i64,
        images: Vec<Element>,
    ) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a {}-dimensional source",
                images.len(),
                source.dim()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            for (j, _) in img.iter() {
                if *j >= target.dim() {
                    return Err(Error::DimensionMismatch(format!(
                        "image index {j} out of range"
                    )));
                }
                if target.degree(*j) != source.degree(i) + degree {
                    return Err(Error::WrongDegree {
                        expected: source.degree(i) + degree,
                        found: target.degree(*j),
                    });
                }
            }
        }
        Ok(GradedMap {
            source,
            target,
            degree,
            images,
        })
    }

    pub fn zero(source: GradedSpace, target: GradedSpace, degree: i64) -> Self {
        let n = source.dim();
        GradedMap {
            source,
            target,
            degree,
            images: vec![Element::zero(); n],
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let images = (0..space.dim()).map(Element::unit).collect();
        GradedMap {
            source: space.clone(),
            target: space.clone(),
            degree: 0,
            images,
        }
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, v: &Element) -> Element {
        v.map_linear(|i| self.images[*i].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| v.is_zero())
    }

    /// `self . inner`.
    pub fn compose(&self, inner: &GradedMap) -> Result<GradedMap> {
        if inner.target != self.source {
            return Err(Error::DimensionMismatch(
                "composition of maps with different middle spaces".into(),
            ));
        }
        let images = inner.images.iter().map(|v| self.apply(v)).collect();
        Ok(GradedMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            degree: self.degree + inner.degree,
            images,
        })
    }

    /// Block from source degree `d` to target degree `d + self.degree`, with
    /// rows/columns in basis order within each degree.
    pub fn block(&self, d: i64) -> SparseMatrix {
        let src = self.source.indices_in_degree(d);
        let tgt = self.target.indices_in_degree(d + self.degree);
        let pos: BTreeMap<usize, usize> = tgt.iter().enumerate().map(|(k, j)| (*j, k)).collect();
        let cols: Vec<_> = src
            .iter()
            .map(|i| self.images[*i].map_keys(|j| pos[j]))
            .collect();
        SparseMatrix::from_columns(tgt.len(), &cols)
    }

    /// Dual map `target* -> source*` of the same degree.
    pub fn dual(&self) -> GradedMap {
        let src = self.target.dual();
        let tgt = self.source.dual();
        let mut images = vec![Element::zero(); src.dim()];
        for (i, img) in self.images.iter().enumerate() {
            for (j, c) in img.iter() {
                // (f* w_j*)(v_i) carries (-1)^{deg f * |w_j*|}.
                let s = sign(self.degree * src.degree(*j));
                images[*j].add_term(i, c * s);
            }
        }
        GradedMap {
            source: src,
            target: tgt,
            degree: self.degree,
            images,
        }
    }

    /// Double dual read back through the signed identification `V = V**`.
    pub fn double_dual_identified(&self) -> GradedMap {
        let dd = self.dual().dual();
        let images = dd
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let si = sign(self.source.degree(i));
                img.map_linear(|j| Element::term(*j, sign(self.target.degree(*j)) * &si))
            })
            .collect();
        GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            images,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    #[test]
    fn koszul_sign_examples() {
        assert_eq!(koszul_sign(0, 5), q(1));
        assert_eq!(koszul_sign(1, 1), q(-1));
        assert_eq!(koszul_sign(3, 2), q(1));
    }

    #[test]
    fn swap_twice_is_identity() {
        let v = GradedSpace::from_pairs(&[("a", 1), ("b", 3)]);
        let (b, a, s1) = koszul_swap(&v, &Element::unit(0), &Element::unit(1)).unwrap();
        let (a2, b2, s2) = koszul_swap(&v, &b, &a).unwrap();
        assert_eq!(
            (a2, b2, s1 * s2),
            (Element::unit(0), Element::unit(1), q(1))
        );
        assert!(matches!(
            koszul_swap(
                &v,
                &Element::unit(0).plus(&Element::unit(1)),
                &Element::unit(0)
            ),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn shift_examples() {
        let v = GradedSpace::from_pairs(&[("c", 0)]);
        let s = v.shift(1);
        assert_eq!(s.degree(0), 1);
        assert_eq!(v.shift(0), v);
        assert_eq!(s.shift(-1), v);
    }

    #[test]
    fn dual_examples() {
        let v = GradedSpace::from_pairs(&[("a", 0), ("b", 1)]);
        let d = v.dual();
        assert_eq!(d, GradedSpace::from_pairs(&[("a*", 0), ("b*", -1)]));
        assert_eq!(d.dual(), v);
        let x = GradedSpace::from_pairs(&[("x", 2)]);
        assert_eq!(x.dual(), GradedSpace::from_pairs(&[("x*", -2)]));
    }

    #[test]
    fn dual_of_composite() {
        let u = GradedSpace::from_pairs(&[("u", 0), ("u1", 1)]);
        let v = GradedSpace::from_pairs(&[("v", 1), ("v1", 2)]);
        let w = GradedSpace::from_pairs(&[("w", 2), ("w1", 3)]);
        let f = GradedMap::new(
            u,
            v.clone(),
            1,
            vec![Element::term(0, q(2)), Element::term(1, q(3))],
        )
        .unwrap();
        let g = GradedMap::new(
            v,
            w,
            1,
            vec![Element::term(0, q(5)), Element::term(1, q(-1))],
        )
        .unwrap();
        let lhs = g.compose(&f).unwrap().dual();
        let rhs = f.dual().compose(&g.dual()).unwrap();
        // (g f)* = (-1)^{|f||g|} f* g*
        let rhs_signed = GradedMap::new(
            rhs.source.clone(),
            rhs.target.clone(),
            rhs.degree,
            rhs.images().iter().map(|v| v.neg()).collect(),
        )
        .unwrap();
        assert_eq!(lhs, rhs_signed);
        assert_eq!(f.double_dual_identified(), f);
    }
}
