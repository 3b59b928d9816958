use num_traits::{One, Zero};
use serde::Serialize;

use super::{CurvedLie, CurvedMorphism};
use crate::error::{Error, Result};
use crate::exactla::{fmt_q, poly, qf, SparseMatrix, Vector, Q};
use crate::freealg::{Poly, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MCWitness {
    pub element: Poly,
    pub residual: Poly,
}

impl MCWitness {
    pub fn new(g: &CurvedLie, element: Poly) -> Result<Self> {
        let residual = g.mc_residual(&element)?;
        Ok(MCWitness { element, residual })
    }

    pub fn is_mc(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Complete list of rational MC elements in the two regimes where the
/// equation degenerates: the bracket vanishes on degree 1 (linear), or
/// degree 1 is one-dimensional (one scalar quadratic).
pub fn mc_solve_linear(g: &CurvedLie) -> Result<Vec<MCWitness>> {
    let v1 = g.degree_part(1);
    if v1.is_empty() {
        let w = MCWitness::new(g, Poly::zero())?;
        return Ok(if w.is_mc() { vec![w] } else { vec![] });
    }
    if g.square_vanishes_on(&v1) {
        // ω + Σ λ_i d(v_i) = 0
        let words = word_index(
            v1.iter()
                .map(|v| g.d(v))
                .chain(std::iter::once(g.curvature.clone())),
        );
        let cols: Vec<Vector<usize>> = v1.iter().map(|v| coords(&words, &g.d(v))).collect();
        let m = SparseMatrix::from_columns(words.len(), &cols);
        let rhs = coords(&words, &g.curvature).neg();
        let Some(sol) = m.solve(&rhs) else {
            return Ok(vec![]);
        };
        if !m.kernel_basis().is_empty() {
            return Err(Error::NotSolvableExactly(format!(
                "the MC set is an affine space of dimension {}",
                m.kernel_basis().len()
            )));
        }
        let mut x = Poly::zero();
        for (i, c) in sol.iter() {
            x.add_scaled(&v1[*i], c);
        }
        let w = MCWitness::new(g, x)?;
        if !w.is_mc() {
            return Err(Error::NotSolvableExactly(
                "linear solution failed verification".into(),
            ));
        }
        return Ok(vec![w]);
    }
    if v1.len() == 1 {
        // ω + λ d v + ½ λ² [v,v] = 0, one quadratic per word
        let v = &v1[0];
        let lin = g.d(v);
        let quad = g.bracket(v, v).scaled(&qf(1, 2));
        let words = word_index([g.curvature.clone(), lin.clone(), quad.clone()]);
        let mut candidates: Option<Vec<Q>> = None;
        for w in &words {
            let p = vec![g.curvature.get(w), lin.get(w), quad.get(w)];
            if p.iter().all(|c| c.is_zero()) {
                continue;
            }
            let roots = poly::rational_roots(&p)
                .ok_or_else(|| Error::NotSolvableExactly("coefficients too large".into()))?;
            let roots: Vec<Q> = if p[1].is_zero() && p[2].is_zero() {
                vec![]
            } else {
                roots.into_iter().map(|(r, _)| r).collect()
            };
            candidates = Some(match candidates {
                None => roots,
                Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
            });
        }
        let Some(mut cands) = candidates else {
            return Err(Error::NotSolvableExactly(
                "every multiple of the degree-1 generator is MC".into(),
            ));
        };
        cands.sort();
        let mut out = Vec::new();
        for r in cands {
            let w = MCWitness::new(g, v.scaled(&r))?;
            if w.is_mc() {
                out.push(w);
            }
        }
        return Ok(out);
    }
    Err(Error::NotSolvableExactly(format!(
        "degree 1 has dimension {} and the bracket does not vanish on it",
        v1.len()
    )))
}

fn word_index<I: IntoIterator<Item = Poly>>(ps: I) -> Vec<Word> {
    let mut s = std::collections::BTreeSet::new();
    for p in ps {
        s.extend(p.keys().cloned());
    }
    s.into_iter().collect()
}

fn coords(words: &[Word], p: &Poly) -> Vector<usize> {
    Vector::from_terms(
        p.iter()
            .map(|(w, c)| (words.binary_search(w).expect("indexed word"), c.clone())),
    )
}

/// The MC equation written in coordinates `λ_i` of the degree-1 part:
/// one quadratic polynomial per word.
#[derive(Clone, Debug, Serialize)]
pub struct MCEquations {
    pub variables: Vec<String>,
    /// Each equation as rendered text `... = 0`.
    pub equations: Vec<String>,
}

pub fn mc_equations(g: &CurvedLie) -> Result<MCEquations> {
    let v1 = g.degree_part(1);
    let variables: Vec<String> = v1.iter().map(|v| g.render(v)).collect();
    let lin: Vec<Poly> = v1.iter().map(|v| g.d(v)).collect();
    let mut quad = std::collections::BTreeMap::new();
    for i in 0..v1.len() {
        for j in i..v1.len() {
            let mut b = g.bracket(&v1[i], &v1[j]);
            if i == j {
                b = b.scaled(&qf(1, 2));
            }
            quad.insert((i, j), b);
        }
    }
    let words = word_index(
        std::iter::once(g.curvature.clone())
            .chain(lin.iter().cloned())
            .chain(quad.values().cloned()),
    );
    let lam = |i: usize| format!("λ{}", i + 1);
    let mut equations = Vec::new();
    for w in &words {
        let mut terms: Vec<(Q, String)> = Vec::new();
        for ((i, j), b) in &quad {
            terms.push((
                b.get(w),
                if i == j {
                    format!("{}^2", lam(*i))
                } else {
                    format!("{}·{}", lam(*i), lam(*j))
                },
            ));
        }
        for (i, l) in lin.iter().enumerate() {
            terms.push((l.get(w), lam(i)));
        }
        terms.push((g.curvature.get(w), String::new()));
        let mut s = String::new();
        for (c, m) in terms.into_iter().filter(|(c, _)| !c.is_zero()) {
            let neg = c < Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            s.push_str(if s.is_empty() {
                if neg {
                    "-"
                } else {
                    ""
                }
            } else if neg {
                " - "
            } else {
                " + "
            });
            if m.is_empty() {
                s.push_str(&fmt_q(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&fmt_q(&a));
                    s.push(' ');
                }
                s.push_str(&m);
            }
        }
        if !s.is_empty() {
            equations.push(format!("{s} = 0"));
        }
    }
    Ok(MCEquations {
        variables,
        equations,
    })
}

/// `x ↦ f(x) + a`; the image must be MC again.
pub fn mc_pushforward(m: &CurvedMorphism, x: &MCWitness) -> Result<MCWitness> {
    let mut y = m.apply(&x.element);
    y.add(&m.a);
    let w = MCWitness::new(&m.target, y)?;
    if !w.is_mc() {
        return Err(Error::ResidualNonzero(m.target.render(&w.residual)));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::culie::tests::{l1, lh, lx, nonab};
    use crate::exactla::q;
    use crate::freealg::gen;

    #[test]
    fn solve_examples() {
        let s = mc_solve_linear(&lx()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].element, gen(0).scaled(&q(-1)));
        assert!(mc_solve_linear(&lh()).unwrap().is_empty());
        assert_eq!(mc_solve_linear(&l1()).unwrap().len(), 1);
        assert_eq!(mc_solve_linear(&nonab()).unwrap().len(), 1);
    }

    #[test]
    fn pushforward_along_twist() {
        let g = lx();
        let mx = gen(0).scaled(&q(-1));
        let w = MCWitness::new(&g, mx.clone()).unwrap();
        let id = CurvedMorphism::identity(&g);
        assert_eq!(mc_pushforward(&id, &w).unwrap(), w);
        // (Id, -x): g^{-x} -> g sends 0 to -x, and (Id, x): g -> g^{-x} sends -x to 0
        let tw = CurvedMorphism::twist_iso(&g, &mx).unwrap();
        let zero = MCWitness::new(&tw.source, Poly::zero()).unwrap();
        assert_eq!(mc_pushforward(&tw, &zero).unwrap().element, mx);
        let back = CurvedMorphism::twist_iso(&tw.source, &gen(0)).unwrap();
        assert!(mc_pushforward(&back, &w).unwrap().element.is_zero());
    }

    #[test]
    fn equations_render() {
        let e = mc_equations(&lx()).unwrap();
        assert_eq!(e.variables, vec!["x"]);
        assert_eq!(e.equations, vec!["λ1 + 1 = 0"]);
    }
}
