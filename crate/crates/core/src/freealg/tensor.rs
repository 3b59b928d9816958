//! Tensor-algebra arithmetic on words of generator indices.

use crate::exactla::{Vector, Q};
use crate::graded::{sign, GradedSpace};

pub type Word = Vec<u32>;
/// Linear combination of words; the empty word is the unit.
pub type Poly = Vector<Word>;

pub fn gen(i: usize) -> Poly {
    Poly::unit(vec![i as u32])
}

pub fn one() -> Poly {
    Poly::unit(Word::new())
}

pub fn word_degree(gens: &GradedSpace, w: &[u32]) -> i64 {
    w.iter().map(|&a| gens.degree(a as usize)).sum()
}

/// Sum of letter weights (word length when all weights are 1).
pub fn word_weight(weights: &[u32], w: &[u32]) -> u32 {
    w.iter().map(|&a| weights[a as usize]).sum()
}

/// Degree of a homogeneous polynomial; `None` if zero or mixed.
pub fn poly_degree(gens: &GradedSpace, p: &Poly) -> Option<i64> {
    let mut it = p.keys().map(|w| word_degree(gens, w));
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

pub fn max_len(p: &Poly) -> usize {
    p.keys().map(|w| w.len()).max().unwrap_or(0)
}

pub fn min_len(p: &Poly) -> usize {
    p.keys().map(|w| w.len()).min().unwrap_or(0)
}

/// Keeps words of length at most `n`.
pub fn truncate_len(p: &Poly, n: usize) -> Poly {
    let mut q = p.clone();
    q.retain(|w| w.len() <= n);
    q
}

pub fn truncate_weight(p: &Poly, weights: &[u32], n: u32) -> Poly {
    let mut q = p.clone();
    q.retain(|w| word_weight(weights, w) <= n);
    q
}

/// Concatenation product, dropping words longer than `cap`.
pub fn mul_capped(u: &Poly, v: &Poly, cap: usize) -> Poly {
    let mut out = Poly::zero();
    for (a, x) in u.iter() {
        if a.len() > cap {
            continue;
        }
        for (b, y) in v.iter() {
            if a.len() + b.len() > cap {
                continue;
            }
            let mut w = a.clone();
            w.extend_from_slice(b);
            out.add_term(w, x * y);
        }
    }
    out
}

pub fn mul(u: &Poly, v: &Poly) -> Poly {
    mul_capped(u, v, usize::MAX)
}

/// Graded commutator `uv - (-1)^{|u||v|} vu`, term by term, dropping words
/// longer than `cap`.
pub fn bracket_capped(gens: &GradedSpace, u: &Poly, v: &Poly, cap: usize) -> Poly {
    let mut out = Poly::zero();
    for (a, x) in u.iter() {
        let da = word_degree(gens, a);
        for (b, y) in v.iter() {
            if a.len() + b.len() > cap {
                continue;
            }
            let db = word_degree(gens, b);
            let c = x * y;
            let mut ab = a.clone();
            ab.extend_from_slice(b);
            out.add_term(ab, c.clone());
            let mut ba = b.clone();
            ba.extend_from_slice(a);
            out.add_term(ba, -c * sign(da * db));
        }
    }
    out
}

pub fn bracket(gens: &GradedSpace, u: &Poly, v: &Poly) -> Poly {
    bracket_capped(gens, u, v, usize::MAX)
}

/// Linear map on words that acts letter by letter: `f(a1...an) = f(a1)...f(an)`
/// (an algebra map determined on generators), dropping words above `cap`.
pub fn algebra_map(u: &Poly, images: &[Poly], cap: usize) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in u.iter() {
        let mut acc = one();
        for &a in w {
            acc = mul_capped(&acc, &images[a as usize], cap);
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Derivation of the tensor algebra determined by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub degree: i64,
    pub values: Vec<Poly>,
}

impl Derivation {
    pub fn zero(n: usize, degree: i64) -> Self {
        Derivation {
            degree,
            values: vec![Poly::zero(); n],
        }
    }

    /// Leibniz extension `d(uv) = d(u)v + (-1)^{deg |u|} u d(v)`, dropping
    /// words longer than `cap`.
    pub fn apply_capped(&self, gens: &GradedSpace, u: &Poly, cap: usize) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in u.iter() {
            let mut prefix_deg = 0;
            for (i, &a) in w.iter().enumerate() {
                let s = sign(self.degree * prefix_deg);
                let coeff: Q = c * s;
                for (mid, y) in self.values[a as usize].iter() {
                    let len = w.len() - 1 + mid.len();
                    if len > cap {
                        continue;
                    }
                    let mut nw = Vec::with_capacity(len);
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(mid);
                    nw.extend_from_slice(&w[i + 1..]);
                    out.add_term(nw, &coeff * y);
                }
                prefix_deg += gens.degree(a as usize);
            }
        }
        out
    }

    pub fn apply(&self, gens: &GradedSpace, u: &Poly) -> Poly {
        self.apply_capped(gens, u, usize::MAX)
    }
}

pub fn render_word(gens: &GradedSpace, w: &[u32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&a| gens.name(a as usize))
        .collect::<Vec<_>>()
        .join("·")
}

pub fn render_poly(gens: &GradedSpace, p: &Poly) -> String {
    crate::graded::render_with(p, |w| render_word(gens, w))
}

/// Every word of the given length over `n` letters, in lexicographic order.
pub fn words_of_len(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u32).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qf};

    #[test]
    fn bracket_examples() {
        let y = GradedSpace::from_pairs(&[("y", 1)]);
        assert_eq!(bracket(&y, &gen(0), &gen(0)), Poly::term(vec![0, 0], q(2)));
        let x = GradedSpace::from_pairs(&[("x", 2)]);
        assert!(bracket(&x, &gen(0), &gen(0)).is_zero());
        let ab = GradedSpace::from_pairs(&[("a", 0), ("b", 0)]);
        assert_eq!(
            bracket(&ab, &gen(0), &gen(1)),
            Poly::from_terms([(vec![0, 1], q(1)), (vec![1, 0], q(-1))])
        );
    }

    #[test]
    fn derivation_examples() {
        let y = GradedSpace::from_pairs(&[("y", 1)]);
        let zero = Derivation::zero(1, 1);
        assert!(zero.apply(&y, &Poly::unit(vec![0, 0, 0])).is_zero());
        // d y = -1/2 [y,y] squares to zero.
        let d = Derivation {
            degree: 1,
            values: vec![bracket(&y, &gen(0), &gen(0)).scaled(&qf(-1, 2))],
        };
        assert!(d.apply(&y, &d.apply(&y, &gen(0))).is_zero());
        // d x = -x x on a degree-1 letter: d(x x) = 0.
        let dx = Derivation {
            degree: 1,
            values: vec![Poly::term(vec![0, 0], q(-1))],
        };
        assert!(dx.apply(&y, &Poly::unit(vec![0, 0])).is_zero());
    }
}
