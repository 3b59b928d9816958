//! Graded-commutative polynomial algebra on finitely many generators.
//! Monomials are sorted index lists; odd generators appear at most once.

use std::collections::BTreeMap;

use crate::exactla::{Vector, Q};
use crate::graded::{sign, GradedSpace};

pub type Mono = Vec<u32>;
pub type SymPoly = Vector<Mono>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymAlg {
    pub gens: GradedSpace,
}

impl SymAlg {
    pub fn new(gens: GradedSpace) -> Self {
        SymAlg { gens }
    }

    fn odd(&self, a: u32) -> bool {
        self.gens.degree(a as usize).rem_euclid(2) == 1
    }

    pub fn degree(&self, m: &[u32]) -> i64 {
        m.iter().map(|&a| self.gens.degree(a as usize)).sum()
    }

    /// `m1 · m2` as `(sign, sorted monomial)`, or `None` when an odd
    /// generator repeats.
    pub fn mul_mono(&self, m1: &[u32], m2: &[u32]) -> Option<(Q, Mono)> {
        let mut out = Vec::with_capacity(m1.len() + m2.len());
        let (mut i, mut j) = (0, 0);
        let mut flips = 0i64;
        // odd letters of m1 not yet emitted
        let mut odd_left: i64 = m1.iter().filter(|&&a| self.odd(a)).count() as i64;
        while i < m1.len() || j < m2.len() {
            let take_left = j >= m2.len() || (i < m1.len() && m1[i] <= m2[j]);
            if take_left {
                if self.odd(m1[i]) {
                    odd_left -= 1;
                }
                out.push(m1[i]);
                i += 1;
            } else {
                if self.odd(m2[j]) {
                    flips += odd_left;
                }
                out.push(m2[j]);
                j += 1;
            }
        }
        for w in out.windows(2) {
            if w[0] == w[1] && self.odd(w[0]) {
                return None;
            }
        }
        Some((sign(flips), out))
    }

    pub fn mul(&self, p: &SymPoly, q: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (a, x) in p.iter() {
            for (b, y) in q.iter() {
                if let Some((s, m)) = self.mul_mono(a, b) {
                    out.add_term(m, x * y * s);
                }
            }
        }
        out
    }

    /// Degree-1 derivation determined by generator values, applied without
    /// truncation.
    pub fn derive(&self, values: &[SymPoly], p: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in p.iter() {
            let mut prefix = 0i64;
            for (k, &a) in m.iter().enumerate() {
                let left: SymPoly = SymPoly::unit(m[..k].to_vec());
                let right: SymPoly = SymPoly::unit(m[k + 1..].to_vec());
                let term = self.mul(&self.mul(&left, &values[a as usize]), &right);
                out.add_scaled(&term, &(c * sign(prefix)));
                prefix += self.gens.degree(a as usize);
            }
        }
        out
    }

    /// All monomials of weight `0..=n`, ordered by weight then lexicographically.
    pub fn monomials(&self, n: usize) -> Vec<Mono> {
        let g = self.gens.dim() as u32;
        let mut out = vec![Mono::new()];
        let mut level = vec![Mono::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for m in &level {
                let start = m.last().copied().unwrap_or(0);
                for a in start..g {
                    if m.last() == Some(&a) && self.odd(a) {
                        continue;
                    }
                    let mut v = m.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }

    /// Every ordered factorization `m = ± m1·m2` as `(m1, m2, sign)`.
    pub fn splittings(&self, m: &[u32]) -> Vec<(Mono, Mono, Q)> {
        // distinct sub-multisets of m
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &a in m {
            *counts.entry(a).or_default() += 1;
        }
        let keys: Vec<(u32, usize)> = counts.into_iter().collect();
        let mut subs: Vec<Mono> = vec![Mono::new()];
        for (a, k) in keys {
            subs = subs
                .into_iter()
                .flat_map(|s| {
                    (0..=k).map(move |r| {
                        let mut v = s.clone();
                        v.extend(std::iter::repeat_n(a, r));
                        v
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for m1 in subs {
            let mut m2 = m.to_vec();
            for a in &m1 {
                let p = m2.iter().position(|b| b == a).unwrap();
                m2.remove(p);
            }
            if let Some((s, prod)) = self.mul_mono(&m1, &m2) {
                debug_assert_eq!(prod, m);
                out.push((m1, m2, s));
            }
        }
        out
    }

    pub fn render_mono(&self, m: &[u32]) -> String {
        if m.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < m.len() {
            let mut j = i;
            while j < m.len() && m[j] == m[i] {
                j += 1;
            }
            let name = self.gens.name(m[i] as usize);
            parts.push(if j - i == 1 {
                name.to_string()
            } else {
                format!("{name}^{}", j - i)
            });
            i = j;
        }
        parts.join("·")
    }
}
