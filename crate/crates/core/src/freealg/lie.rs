//! Free graded Lie algebras inside the tensor algebra.

use super::tensor::{bracket, gen, word_degree, Poly, Word};
use crate::exactla::Echelon;
use crate::graded::{sign, GradedSpace};

/// Per-weight bases of the free Lie algebra on `gens`, weights `1..=w`.
/// Weight `k` is spanned by `[a, z]` for generators `a` and basis elements
/// `z` of weight `k - 1`; a basis is extracted by exact rank.
pub fn lie_basis(gens: &GradedSpace, w: usize) -> Vec<Vec<Poly>> {
    let mut out: Vec<Vec<Poly>> = Vec::new();
    if w == 0 {
        return out;
    }
    out.push((0..gens.dim()).map(gen).collect());
    for _ in 2..=w {
        let prev = out.last().unwrap();
        let mut e: Echelon<Word> = Echelon::untracked();
        let mut level = Vec::new();
        for a in 0..gens.dim() {
            for z in prev {
                let b = bracket(gens, &gen(a), z);
                if e.insert(&b) {
                    level.push(b);
                }
            }
        }
        out.push(level);
    }
    out
}

/// Unshuffle coproduct of a word: the sum over subsets `S` of
/// `±w_S ⊗ w_{S^c}`, the sign being the Koszul sign of moving the letters
/// of `S` to the front.
pub fn unshuffle(gens: &GradedSpace, w: &[u32]) -> crate::exactla::Vector<(Word, Word)> {
    let n = w.len();
    let mut out = crate::exactla::Vector::zero();
    for mask in 0u64..(1u64 << n) {
        let mut left = Word::new();
        let mut right = Word::new();
        let mut exp = 0i64;
        let mut right_deg = 0i64;
        for (i, &a) in w.iter().enumerate() {
            let d = gens.degree(a as usize);
            if mask >> i & 1 == 1 {
                exp += d * right_deg;
                left.push(a);
            } else {
                right_deg += d;
                right.push(a);
            }
        }
        out.add_term((left, right), sign(exp));
    }
    out
}

/// Whether `z` satisfies `Δ z = z ⊗ 1 + 1 ⊗ z` for the unshuffle coproduct.
pub fn is_primitive(gens: &GradedSpace, z: &Poly) -> bool {
    let mut delta = crate::exactla::Vector::zero();
    for (w, c) in z.iter() {
        delta.add_scaled(&unshuffle(gens, w), c);
    }
    for (w, c) in z.iter() {
        delta.add_term((w.clone(), Word::new()), -c.clone());
        delta.add_term((Word::new(), w.clone()), -c.clone());
    }
    delta.is_zero()
}

/// Total degree of every word in a homogeneous Lie element.
pub fn lie_degree(gens: &GradedSpace, z: &Poly) -> Option<i64> {
    z.keys().next().map(|w| word_degree(gens, w))
}

/// Graded Jacobi defect `[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|}[b,[a,c]]`.
pub fn jacobi_defect(gens: &GradedSpace, a: &Poly, b: &Poly, c: &Poly) -> Poly {
    let da = lie_degree(gens, a).unwrap_or(0);
    let db = lie_degree(gens, b).unwrap_or(0);
    let mut out = bracket(gens, a, &bracket(gens, b, c));
    out.sub(&bracket(gens, &bracket(gens, a, b), c));
    out.add_scaled(&bracket(gens, b, &bracket(gens, a, c)), &-sign(da * db));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(g: &GradedSpace, w: usize) -> Vec<usize> {
        lie_basis(g, w).iter().map(|l| l.len()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            dims(&GradedSpace::from_pairs(&[("y", 1)]), 3),
            vec![1, 1, 0]
        );
        assert_eq!(dims(&GradedSpace::from_pairs(&[("x", 2)]), 2), vec![1, 0]);
        assert_eq!(
            dims(&GradedSpace::from_pairs(&[("a", 0), ("b", 0)]), 4),
            vec![2, 1, 2, 3]
        );
    }

    #[test]
    fn basis_elements_are_primitive() {
        let g = GradedSpace::from_pairs(&[("a", 0), ("y", 1), ("x", 2)]);
        for level in lie_basis(&g, 4) {
            for z in level {
                assert!(is_primitive(&g, &z));
            }
        }
        // a product of generators is not primitive
        assert!(!is_primitive(&g, &Poly::unit(vec![0, 1])));
    }
}
