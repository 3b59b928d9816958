mod common;

use proptest::prelude::*;

use koszulkit::dgcog::{decompose, group_likes};
use koszulkit::exactla::{q, Frame, SparseMatrix};
use koszulkit::freealg::{is_primitive, jacobi_defect, lie_basis};
use koszulkit::graded::GradedSpace;
use koszulkit::koszul::harrison;

use common::{coaugmentations, random_coalgebra};

fn witt(n: i64, w: i64) -> i64 {
    let mobius = |mut k: i64| {
        let mut mu = 1;
        let mut p = 2;
        while p * p <= k {
            if k % p == 0 {
                k /= p;
                if k % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if k > 1 {
            -mu
        } else {
            mu
        }
    };
    (1..=w)
        .filter(|d| w % d == 0)
        .map(|d| mobius(d) * n.pow((w / d) as u32))
        .sum::<i64>()
        / w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..5)) {
        let m = SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>());
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn jacobi_on_lie_basis(degs in prop::collection::vec(0i64..=2, 1..=3), picks in prop::collection::vec(0usize..64, 3)) {
        let pairs: Vec<(String, i64)> = degs.iter().enumerate().map(|(i, d)| (format!("u{i}"), *d)).collect();
        let refs: Vec<(&str, i64)> = pairs.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        let gens = GradedSpace::from_pairs(&refs);
        let all: Vec<_> = lie_basis(&gens, 2).into_iter().flatten().collect();
        let [a, b, c] = [&all[picks[0] % all.len()], &all[picks[1] % all.len()], &all[picks[2] % all.len()]];
        prop_assert!(jacobi_defect(&gens, a, b, c).is_zero());
    }

    #[test]
    fn witt_dimensions(n in 0usize..=3, w in 1usize..=5) {
        let pairs: Vec<(String, i64)> = (0..n).map(|i| (format!("a{i}"), 0)).collect();
        let refs: Vec<(&str, i64)> = pairs.iter().map(|(s, d)| (s.as_str(), *d)).collect();
        let gens = GradedSpace::from_pairs(&refs);
        let basis = lie_basis(&gens, w);
        prop_assert_eq!(basis[w - 1].len() as i64, witt(n as i64, w as i64));
        for z in &basis[w - 1] {
            prop_assert!(is_primitive(&gens, z));
        }
    }

    #[test]
    fn components_reassemble(seed in 0u64..10_000) {
        let c = random_coalgebra(seed);
        let comps = decompose(&c).unwrap();
        prop_assert_eq!(comps.len(), group_likes(&c).unwrap().len());
        let vectors: Vec<_> = comps.iter().flat_map(|k| k.inclusion.iter().cloned()).collect();
        prop_assert_eq!(vectors.len(), c.dim());
        prop_assert_eq!(Frame::new(vectors, c.dim()).unwrap().len(), c.dim());
        for k in &comps {
            prop_assert!(k.coalgebra.validate().passed());
            prop_assert_eq!(group_likes(&k.coalgebra).unwrap().len(), 1);
        }
    }

    #[test]
    fn harrison_is_curved(seed in 0u64..10_000) {
        let c = random_coalgebra(seed);
        let (g, fake) = coaugmentations(&c, seed);
        for eps in std::iter::once(g).chain(fake) {
            let h = harrison(&c, &eps, 4).unwrap();
            let cert = h.algebra.check_curved();
            prop_assert!(cert.passed(), "{:?}", cert.witness);
        }
    }
}
