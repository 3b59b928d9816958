#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use koszulkit::culie::{CurvedAssoc, CurvedLie, CurvedMorphism};
use koszulkit::dgcog::{group_likes, reduce, Coalgebra, CoalgebraMap};
use koszulkit::exactla::{q, qf, Q};
use koszulkit::graded::Element;
use koszulkit::io::{Loader, Object};

pub fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

pub fn load(name: &str) -> Object {
    Loader { default_weight: 6 }
        .load(&fixture(name))
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn coalgebra(name: &str) -> Coalgebra {
    match load(name) {
        Object::Coalgebra(c) => c,
        o => panic!("{name} is a {}", o.kind()),
    }
}

pub fn lie(name: &str) -> CurvedLie {
    match load(name) {
        Object::Lie(g) => g,
        o => panic!("{name} is a {}", o.kind()),
    }
}

pub fn assoc(name: &str) -> CurvedAssoc {
    match load(name) {
        Object::Assoc(a) => a,
        o => panic!("{name} is a {}", o.kind()),
    }
}

pub fn cog_map(name: &str) -> CoalgebraMap {
    match load(name) {
        Object::CoalgebraMap(f) => f,
        o => panic!("{name} is a {}", o.kind()),
    }
}

pub fn morphism(reference: &str) -> CurvedMorphism {
    let o = Loader { default_weight: 6 }
        .load(&fixture(reference))
        .unwrap();
    match o {
        Object::Morphism(m) => m,
        o => panic!("{reference} is a {}", o.kind()),
    }
}

pub fn half_sum() -> Element {
    Element::from_terms([(0, qf(1, 2)), (1, qf(1, 2))])
}

type Block = (
    Vec<(String, i64)>,
    Vec<Vec<(Q, usize, usize)>>,
    Vec<Vec<(usize, Q)>>,
);

fn primitive_comul(n: usize) -> Vec<Vec<(Q, usize, usize)>> {
    let mut v = vec![vec![(q(1), 0, 0)]];
    for i in 1..n {
        v.push(vec![(q(1), i, 0), (q(1), 0, i)]);
    }
    v
}

fn block(rng: &mut ChaCha8Rng) -> Block {
    let names = |ds: &[i64]| -> Vec<(String, i64)> {
        ds.iter()
            .enumerate()
            .map(|(i, d)| (format!("v{i}"), *d))
            .collect()
    };
    match rng.gen_range(0..4) {
        0 => (names(&[0]), primitive_comul(1), vec![vec![]]),
        1 => {
            let d = [0, 0, 1, -1, 2][rng.gen_range(0..5)];
            (names(&[0, d]), primitive_comul(2), vec![vec![], vec![]])
        }
        2 => {
            // divided powers: Δc2 = c2⊗g + c1⊗c1 + g⊗c2
            let mut comul = primitive_comul(2);
            comul.push(vec![(q(1), 2, 0), (q(1), 1, 1), (q(1), 0, 2)]);
            (names(&[0, 0, 0]), comul, vec![vec![]; 3])
        }
        _ => {
            let d = [0, 1, -1][rng.gen_range(0..3)];
            (
                names(&[0, d, d + 1]),
                primitive_comul(3),
                vec![vec![], vec![(2, q(1))], vec![]],
            )
        }
    }
}

fn small(rng: &mut ChaCha8Rng) -> Q {
    q(rng.gen_range(-2..=2))
}

/// A direct sum of small conilpotent blocks, at most five-dimensional, seen
/// through a random degree-preserving change of basis.
pub fn random_coalgebra(seed: u64) -> Coalgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = Vec::new();
    let mut dim = 0;
    loop {
        let (pairs, comul, diff) = block(&mut rng);
        if dim + pairs.len() > 5 {
            if parts.is_empty() {
                continue;
            }
            break;
        }
        dim += pairs.len();
        let pairs_ref: Vec<(&str, i64)> = pairs.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        let comul_ref: Vec<&[(Q, usize, usize)]> = comul.iter().map(Vec::as_slice).collect();
        let diff_ref: Vec<&[(usize, Q)]> = diff.iter().map(Vec::as_slice).collect();
        parts.push(
            Coalgebra::from_triples(&pairs_ref, &comul_ref, &[(0, q(1))], &diff_ref).unwrap(),
        );
        if rng.gen_bool(0.3) {
            break;
        }
    }
    let c = Coalgebra::direct_sum(&parts).unwrap();
    // unitriangular mixing inside each degree keeps the change invertible
    let mut basis = Vec::new();
    for (_, idx) in c
        .space
        .dims_by_degree()
        .keys()
        .map(|d| (*d, c.space.indices_in_degree(*d)))
        .collect::<Vec<_>>()
    {
        let perm = {
            let mut p = idx.clone();
            for i in (1..p.len()).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            p
        };
        for (k, &i) in perm.iter().enumerate() {
            let mut v = Element::unit(i);
            for &j in &perm[k + 1..] {
                v.add_term(j, small(&mut rng));
            }
            basis.push(v);
        }
    }
    let names = (0..basis.len()).map(|i| format!("e{i}")).collect();
    c.restrict(basis, names).unwrap()
}

/// A group-like element, and a degree-0 element of counit 1 that is not
/// group-like when the coalgebra has one.
pub fn coaugmentations(c: &Coalgebra, seed: u64) -> (Element, Option<Element>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let gl = group_likes(c).unwrap();
    let g = gl[rng.gen_range(0..gl.len())].clone();
    let mut fake = None;
    if gl.len() >= 2 {
        let other = gl.iter().find(|h| **h != g).unwrap();
        let lam = qf(rng.gen_range(1..=3), 4);
        let mut e = g.scaled(&lam);
        e.add_scaled(other, &(q(1) - &lam));
        fake = Some(e);
    } else {
        for i in c.space.indices_in_degree(0) {
            let mut v = Element::unit(i);
            v.add_scaled(&g, &-c.counit(&Element::unit(i)));
            if !v.is_zero() {
                let mut e = g.clone();
                e.add_scaled(&v, &q(rng.gen_range(1..=2)));
                fake = Some(e);
                break;
            }
        }
    }
    if let Some(e) = &fake {
        let r = reduce(c, e).unwrap();
        assert!(
            !r.is_true_coaugmentation(),
            "fake coaugmentation turned out group-like"
        );
    }
    (g, fake)
}
