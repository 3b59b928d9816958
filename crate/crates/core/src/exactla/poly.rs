//! Univariate rational polynomials: characteristic polynomials and exact
//! rational roots. Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::vector::Q;

/// Divisor enumeration bound for the rational root search.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

pub fn trim(p: &mut Vec<Q>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Characteristic polynomial `det(t I - A)` by Faddeev-LeVerrier.
pub fn char_poly(a: &[Vec<Q>]) -> Vec<Q> {
    let n = a.len();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Q::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !m[l][j].is_zero() {
                        acc += &a[i][l] * &m[l][j];
                    }
                }
                next[i][j] = acc;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = Q::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i][l].is_zero() && !m[l][i].is_zero() {
                    tr += &a[i][l] * &m[l][i];
                }
            }
        }
        coeffs[n - k] = -tr / Q::from_integer(BigInt::from(k));
    }
    coeffs
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64()?;
    if small > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d != small / d {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Divides `p` by `(t - r)`, assuming `r` is a root.
fn deflate(p: &[Q], r: &Q) -> Vec<Q> {
    let n = p.len() - 1;
    let mut out = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + carry * r;
        out[i] = carry.clone();
    }
    out
}

/// All rational roots with multiplicity. Returns `None` if the coefficients
/// are too large for an exhaustive divisor search.
pub fn rational_roots(p: &[Q]) -> Option<Vec<(Q, usize)>> {
    let mut p: Vec<Q> = p.to_vec();
    trim(&mut p);
    let mut roots: Vec<(Q, usize)> = Vec::new();
    let push = |roots: &mut Vec<(Q, usize)>, r: Q| {
        if let Some(e) = roots.iter_mut().find(|(x, _)| *x == r) {
            e.1 += 1;
        } else {
            roots.push((r, 1));
        }
    };
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        push(&mut roots, Q::zero());
    }
    loop {
        if p.len() <= 1 {
            break;
        }
        // Clear denominators.
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .iter()
            .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let found = if p.len() == 3 {
            let (c, b, a) = (&p[0], &p[1], &p[2]);
            let disc = b * b - Q::from_integer(4.into()) * a * c;
            super::vector::sqrt_q(&disc).map(|s| (-b + s) / (Q::from_integer(2.into()) * a))
        } else if p.len() == 2 {
            Some(-&p[0] / &p[1])
        } else {
            let lead = divisors(ints.last().unwrap())?;
            let cons = divisors(&ints[0])?;
            let mut hit = None;
            'search: for num in &cons {
                for den in &lead {
                    for sign in [1, -1] {
                        let cand = Q::new(num * sign, den.clone());
                        if eval(&p, &cand).is_zero() {
                            hit = Some(cand);
                            break 'search;
                        }
                    }
                }
            }
            hit
        };
        match found {
            Some(r) => {
                p = deflate(&p, &r);
                trim(&mut p);
                push(&mut roots, r);
                while p.len() > 1 && p[0].is_zero() {
                    p.remove(0);
                    push(&mut roots, Q::zero());
                }
            }
            None => break,
        }
    }
    roots.sort();
    Some(roots)
}
