use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a scalar as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Exact square root of a rational, when it exists.
pub fn sqrt_q(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// Sparse linear combination of keys with rational coefficients; zero
/// coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<K: Ord>(BTreeMap<K, Q>);

impl<K: Ord> Default for Vector<K> {
    fn default() -> Self {
        Vector(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Vector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: K, c: Q) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Q)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in it {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: &K) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, k: &K) -> Option<&Q> {
        self.0.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    pub fn first(&self) -> Option<(&K, &Q)> {
        self.0.iter().next()
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Vector<K>, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&mut self, other: &Vector<K>) {
        self.add_scaled(other, &Q::one());
    }

    pub fn sub(&mut self, other: &Vector<K>) {
        self.add_scaled(other, &-Q::one());
    }

    pub fn scaled(&self, c: &Q) -> Vector<K> {
        if c.is_zero() {
            return Self::zero();
        }
        Vector(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn neg(&self) -> Vector<K> {
        self.scaled(&-Q::one())
    }

    pub fn plus(&self, other: &Vector<K>) -> Vector<K> {
        let mut v = self.clone();
        v.add(other);
        v
    }

    pub fn minus(&self, other: &Vector<K>) -> Vector<K> {
        let mut v = self.clone();
        v.sub(other);
        v
    }

    pub fn retain<F: FnMut(&K) -> bool>(&mut self, mut f: F) {
        self.0.retain(|k, _| f(k));
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L: Ord + Clone, F: FnMut(&K) -> Vector<L>>(&self, mut f: F) -> Vector<L> {
        let mut out = Vector::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> Vector<L> {
        Vector::from_terms(self.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn into_inner(self) -> BTreeMap<K, Q> {
        self.0
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", fmt_q(c), k)?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Vector<K> {
    fn from_iter<T: IntoIterator<Item = (K, Q)>>(iter: T) -> Self {
        Vector::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut v = Vector::unit(3usize);
        v.add_term(3, -q(1));
        assert!(v.is_zero());
        assert_eq!(v, Vector::zero());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-6/4").unwrap(), qf(-3, 2));
        assert_eq!(fmt_q(&qf(-3, 2)), "-3/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert!(parse_q("1/0").is_none());
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(sqrt_q(&qf(1, 4)), Some(qf(1, 2)));
        assert_eq!(sqrt_q(&qf(1, 2)), None);
        assert_eq!(sqrt_q(&q(-1)), None);
    }
}
