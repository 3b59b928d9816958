use super::echelon::Echelon;
use super::vector::Vector;
use crate::error::{Error, Result};

/// A linearly independent family in `Q^n` together with coordinate
/// functionals: `coords(x)` returns the coefficients of `x` along the family
/// after completing it to a basis with standard vectors.
#[derive(Clone, Debug)]
pub struct Frame {
    vectors: Vec<Vector<usize>>,
    // Coordinates of each standard basis vector e_j along the family.
    dual: Vec<Vector<usize>>,
    span: Echelon<usize>,
}

impl Frame {
    pub fn new(vectors: Vec<Vector<usize>>, ambient: usize) -> Result<Frame> {
        let mut full = Echelon::new();
        let mut span = Echelon::untracked();
        for v in &vectors {
            if !full.insert(v) {
                return Err(Error::Invalid(
                    "frame vectors are linearly dependent".into(),
                ));
            }
            span.insert(v);
        }
        for j in 0..ambient {
            full.insert(&Vector::unit(j));
        }
        let r = vectors.len();
        let dual = (0..ambient)
            .map(|j| {
                let mut c = full
                    .express(&Vector::unit(j))
                    .expect("completed basis spans");
                c.retain(|i| *i < r);
                c
            })
            .collect();
        Ok(Frame {
            vectors,
            dual,
            span,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector<usize>] {
        &self.vectors
    }

    pub fn contains(&self, x: &Vector<usize>) -> bool {
        self.span.contains(x)
    }

    pub fn coords(&self, x: &Vector<usize>) -> Vector<usize> {
        x.map_linear(|j| self.dual[*j].clone())
    }

    /// Coordinates, or `None` when `x` is outside the span.
    pub fn coords_in(&self, x: &Vector<usize>) -> Option<Vector<usize>> {
        self.contains(x).then(|| self.coords(x))
    }

    pub fn lift(&self, c: &Vector<usize>) -> Vector<usize> {
        c.map_linear(|i| self.vectors[*i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    #[test]
    fn coords_round_trip() {
        let a = Vector::from_terms([(0, q(1)), (1, q(1))]);
        let b = Vector::from_terms([(0, q(1)), (1, q(-1))]);
        let f = Frame::new(vec![a.clone(), b.clone()], 3).unwrap();
        let x = a.scaled(&q(3)).plus(&b.scaled(&q(-2)));
        assert_eq!(
            f.coords_in(&x).unwrap(),
            Vector::from_terms([(0, q(3)), (1, q(-2))])
        );
        assert!(f.coords_in(&Vector::unit(2)).is_none());
        assert!(Frame::new(vec![a.clone(), a], 2).is_err());
    }
}
