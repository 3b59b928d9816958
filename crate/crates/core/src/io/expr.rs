//! Element literals: signed rational combinations of basis names, with
//! parentheses, products (`·`, `*` or juxtaposition) and brackets `[u,v]`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{parse_q, Q};
use crate::freealg::{bracket, gen, mul, Poly};
use crate::graded::{Element, GradedSpace};

struct Parser<'a> {
    gens: &'a GradedSpace,
    names: Vec<(Vec<char>, usize)>,
    src: Vec<char>,
    pos: usize,
}

fn scalar(c: Q) -> Poly {
    Poly::term(vec![], c)
}

impl<'a> Parser<'a> {
    fn new(gens: &'a GradedSpace, s: &str) -> Self {
        let mut names: Vec<(Vec<char>, usize)> = gens
            .basis()
            .iter()
            .enumerate()
            .map(|(i, b)| (b.name.chars().collect(), i))
            .collect();
        // longest match wins, so "y_c" is not read as "y" followed by junk
        names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.1.cmp(&b.1)));
        Parser {
            gens,
            names,
            src: s.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> Error {
        let rest: String = self.src[self.pos.min(self.src.len())..].iter().collect();
        Error::Parse(format!("{what} at {:?}", rest))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn name_here(&self) -> Option<(usize, usize)> {
        self.names
            .iter()
            .find(|(n, _)| self.src[self.pos..].starts_with(n))
            .map(|(n, i)| (n.len(), *i))
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '(' || c == '[' => true,
            Some(_) => self.name_here().is_some(),
            None => false,
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut out = Poly::zero();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            if neg {
                out.sub(&t);
            } else {
                out.add(&t);
            }
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('/') {
                let d = self.factor()?;
                let c = as_scalar(&d).ok_or_else(|| self.err("divisor is not a number"))?;
                if c.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc.scaled(&(Q::one() / c));
            } else if self.eat('*') || self.eat('·') || self.starts_factor() {
                let f = self.factor()?;
                acc = mul(&acc, &f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            None => Err(self.err("unexpected end")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                if !self.eat(',') {
                    return Err(self.err("expected ','"));
                }
                let b = self.expr()?;
                if !self.eat(']') {
                    return Err(self.err("expected ']'"));
                }
                Ok(bracket(self.gens, &a, &b))
            }
            Some(c) => {
                if let Some((len, i)) = self.name_here() {
                    self.pos += len;
                    return Ok(gen(i));
                }
                if c.is_ascii_digit() {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let s: String = self.src[start..self.pos].iter().collect();
                    return Ok(scalar(parse_q(&s).expect("digits")));
                }
                Err(self.err("unknown name"))
            }
        }
    }
}

fn as_scalar(p: &Poly) -> Option<Q> {
    if p.keys().all(|w| w.is_empty()) {
        Some(p.get(&vec![]))
    } else {
        None
    }
}

/// Parses a literal into the tensor algebra on `gens`.
pub fn parse_poly(gens: &GradedSpace, s: &str) -> Result<Poly> {
    let mut p = Parser::new(gens, s);
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a linear combination of basis vectors.
pub fn parse_element(space: &GradedSpace, s: &str) -> Result<Element> {
    let p = parse_poly(space, s)?;
    if p.keys().any(|w| w.len() != 1) {
        return Err(Error::Parse(format!(
            "{s:?} is not a linear combination of basis vectors"
        )));
    }
    Ok(p.map_keys(|w| w[0] as usize))
}

/// A scalar given as `"p/q"`, an integer, or a pair `[p, q]`.
pub fn parse_scalar(v: &serde_json::Value) -> Result<Q> {
    use serde_json::Value;
    let bad = || Error::Parse(format!("bad scalar {v}"));
    match v {
        Value::String(s) => parse_q(s).ok_or_else(bad),
        Value::Number(n) => n
            .as_i64()
            .map(|n| Q::from_integer(n.into()))
            .ok_or_else(bad),
        Value::Array(a) if a.len() == 2 => {
            let n = a[0].as_i64().ok_or_else(bad)?;
            let d = a[1].as_i64().ok_or_else(bad)?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n.into(), d.into()))
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qf};
    use crate::freealg::render_poly;

    #[test]
    fn literals() {
        let s = GradedSpace::from_pairs(&[("g1", 0), ("g2", 0), ("x", 1), ("y_g1", 1)]);
        assert_eq!(
            parse_element(&s, "(g1+g2)/2").unwrap(),
            Element::from_terms([(0, qf(1, 2)), (1, qf(1, 2))])
        );
        assert_eq!(
            parse_element(&s, " - x ").unwrap(),
            Element::from_terms([(2, q(-1))])
        );
        assert_eq!(
            parse_element(&s, "3/2 y_g1").unwrap(),
            Element::from_terms([(3, qf(3, 2))])
        );
        assert_eq!(parse_element(&s, "2*g1 - g1").unwrap(), Element::unit(0));
        assert_eq!(parse_element(&s, "0").unwrap(), Element::zero());
        assert!(parse_element(&s, "z").is_err());
        assert!(parse_element(&s, "x·x").is_err());
        assert!(parse_element(&s, "g1/0").is_err());
        let p = parse_poly(&s, "-1/8 [x,x]").unwrap();
        assert_eq!(p, Poly::term(vec![2, 2], qf(-1, 4)));
        assert_eq!(parse_poly(&s, &render_poly(&s, &p)).unwrap(), p);
        assert_eq!(
            parse_scalar(&serde_json::json!([3, -6])).unwrap(),
            qf(-1, 2)
        );
        assert_eq!(parse_scalar(&serde_json::json!(4)).unwrap(), q(4));
        assert!(parse_scalar(&serde_json::json!(0.5)).is_err());
    }
}
