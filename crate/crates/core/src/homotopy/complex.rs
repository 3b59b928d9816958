use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cert::{Certificate, Params};
use crate::error::{Error, Result};
use crate::exactla::{homology_dim, SparseMatrix};
use crate::graded::{Element, GradedSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Invalid(format!("empty degree window {lo}..{hi}")));
        }
        Ok(DegreeWindow { lo, hi })
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for DegreeWindow {
    type Err = Error;

    /// `LO..HI`, both ends inclusive.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("expected LO..HI, got {s:?}")))?;
        let p = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad degree {t:?}")))
        };
        DegreeWindow::new(p(a)?, p(b)?)
    }
}

impl fmt::Display for DegreeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Where homology of a (possibly truncated) complex agrees with the
/// untruncated object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reliability {
    Exact,
    UpTo(i64),
    Nowhere,
}

impl Reliability {
    pub fn covers(&self, d: i64) -> bool {
        match self {
            Reliability::Exact => true,
            Reliability::UpTo(n) => d <= *n,
            Reliability::Nowhere => false,
        }
    }

    pub fn meet(self, other: Reliability) -> Reliability {
        use Reliability::*;
        match (self, other) {
            (Nowhere, _) | (_, Nowhere) => Nowhere,
            (Exact, r) | (r, Exact) => r,
            (UpTo(a), UpTo(b)) => UpTo(a.min(b)),
        }
    }
}

/// Cochain complex with a degree +1 differential given on basis vectors.
#[derive(Clone, Debug)]
pub struct Complex {
    pub space: GradedSpace,
    pub diff: Vec<Element>,
    pub reliability: Reliability,
}

impl Complex {
    pub fn new(
        space: GradedSpace,
        diff: Vec<Element>,
        reliability: Reliability,
    ) -> Result<Complex> {
        if diff.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} differentials for {} basis vectors",
                diff.len(),
                space.dim()
            )));
        }
        for (i, v) in diff.iter().enumerate() {
            for (j, _) in v.iter() {
                if *j >= space.dim() || space.degree(*j) != space.degree(i) + 1 {
                    return Err(Error::NotAComplex(format!(
                        "d({}) is not of degree +1",
                        space.name(i)
                    )));
                }
            }
        }
        Ok(Complex {
            space,
            diff,
            reliability,
        })
    }

    /// Matrix of `d: C^n → C^{n+1}` in the per-degree bases.
    pub fn block(&self, n: i64) -> SparseMatrix {
        let src = self.space.indices_in_degree(n);
        let tgt = self.space.indices_in_degree(n + 1);
        let mut m = SparseMatrix::zero(tgt.len(), src.len());
        for (c, i) in src.iter().enumerate() {
            for (j, x) in self.diff[*i].iter() {
                let r = tgt
                    .binary_search(j)
                    .expect("degree checked on construction");
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn check_square(&self, win: DegreeWindow) -> Result<()> {
        for n in win.degrees() {
            if !self.block(n).mul(&self.block(n - 1))?.is_zero() {
                return Err(Error::NotAComplex(format!(
                    "d² ≠ 0 out of degree {}",
                    n - 1
                )));
            }
        }
        Ok(())
    }
}

/// Betti numbers on the window; `d² = 0` is checked first.
pub fn homology_table(c: &Complex, win: DegreeWindow) -> Result<BTreeMap<i64, usize>> {
    c.check_square(win)?;
    win.degrees()
        .map(|n| Ok((n, homology_dim(&c.block(n - 1), &c.block(n))?)))
        .collect()
}

/// Degree-0 map of complexes given on basis vectors.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: Complex,
    pub target: Complex,
    pub images: Vec<Element>,
}

impl ChainMap {
    pub fn block(&self, n: i64) -> SparseMatrix {
        let src = self.source.space.indices_in_degree(n);
        let tgt = self.target.space.indices_in_degree(n);
        let mut m = SparseMatrix::zero(tgt.len(), src.len());
        for (c, i) in src.iter().enumerate() {
            for (j, x) in self.images[*i].iter() {
                let r = tgt.binary_search(j).expect("degree-0 map");
                m.set(r, c, x.clone());
            }
        }
        m
    }
}

#[derive(Clone, Debug, Serialize)]
struct Row {
    degree: i64,
    source: usize,
    target: usize,
    rank: usize,
    status: &'static str,
}

/// `H^n(f)` is an isomorphism for every `n` of the window where both sides
/// are reliable; other degrees are reported as truncation-limited.
pub fn quasi_iso(f: &ChainMap, win: DegreeWindow) -> Result<Certificate> {
    let (a, b) = (&f.source, &f.target);
    for n in win.lo - 1..=win.hi {
        let lhs = f.block(n + 1).mul(&a.block(n))?;
        let rhs = b.block(n).mul(&f.block(n))?;
        if lhs != rhs {
            return Err(Error::NotChainMap(format!("f d ≠ d f in degree {n}")));
        }
    }
    let ha = homology_table(a, win)?;
    let hb = homology_table(b, win)?;
    let reliable = a.reliability.meet(b.reliability);
    let mut cert = Certificate::new("quasi_iso").with_params(Params {
        window: Some((win.lo, win.hi)),
        ..Params::default()
    });
    let mut rows = Vec::new();
    for n in win.degrees() {
        // rank of H^n(f) = rank [f Z_A | B_B] - rank B_B
        let cycles = a.block(n).kernel_basis();
        let fz: Vec<_> = cycles.iter().map(|z| f.block(n).apply(z)).collect();
        let bound = b.block(n - 1);
        let nb = bound.cols();
        let mut cols: Vec<_> = (0..nb).map(|j| bound.column(j)).collect();
        cols.extend(fz);
        let rows_n = b.space.indices_in_degree(n).len();
        let rank = SparseMatrix::from_columns(rows_n, &cols).rank() - bound.rank();
        let (sa, tb) = (ha[&n], hb[&n]);
        let iso = rank == sa && rank == tb;
        let status = if !reliable.covers(n) {
            "truncation-limited"
        } else if iso {
            "iso"
        } else {
            "not iso"
        };
        if status == "not iso" {
            cert.fail(
                "H(f) is an isomorphism",
                n.to_string(),
                format!("H(source) = {sa}, H(target) = {tb}, rank = {rank}"),
            );
        }
        rows.push(Row {
            degree: n,
            source: sa,
            target: tb,
            rank,
            status,
        });
    }
    cert.table("homology", rows);
    cert.table("reliability", reliable);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(pairs: &[(&str, i64)], diff: Vec<Element>) -> Complex {
        Complex::new(GradedSpace::from_pairs(pairs), diff, Reliability::Exact).unwrap()
    }

    #[test]
    fn tables() {
        let c = complex(
            &[("a", 0), ("b", 1), ("c", 1), ("e", 2)],
            vec![Element::zero(); 4],
        );
        let h: Vec<usize> = homology_table(&c, DegreeWindow::new(0, 2).unwrap())
            .unwrap()
            .into_values()
            .collect();
        assert_eq!(h, vec![1, 2, 1]);
        let iso = complex(
            &[("a", 0), ("b", 1)],
            vec![Element::unit(1), Element::zero()],
        );
        let h: Vec<usize> = homology_table(&iso, DegreeWindow::new(0, 1).unwrap())
            .unwrap()
            .into_values()
            .collect();
        assert_eq!(h, vec![0, 0]);
        let bad = complex(
            &[("a", 0), ("b", 1), ("c", 2)],
            vec![Element::unit(1), Element::unit(2), Element::zero()],
        );
        assert!(matches!(
            homology_table(&bad, DegreeWindow::new(0, 2).unwrap()),
            Err(Error::NotAComplex(_))
        ));
    }

    #[test]
    fn quasi_isos() {
        let win = DegreeWindow::new(-1, 2).unwrap();
        let k = complex(&[("1", 0)], vec![Element::zero()]);
        let big = complex(
            &[("1", 0), ("a", 0), ("b", 1)],
            vec![Element::zero(), Element::unit(2), Element::zero()],
        );
        let id = ChainMap {
            source: k.clone(),
            target: k.clone(),
            images: vec![Element::unit(0)],
        };
        assert!(quasi_iso(&id, win).unwrap().passed());
        let inc = ChainMap {
            source: k.clone(),
            target: big.clone(),
            images: vec![Element::unit(0)],
        };
        assert!(quasi_iso(&inc, win).unwrap().passed());
        let zero = ChainMap {
            source: k.clone(),
            target: k.clone(),
            images: vec![Element::zero()],
        };
        let cert = quasi_iso(&zero, win).unwrap();
        assert!(!cert.passed());
        assert_eq!(cert.witness.unwrap()["at"], "0");
        let broken = ChainMap {
            source: big.clone(),
            target: big,
            images: vec![Element::zero(), Element::unit(1), Element::zero()],
        };
        assert!(matches!(
            quasi_iso(&broken, win),
            Err(Error::NotChainMap(_))
        ));
        assert_eq!(
            "-2..3".parse::<DegreeWindow>().unwrap(),
            DegreeWindow { lo: -2, hi: 3 }
        );
        assert!("3..1".parse::<DegreeWindow>().is_err());
    }
}
