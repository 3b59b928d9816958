use std::collections::BTreeMap;

use serde::Serialize;

use super::complex::{DegreeWindow, Reliability};
use crate::cert::{Certificate, Params};
use crate::culie::{assoc_coproduct_zero, CurvedAssoc};
use crate::error::{Error, Result};
use crate::exactla::{homology_dim, SparseMatrix};
use crate::freealg::{gen, word_degree, words_of_len, Poly, Word};

#[derive(Serialize)]
struct Cell {
    length: usize,
    degree: i64,
    dim: usize,
}

#[derive(Serialize)]
struct Row {
    degree: i64,
    dim: usize,
    status: &'static str,
}

/// `s(x·b) = b`, zero on words not starting with `x`.
fn contract(x: u32, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in p.iter() {
        if w.first() == Some(&x) {
            out.add_term(w[1..].to_vec(), c.clone());
        }
    }
    out
}

fn all_words(n: usize, w: usize) -> Vec<Word> {
    (0..=w).flat_map(|l| words_of_len(n, l)).collect()
}

/// Matrix of `d` from the words of `src` into those of `tgt`.
fn block(a: &CurvedAssoc, src: &[&Word], tgt: &[&Word]) -> SparseMatrix {
    let mut m = SparseMatrix::zero(tgt.len(), src.len());
    for (c, u) in src.iter().enumerate() {
        for (v, x) in a.d(&Poly::term((*u).clone(), crate::exactla::q(1))).iter() {
            if let Some(r) = tgt.iter().position(|w| *w == v) {
                m.set(r, c, x.clone());
            }
        }
    }
    m
}

/// Twists `A ∐ 0` by `x` and checks the contraction `d^x s + s d^x = Id - p`
/// on every word of length at most `w`, then tabulates homology.
///
/// When `d^x` raises word length by exactly one, homology splits by length
/// and every length below `w` is computed exactly; otherwise the length-`w`
/// quotient is used and only low degrees are trusted.
pub fn lemma410_check(a: &CurvedAssoc, w: usize, win: DegreeWindow) -> Result<Certificate> {
    let base = match a.x {
        Some(_) => a.clone(),
        None => assoc_coproduct_zero(a)?,
    };
    let x = base.x.expect("adjoined") as u32;
    let t = base.twist(&gen(x as usize))?;
    if !t.curvature.is_zero() {
        return Err(Error::NotAComplex(format!(
            "twisted curvature {}",
            t.render(&t.curvature)
        )));
    }
    let gens = t.gens().clone();
    let n = gens.dim();
    let mut cert = Certificate::new("lemma410").with_params(Params {
        max_weight: Some(w),
        reliable_weight: Some(w.saturating_sub(1)),
        window: Some((win.lo, win.hi)),
    });
    let words = all_words(n, w);
    for u in &words {
        let up = Poly::term(u.clone(), crate::exactla::q(1));
        let mut lhs = t.d(&contract(x, &up));
        lhs.add(&contract(x, &t.d(&up)));
        let mut rhs = up.clone();
        if u.is_empty() {
            rhs = Poly::zero();
        }
        if lhs != rhs {
            return Err(Error::HomotopyIdentityFails(format!(
                "{}: d s + s d = {}",
                t.render(&up),
                t.render(&lhs)
            )));
        }
    }
    cert.table(
        "identity",
        serde_json::json!({ "words_checked": words.len(), "max_length": w }),
    );

    let homogeneous = (0..n).all(|i| t.alg.diff.values[i].keys().all(|v| v.len() == 2));
    let m = (0..n).map(|i| gens.degree(i)).min().unwrap_or(1);
    let by_degree = |l: usize| -> BTreeMap<i64, Vec<&Word>> {
        let mut out: BTreeMap<i64, Vec<&Word>> = BTreeMap::new();
        for u in words.iter().filter(|u| u.len() == l) {
            out.entry(word_degree(&gens, u)).or_default().push(u);
        }
        out
    };
    let mut totals: BTreeMap<i64, usize> = win.degrees().map(|d| (d, 0)).collect();
    let reliability;
    if homogeneous {
        let mut cells = Vec::new();
        let levels: Vec<_> = (0..=w).map(by_degree).collect();
        for l in 0..w {
            for d in win.degrees() {
                let here = levels[l].get(&d).cloned().unwrap_or_default();
                if here.is_empty() {
                    continue;
                }
                let below = if l == 0 {
                    vec![]
                } else {
                    levels[l - 1].get(&(d - 1)).cloned().unwrap_or_default()
                };
                let above = levels[l + 1].get(&(d + 1)).cloned().unwrap_or_default();
                let dim = homology_dim(&block(&t, &below, &here), &block(&t, &here, &above))?;
                *totals.get_mut(&d).expect("in window") += dim;
                cells.push(Cell {
                    length: l,
                    degree: d,
                    dim,
                });
            }
        }
        cert.table("homology_by_length", &cells);
        // a degree-d word has length at most d/m
        reliability = if m >= 1 {
            Reliability::UpTo(w as i64 * m - 1)
        } else {
            Reliability::Nowhere
        };
    } else {
        let all: BTreeMap<i64, Vec<&Word>> = {
            let mut out: BTreeMap<i64, Vec<&Word>> = BTreeMap::new();
            for u in &words {
                out.entry(word_degree(&gens, u)).or_default().push(u);
            }
            out
        };
        for d in win.degrees() {
            let get = |k: i64| all.get(&k).cloned().unwrap_or_default();
            let dim = homology_dim(
                &block(&t, &get(d - 1), &get(d)),
                &block(&t, &get(d), &get(d + 1)),
            )?;
            totals.insert(d, dim);
        }
        reliability = if m >= 1 {
            Reliability::UpTo((w as i64 + 1) * m - 2)
        } else {
            Reliability::Nowhere
        };
    }
    let rows: Vec<Row> = totals
        .iter()
        .map(|(&degree, &dim)| Row {
            degree,
            dim,
            status: if reliability.covers(degree) {
                "exact"
            } else {
                "truncation-limited"
            },
        })
        .collect();
    for r in &rows {
        let expected = usize::from(r.degree == 0);
        if r.status == "exact" && r.dim != expected {
            cert.fail(
                "homology is k in degree 0",
                r.degree.to_string(),
                format!("dimension {}", r.dim),
            );
        }
    }
    cert.table("homology", &rows);
    cert.table("reliability", reliability);
    Ok(cert)
}
