use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::expr::{parse_element, parse_poly, parse_scalar};
use crate::culie::{
    to_element, Carrier, CurvedAssoc, CurvedLie, CurvedMorphism, TruncKind, Truncation,
};
use crate::dgcog::{Coalgebra, CoalgebraMap, Tensor2};
use crate::error::{Error, Result};
use crate::exactla::{fmt_q, Vector};
use crate::freealg::{render_poly, FreeAssoc, Poly};
use crate::graded::{BasisElem, Element, GradedSpace};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
struct Basis {
    name: String,
    degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoalgebraFile {
    basis: Vec<Basis>,
    comul: BTreeMap<String, Vec<(Value, String, String)>>,
    counit: BTreeMap<String, Value>,
    #[serde(default)]
    diff: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coaug: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TruncFile {
    kind: String,
    max_weight: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Basis>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    free_generators: Option<Vec<Basis>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    bracket: BTreeMap<String, String>,
    #[serde(default)]
    diff: BTreeMap<String, String>,
    #[serde(default = "zero_expr")]
    curvature: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    truncation: Option<TruncFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssocFile {
    generators: Vec<Basis>,
    #[serde(default)]
    diff: BTreeMap<String, String>,
    #[serde(default = "zero_expr")]
    curvature: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<String>,
}

fn zero_expr() -> String {
    "0".into()
}

fn space(basis: &[Basis]) -> Result<GradedSpace> {
    for b in basis {
        if b.name.is_empty() || b.name.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("bad basis name {:?}", b.name)));
        }
    }
    GradedSpace::new(
        basis
            .iter()
            .map(|b| BasisElem {
                name: b.name.clone(),
                degree: b.degree,
            })
            .collect(),
    )
}

fn basis_of(s: &GradedSpace, weights: Option<&[u32]>) -> Vec<Basis> {
    s.basis()
        .iter()
        .enumerate()
        .map(|(i, b)| Basis {
            name: b.name.clone(),
            degree: b.degree,
            weight: weights.map(|w| w[i]).filter(|w| *w != 1),
        })
        .collect()
}

fn index(s: &GradedSpace, name: &str) -> Result<usize> {
    s.index_of(name)
        .ok_or_else(|| Error::Parse(format!("unknown basis name {name:?}")))
}

/// Values listed per basis name; missing names get zero.
fn per_basis<T>(
    s: &GradedSpace,
    m: &BTreeMap<String, String>,
    zero: T,
    f: impl Fn(&str) -> Result<T>,
) -> Result<Vec<T>>
where
    T: Clone,
{
    let mut out = vec![zero; s.dim()];
    for (k, v) in m {
        out[index(s, k)?] = f(v)?;
    }
    Ok(out)
}

fn nonzero_map<T>(
    s: &GradedSpace,
    vals: &[T],
    is_zero: impl Fn(&T) -> bool,
    show: impl Fn(&T) -> String,
) -> BTreeMap<String, String> {
    vals.iter()
        .enumerate()
        .filter(|(_, v)| !is_zero(v))
        .map(|(i, v)| (s.name(i).to_string(), show(v)))
        .collect()
}

pub fn coalgebra_from_value(v: &Value) -> Result<Coalgebra> {
    let f: CoalgebraFile = serde_json::from_value(v.clone())?;
    let s = space(&f.basis)?;
    let mut comul = vec![Tensor2::zero(); s.dim()];
    for (k, terms) in &f.comul {
        let i = index(&s, k)?;
        for (c, a, b) in terms {
            comul[i].add_term((index(&s, a)?, index(&s, b)?), parse_scalar(c)?);
        }
    }
    let mut counit = Vector::zero();
    for (k, c) in &f.counit {
        counit.add_term(index(&s, k)?, parse_scalar(c)?);
    }
    let diff = per_basis(&s, &f.diff, Element::zero(), |e| parse_element(&s, e))?;
    let coaug = f
        .coaug
        .as_deref()
        .map(|e| parse_element(&s, e))
        .transpose()?;
    Coalgebra::new(s, comul, counit, diff, coaug)
}

pub fn coalgebra_to_value(c: &Coalgebra) -> Value {
    let s = &c.space;
    let comul = (0..c.dim())
        .filter(|i| !c.comul_basis(*i).is_zero())
        .map(|i| {
            let terms = c
                .comul_basis(i)
                .iter()
                .map(|((a, b), x)| {
                    (
                        Value::String(fmt_q(x)),
                        s.name(*a).to_string(),
                        s.name(*b).to_string(),
                    )
                })
                .collect();
            (s.name(i).to_string(), terms)
        })
        .collect();
    let counit = c
        .counit_functional()
        .iter()
        .map(|(i, x)| (s.name(*i).to_string(), Value::String(fmt_q(x))))
        .collect();
    let diffs: Vec<Element> = (0..c.dim()).map(|i| c.diff_basis(i).clone()).collect();
    let f = CoalgebraFile {
        basis: basis_of(s, None),
        comul,
        counit,
        diff: nonzero_map(s, &diffs, |v| v.is_zero(), |v| s.render(v)),
        coaug: c.coaug.as_ref().map(|e| s.render(e)),
    };
    serde_json::to_value(f).expect("serializable")
}

/// `"[a,b]"` with `a`, `b` basis names (which may themselves contain commas).
fn bracket_key(s: &GradedSpace, key: &str) -> Result<(usize, usize)> {
    let inner = key
        .trim()
        .strip_prefix('[')
        .and_then(|k| k.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bracket key {key:?} is not of the form [a,b]")))?;
    for (p, _) in inner.match_indices(',') {
        if let (Some(a), Some(b)) = (
            s.index_of(inner[..p].trim()),
            s.index_of(inner[p + 1..].trim()),
        ) {
            return Ok((a, b));
        }
    }
    Err(Error::Parse(format!(
        "bracket key {key:?} does not name two basis vectors"
    )))
}

/// Reads a curved Lie algebra. Free presentations without an explicit
/// truncation are cut at word length `default_weight`.
pub fn lie_from_value(v: &Value, default_weight: u32) -> Result<CurvedLie> {
    let f: LieFile = serde_json::from_value(v.clone())?;
    match (&f.basis, &f.free_generators) {
        (Some(b), None) => {
            if f.truncation.is_some() {
                return Err(Error::Parse("a finite basis takes no truncation".into()));
            }
            let s = space(b)?;
            let mut bracket = Vec::new();
            for (k, e) in &f.bracket {
                let (i, j) = bracket_key(&s, k)?;
                let mut v = parse_element(&s, e)?;
                // [e_j, e_i] is stored as ±[e_i, e_j]
                if i > j {
                    v = v.scaled(&-crate::graded::sign(s.degree(i) * s.degree(j)));
                }
                bracket.push(((i.min(j), i.max(j)), v));
            }
            let diff = per_basis(&s, &f.diff, Element::zero(), |e| parse_element(&s, e))?;
            let curvature = parse_element(&s, &f.curvature)?;
            CurvedLie::finite(s, &bracket, diff, curvature)
        }
        (None, Some(g)) => {
            if !f.bracket.is_empty() {
                return Err(Error::Parse(
                    "free presentations have no bracket table".into(),
                ));
            }
            let s = space(g)?;
            let weights = g.iter().map(|b| b.weight.unwrap_or(1)).collect();
            let trunc = match &f.truncation {
                None => Truncation {
                    kind: TruncKind::Quotient,
                    max_weight: default_weight,
                    weights,
                },
                Some(t) => Truncation {
                    kind: match t.kind.as_str() {
                        "quotient" => TruncKind::Quotient,
                        "filtration" => TruncKind::Filtration,
                        k => return Err(Error::Parse(format!("unknown truncation kind {k:?}"))),
                    },
                    max_weight: t.max_weight,
                    weights,
                },
            };
            let diff = per_basis(&s, &f.diff, Poly::zero(), |e| parse_poly(&s, e))?;
            let curvature = parse_poly(&s, &f.curvature)?;
            CurvedLie::free(s, diff, curvature, trunc)
        }
        _ => Err(Error::Parse(
            "a curved Lie algebra needs exactly one of \"basis\" and \"free_generators\"".into(),
        )),
    }
}

pub fn lie_to_value(g: &CurvedLie) -> Value {
    let s = &g.gens;
    let show = |p: &Poly| g.render(p);
    let diff = nonzero_map(s, &g.diff.values, |p| p.is_zero(), show);
    let f = match &g.carrier {
        Carrier::Finite { bracket } => LieFile {
            basis: Some(basis_of(s, None)),
            free_generators: None,
            bracket: bracket
                .iter()
                .filter(|((i, j), _)| i <= j)
                .map(|((i, j), p)| {
                    (
                        format!("[{},{}]", s.name(*i as usize), s.name(*j as usize)),
                        s.render(&to_element(p)),
                    )
                })
                .collect(),
            diff,
            curvature: show(&g.curvature),
            truncation: None,
        },
        Carrier::Free(t) => LieFile {
            basis: None,
            free_generators: Some(basis_of(s, Some(&t.weights))),
            bracket: BTreeMap::new(),
            diff,
            curvature: show(&g.curvature),
            truncation: Some(TruncFile {
                kind: match t.kind {
                    TruncKind::Quotient => "quotient".into(),
                    TruncKind::Filtration => "filtration".into(),
                },
                max_weight: t.max_weight,
            }),
        },
    };
    serde_json::to_value(f).expect("serializable")
}

pub fn assoc_from_value(v: &Value) -> Result<CurvedAssoc> {
    let f: AssocFile = serde_json::from_value(v.clone())?;
    let s = space(&f.generators)?;
    let diff = per_basis(&s, &f.diff, Poly::zero(), |e| parse_poly(&s, e))?;
    let curvature = parse_poly(&s, &f.curvature)?;
    let x = f.x.as_deref().map(|n| index(&s, n)).transpose()?;
    Ok(CurvedAssoc {
        alg: FreeAssoc::new(s, diff)?,
        curvature,
        x,
    })
}

pub fn assoc_to_value(a: &CurvedAssoc) -> Value {
    let s = a.gens();
    let f = AssocFile {
        generators: basis_of(s, None),
        diff: nonzero_map(
            s,
            &a.alg.diff.values,
            |p| p.is_zero(),
            |p| render_poly(s, p),
        ),
        curvature: render_poly(s, &a.curvature),
        x: a.x.map(|i| s.name(i).to_string()),
    };
    serde_json::to_value(f).expect("serializable")
}

/// Any object a file may hold.
#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Coalgebra(Coalgebra),
    Lie(CurvedLie),
    Assoc(CurvedAssoc),
    CoalgebraMap(CoalgebraMap),
    Morphism(CurvedMorphism),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Coalgebra(_) => "coalgebra",
            Object::Lie(_) => "curved Lie algebra",
            Object::Assoc(_) => "curved associative algebra",
            Object::CoalgebraMap(_) => "coalgebra map",
            Object::Morphism(_) => "curved morphism",
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            Object::Coalgebra(c) => coalgebra_to_value(c),
            Object::Lie(g) => lie_to_value(g),
            Object::Assoc(a) => assoc_to_value(a),
            Object::CoalgebraMap(f) => coalgebra_map_to_value(f),
            Object::Morphism(m) => morphism_to_value(m),
        }
    }
}

pub fn coalgebra_map_to_value(f: &CoalgebraMap) -> Value {
    let t = &f.target.space;
    let images: BTreeMap<String, String> = (0..f.source.dim())
        .map(|i| (f.source.name(i).to_string(), t.render(&f.images()[i])))
        .collect();
    serde_json::json!({
        "source": coalgebra_to_value(&f.source),
        "target": coalgebra_to_value(&f.target),
        "f": images,
    })
}

pub fn morphism_to_value(m: &CurvedMorphism) -> Value {
    let images: BTreeMap<String, String> = (0..m.source.ngens())
        .map(|i| (m.source.gens.name(i).to_string(), m.target.render(&m.f[i])))
        .collect();
    serde_json::json!({
        "source": lie_to_value(&m.source),
        "target": lie_to_value(&m.target),
        "f": images,
        "a": m.target.render(&m.a),
    })
}

/// Resolves file and manifest references. A reference is a path, a path
/// with `#name` selecting an entry of a manifest, or (inside a manifest) a
/// bare entry name.
pub struct Loader {
    pub default_weight: u32,
}

fn has(v: &Value, k: &str) -> bool {
    v.get(k).is_some()
}

fn is_manifest(v: &Value) -> bool {
    has(v, "objects") || has(v, "morphisms")
}

/// Parameters a manifest may carry.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ManifestParams {
    pub max_weight: Option<u32>,
    pub degrees: Option<String>,
    pub output: Option<String>,
}

struct Scope {
    dir: PathBuf,
    entries: BTreeMap<String, Value>,
}

impl Loader {
    pub fn read(&self, path: &Path) -> Result<Value> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// Manifest parameters of the file behind `reference`, if it is one.
    pub fn params(&self, reference: &str) -> Result<ManifestParams> {
        let path = reference.split_once('#').map_or(reference, |(p, _)| p);
        let v = self.read(Path::new(path))?;
        match v.get("params") {
            Some(p) if is_manifest(&v) => Ok(serde_json::from_value(p.clone())?),
            _ => Ok(ManifestParams::default()),
        }
    }

    pub fn load(&self, reference: &str) -> Result<Object> {
        let (path, name) = match reference.split_once('#') {
            Some((p, n)) => (p, Some(n)),
            None => (reference, None),
        };
        let path = Path::new(path);
        let v = self.read(path)?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        if is_manifest(&v) {
            let mut entries = BTreeMap::new();
            for k in ["objects", "morphisms"] {
                if let Some(Value::Object(m)) = v.get(k) {
                    for (n, x) in m {
                        if entries.insert(n.clone(), x.clone()).is_some() {
                            return Err(Error::Parse(format!(
                                "manifest entry {n:?} defined twice"
                            )));
                        }
                    }
                }
            }
            let scope = Scope { dir, entries };
            let name = match name {
                Some(n) => n.to_string(),
                None if scope.entries.len() == 1 => {
                    scope.entries.keys().next().expect("one").clone()
                }
                None => {
                    return Err(Error::Parse(format!(
                        "{} is a manifest: select an entry with #name",
                        path.display()
                    )))
                }
            };
            let v = scope
                .entries
                .get(&name)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("no entry {name:?} in manifest")))?;
            match &v {
                Value::String(p) => self.load_relative(p, &scope),
                _ => self.object(&v, &scope),
            }
        } else {
            if name.is_some() {
                return Err(Error::Parse(format!(
                    "{} is not a manifest",
                    path.display()
                )));
            }
            self.object(
                &v,
                &Scope {
                    dir,
                    entries: BTreeMap::new(),
                },
            )
        }
    }

    /// Parses an inline value; references inside it resolve against `dir`.
    pub fn from_value(&self, v: &Value, dir: &Path) -> Result<Object> {
        self.object(
            v,
            &Scope {
                dir: dir.to_path_buf(),
                entries: BTreeMap::new(),
            },
        )
    }

    fn resolve(&self, v: &Value, scope: &Scope) -> Result<Object> {
        match v {
            Value::String(r) => match scope.entries.get(r) {
                // an entry that is itself a string names a file, never another entry
                Some(Value::String(p)) => self.load_relative(p, scope),
                Some(x) => self.object(x, scope),
                None => self.load_relative(r, scope),
            },
            _ => self.object(v, scope),
        }
    }

    fn load_relative(&self, r: &str, scope: &Scope) -> Result<Object> {
        let (p, n) = r.split_once('#').map_or((r, None), |(p, n)| (p, Some(n)));
        let full = scope.dir.join(p);
        let full = match n {
            Some(n) => format!("{}#{n}", full.display()),
            None => full.display().to_string(),
        };
        self.load(&full)
    }

    fn object(&self, v: &Value, scope: &Scope) -> Result<Object> {
        if !v.is_object() {
            return Err(Error::Parse("expected a JSON object".into()));
        }
        if has(v, "f") {
            let src = self.resolve(&v["source"], scope)?;
            let tgt = self.resolve(&v["target"], scope)?;
            let f: BTreeMap<String, String> = serde_json::from_value(v["f"].clone())?;
            for k in v.as_object().expect("object").keys() {
                if !["source", "target", "f", "a"].contains(&k.as_str()) {
                    return Err(Error::Parse(format!("unknown morphism field {k:?}")));
                }
            }
            return match (src, tgt) {
                (Object::Coalgebra(s), Object::Coalgebra(t)) => {
                    if has(v, "a") {
                        return Err(Error::Parse("coalgebra maps take no \"a\"".into()));
                    }
                    let images = per_basis(&s.space, &f, Element::zero(), |e| {
                        parse_element(&t.space, e)
                    })?;
                    Ok(Object::CoalgebraMap(CoalgebraMap::new(s, t, images)?))
                }
                (Object::Lie(s), Object::Lie(t)) => {
                    let images = per_basis(&s.gens, &f, Poly::zero(), |e| parse_poly(&t.gens, e))?;
                    let a = match v.get("a") {
                        Some(Value::String(e)) => parse_poly(&t.gens, e)?,
                        Some(_) => return Err(Error::Parse("\"a\" must be an expression".into())),
                        None => Poly::zero(),
                    };
                    Ok(Object::Morphism(CurvedMorphism::new(s, t, images, a)?))
                }
                (s, t) => Err(Error::Parse(format!(
                    "no morphisms from a {} to a {}",
                    s.kind(),
                    t.kind()
                ))),
            };
        }
        if has(v, "comul") {
            return Ok(Object::Coalgebra(coalgebra_from_value(v)?));
        }
        if has(v, "generators") {
            return Ok(Object::Assoc(assoc_from_value(v)?));
        }
        if has(v, "basis") || has(v, "free_generators") {
            return Ok(Object::Lie(lie_from_value(v, self.default_weight)?));
        }
        Err(Error::Parse(
            "cannot tell what kind of object this is".into(),
        ))
    }
}
