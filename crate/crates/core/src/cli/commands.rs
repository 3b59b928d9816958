use std::collections::BTreeMap;

use serde_json::{json, Value};

use koszulkit::cert::{Certificate, Params};
use koszulkit::culie::{
    coproduct, mc_equations, mc_solve_linear, mediating_morphism, mediating_solutions, CurvedLie,
    CurvedMorphism, MCWitness,
};
use koszulkit::dgcog::{decompose, group_likes, reduce, Coalgebra, CoalgebraMap};
use koszulkit::freealg::{gen, Poly};
use koszulkit::graded::Element;
use koszulkit::homotopy::{
    homology_table, lemma410_check, lie_chain_map, quasi_iso, weq_coalgebra, weq_curvedlie,
    ChainMap, Complex, DegreeWindow, LieComplex, Reliability,
};
use koszulkit::io::{coalgebra_to_value, lie_to_value, parse_element, parse_poly, Loader, Object};
use koszulkit::koszul::{
    adjoint_to_cog, adjoint_to_lie, ce, check_ce_square, convolution, harrison, unit_map, Harrison,
};
use koszulkit::{Error, Result};

use super::{AdjointArgs, AdjointDirection, Cli, Command, McAction, Output, Report};

const DEFAULT_WEIGHT: u32 = 6;

struct Ctx {
    loader: Loader,
    w: u32,
    win: DegreeWindow,
    coaug: Option<String>,
}

fn primary(c: &Command) -> Option<&str> {
    use Command::*;
    Some(match c {
        Validate { file }
        | Gplikes { file }
        | Decompose { file }
        | Reduce { file }
        | Harr { file } => file,
        Ce { file, .. }
        | Twist { file, .. }
        | Homology { file }
        | Qiso { file }
        | WeqCog { file } => file,
        WeqCula { file, .. } | Unit { file } | Lemma410 { file } => file,
        Conv { coalgebra, .. } => coalgebra,
        Compose { outer, .. } => outer,
        Coprod { g, .. } => g,
        Mc {
            action:
                McAction::Verify { file, .. }
                | McAction::SolveLinear { file }
                | McAction::Equations { file },
        } => file,
        Adjoint {
            direction: AdjointDirection::ToCog(a) | AdjointDirection::ToLie(a),
        } => &a.coalgebra,
    })
}

pub fn dispatch(cli: &Cli) -> Result<(Report, Output)> {
    let o = &cli.opts;
    let mp = match primary(&cli.command) {
        Some(f) => Loader {
            default_weight: DEFAULT_WEIGHT,
        }
        .params(f)?,
        None => Default::default(),
    };
    let w = o.max_weight.or(mp.max_weight).unwrap_or(DEFAULT_WEIGHT);
    let win = match (o.degrees, &mp.degrees) {
        (Some(d), _) => d,
        (None, Some(s)) => s.parse()?,
        (None, None) => DegreeWindow::new(-2, 4)?,
    };
    let output = match (o.output, mp.output.as_deref()) {
        (Some(x), _) => x,
        (None, Some("json")) => Output::Json,
        (None, Some("text") | None) => Output::Text,
        (None, Some(x)) => return Err(Error::Parse(format!("unknown output mode {x:?}"))),
    };
    if w == 0 {
        return Err(Error::Invalid("--max-weight must be at least 1".into()));
    }
    let ctx = Ctx {
        loader: Loader { default_weight: w },
        w,
        win,
        coaug: o.coaug.clone(),
    };
    Ok((ctx.run(&cli.command)?, output))
}

fn lines(v: impl IntoIterator<Item = String>) -> String {
    v.into_iter().map(|l| format!("{l}\n")).collect()
}

impl Ctx {
    fn load(&self, r: &str) -> Result<Object> {
        self.loader.load(r)
    }

    fn coalgebra(&self, r: &str) -> Result<Coalgebra> {
        match self.load(r)? {
            Object::Coalgebra(c) => Ok(c),
            o => Err(Error::Parse(format!(
                "{r}: expected a coalgebra, found a {}",
                o.kind()
            ))),
        }
    }

    fn lie(&self, r: &str) -> Result<CurvedLie> {
        match self.load(r)? {
            Object::Lie(g) => Ok(g),
            o => Err(Error::Parse(format!(
                "{r}: expected a curved Lie algebra, found a {}",
                o.kind()
            ))),
        }
    }

    fn morphism(&self, r: &str) -> Result<CurvedMorphism> {
        match self.load(r)? {
            Object::Morphism(m) => Ok(m),
            o => Err(Error::Parse(format!(
                "{r}: expected a curved morphism, found a {}",
                o.kind()
            ))),
        }
    }

    /// `--coaug`, else the file's coaugmentation, else the only group-like.
    fn eps(&self, c: &Coalgebra) -> Result<Element> {
        if let Some(e) = &self.coaug {
            return parse_element(&c.space, e);
        }
        if let Some(e) = &c.coaug {
            return Ok(e.clone());
        }
        let g = group_likes(c)?;
        match g.len() {
            1 => Ok(g[0].clone()),
            0 => Err(Error::Invalid("no group-like element: pass --coaug".into())),
            n => Err(Error::Invalid(format!(
                "{n} group-like elements: choose one with --coaug"
            ))),
        }
    }

    fn mc_list(&self, g: &CurvedLie, given: &[String]) -> Result<Vec<Poly>> {
        if given.is_empty() {
            return mc_solve_linear(g)
                .map(|s| s.into_iter().map(|w| w.element).collect())
                .map_err(|e| Error::Invalid(format!("{e}; list MC elements explicitly")));
        }
        given.iter().map(|e| parse_poly(&g.gens, e)).collect()
    }

    fn run(&self, c: &Command) -> Result<Report> {
        match c {
            Command::Validate { file } => self.validate(file),
            Command::Gplikes { file } => {
                let c = self.coalgebra(file)?;
                let g: Vec<String> = group_likes(&c)?.iter().map(|g| c.render(g)).collect();
                let text = lines(g.iter().cloned());
                Ok(Report::result(
                    "gplikes",
                    &Params::default(),
                    json!(g),
                    text,
                ))
            }
            Command::Decompose { file } => {
                let c = self.coalgebra(file)?;
                let comps = decompose(&c)?;
                let v: Vec<Value> = comps
                    .iter()
                    .map(|k| {
                        json!({
                            "group_like": c.render(&k.group_like),
                            "basis": k.inclusion.iter().map(|x| c.render(x)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let text = lines(comps.iter().map(|k| {
                    let b: Vec<String> = k.inclusion.iter().map(|x| c.render(x)).collect();
                    format!("over {}: {}", c.render(&k.group_like), b.join(", "))
                }));
                Ok(Report::result(
                    "decompose",
                    &Params::default(),
                    json!(v),
                    text,
                ))
            }
            Command::Reduce { file } => self.reduce(file),
            Command::Harr { file } => self.harr(file),
            Command::Ce { file, witnesses } => self.ce(file, witnesses),
            Command::Conv { coalgebra, lie } => {
                let c = self.coalgebra(coalgebra)?;
                let g = self.lie(lie)?;
                let cv = convolution(&c, &self.eps(&c)?, &g)?;
                let mut text = describe_lie(&cv.algebra);
                if cv.flagged {
                    text.push_str("note: g is curved or the coaugmentation is fake; the result need not be a dg Lie algebra\n");
                }
                let v = json!({ "algebra": lie_to_value(&cv.algebra), "flagged": cv.flagged });
                Ok(Report::result("conv", &Params::default(), v, text))
            }
            Command::Mc { action } => self.mc(action),
            Command::Twist { file, element } => {
                let g = self.lie(file)?;
                let x = parse_poly(&g.gens, element)?;
                let t = g.twist(&x)?;
                Ok(Report::result(
                    "twist",
                    &t.params(),
                    lie_to_value(&t),
                    describe_lie(&t),
                ))
            }
            Command::Compose { outer, inner } => match (self.load(outer)?, self.load(inner)?) {
                (Object::Morphism(a), Object::Morphism(b)) => {
                    let m = a.compose(&b)?;
                    Ok(Report::result(
                        "compose",
                        &Params::default(),
                        Object::Morphism(m.clone()).to_value(),
                        describe_morphism(&m),
                    ))
                }
                (Object::CoalgebraMap(a), Object::CoalgebraMap(b)) => {
                    let m = a.compose(&b)?;
                    let text = describe_cog_map(&m);
                    Ok(Report::result(
                        "compose",
                        &Params::default(),
                        Object::CoalgebraMap(m).to_value(),
                        text,
                    ))
                }
                (a, b) => Err(Error::SourceTargetMismatch(format!(
                    "cannot compose a {} with a {}",
                    a.kind(),
                    b.kind()
                ))),
            },
            Command::Coprod { g, h, mediate } => self.coprod(g, h, mediate.as_deref()),
            Command::Homology { file } => self.homology(file),
            Command::Qiso { file } => {
                let f = self.chain_map(file)?;
                Ok(Report::certificate(&quasi_iso(&f, self.win)?, None))
            }
            Command::WeqCog { file } => match self.load(file)? {
                Object::CoalgebraMap(f) => Ok(Report::certificate(
                    &weq_coalgebra(&f, self.win, self.w)?,
                    None,
                )),
                o => Err(Error::Parse(format!(
                    "{file}: expected a coalgebra map, found a {}",
                    o.kind()
                ))),
            },
            Command::WeqCula {
                file,
                source_mc,
                target_mc,
            } => {
                let m = self.morphism(file)?;
                let xs = self.mc_list(&m.source, source_mc)?;
                let ys = self.mc_list(&m.target, target_mc)?;
                Ok(Report::certificate(
                    &weq_curvedlie(&m, &xs, &ys, self.win)?,
                    None,
                ))
            }
            Command::Adjoint { direction } => self.adjoint(direction),
            Command::Unit { file } => {
                let c = self.coalgebra(file)?;
                let u = unit_map(&c, &self.eps(&c)?, self.w, self.w as usize)?;
                let cert = weq_coalgebra(&u.map, self.win, self.w)?;
                let images: BTreeMap<String, String> = (0..c.dim())
                    .map(|i| {
                        (
                            c.name(i).to_string(),
                            u.map.target.render(&u.map.images()[i]),
                        )
                    })
                    .collect();
                Ok(Report::certificate(
                    &cert,
                    Some(("unit_map", json!(images))),
                ))
            }
            Command::Lemma410 { file } => match self.load(file)? {
                Object::Assoc(a) => Ok(Report::certificate(
                    &lemma410_check(&a, self.w as usize, self.win)?,
                    None,
                )),
                o => Err(Error::Parse(format!(
                    "{file}: expected a curved associative algebra, found a {}",
                    o.kind()
                ))),
            },
        }
    }

    fn validate(&self, file: &str) -> Result<Report> {
        let cert = match self.load(file)? {
            Object::Coalgebra(c) => {
                let mut cert = c.validate();
                if let Some(e) = &c.coaug {
                    // a fake coaugmentation only needs counit 1
                    if let Err(err) = reduce(&c, e) {
                        cert.fail("coaugmentation", c.render(e), err.to_string());
                    }
                }
                cert
            }
            Object::Lie(g) => g.check_curved(),
            Object::Assoc(a) => a.check(),
            Object::CoalgebraMap(f) => f.check(),
            Object::Morphism(m) => m.check(),
        };
        Ok(Report::certificate(&cert, None))
    }

    fn reduce(&self, file: &str) -> Result<Report> {
        let c = self.coalgebra(file)?;
        let eps = self.eps(&c)?;
        let r = reduce(&c, &eps)?;
        let cb = &r.cbar;
        let render2 = |t: &koszulkit::dgcog::Tensor2| {
            koszulkit::graded::render_with(t, |(a, b)| format!("{}⊗{}", cb.name(*a), cb.name(*b)))
        };
        let names: Vec<String> = (0..r.dim()).map(|i| cb.name(i).to_string()).collect();
        let basis: Vec<String> = r.basis.iter().map(|b| c.render(b)).collect();
        let v = json!({
            "eps": c.render(&eps),
            "true_coaugmentation": r.is_true_coaugmentation(),
            "cbar": names.iter().zip(&basis).map(|(n, b)| json!({"name": n, "degree": cb.degree(cb.index_of(n).expect("own name")), "vector": b})).collect::<Vec<_>>(),
            "delta_bar": names.iter().zip(&r.delta_bar).map(|(n, t)| (n.clone(), render2(t))).collect::<BTreeMap<_, _>>(),
            "diff_bar": names.iter().zip(&r.diff_bar).map(|(n, t)| (n.clone(), cb.render(t))).collect::<BTreeMap<_, _>>(),
            "delta_k": render2(&r.delta_k),
            "diff_k": cb.render(&r.diff_k),
        });
        let mut text = format!(
            "eps = {} ({})\n",
            c.render(&eps),
            if r.is_true_coaugmentation() {
                "true coaugmentation"
            } else {
                "fake coaugmentation"
            }
        );
        for (i, n) in names.iter().enumerate() {
            text.push_str(&format!(
                "{n} = {}: Δ̄ = {}, d̄ = {}\n",
                basis[i],
                render2(&r.delta_bar[i]),
                cb.render(&r.diff_bar[i])
            ));
        }
        text.push_str(&format!(
            "Δ(eps) defect = {}\nd(eps) defect = {}\n",
            render2(&r.delta_k),
            cb.render(&r.diff_k)
        ));
        Ok(Report::result("reduce", &Params::default(), v, text))
    }

    fn harr(&self, file: &str) -> Result<Report> {
        let c = self.coalgebra(file)?;
        let h = harrison(&c, &self.eps(&c)?, self.w)?;
        let g = &h.algebra;
        let mut v = json!({ "algebra": lie_to_value(g) });
        let mut text = describe_lie(g);
        if let Some(s) = lie_form(g, &g.curvature) {
            text.push_str(&format!("ω = {s}\n"));
            v["curvature_lie"] = json!(s);
        }
        Ok(Report::result("harr", &g.params(), v, text))
    }

    fn ce(&self, file: &str, witnesses: &[String]) -> Result<Report> {
        let g = self.lie(file)?;
        let xs = self.mc_list(&g, witnesses)?;
        let n = self.w as usize;
        let out = ce(&g, &xs, n)?;
        let square = check_ce_square(&g, n)?;
        let mut comps = Vec::new();
        let mut text = String::new();
        for (j, k) in out.components.iter().enumerate() {
            let h = k.homology()?;
            text.push_str(&format!(
                "component {j}: witness {}, dim {}, homology {:?}\n",
                g.render(&k.witness.element),
                k.coalgebra.dim(),
                h
            ));
            comps.push(json!({
                "witness": g.render(&k.witness.element),
                "dim": k.coalgebra.dim(),
                "homology": h.iter().map(|(d, x)| (d.to_string(), *x)).collect::<BTreeMap<_, _>>(),
            }));
        }
        let names: Vec<String> = (0..out.total.dim())
            .map(|i| out.total.name(i).to_string())
            .collect();
        text.push_str(&format!("basis: {}\n", names.join(", ")));
        text.push_str(&format!(
            "D² = 0 on generators: {}\n",
            if square.passed() { "yes" } else { "NO" }
        ));
        let v = json!({
            "coalgebra": coalgebra_to_value(&out.total),
            "components": comps,
            "square_zero": square.passed(),
        });
        let p = Params {
            max_weight: Some(n),
            reliable_weight: Some(n),
            window: None,
        };
        let mut r = Report::result("ce", &p, v, text);
        if !square.passed() {
            r.passed = Some(false);
        }
        Ok(r)
    }

    fn mc(&self, action: &McAction) -> Result<Report> {
        match action {
            McAction::Verify { file, element } => {
                let g = self.lie(file)?;
                let x = parse_poly(&g.gens, element)?;
                let w = MCWitness::new(&g, x)?;
                let mut cert = Certificate::new("mc").with_params(g.params());
                cert.table("residual", g.render(&w.residual));
                if !w.is_mc() {
                    cert.fail(
                        "ω + dx + ½[x,x] = 0",
                        g.render(&w.element),
                        g.render(&w.residual),
                    );
                }
                Ok(Report::certificate(&cert, None))
            }
            McAction::SolveLinear { file } => {
                let g = self.lie(file)?;
                let s: Vec<String> = mc_solve_linear(&g)?
                    .iter()
                    .map(|w| g.render(&w.element))
                    .collect();
                let text = if s.is_empty() {
                    "no MC elements\n".to_string()
                } else {
                    lines(s.iter().cloned())
                };
                Ok(Report::result(
                    "mc solve-linear",
                    &g.params(),
                    json!(s),
                    text,
                ))
            }
            McAction::Equations { file } => {
                let g = self.lie(file)?;
                let e = mc_equations(&g)?;
                let text = format!(
                    "variables: {}\n{}",
                    e.variables.join(", "),
                    lines(e.equations.iter().cloned())
                );
                let v = json!({ "variables": e.variables, "equations": e.equations });
                Ok(Report::result("mc equations", &g.params(), v, text))
            }
        }
    }

    fn coprod(&self, g: &str, h: &str, mediate: Option<&[String]>) -> Result<Report> {
        let (g, h) = (self.lie(g)?, self.lie(h)?);
        let cp = coproduct(&g, &h, self.w)?;
        let mut text = describe_lie(&cp.algebra);
        let mut v =
            json!({ "algebra": lie_to_value(&cp.algebra), "x": cp.algebra.gens.name(cp.x) });
        if let Some([fg, fh]) = mediate {
            let (fg, fh) = (self.morphism(fg)?, self.morphism(fh)?);
            let m = mediating_morphism(&cp, &fg, &fh)?;
            let n = mediating_solutions(&cp, &fg, &fh)?.len();
            text.push_str(&format!(
                "mediating morphism ({n} generator-level solution{}):\n",
                if n == 1 { "" } else { "s" }
            ));
            text.push_str(&describe_morphism(&m));
            v["mediating"] = Object::Morphism(m.clone()).to_value();
            v["solutions"] = json!(n);
            let cert = m.check();
            let mut r = Report::result("coprod", &cp.algebra.params(), v, text);
            r.passed = Some(cert.passed() && n == 1);
            return Ok(r);
        }
        Ok(Report::result("coprod", &cp.algebra.params(), v, text))
    }

    fn homology(&self, file: &str) -> Result<Report> {
        let (c, p) = match self.load(file)? {
            Object::Lie(g) => (LieComplex::new(&g, self.win)?.complex, g.params()),
            Object::Coalgebra(c) => (coalgebra_complex(&c)?, Params::default()),
            o => {
                return Err(Error::Parse(format!(
                    "{file}: no homology for a {}",
                    o.kind()
                )))
            }
        };
        let h = homology_table(&c, self.win)?;
        let rows: Vec<Value> = h
            .iter()
            .map(|(d, x)| json!({"degree": d, "dim": x, "status": if c.reliability.covers(*d) { "exact" } else { "truncation-limited" }}))
            .collect();
        let text = lines(rows.iter().map(|r| {
            format!(
                "H^{} = {} ({})",
                r["degree"],
                r["dim"],
                r["status"].as_str().unwrap_or("")
            )
        }));
        let p = Params {
            window: Some((self.win.lo, self.win.hi)),
            ..p
        };
        Ok(Report::result(
            "homology",
            &p,
            json!({ "homology": rows, "reliability": c.reliability }),
            text,
        ))
    }

    fn chain_map(&self, file: &str) -> Result<ChainMap> {
        match self.load(file)? {
            Object::Morphism(m) => {
                let src = LieComplex::new(&m.source, self.win)?;
                let tgt = LieComplex::new(&m.target, self.win)?;
                lie_chain_map(&m, &src, &tgt)
            }
            Object::CoalgebraMap(f) => Ok(ChainMap {
                source: coalgebra_complex(&f.source)?,
                target: coalgebra_complex(&f.target)?,
                images: f.images().to_vec(),
            }),
            o => Err(Error::Parse(format!(
                "{file}: expected a morphism, found a {}",
                o.kind()
            ))),
        }
    }

    fn adjoint(&self, d: &AdjointDirection) -> Result<Report> {
        let (AdjointDirection::ToCog(a) | AdjointDirection::ToLie(a)) = d;
        let c = self.coalgebra(&a.coalgebra)?;
        let g = self.lie(&a.lie)?;
        let h = harrison(&c, &self.eps(&c)?, self.w)?;
        let xs = self.mc_list(&g, &a.witnesses)?;
        let ce_out = ce(&g, &xs, self.w as usize)?;
        let images = parse_images(a)?;
        match d {
            AdjointDirection::ToCog(_) => {
                let hs = &h.algebra.gens;
                let mut f = vec![Poly::zero(); hs.dim()];
                for (k, e) in &images {
                    let i = hs
                        .index_of(k)
                        .or_else(|| hs.index_of(&format!("y_{k}")))
                        .ok_or_else(|| {
                            Error::Parse(format!(
                                "{k:?} is not a Harrison generator (they are {})",
                                names(hs).join(", ")
                            ))
                        })?;
                    f[i] = parse_poly(&g.gens, e)?;
                }
                let av =
                    a.a.as_deref()
                        .map(|e| parse_poly(&g.gens, e))
                        .transpose()?
                        .unwrap_or_else(Poly::zero);
                let m = CurvedMorphism::new(h.algebra.clone(), g.clone(), f, av)?;
                let check = m.check();
                if !check.passed() {
                    return Ok(Report::certificate(&check, None));
                }
                let phi = adjoint_to_cog(&m, &h, &ce_out)?;
                let back = adjoint_to_lie(&phi, &h, &ce_out)?;
                Ok(self.adjoint_report(
                    "adjoint to-cog",
                    Object::CoalgebraMap(phi.clone()),
                    describe_cog_map(&phi),
                    back == m,
                    &h,
                ))
            }
            AdjointDirection::ToLie(_) => {
                let mut f = vec![Element::zero(); c.dim()];
                for (k, e) in &images {
                    let i = c
                        .space
                        .index_of(k)
                        .ok_or_else(|| Error::Parse(format!("{k:?} is not a basis vector of C")))?;
                    f[i] = parse_element(&ce_out.total.space, e)?;
                }
                let phi = CoalgebraMap::new(c.clone(), ce_out.total.clone(), f)?;
                let check = phi.check();
                if !check.passed() {
                    return Ok(Report::certificate(&check, None));
                }
                let m = adjoint_to_lie(&phi, &h, &ce_out)?;
                let back = adjoint_to_cog(&m, &h, &ce_out)?;
                Ok(self.adjoint_report(
                    "adjoint to-lie",
                    Object::Morphism(m.clone()),
                    describe_morphism(&m),
                    back == phi,
                    &h,
                ))
            }
        }
    }

    fn adjoint_report(
        &self,
        cmd: &str,
        o: Object,
        text: String,
        round_trip: bool,
        h: &Harrison,
    ) -> Report {
        let v = json!({ "adjoint": o.to_value(), "round_trip": round_trip });
        let text = format!(
            "{text}round trip: {}\n",
            if round_trip {
                "identity"
            } else {
                "NOT the identity"
            }
        );
        let mut r = Report::result(cmd, &h.algebra.params(), v, text);
        r.passed = Some(round_trip);
        r
    }
}

fn parse_images(a: &AdjointArgs) -> Result<Vec<(String, String)>> {
    a.images
        .iter()
        .map(|s| {
            s.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.to_string()))
                .ok_or_else(|| Error::Parse(format!("--image expects NAME=EXPR, got {s:?}")))
        })
        .collect()
}

fn names(s: &koszulkit::graded::GradedSpace) -> Vec<String> {
    s.basis().iter().map(|b| b.name.clone()).collect()
}

fn coalgebra_complex(c: &Coalgebra) -> Result<Complex> {
    Complex::new(
        c.space.clone(),
        (0..c.dim()).map(|i| c.diff_basis(i).clone()).collect(),
        Reliability::Exact,
    )
}

/// A free Lie polynomial written in bracket monomials, when it has a short
/// expression in them.
fn lie_form(g: &CurvedLie, p: &Poly) -> Option<String> {
    if g.is_finite() || p.is_zero() {
        return None;
    }
    let m = g.finite_model().ok()?;
    Some(m.algebra.render(&m.to_finite(p)?))
}

fn describe_lie(g: &CurvedLie) -> String {
    let mut s = String::new();
    let gens: Vec<String> = g
        .gens
        .basis()
        .iter()
        .map(|b| format!("{} ({})", b.name, b.degree))
        .collect();
    s.push_str(&format!(
        "{}: {}\n",
        if g.is_finite() { "basis" } else { "generators" },
        gens.join(", ")
    ));
    for i in 0..g.ngens() {
        s.push_str(&format!(
            "d({}) = {}\n",
            g.gens.name(i),
            g.render(&g.diff.values[i])
        ));
    }
    if g.is_finite() {
        for i in 0..g.ngens() {
            for j in i..g.ngens() {
                let b = g.bracket(&gen(i), &gen(j));
                if !b.is_zero() {
                    s.push_str(&format!(
                        "[{},{}] = {}\n",
                        g.gens.name(i),
                        g.gens.name(j),
                        g.render(&b)
                    ));
                }
            }
        }
    }
    s.push_str(&format!("curvature = {}\n", g.render(&g.curvature)));
    s
}

fn describe_morphism(m: &CurvedMorphism) -> String {
    let mut s = String::new();
    for i in 0..m.source.ngens() {
        s.push_str(&format!(
            "f({}) = {}\n",
            m.source.gens.name(i),
            m.target.render(&m.f[i])
        ));
    }
    s.push_str(&format!("a = {}\n", m.target.render(&m.a)));
    s
}

fn describe_cog_map(f: &CoalgebraMap) -> String {
    lines((0..f.source.dim()).map(|i| {
        format!(
            "f({}) = {}",
            f.source.name(i),
            f.target.render(&f.images()[i])
        )
    }))
}
