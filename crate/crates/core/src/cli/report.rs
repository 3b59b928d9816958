use serde_json::{json, Value};

use koszulkit::cert::{Certificate, Params};

/// What a subcommand hands back: a JSON document, a text rendering, and a
/// verdict when the command is a check.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub passed: Option<bool>,
}

fn params_json(p: &Params) -> Value {
    json!({
        "max_weight": p.max_weight,
        "reliable_weight": p.reliable_weight,
        "window": p.window,
    })
}

pub fn params_text(p: &Params) -> String {
    let mut s = String::new();
    if p.max_weight.is_some() || p.reliable_weight.is_some() {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |x| x.to_string());
        s.push_str(&format!(
            "truncation: max_weight = {}, reliable_weight = {}\n",
            show(p.max_weight),
            show(p.reliable_weight)
        ));
    }
    if let Some((lo, hi)) = p.window {
        s.push_str(&format!("degrees: {lo}..{hi}\n"));
    }
    s
}

impl Report {
    /// A computed object or table.
    pub fn result(command: &str, params: &Params, result: Value, text: String) -> Report {
        let json = json!({ "command": command, "params": params_json(params), "result": result });
        Report {
            json,
            text: format!("{}{}", params_text(params), text),
            passed: None,
        }
    }

    pub fn certificate(cert: &Certificate, extra: Option<(&str, Value)>) -> Report {
        let mut json = serde_json::to_value(cert).expect("certificate serializes");
        let mut text = format!(
            "{} {}\n",
            if cert.passed() { "PASS" } else { "FAIL" },
            cert.check
        );
        text.push_str(&params_text(&cert.params));
        if let Some(w) = &cert.witness {
            text.push_str(&format!(
                "failed: {} at {} ({})\n",
                w["axiom"].as_str().unwrap_or("?"),
                w["at"],
                w["detail"]
            ));
        }
        for (k, v) in &cert.tables {
            text.push_str(&format!("{k}:\n{}\n", table_text(v)));
        }
        if let Some((k, v)) = extra {
            text.push_str(&format!("{k}:\n{}\n", table_text(&v)));
            json[k] = v;
        }
        Report {
            json,
            text,
            passed: Some(cert.passed()),
        }
    }
}

/// One line per row for arrays of flat records, compact JSON otherwise.
fn table_text(v: &Value) -> String {
    match v {
        Value::Array(rows) if rows.iter().all(Value::is_object) => rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r
                    .as_object()
                    .expect("object")
                    .iter()
                    .map(|(k, x)| match x {
                        Value::String(s) => format!("{k}={s}"),
                        _ => format!("{k}={x}"),
                    })
                    .collect();
                format!("  {}", cells.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => format!("  {v}"),
    }
}
