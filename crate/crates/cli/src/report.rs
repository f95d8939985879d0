use serde_json::Value;

use crate::Response;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn list(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().map(s).collect()).unwrap_or_default()
}

fn vector(v: &Value) -> String {
    format!("[{}]", list(v).join(", "))
}

/// `f0 = (c1)*(g1) + … + (cn)*(gn)`.
fn identity(lhs: &str, cofactors: &[String], gens: &[String]) -> String {
    let terms: Vec<String> = cofactors.iter().zip(gens).map(|(c, g)| format!("({c})*({g})")).collect();
    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    format!("{lhs} = {rhs}")
}

fn certificate(c: &Value) -> String {
    match c["kind"].as_str().unwrap_or("") {
        "rational_failure" => format!("no solution over Q[X] up to degree {}", s(&c["cap"])),
        "modular_failure" => format!("no solution over F_{}[X] up to degree {}", s(&c["p"]), s(&c["cap"])),
        "homogeneous_exact" => "the degree-forced homogeneous system has no solution".into(),
        "radical_criterion" => "a is not in the radical of (b)".into(),
        other => other.to_string(),
    }
}

fn verdict_lines(j: &Value, out: &mut Vec<String>) {
    let status = s(&j["status"]);
    out.push(format!("status: {status}"));
    match status.as_str() {
        "NotMember" => {
            if j["certificate"].is_object() {
                out.push(format!("certificate: {}", certificate(&j["certificate"])));
            }
        }
        "Unknown" => {
            out.push(format!("cap: {}", s(&j["cap"])));
            if j["history"].is_array() {
                out.push(format!("escalation: {}", list(&j["history"]).join(", ")));
            }
            if j["reason"].is_string() {
                out.push(format!("reason: {}", s(&j["reason"])));
            }
        }
        _ => {}
    }
}

/// Human-readable rendering of a response.
pub fn emit_report(resp: &Response) -> String {
    let j = &resp.json;
    let command = s(&j["command"]);
    let mut out = Vec::new();
    if j["ring"].is_string() {
        out.push(format!("{command} over {}", s(&j["ring"])));
    } else {
        out.push(command.clone());
    }
    match command.as_str() {
        "member" | "memberhom" | "radmember" => {
            verdict_lines(j, &mut out);
            if s(&j["status"]) == "Member" {
                let lhs = if command == "radmember" { "1".to_string() } else { s(&j["f0"]) };
                out.push(identity(&lhs, &list(&j["cofactors"]), &list(&j["generators"])));
            }
        }
        "solve" => {
            verdict_lines(j, &mut out);
            if s(&j["status"]) == "Member" {
                let y = list(&j["solution"]);
                out.push(format!("solution: {}", vector(&j["solution"])));
                for (row, b) in j["matrix"].as_array().into_iter().flatten().zip(list(&j["rhs"])) {
                    out.push(identity(&b, &y, &list(row)));
                }
            }
        }
        "radconst" => {
            out.push(format!("status: {}", s(&j["status"])));
            out.push(format!("({}) = ({})", list(&j["generators"]).join(", "), s(&j["ideal_generator"])));
            out.push(format!("test: {} divides a power of {}", s(&j["ideal_generator"]), s(&j["r0"])));
        }
        "bounds" => {
            for key in ["nvars", "degree", "n", "rows", "beta_field", "kollar", "delta_field", "m'", "n'", "gamma", "beta_m", "gamma_m"] {
                if !j[key].is_null() {
                    out.push(format!("{key}: {}", s(&j[key])));
                }
            }
        }
        "paramsyz" => {
            out.push(format!("beta: {}", s(&j["beta"])));
            out.push(format!(
                "branches: {}, generators: {}, terms: {}",
                s(&j["sizes"]["branches"]),
                s(&j["sizes"]["generators"]),
                s(&j["sizes"]["terms"])
            ));
            if let Some(t) = &resp.text {
                out.push(t.trim_end().to_string());
            }
        }
        "evalparam" => {
            out.push(format!("at: {}", vector(&j["at"])));
            out.push(format!("branch: {}", s(&j["branch"])));
            for (k, g) in j["generators"].as_array().into_iter().flatten().enumerate() {
                out.push(format!("  y{}: {}", k + 1, vector(g)));
            }
            for key in ["coverage", "soundness", "completeness"] {
                out.push(format!("{key}: {}", s(&j[key])));
            }
        }
        _ => {
            if s(&j["status"]) == "Unknown" {
                verdict_lines(j, &mut out);
            } else {
                out.push(format!("generators (cap {}, {}):", s(&j["cap"]), s(&j["completeness"])));
                let gens = j["generators"].as_array().cloned().unwrap_or_default();
                if gens.is_empty() {
                    out.push("  (none)".into());
                }
                for g in &gens {
                    out.push(format!("  {}", vector(g)));
                }
            }
        }
    }
    out.join("\n") + "\n"
}
