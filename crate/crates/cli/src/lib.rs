//! Command-line front end for `bezsyz`: requests, dispatch, JSON and text reports.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use bezsyz::bounds::{beta_field, beta_gamma_matrix, delta_field, gamma, kollar, m_prime, n_prime, CapPolicy};
use bezsyz::domain::{Domain, DomainDescriptor, Integers};
use bezsyz::poly::{parse_poly, MultiPoly};
use bezsyz::qf::{
    build_param_kernel_matrix, build_param_syzygies, family_to_json, family_to_text,
    verify_family, ParamFamily, ParamMatrix,
};
use bezsyz::syzygy::{
    colon, intersect, member, member_homogeneous, rad_member_constants, radical_member_field, solve_poly,
    syzygies_matrix, GeneratedModule, MembershipVerdict, NonMembership, PolyMatrix, SyzygyBasis, Verdict,
};
use bezsyz::{with_domain, Error};

mod report;

pub use report::emit_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Syz,
    Syzmat,
    Solve,
    Member,
    Memberhom,
    Radmember,
    Radconst,
    Intersect,
    Colon,
    Paramsyz,
    Evalparam,
    Bounds,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Syz,
        Command::Syzmat,
        Command::Solve,
        Command::Member,
        Command::Memberhom,
        Command::Radmember,
        Command::Radconst,
        Command::Intersect,
        Command::Colon,
        Command::Paramsyz,
        Command::Evalparam,
        Command::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Syz => "syz",
            Command::Syzmat => "syzmat",
            Command::Solve => "solve",
            Command::Member => "member",
            Command::Memberhom => "memberhom",
            Command::Radmember => "radmember",
            Command::Radconst => "radconst",
            Command::Intersect => "intersect",
            Command::Colon => "colon",
            Command::Paramsyz => "paramsyz",
            Command::Evalparam => "evalparam",
            Command::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown command {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Optional settings file: cap ceiling, fixed cap and prime list.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub cap: Option<usize>,
    pub max_cap: Option<usize>,
    pub primes: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub cap: Option<usize>,
    pub max_cap: Option<usize>,
    pub primes: Option<Vec<u64>>,
    pub format: Format,
    /// Degree cap for parametric families.
    pub beta: Option<usize>,
    /// Parameter values for `evalparam`.
    pub at: Vec<String>,
    /// `bounds`: number of variables, degree, columns, rows and target degree.
    pub nvars: Option<u32>,
    pub degree: Option<u64>,
    pub n: Option<u64>,
    pub rows: Option<u32>,
    pub target: Option<u64>,
}

impl Options {
    /// Flags over the config file over the defaults.
    pub fn policy(&self, config: &Config) -> Result<CapPolicy, Error> {
        let mut p = CapPolicy::default();
        p.cap = self.cap.or(config.cap);
        if let Some(m) = self.max_cap.or(config.max_cap) {
            p.max_cap = m;
        }
        if let Some(pr) = self.primes.clone().or_else(|| config.primes.clone()) {
            p.primes = pr;
        }
        if p.cap == Some(0) || p.max_cap == 0 {
            return Err(Error::Precondition("caps must be positive".into()));
        }
        if let Some(&q) = p.primes.iter().find(|&&q| !bezsyz::domain::is_small_prime(q)) {
            return Err(Error::InvalidDomain(format!("{q} is not a prime below 2^31")));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    pub domain: DomainDescriptor,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub inputs: Vec<String>,
    pub options: Options,
    pub config: Config,
}

impl Request {
    pub fn new(command: Command, domain: DomainDescriptor, vars: &[&str], inputs: &[&str]) -> Self {
        Request {
            command,
            domain,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            params: Vec::new(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            options: Options::default(),
            config: Config::default(),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let mut seen = std::collections::BTreeSet::new();
        for name in self.vars.iter().chain(&self.params) {
            if !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Precondition(format!("invalid name {name:?}")));
            }
            if !seen.insert(name) {
                return Err(Error::Precondition(format!("name {name:?} declared twice")));
            }
        }
        Ok(())
    }
}

/// Result of a request: the JSON document, the process exit code, and
/// pre-rendered text for parts that do not read back from JSON easily.
#[derive(Clone, Debug)]
pub struct Response {
    pub json: Value,
    pub exit_code: i32,
    pub text: Option<String>,
}

/// `{"error": {...}}` for the error stream.
pub fn error_json(e: &Error) -> Value {
    let (kind, extra) = match e {
        Error::Parse { pos, .. } => ("parse", json!({ "position": pos.to_string() })),
        Error::UndeclaredVariable { name, pos } => {
            ("undeclared_variable", json!({ "name": name, "position": pos.to_string() }))
        }
        Error::InvalidDomain(_) => ("invalid_domain", json!({})),
        Error::InvalidElement(_) => ("invalid_element", json!({})),
        Error::Arity { expected, got } => {
            ("arity", json!({ "expected": expected.to_string(), "got": got.to_string() }))
        }
        Error::Shape(_) => ("shape", json!({})),
        Error::Mismatch(_) => ("mismatch", json!({})),
        Error::NotHomogeneous(_) => ("not_homogeneous", json!({})),
        Error::Precondition(_) => ("precondition", json!({})),
        Error::CapExhausted { .. } => ("cap_exhausted", json!({})),
        _ => ("error", json!({})),
    };
    let mut obj = extra.as_object().cloned().unwrap_or_default();
    obj.insert("kind".into(), json!(kind));
    obj.insert("message".into(), json!(e.to_string()));
    json!({ "error": obj })
}

/// Replaces every JSON number by its decimal string.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

/// Runs one request. Input errors come back as `Err`; `Unknown` verdicts
/// and exhausted caps as a response with exit code 2.
pub fn run(req: &Request) -> Result<Response, Error> {
    req.validate()?;
    let policy = req.options.policy(&req.config)?;
    let mut resp = match req.command {
        Command::Bounds => run_bounds(&req.options)?,
        Command::Paramsyz | Command::Evalparam => run_param(req, &policy)?,
        _ => with_domain!(req.domain, ring => run_in(&ring, req, &policy))?,
    };
    let Value::Object(body) = resp.json else { unreachable!("responses are objects") };
    let mut doc = Map::new();
    doc.insert("command".into(), json!(req.command.name()));
    if req.command != Command::Bounds {
        doc.insert("ring".into(), json!(req.domain.to_string()));
        doc.insert("vars".into(), json!(req.vars));
    }
    if matches!(req.command, Command::Paramsyz | Command::Evalparam) {
        doc.insert("params".into(), json!(param_names(req)));
    }
    doc.extend(body);
    resp.json = stringify_numbers(Value::Object(doc));
    Ok(resp)
}

fn param_names(req: &Request) -> Vec<String> {
    req.params.clone()
}

fn decided(json: Value) -> Response {
    Response { json, exit_code: 0, text: None }
}

fn poly<D: Domain>(ring: &D, vars: &[String], text: &str) -> Result<MultiPoly<D>, Error> {
    parse_poly(text, vars, ring)
}

fn split_list(text: &str, sep: char) -> Vec<&str> {
    text.split(sep).map(str::trim).collect()
}

fn row<D: Domain>(ring: &D, vars: &[String], text: &str) -> Result<Vec<MultiPoly<D>>, Error> {
    split_list(text, ',').into_iter().map(|t| poly(ring, vars, t)).collect()
}

fn texts<D: Domain>(ps: &[MultiPoly<D>], vars: &[String]) -> Vec<String> {
    ps.iter().map(|p| p.to_text(vars)).collect()
}

fn vectors_json<D: Domain>(vs: &[Vec<MultiPoly<D>>], vars: &[String]) -> Value {
    json!(vs.iter().map(|v| texts(v, vars)).collect::<Vec<_>>())
}

fn need(inputs: &[String], at_least: usize, what: &str) -> Result<(), Error> {
    if inputs.len() < at_least {
        return Err(Error::Precondition(format!("expected {what}")));
    }
    Ok(())
}

fn unknown_from(e: Error) -> Result<Response, Error> {
    match e {
        Error::CapExhausted { cap, required } => Ok(Response {
            json: json!({ "status": "Unknown", "cap": cap, "reason": required }),
            exit_code: 2,
            text: None,
        }),
        other => Err(other),
    }
}

fn basis_json<D: Domain>(b: &SyzygyBasis<D>, vars: &[String]) -> Value {
    json!({
        "status": "ok",
        "generators": vectors_json(&b.vectors, vars),
        "cap": b.cap,
        "completeness": b.completeness,
        "history": b.history,
        "ledger": b.ledger,
    })
}

fn module_json<D: Domain>(m: &GeneratedModule<D>, vars: &[String]) -> Value {
    json!({
        "status": "ok",
        "generators": vectors_json(&m.vectors, vars),
        "cap": m.cap,
        "completeness": m.completeness,
    })
}

fn certificate_json(c: &NonMembership) -> Value {
    serde_json::to_value(c).expect("certificates serialize")
}

fn verdict_json<D: Domain>(v: &MembershipVerdict<D>, vars: &[String]) -> (Value, i32) {
    let mut obj = json!({ "cap": v.cap, "history": v.history, "ledger": v.ledger });
    let map = obj.as_object_mut().expect("object");
    let code = match &v.verdict {
        Verdict::Member(c) => {
            map.insert("status".into(), json!("Member"));
            map.insert("cofactors".into(), json!(texts(c, vars)));
            0
        }
        Verdict::NotMember(cert) => {
            map.insert("status".into(), json!("NotMember"));
            map.insert("certificate".into(), certificate_json(cert));
            0
        }
        Verdict::Unknown => {
            map.insert("status".into(), json!("Unknown"));
            2
        }
    };
    (obj, code)
}

fn membership_response<D: Domain>(
    v: &MembershipVerdict<D>,
    vars: &[String],
    f0: &MultiPoly<D>,
    gens: &[MultiPoly<D>],
) -> Response {
    let (mut obj, exit_code) = verdict_json(v, vars);
    let map = obj.as_object_mut().expect("object");
    map.insert("f0".into(), json!(f0.to_text(vars)));
    map.insert("generators".into(), json!(texts(gens, vars)));
    Response { json: obj, exit_code, text: None }
}

fn parse_module<D: Domain>(ring: &D, vars: &[String], text: &str) -> Result<Vec<Vec<MultiPoly<D>>>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_list(text, ';').into_iter().map(|g| row(ring, vars, g)).collect()
}

fn run_in<D: Domain>(ring: &D, req: &Request, policy: &CapPolicy) -> Result<Response, Error> {
    let vars = &req.vars;
    let inputs = &req.inputs;
    match req.command {
        Command::Syz => {
            need(inputs, 1, "at least one polynomial")?;
            let f: Vec<_> = inputs.iter().map(|t| poly(ring, vars, t)).collect::<Result<_, _>>()?;
            match syzygies_matrix(&PolyMatrix::row(&f)?, policy) {
                Ok(b) => Ok(decided(basis_json(&b, vars))),
                Err(e) => unknown_from(e),
            }
        }
        Command::Syzmat => {
            need(inputs, 1, "at least one matrix row")?;
            let rows = inputs.iter().map(|r| row(ring, vars, r)).collect::<Result<Vec<_>, _>>()?;
            match syzygies_matrix(&PolyMatrix::from_rows(rows)?, policy) {
                Ok(b) => Ok(decided(basis_json(&b, vars))),
                Err(e) => unknown_from(e),
            }
        }
        Command::Solve => {
            need(inputs, 1, "rows of the form 'a1, a2 | b'")?;
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for r in inputs {
                let (lhs, b) = r
                    .split_once('|')
                    .ok_or_else(|| Error::Precondition(format!("row {r:?} lacks '| right-hand side'")))?;
                rows.push(row(ring, vars, lhs)?);
                rhs.push(poly(ring, vars, b.trim())?);
            }
            let a = PolyMatrix::from_rows(rows)?;
            let v = match solve_poly(&a, &rhs, policy) {
                Ok(v) => v,
                Err(e) => return unknown_from(e),
            };
            let (mut obj, exit_code) = verdict_json(&v, vars);
            let map = obj.as_object_mut().expect("object");
            map.insert("matrix".into(), json!((0..a.rows()).map(|i| texts(a.row_polys(i), vars)).collect::<Vec<_>>()));
            map.insert("rhs".into(), json!(texts(&rhs, vars)));
            if let Some(sol) = map.remove("cofactors") {
                map.insert("solution".into(), sol);
            }
            Ok(Response { json: obj, exit_code, text: None })
        }
        Command::Member | Command::Memberhom | Command::Radmember => {
            need(inputs, 1, "the polynomial f0 followed by generators")?;
            let f0 = poly(ring, vars, &inputs[0])?;
            let gens = inputs[1..].iter().map(|t| poly(ring, vars, t)).collect::<Result<Vec<_>, _>>()?;
            let v = match req.command {
                Command::Member => member(&f0, &gens, policy),
                Command::Memberhom => member_homogeneous(&f0, &gens),
                _ => radical_member_field(&f0, &gens, policy),
            };
            let v = match v {
                Ok(v) => v,
                Err(e) => return unknown_from(e),
            };
            if req.command != Command::Radmember {
                return Ok(membership_response(&v, vars, &f0, &gens));
            }
            // certificates live in one more variable T: 1 = sum c_i g_i + c (1 - T f0)
            let mut names = vars.clone();
            let mut t = "T".to_string();
            while names.contains(&t) {
                t.push('_');
            }
            names.push(t.clone());
            let n = vars.len();
            let mut extended: Vec<MultiPoly<D>> = gens.iter().map(|g| g.embed(n + 1, 0)).collect();
            let tf = &MultiPoly::var(ring, n + 1, n) * &f0.embed(n + 1, 0);
            extended.push(&MultiPoly::one(ring, n + 1) - &tf);
            let one = MultiPoly::one(ring, n + 1);
            let mut resp = membership_response(&v, &names, &one, &extended);
            resp.json["f0"] = json!(f0.to_text(vars));
            resp.json["fresh_variable"] = json!(t);
            Ok(resp)
        }
        Command::Radconst => {
            need(inputs, 1, "the element r0 followed by r1..rn")?;
            let elems = inputs.iter().map(|t| ring.parse_elem(t)).collect::<Result<Vec<_>, _>>()?;
            let holds = rad_member_constants(ring, &elems[0], &elems[1..]);
            Ok(decided(json!({
                "status": if holds { "Member" } else { "NotMember" },
                "r0": ring.format_elem(&elems[0]),
                "generators": elems[1..].iter().map(|e| ring.format_elem(e)).collect::<Vec<_>>(),
                "ideal_generator": ring.format_elem(&ring.ideal_gen(&elems[1..])),
            })))
        }
        Command::Intersect | Command::Colon => {
            if inputs.len() != 2 {
                return Err(Error::Precondition("expected two modules, generators separated by ';'".into()));
            }
            let a = parse_module(ring, vars, &inputs[0])?;
            let b = parse_module(ring, vars, &inputs[1])?;
            let r = if req.command == Command::Intersect { intersect(&a, &b, policy) } else { colon(&a, &b, policy) };
            match r {
                Ok(m) => Ok(decided(module_json(&m, vars))),
                Err(e) => unknown_from(e),
            }
        }
        Command::Bounds | Command::Paramsyz | Command::Evalparam => unreachable!("dispatched earlier"),
    }
}

fn run_bounds(opts: &Options) -> Result<Response, Error> {
    let nvars = opts.nvars.ok_or_else(|| Error::Precondition("bounds needs --nvars".into()))?;
    let d = opts.degree.ok_or_else(|| Error::Precondition("bounds needs --degree".into()))?;
    let n = opts.n.unwrap_or(1);
    let m = opts.rows.unwrap_or(1);
    if n == 0 || m == 0 {
        return Err(Error::Precondition("--n and --rows must be positive".into()));
    }
    let beta = beta_field(nvars, d)?;
    let (beta_m, gamma_m) = beta_gamma_matrix(m, nvars, d, n)?;
    let mut obj = json!({
        "nvars": nvars,
        "degree": d,
        "n": n,
        "rows": m,
        "beta_field": beta.to_string(),
        "kollar": kollar(nvars, d)?.to_string(),
        "m'": m_prime(nvars, &beta, d).to_string(),
        "n'": n_prime(nvars, &beta, n).to_string(),
        "gamma": gamma(nvars, d, n)?.to_string(),
        "beta_m": beta_m.to_string(),
        "gamma_m": gamma_m.to_string(),
    });
    if let Some(e) = opts.target {
        obj["delta_field"] = json!(delta_field(nvars, d, e)?.to_string());
    }
    Ok(decided(obj))
}

fn build_family(req: &Request) -> Result<ParamFamily, Error> {
    need(&req.inputs, 1, "at least one matrix row")?;
    let params = param_names(req);
    let all: Vec<String> = params.iter().chain(&req.vars).cloned().collect();
    let rows = req.inputs.iter().map(|r| row(&Integers, &all, r)).collect::<Result<Vec<_>, _>>()?;
    let a = ParamMatrix::new(params.len(), req.vars.len(), rows)?;
    if req.vars.is_empty() {
        return build_param_kernel_matrix(&a);
    }
    let beta = match req.options.beta {
        Some(b) => b,
        None => {
            let b = beta_field(req.vars.len() as u32, a.degree_in_vars() as u64)?;
            bezsyz::bounds::within(&b, 64)
                .ok_or_else(|| Error::Precondition(format!("default beta {b} is too large; pass --beta")))?
        }
    };
    build_param_syzygies(&a, beta)
}

fn run_param(req: &Request, policy: &CapPolicy) -> Result<Response, Error> {
    let fam = build_family(req)?;
    let params = param_names(req);
    if req.command == Command::Paramsyz {
        let mut json = family_to_json(&fam, &params, &req.vars);
        json["status"] = json!("ok");
        return Ok(Response { json, exit_code: 0, text: Some(family_to_text(&fam, &params, &req.vars)) });
    }
    with_domain!(req.domain, ring => eval_family(&ring, req, &fam, policy))
}

fn eval_family<D: Domain>(ring: &D, req: &Request, fam: &ParamFamily, policy: &CapPolicy) -> Result<Response, Error> {
    let point = req.options.at.iter().map(|t| ring.parse_elem(t)).collect::<Result<Vec<_>, _>>()?;
    let report = match verify_family(fam, ring, &point, policy) {
        Ok(r) => r,
        Err(e) => return unknown_from(e),
    };
    let json = json!({
        "status": "ok",
        "at": point.iter().map(|c| ring.format_elem(c)).collect::<Vec<_>>(),
        "beta": fam.beta,
        "branch": report.branch().map(|b| b + 1),
        "satisfied": report.satisfied.iter().map(|b| b + 1).collect::<Vec<_>>(),
        "generators": vectors_json(&report.generators, &req.vars),
        "coverage": report.coverage,
        "soundness": report.soundness,
        "completeness": report.completeness,
    });
    Ok(decided(json))
}

/// Parses a comma-separated list of integers such as `2,3,5`.
pub fn parse_u64_list(text: &str) -> Result<Vec<u64>, Error> {
    split_list(text, ',')
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| Error::Precondition(format!("not a nonnegative integer: {s:?}"))))
        .collect()
}

/// Splits a comma-separated name list.
pub fn parse_names(text: &str) -> Vec<String> {
    split_list(text, ',').into_iter().filter(|s| !s.is_empty()).map(String::from).collect()
}

/// Non-empty trimmed lines, for inputs read from standard input.
pub fn inputs_from_text(text: &str) -> Vec<String> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
}

#[cfg(test)]
mod tests;
