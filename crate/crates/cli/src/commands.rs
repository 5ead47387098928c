use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Read;

use modrep_core::dimvec::{enumerate_admissible, max_simp_dim, theta, westbury_dim};
use modrep_core::ext_deform::{codim_nonsimple, deformation_tangent_dim, min_codim};
use modrep_core::mie::{
    ind_gamma_summary, involution_closed, involution_forward, mie_count_closed,
    mie_count_enumerate, mie_count_gf, stabilizer_dim,
};
use modrep_core::rep::{
    dimension_vector_of, one_dim, span_rank, three_dim, two_dim_m, two_dim_n, verify_relations,
};
use modrep_core::series::{
    codim_sequence, maxdim_gf, maxdim_gf_check, mie_gf_poly, modular_forms_gf,
    modular_forms_identity_check,
};
use modrep_core::{
    Cyclotomic, DimVector, Error, FreeEntries, Representation, Series, Sign, SignPattern,
};
use serde_json::{json, Value};

use crate::{Method, Which};

/// Largest truncation order accepted by `series`.
pub const MAX_ORDER: usize = 5000;

#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit code 2.
    Validation(String),
    /// A consistency check failed: exit code 1.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::Internal(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Validation(m) | Failure::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Validation(e.to_string())
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Validation(msg.into())
}

pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    /// Set when the output was produced but a cross-check disagreed.
    pub internal_failure: Option<String>,
}

impl Outcome {
    fn ok(command: &'static str, inputs: Value, result: Value) -> Self {
        Outcome {
            command,
            inputs,
            result,
            internal_failure: None,
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn parse_alpha(s: &str) -> Result<DimVector, Failure> {
    Ok(s.parse::<DimVector>()?)
}

fn parse_balanced(s: &str) -> Result<DimVector, Failure> {
    let alpha = parse_alpha(s)?;
    if !alpha.is_balanced() {
        return Err(invalid(format!(
            "{alpha} is not balanced: a1+a2+a3 must equal b1+b2"
        )));
    }
    Ok(alpha)
}

fn parse_cyc(name: &str, s: &str) -> Result<Cyclotomic, Failure> {
    s.parse::<Cyclotomic>()
        .map_err(|e| invalid(format!("{name}: {e}")))
}

pub fn dim(alpha: &str) -> CmdResult {
    let alpha = parse_balanced(alpha)?;
    let d = westbury_dim(&alpha)?;
    let n = alpha.x_total();
    Ok(Outcome::ok(
        "dim",
        json!({ "alpha": alpha.to_string() }),
        json!({ "alpha": alpha.to_string(), "n": n, "d": d, "theta": theta(&alpha) }),
    ))
}

pub fn maxdim(n: u64) -> CmdResult {
    Ok(Outcome::ok(
        "maxdim",
        json!({ "n": n }),
        json!({ "n": n, "max_dim": max_simp_dim(n)? }),
    ))
}

pub fn enumerate(n: u64) -> CmdResult {
    let vectors = enumerate_admissible(n)?;
    let rows = vectors
        .iter()
        .map(|a| Ok(json!({ "alpha": a.to_string(), "d": westbury_dim(a)? })))
        .collect::<Result<Vec<Value>, Failure>>()?;
    Ok(Outcome::ok(
        "enumerate",
        json!({ "n": n }),
        json!({ "n": n, "count": rows.len(), "vectors": rows }),
    ))
}

fn rep_value(rep: &Representation) -> Result<Value, Failure> {
    serde_json::to_value(rep).map_err(|e| Failure::Internal(e.to_string()))
}

pub fn family_one_dim(power: u8, sign: &str) -> CmdResult {
    let sign: Sign = sign.parse()?;
    let rep = one_dim(power, sign)?;
    Ok(Outcome::ok(
        "family",
        json!({ "family": "one-dim", "power": power, "sign": sign.to_string() }),
        rep_value(&rep)?,
    ))
}

pub fn family_two_dim(which: &'static str, param: &str, power: u8) -> CmdResult {
    let p = parse_cyc(if which == "m" { "s" } else { "t" }, param)?;
    let rep = if which == "m" {
        two_dim_m(&p, power)?
    } else {
        two_dim_n(&p, power)?
    };
    let key = if which == "m" { "s" } else { "t" };
    Ok(Outcome::ok(
        "family",
        json!({ "family": which, key: p.to_string(), "power": power }),
        rep_value(&rep)?,
    ))
}

pub fn family_three(l1: &str, l2: &str, l3: &str) -> CmdResult {
    let l = [
        parse_cyc("l1", l1)?,
        parse_cyc("l2", l2)?,
        parse_cyc("l3", l3)?,
    ];
    let rep = three_dim(&l[0], &l[1], &l[2])?;
    Ok(Outcome::ok(
        "family",
        json!({ "family": "three", "lambda": l.iter().map(|x| x.to_string()).collect::<Vec<_>>() }),
        rep_value(&rep)?,
    ))
}

fn read_source(source: &str) -> Result<(String, String), Failure> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        return Ok(("inline".into(), source.to_string()));
    }
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| invalid(format!("reading stdin: {e}")))?;
        return Ok(("stdin".into(), buf));
    }
    let text = fs::read_to_string(source).map_err(|e| invalid(format!("reading {source}: {e}")))?;
    Ok((source.to_string(), text))
}

/// Accepts a bare representation or an output envelope whose `result` is one.
fn parse_representation(text: &str) -> Result<Representation, Failure> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| invalid(format!("invalid JSON: {e}")))?;
    let body = match value.get("result") {
        Some(inner) if value.get("command").is_some() => inner.clone(),
        _ => value,
    };
    serde_json::from_value(body).map_err(|e| invalid(format!("not a representation: {e}")))
}

pub fn check_simple(source: &str) -> CmdResult {
    let (label, text) = read_source(source)?;
    let rep = parse_representation(&text)?;
    if !verify_relations(&rep) {
        return Err(invalid("the matrices do not satisfy X^3 = I and Y^2 = I"));
    }
    let rank = span_rank(&rep)?;
    let n = rep.dim();
    Ok(Outcome::ok(
        "check-simple",
        json!({ "source": label }),
        json!({
            "n": n,
            "simple": rank == n * n,
            "span_rank": rank,
            "dimension_vector": dimension_vector_of(&rep)?.to_string(),
        }),
    ))
}

pub fn codim(alpha: &str) -> CmdResult {
    let alpha = parse_balanced(alpha)?;
    let d = westbury_dim(&alpha)?;
    let (c, witness) = min_codim(&alpha)?;
    if codim_nonsimple(&witness.beta, &witness.gamma)? != c {
        return Err(Failure::Internal(
            "witness does not attain the reported codimension".into(),
        ));
    }
    Ok(Outcome::ok(
        "codim",
        json!({ "alpha": alpha.to_string() }),
        json!({
            "alpha": alpha.to_string(),
            "d": d,
            "codim": c,
            "beta": witness.beta.to_string(),
            "gamma": witness.gamma.to_string(),
            "deformation_tangent_dim": deformation_tangent_dim(&witness.beta, &witness.gamma)?,
        }),
    ))
}

pub fn mie_count(alpha: &str) -> CmdResult {
    let alpha = parse_balanced(alpha)?;
    let closed = mie_count_closed(&alpha)?;
    let enumerate = mie_count_enumerate(&alpha)?;
    let gf = mie_count_gf(&alpha)?;
    let mut out = Outcome::ok(
        "mie-count",
        json!({ "alpha": alpha.to_string() }),
        json!({ "closed": closed, "enumerate": enumerate, "gf": gf }),
    );
    if closed != enumerate || closed != gf {
        out.internal_failure = Some(format!(
            "counts disagree: closed {closed}, enumerate {enumerate}, gf {gf}"
        ));
    }
    Ok(out)
}

/// Parses `"i,j=value;..."` with 1-based positions into 0-based free entries,
/// filling unlisted free positions with 0.
fn parse_entries(pattern: &SignPattern, entries: &str) -> Result<FreeEntries, Failure> {
    let free = pattern.free_positions();
    let mut given = BTreeMap::new();
    for item in entries.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (pos, val) = item
            .split_once('=')
            .ok_or_else(|| invalid(format!("entry {item:?} must look like i,j=value")))?;
        let (i, j) = pos
            .split_once(',')
            .ok_or_else(|| invalid(format!("position {pos:?} must look like i,j")))?;
        let parse_idx = |s: &str| -> Result<usize, Failure> {
            match s.trim().parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(invalid(format!(
                    "position index {s:?} must be a positive integer"
                ))),
            }
        };
        let key = (parse_idx(i)?, parse_idx(j)?);
        if !free.contains(&key) {
            return Err(invalid(format!(
                "({},{}) is not a free position for pattern {pattern}: free positions are i<j with opposite signs",
                key.0 + 1,
                key.1 + 1
            )));
        }
        if given.insert(key, parse_cyc("entry", val)?).is_some() {
            return Err(invalid(format!(
                "position ({},{}) given twice",
                key.0 + 1,
                key.1 + 1
            )));
        }
    }
    Ok(free
        .into_iter()
        .map(|p| {
            (
                p,
                given.remove(&p).unwrap_or_else(|| Cyclotomic::from_int(0)),
            )
        })
        .collect())
}

fn one_based(positions: &[(usize, usize)]) -> Vec<[usize; 2]> {
    positions.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
}

pub fn involution(pattern: &str, entries: &str, method: Method) -> CmdResult {
    let pattern: SignPattern = pattern.parse()?;
    let free = parse_entries(&pattern, entries)?;
    let y = match method {
        Method::Forward => involution_forward(&pattern, &free)?,
        Method::Closed => involution_closed(&pattern, &free)?,
        Method::Both => {
            let f = involution_forward(&pattern, &free)?;
            if involution_closed(&pattern, &free)? != f {
                return Err(Failure::Internal(
                    "closed form and forward substitution disagree".into(),
                ));
            }
            f
        }
    };
    let method_name = match method {
        Method::Forward => "forward",
        Method::Closed => "closed",
        Method::Both => "both",
    };
    let echoed: BTreeMap<String, String> = free
        .iter()
        .map(|(&(i, j), v)| (format!("{},{}", i + 1, j + 1), v.to_string()))
        .collect();
    Ok(Outcome::ok(
        "involution",
        json!({ "pattern": pattern.to_string(), "entries": echoed, "method": method_name }),
        json!({
            "pattern": pattern.to_string(),
            "free_positions": one_based(&pattern.free_positions()),
            "Y": serde_json::to_value(&y).map_err(|e| Failure::Internal(e.to_string()))?,
        }),
    ))
}

fn parse_multiplicities(s: &str) -> Result<[u64; 3], Failure> {
    let parts: Vec<&str> = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .collect();
    if parts.len() != 3 {
        return Err(invalid(format!(
            "expected three multiplicities a1,a2,a3, got {s:?}"
        )));
    }
    let mut out = [0u64; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .trim()
            .parse()
            .map_err(|_| invalid(format!("invalid multiplicity {p:?}")))?;
    }
    Ok(out)
}

pub fn stabilizer(multiplicities: &str) -> CmdResult {
    let m = parse_multiplicities(multiplicities)?;
    Ok(Outcome::ok(
        "stabilizer",
        json!({ "multiplicities": m }),
        json!({ "multiplicities": m, "dim": stabilizer_dim(m)? }),
    ))
}

pub fn ind_summary(alpha: &str, pattern: &str) -> CmdResult {
    let alpha = parse_balanced(alpha)?;
    let pattern: SignPattern = pattern.parse()?;
    let s = ind_gamma_summary(&alpha, &pattern)?;
    Ok(Outcome::ok(
        "ind-summary",
        json!({ "alpha": alpha.to_string(), "pattern": pattern.to_string() }),
        json!({ "dim_y": s.dim_y, "dim_gx": s.dim_gx, "free_positions": one_based(&s.free_positions) }),
    ))
}

fn int_coeff(s: &Series, k: usize) -> Result<Value, Failure> {
    Ok(match s.int_coeff(k) {
        Some(c) => json!(c),
        None => json!(s.coeff(k).to_string()),
    })
}

pub fn series(which: Which, order: usize, alpha: Option<&str>) -> CmdResult {
    if order == 0 || order > MAX_ORDER {
        return Err(invalid(format!("order must be between 1 and {MAX_ORDER}")));
    }
    match which {
        Which::Maxdim => {
            let s = maxdim_gf(order)?;
            let rows = (1..=order)
                .map(|n| Ok(json!({ "n": n, "coeff": int_coeff(&s, n)?, "max_dim": max_simp_dim(n as u64)? })))
                .collect::<Result<Vec<Value>, Failure>>()?;
            let holds = maxdim_gf_check(order)?;
            let mut out = Outcome::ok(
                "series",
                json!({ "which": "maxdim", "order": order }),
                json!({ "identity_holds": holds, "rows": rows }),
            );
            if !holds {
                out.internal_failure =
                    Some("max-dim generating function disagrees with the closed form".into());
            }
            Ok(out)
        }
        Which::Modular => {
            let f = modular_forms_gf(order)?;
            let rows = (1..=order)
                .map(|n| Ok(json!({ "n": n, "f": int_coeff(&f, n)?, "codim": codim_sequence(n as u64)? })))
                .collect::<Result<Vec<Value>, Failure>>()?;
            let holds = modular_forms_identity_check(order)?;
            let mut out = Outcome::ok(
                "series",
                json!({ "which": "modular", "order": order }),
                json!({ "identity_holds": holds, "rows": rows }),
            );
            if !holds {
                out.internal_failure =
                    Some("codimension sequence disagrees with the modular forms series".into());
            }
            Ok(out)
        }
        Which::Mie => {
            let alpha = alpha.ok_or_else(|| invalid("--which mie requires --alpha"))?;
            let alpha = parse_balanced(alpha)?;
            let g = mie_gf_poly(&alpha)?;
            let top = g.order().min(order);
            let rows = (0..=top)
                .map(|k| Ok(json!({ "k": k, "coeff": int_coeff(&g, k)? })))
                .collect::<Result<Vec<Value>, Failure>>()?;
            let b1 = alpha.y()[0] as usize;
            Ok(Outcome::ok(
                "series",
                json!({ "which": "mie", "order": order, "alpha": alpha.to_string() }),
                json!({ "degree": g.order(), "count": int_coeff(&g, b1)?, "rows": rows }),
            ))
        }
    }
}
