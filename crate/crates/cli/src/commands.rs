//! Subcommand bodies. Each returns an [`Outcome`]: a JSON object, the
//! equivalent text, and whether every verdict it reports is positive.

use std::fmt::Write as _;

use hecke_core::idempotents::{
    branching_annihilator_check, eigen_check, orthogonality_check, orthogonality_check_direct, resolution_levels,
    sum_is_one, RankLimits,
};
use hecke_core::scalar::Coefficient;
use hecke_core::seminormal::build_rep;
use hecke_core::tableaux::{colour_label, enumerate_standard, frobenius_dim, young_graph, ContentString, YoungDiagram};
use hecke_core::trace::{conditional_expectation, ocneanu_trace, qdim_closed, qdim_json, qdim_via_trace, TraceContext};
use hecke_core::verify::run_suite;
use hecke_core::Hecke;
use serde_json::{json, Map, Value};

use crate::expr;
use crate::CliError;

pub struct Outcome {
    pub json: Map<String, Value>,
    pub text: String,
    pub pass: bool,
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("outcomes are JSON objects"),
    }
}

pub fn tableaux(shape: &YoungDiagram) -> Outcome {
    let ts = enumerate_standard(shape);
    let mut text = format!("shape {shape}: {} standard tableaux\n", ts.len());
    let rows: Vec<Value> = ts
        .iter()
        .map(|t| {
            let s = t.content_string();
            let _ = writeln!(text, "{t}  {s}");
            json!({ "tableau": t.to_json(), "content": s.to_json() })
        })
        .collect();
    let dim = frobenius_dim(shape).to_string();
    let _ = writeln!(text, "frobenius dimension: {dim}");
    let pass = dim == ts.len().to_string();
    Outcome {
        json: object(json!({ "shape": shape.to_json(), "count": ts.len(), "frobenius_dim": dim, "tableaux": rows })),
        text,
        pass,
    }
}

pub fn graph(n: usize, dot: bool) -> Outcome {
    let g = young_graph(n);
    let text = if dot {
        g.to_dot()
    } else {
        let mut s = String::new();
        for e in &g.edges {
            let _ = writeln!(s, "{} -> {}  {}", e.from, e.to, colour_label(e.colour));
        }
        let _ = writeln!(s, "maximal paths: {}", g.maximal_paths().len());
        s
    };
    let mut json = object(g.to_json());
    json.insert("paths".into(), json!(g.maximal_paths().len()));
    Outcome { json, text, pass: true }
}

pub fn validate(string: &str) -> Result<Outcome, CliError> {
    let s = ContentString::parse(string)?;
    let (valid, condition, reason) = match s.validate() {
        Ok(()) => (true, Value::Null, String::new()),
        Err(v) => (false, json!(v.condition()), v.to_string()),
    };
    let tableau = if valid { s.to_tableau().map(|t| t.to_json()).unwrap_or(Value::Null) } else { Value::Null };
    let text = if valid {
        format!("{s}: pass ({})\n", s.to_tableau().map(|t| t.to_string()).unwrap_or_default())
    } else {
        format!("{s}: fail, {reason}\n")
    };
    Ok(Outcome {
        json: object(json!({
            "string": s.to_json(),
            "valid": valid,
            "condition": condition,
            "reason": reason,
            "tableau": tableau,
        })),
        text,
        pass: valid,
    })
}

pub fn idempotents<C: Coefficient>(
    h: &Hecke<C>,
    n: usize,
    direct: bool,
    limits: &RankLimits,
) -> Result<Outcome, CliError> {
    let levels = resolution_levels(h, n, limits)?;
    let recs = &levels[n];
    let sum = sum_is_one(recs, n);
    let orth = if direct { orthogonality_check_direct(h, recs)? } else { orthogonality_check(h, recs)? };
    let mut eigen = true;
    let mut annihilator = true;
    let mut text = String::new();
    let mut records = Vec::new();
    for r in recs {
        eigen &= eigen_check(h, r)?;
        annihilator &= branching_annihilator_check(h, r)?;
        let _ = writeln!(text, "{}  {}\n  {}", r.tableau, r.eigenvalues, r.element);
        records.push(r.to_json());
    }
    let _ = writeln!(
        text,
        "{} idempotents; sum=1: {sum}, orthogonal: {orth}, eigenvalues: {eigen}, annihilators: {annihilator}",
        recs.len()
    );
    Ok(Outcome {
        json: object(json!({
            "n": n,
            "idempotents": records,
            "sum_is_one": sum,
            "orthogonal": orth,
            "eigenvalues": eigen,
            "annihilators": annihilator,
        })),
        text,
        pass: sum && orth && eigen && annihilator,
    })
}

pub fn qdim<C: Coefficient>(
    h: &Hecke<C>,
    shape: &YoungDiagram,
    d: i32,
    check_trace: bool,
    limits: &RankLimits,
) -> Result<Outcome, CliError> {
    let closed = qdim_closed(h, shape, d);
    let mut text = format!("qdim{shape} at d={d}: {closed}\n");
    let mut pass = true;
    let vals = if check_trace {
        let ctx = TraceContext::new(h, d);
        let levels = resolution_levels(h, shape.size(), limits)?;
        let vals = qdim_via_trace(h, &levels[shape.size()], shape, &ctx)?;
        pass = vals.iter().all(|v| v == &closed);
        let _ = writeln!(text, "trace of {} idempotents agrees: {pass}", vals.len());
        Some(vals)
    } else {
        None
    };
    Ok(Outcome { json: object(qdim_json(shape, d, &closed, vals.as_deref())), text, pass })
}

pub fn rep<C: Coefficient>(h: &Hecke<C>, shape: &YoungDiagram) -> Result<Outcome, CliError> {
    let r = build_rep(h, shape)?;
    let relations = r.relation_check(h);
    let jm = r.jm_check(h);
    let mut text = format!("seminormal representation {shape}, dimension {}\nbasis:", r.dim());
    for t in r.basis() {
        let _ = write!(text, " {t}");
    }
    text.push('\n');
    for i in 1..r.rank() {
        let _ = write!(text, "s{i}:\n{}", r.generator(i));
    }
    let _ = writeln!(text, "relations: {relations}, y diagonal: {jm}");
    let mut json = object(r.to_json());
    json.insert("relations".into(), json!(relations));
    json.insert("jm_diagonal".into(), json!(jm));
    json.insert("dim".into(), json!(r.dim()));
    Ok(Outcome { json, text, pass: relations && jm })
}

pub fn trace<C: Coefficient>(
    h: &Hecke<C>,
    n: usize,
    d: i32,
    input: &str,
    expectation: bool,
) -> Result<Outcome, CliError> {
    let e = expr::parse(input, n)?;
    let x = e.evaluate(h, n)?;
    let ctx = TraceContext::new(h, d);
    let value = ocneanu_trace(h, &x, &ctx)?;
    let mut text = format!("Tr({e}) = {value}\n");
    let mut json =
        object(json!({ "n": n, "d": d, "expr": e.to_string(), "element": x.to_json(), "trace": value.to_json() }));
    if expectation && n >= 1 {
        let cond = conditional_expectation(h, &x, &ctx)?;
        let _ = writeln!(text, "Tr_{{d({n})}}({e}) = {cond}");
        json.insert("expectation".into(), cond.to_json());
    }
    Ok(Outcome { json, text, pass: true })
}

pub fn check<C: Coefficient>(h: &Hecke<C>, n: usize, d: i32, seed: u64, limits: &RankLimits) -> Outcome {
    let entries = run_suite(h, n, d, seed, limits);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut pass = true;
    for e in &entries {
        let ok = e.outcome.is_ok();
        pass &= ok;
        let detail = e.outcome.as_ref().err().map(|x| x.to_string());
        let _ = writeln!(
            text,
            "{:<4} {:<40} {:>10.3}s{}",
            if ok { "PASS" } else { "FAIL" },
            e.name,
            e.elapsed.as_secs_f64(),
            detail.as_deref().map(|s| format!("  {s}")).unwrap_or_default()
        );
        rows.push(json!({
            "name": e.name,
            "passed": ok,
            "seconds": e.elapsed.as_secs_f64(),
            "detail": detail,
        }));
    }
    let failed = entries.iter().filter(|e| e.outcome.is_err()).count();
    let _ = writeln!(text, "{} checks, {failed} failed", entries.len());
    Outcome { json: object(json!({ "n": n, "d": d, "seed": seed, "checks": rows, "passed": pass })), text, pass }
}
