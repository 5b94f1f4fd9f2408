//! Dispatch of a parsed command line to the library, producing one JSON
//! document per invocation.

use std::time::Instant;

use serde_json::{json, Value};

use crate::cli::parse::{parse_form, parse_function};
use crate::cli::{Cli, Format, Verb};
use crate::error::{Error, Result};
use crate::forms::diffform::basis_text;
use crate::forms::DiffForm;
use crate::gd::reduce::verify_reconstruction;
use crate::gd::{gd_reduce, homogenize_m_form, is_smooth, ProjForm};
use crate::integrate::oneform::verify_1form_primitive;
use crate::integrate::{expand_primitive_derivative, hermite_one_form, integrate_closed_1form, integrate_closed_pform, LogTerm, Primitive};
use crate::poly::{MPoly, RatFunc};
use crate::telescoping::{ct_one_form, has_telescoper_below, verify_telescoper};
use crate::vars::Vars;

/// Result payload and the `verified` field (`None` for pure decisions).
type Outcome = (Value, Option<bool>);

fn log_json(l: &LogTerm, names: &[String]) -> Value {
    json!({
        "respoly": l.respoly.to_text(names),
        "argpoly": l.argpoly.to_text(names),
        "rootvar": names[l.root()],
    })
}

fn primitive_json(p: &Primitive, names: &[String]) -> Value {
    json!({
        "rational": p.rational.to_text(names),
        "logs": p.logs.iter().map(|l| log_json(l, names)).collect::<Vec<_>>(),
        "text": p.to_text(names),
    })
}

/// Variables in internal order: `--order` lists the elimination order, and
/// the last variable is eliminated first.
fn layout(cli: &Cli, param: Option<&str>) -> Result<Vars> {
    if cli.vars.is_empty() {
        return Err(Error::PreconditionViolated("--vars is required".into()));
    }
    let mut forms = cli.vars.clone();
    if !cli.order.is_empty() {
        let mut a = cli.order.clone();
        let mut b = cli.vars.clone();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::PreconditionViolated("--order must be a permutation of --vars".into()));
        }
        forms = cli.order.iter().rev().cloned().collect();
    }
    let mut all: Vec<&str> = forms.iter().map(String::as_str).collect();
    all.extend(param);
    let mut uniq = all.clone();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() < all.len() || all.iter().any(|v| *v == "d" || *v == crate::vars::ROOT_NAME) {
        return Err(Error::PreconditionViolated("variable names must be distinct and differ from d and _c".into()));
    }
    Ok(Vars::new(&forms, param))
}

/// Parsed closed form of the given degree; closedness is reported with the
/// user's variable names.
fn form_of_degree(src: &str, vars: &Vars, degree: usize) -> Result<DiffForm> {
    let w = parse_form(src, vars)?;
    w.ensure_closed(vars.names())?;
    if w.degree() != degree && !w.is_zero() {
        return Err(Error::PreconditionViolated(format!("expected a {}-form, got degree {}", degree, w.degree())));
    }
    if w.is_zero() && w.degree() != degree {
        return Ok(DiffForm::zero(degree, vars.nforms(), vars.nvars()));
    }
    Ok(w)
}

/// Polynomial in the homogeneous coordinates, with the root slot dropped.
fn homogeneous_poly(src: &str, vars: &Vars) -> Result<MPoly> {
    let f = parse_function(src, vars)?;
    let Some(c) = f.den().constant_value() else {
        return Err(Error::PreconditionViolated(format!("{} is not a polynomial", src)));
    };
    let k = vars.nforms();
    let map: Vec<usize> = (0..k).chain([k - 1]).collect();
    Ok(f.num().remap(k, &map).scale(&(num_rational::BigRational::from_integer(1.into()) / c)))
}

fn hermite(vars: &Vars, src: &str) -> Result<Outcome> {
    let w = form_of_degree(src, vars, 1)?;
    let red = hermite_one_form(&w)?;
    let names = vars.names();
    let ok = &DiffForm::function(red.g.clone(), vars.nforms()).d() + &red.residual == w;
    let result = json!({
        "g": red.g.to_text(names),
        "residual": red.residual.to_text(names),
        "residual_coeffs": red.residual.one_form_coeffs().iter().map(|c| c.to_text(names)).collect::<Vec<_>>(),
    });
    Ok((result, Some(ok)))
}

fn integrate1(vars: &Vars, src: &str) -> Result<Outcome> {
    let w = form_of_degree(src, vars, 1)?;
    let p = integrate_closed_1form(&w)?;
    let ok = verify_1form_primitive(&w, &p)?;
    Ok((primitive_json(&p, vars.names()), Some(ok)))
}

fn integratep(vars: &Vars, src: &str) -> Result<Outcome> {
    let w = parse_form(src, vars)?;
    w.ensure_closed(vars.names())?;
    let p = integrate_closed_pform(&w)?;
    let ok = expand_primitive_derivative(&p)? == w;
    let names = vars.names();
    let terms: Vec<Value> = p
        .coeffs()
        .iter()
        .map(|(idx, c)| {
            let mut v = primitive_json(c, names);
            v["basis"] = json!(basis_text(idx, names));
            v
        })
        .collect();
    Ok((json!({ "degree": p.degree(), "terms": terms, "text": p.to_text(names) }), Some(ok)))
}

fn exact1(vars: &Vars, src: &str) -> Result<Outcome> {
    let w = form_of_degree(src, vars, 1)?;
    let red = hermite_one_form(&w)?;
    let ok = &DiffForm::function(red.g.clone(), vars.nforms()).d() + &red.residual == w;
    Ok((json!({ "exact": red.residual.is_zero() }), Some(ok)))
}

fn gd_json(w: &ProjForm, early_exit: bool, names: &[String]) -> Result<Outcome> {
    let res = gd_reduce(w, early_exit)?;
    let ok = res.complete && verify_reconstruction(w, &res);
    let reduction: Vec<Value> = res
        .reduction()
        .iter()
        .map(|(r, order)| json!({ "remainder": r.to_text(names), "pole_order": order }))
        .collect();
    let result = json!({
        "p": w.p.to_text(names),
        "q": w.q.to_text(names),
        "ell": w.ell,
        "exact": res.exact,
        "complete": res.complete,
        "remainders": res.remainders.iter().map(|r| r.to_text(names)).collect::<Vec<_>>(),
        "reduction": reduction,
    });
    Ok((result, Some(ok)))
}

fn gd(cli: &Cli, args: &[String]) -> Result<Outcome> {
    if cli.param.is_some() {
        return Err(Error::PreconditionViolated("gd takes no parameter".into()));
    }
    match args {
        [f] => {
            let vars = layout(cli, None)?;
            let m = vars.nforms();
            let f = parse_function(f, &vars)?;
            let h = homogenize_m_form(&f, m);
            let names: Vec<String> = (0..=m).map(|i| format!("xi{}", i)).chain(["_c".to_string()]).collect();
            match h.form {
                Some(w) => gd_json(&w, cli.early_exit, &names),
                None => Err(Error::RegularityViolated(format!(
                    "{} * Omega / ({}): {}",
                    h.numerator.to_text(&names),
                    h.denominator.to_text(&names),
                    h.violations.join("; ")
                ))),
            }
        }
        [p, q, ell] => {
            let vars = layout(cli, None)?;
            let ell: u32 = ell.trim().parse().map_err(|_| Error::Parse { line: 1, column: 1, expected: vec!["positive integer".into()] })?;
            let p = homogeneous_poly(p, &vars)?;
            let q = homogeneous_poly(q, &vars)?;
            let w = ProjForm::new(p, q, ell, vars.nforms() - 1)?;
            gd_json(&w, cli.early_exit, vars.names())
        }
        _ => Err(Error::PreconditionViolated("gd expects f or P Q ell".into())),
    }
}

fn smooth(vars: &Vars, src: &str) -> Result<Outcome> {
    let q = homogeneous_poly(src, vars)?;
    Ok((json!({ "smooth": is_smooth(&q)? }), None))
}

fn telescope(vars: &Vars, src: &str) -> Result<Outcome> {
    let w = form_of_degree(src, vars, 1)?;
    let tvar = vars.param().expect("layout has a parameter");
    let t = ct_one_form(&w, tvar)?;
    let names = vars.names();
    let order = t.operator.order();
    let minimal = order == 0 || !has_telescoper_below(&w, tvar, order)?;
    let result = json!({
        "operator": t.operator.coeffs().iter().map(|c| c.to_text(names)).collect::<Vec<_>>(),
        "operator_text": t.operator.to_text(names),
        "certificate": t.certificate.to_text(names),
        "order": order,
        "minimal": minimal,
    });
    Ok((result, Some(verify_telescoper(&w, &t) && minimal)))
}

fn verify_picard(vars: &Vars, f: &str, u: &[String]) -> Result<Outcome> {
    if u.len() != vars.nforms() {
        return Err(Error::PreconditionViolated(format!("expected {} components u_i", vars.nforms())));
    }
    let f = parse_function(f, vars)?;
    let u: Vec<RatFunc> = u.iter().map(|s| parse_function(s, vars)).collect::<Result<_>>()?;
    let ok = crate::gd::verify_picard_solution(&f, &u);
    Ok((json!({ "valid": ok }), Some(ok)))
}

/// The parameter in effect: `telescope` falls back to `t`.
fn effective_param(cli: &Cli) -> Option<&str> {
    match cli.verb {
        Verb::Telescope { .. } => Some(cli.param.as_deref().unwrap_or("t")),
        _ => cli.param.as_deref(),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let param = effective_param(cli);
    match &cli.verb {
        Verb::Hermite { form } => hermite(&layout(cli, param)?, form),
        Verb::Integrate1 { form } => integrate1(&layout(cli, param)?, form),
        Verb::Integratep { form } => integratep(&layout(cli, param)?, form),
        Verb::Exact1 { form } => exact1(&layout(cli, param)?, form),
        Verb::Gd { args } => gd(cli, args),
        Verb::Smooth { q } => smooth(&layout(cli, None)?, q),
        Verb::Telescope { form } => telescope(&layout(cli, param)?, form),
        Verb::VerifyPicard { f, u } => verify_picard(&layout(cli, param)?, f, u),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotClosed { .. } => "NotClosed",
        Error::NotSmooth => "NotSmooth",
        Error::RegularityViolated(_) => "RegularityViolated",
        Error::NotHomogeneous => "NotHomogeneous",
        Error::DegreeMismatch(_) => "DegreeMismatch",
        Error::Parse { .. } => "ParseError",
        Error::TelescoperBound(_) => "TelescoperBound",
        Error::PreconditionViolated(_) => "PreconditionViolated",
        _ => "InternalAssertion",
    }
}

/// Runs one command; returns the document and the process exit code.
pub fn run(cli: &Cli) -> (Value, i32) {
    let start = Instant::now();
    let out = dispatch(cli);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let input = json!({
        "args": cli.verb.args(),
        "vars": cli.vars,
        "param": effective_param(cli),
        "order": cli.order,
    });
    match out {
        Ok((result, verified)) => (
            json!({
                "command": cli.verb.name(),
                "input": input,
                "result": result,
                "verified": verified,
                "timing_ms": elapsed,
            }),
            0,
        ),
        Err(e) => {
            let mut err = json!({ "kind": error_kind(&e), "message": e.to_string() });
            if let Error::Parse { line, column, expected } = &e {
                err["line"] = json!(line);
                err["column"] = json!(column);
                err["expected"] = json!(expected);
            }
            (
                json!({
                    "command": cli.verb.name(),
                    "input": input,
                    "error": err,
                    "verified": false,
                    "timing_ms": elapsed,
                }),
                e.exit_code(),
            )
        }
    }
}

/// `run` with the document rendered according to `--format`.
pub fn run_to_string(cli: &Cli) -> (String, i32) {
    let (doc, code) = run(cli);
    let text = match cli.format {
        Format::Doc => doc.to_string(),
        Format::Pretty => serde_json::to_string_pretty(&doc).expect("serializable"),
    };
    (text, code)
}
