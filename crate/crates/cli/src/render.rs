//! Text and JSON renderings shared by the subcommands.

use rootcert::algebraic::{Algebraic, RealRoot};
use rootcert::interlace::{Alternation, Bound, Certificate, DegenerateReport, Interval, Verdict};
use rootcert::roots::RootSet;
use rootcert::sturm::ConditionReport;
use rootcert::{format_rational, Rational};
use serde_json::{json, Value};

/// Output settings common to every verb.
pub struct Ctx {
    pub machine: bool,
    pub budget: usize,
    pub tol: Rational,
}

impl Ctx {
    /// Prints one JSON record or a block of text lines.
    pub fn emit(&self, record: Value, text: impl FnOnce() -> String) {
        if self.machine {
            println!("{record}");
        } else {
            println!("{}", text());
        }
    }
}

/// `"num/den"`, also for integers.
pub fn jrat(x: &Rational) -> Value {
    Value::String(format!("{}/{}", x.numer(), x.denom()))
}

pub fn refined(v: &Algebraic, ctx: &Ctx) -> Algebraic {
    let mut v = v.clone();
    // an unrefined enclosure is still a valid answer
    let _ = v.refine_to(&ctx.tol, ctx.budget);
    v
}

pub fn jalg(v: &Algebraic, ctx: &Ctx) -> Value {
    let v = refined(v, ctx);
    match v.as_rational() {
        Some(x) => json!({ "exact": jrat(x) }),
        None => {
            let (lo, hi) = v.bounds();
            json!({ "lo": jrat(&lo), "hi": jrat(&hi), "approx": v.to_f64() })
        }
    }
}

pub fn talg(v: &Algebraic, ctx: &Ctx) -> String {
    refined(v, ctx).to_string()
}

pub fn jroot(r: &RealRoot, ctx: &Ctx) -> Value {
    jalg(&Algebraic::from_root(r.clone()), ctx)
}

pub fn troot(r: &RealRoot, ctx: &Ctx) -> String {
    talg(&Algebraic::from_root(r.clone()), ctx)
}

fn jbound(b: &Bound, ctx: &Ctx) -> Value {
    match b {
        Bound::NegInf => json!("-inf"),
        Bound::PosInf => json!("+inf"),
        Bound::Value(v) => jalg(v, ctx),
    }
}

fn tbound(b: &Bound, ctx: &Ctx) -> String {
    match b {
        Bound::NegInf => "-inf".to_string(),
        Bound::PosInf => "+inf".to_string(),
        Bound::Value(v) => talg(v, ctx),
    }
}

pub fn jinterval(iv: &Interval, ctx: &Ctx) -> Value {
    json!({ "lo": jbound(&iv.lo, ctx), "hi": jbound(&iv.hi, ctx) })
}

pub fn tinterval(iv: &Interval, ctx: &Ctx) -> String {
    format!("]{}, {}[", tbound(&iv.lo, ctx), tbound(&iv.hi, ctx))
}

pub fn verdict_tag(v: &Verdict) -> &'static str {
    match v {
        Verdict::AllRealDistinct => "all-real-distinct",
        Verdict::NotAllReal => "not-all-real",
        Verdict::Degenerate(_) => "degenerate",
        Verdict::HypothesisUnresolved { .. } => "unresolved",
    }
}

fn alternation_tag(a: Alternation) -> &'static str {
    match a {
        Alternation::Holds => "holds",
        Alternation::Fails => "fails",
        Alternation::Boundary => "boundary",
    }
}

pub fn jroots(roots: &RootSet, ctx: &Ctx) -> Value {
    Value::Array(
        roots
            .roots()
            .iter()
            .map(|r| json!({ "root": jroot(&r.root, ctx), "multiplicity": r.multiplicity }))
            .collect(),
    )
}

pub fn troots(roots: &RootSet, ctx: &Ctx) -> Vec<String> {
    roots
        .roots()
        .iter()
        .map(|r| {
            format!(
                "  {} (multiplicity {})",
                troot(&r.root, ctx),
                r.multiplicity
            )
        })
        .collect()
}

pub fn jdegenerate(d: &DegenerateReport, ctx: &Ctx) -> Value {
    json!({
        "kind": d.kind.to_string(),
        "profile": d.profile,
        "real_roots": jroots(&d.real_roots, ctx),
        "witness": d.witness.to_text(),
        "witness_consistent": d.witness_consistent,
    })
}

pub fn tdegenerate(d: &DegenerateReport, ctx: &Ctx) -> Vec<String> {
    let mut out = vec![
        format!("kind: {}", d.kind),
        format!("multiplicities: {:?}", d.profile),
        "real roots:".to_string(),
    ];
    out.extend(troots(&d.real_roots, ctx));
    out.push(format!("witness gcd(P', R): {}", d.witness));
    out.push(format!(
        "witness matches gcd(P, P'): {}",
        d.witness_consistent
    ));
    out
}

pub fn jcertificate(input: &str, cert: &Certificate, ctx: &Ctx) -> Value {
    let levels: Vec<Value> = cert
        .trail
        .iter()
        .map(|l| {
            json!({
                "degree": l.degree,
                "poly": l.poly.to_text(),
                "constant": jrat(&l.constant),
                "derivative_roots": l.deriv_roots.iter().map(|r| jroot(r, ctx)).collect::<Vec<_>>(),
                "signs": l.signs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "interval": l.interval.as_ref().map(|iv| jinterval(iv, ctx)),
                "outcome": alternation_tag(l.outcome),
            })
        })
        .collect();
    json!({
        "command": "certify",
        "input": input,
        "verdict": verdict_tag(&cert.verdict),
        "detail": cert.verdict.to_string(),
        "exit_code": cert.verdict.exit_code(),
        "shift": jrat(&cert.shift),
        "levels": levels,
        "profile": cert.profile_text(),
        "degenerate": cert.degenerate.as_ref().map(|d| jdegenerate(d, ctx)),
    })
}

pub fn tcertificate(input: &str, cert: &Certificate, ctx: &Ctx) -> String {
    let mut out = vec![
        format!("input: {input}"),
        format!("verdict: {}", cert.verdict),
    ];
    if cert.shift.numer().bits() != 0 {
        out.push(format!(
            "depressed by x -> x - {}",
            format_rational(&cert.shift)
        ));
    }
    for l in &cert.trail {
        let mut line = format!("degree {}: {}", l.degree, l.poly);
        if l.degree == 2 {
            line += &format!("  c = {}", format_rational(&l.constant));
        } else {
            line += &format!("  a0 = {}", format_rational(&l.constant));
            if let Some(iv) = &l.interval {
                line += &format!("  interval {}", tinterval(iv, ctx));
            }
            let signs: Vec<String> = l.signs.iter().map(|s| s.to_string()).collect();
            line += &format!("  signs [{}]", signs.join(" "));
        }
        line += &format!("  {}", alternation_tag(l.outcome));
        out.push(line);
    }
    if let Some(p) = cert.profile_text() {
        out.push(format!("profile: {p}"));
    }
    out.join("\n")
}

pub fn jconditions(rep: &ConditionReport) -> Value {
    json!({
        "verdict": rep.verdict.to_string(),
        "conditions": rep.conditions.iter().map(|c| json!({
            "name": c.name,
            "value": c.value.as_ref().map(jrat),
            "holds": c.holds.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn tconditions(title: &str, rep: &ConditionReport) -> Vec<String> {
    let mut out = vec![format!("{title}: {}", rep.verdict)];
    for c in &rep.conditions {
        let value = c.value.as_ref().map(format_rational).unwrap_or_default();
        out.push(format!(
            "  {:<40} {:<9} {}",
            c.name,
            c.holds.to_string(),
            value
        ));
    }
    out
}
