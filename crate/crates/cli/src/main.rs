//! `rootcert`: certify that polynomials have only real, distinct roots.
//!
//! Coefficients are written low-to-high: `"2 -3 0 1"` is `x^3 - 3x + 2`.

mod render;

use std::ffi::OsString;
use std::fs;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rootcert::batch::{compare_corpus, MethodComparison};
use rootcert::builder::{sample_real_rooted_with, SampleOptions, DEFAULT_GATE_RANGE};
use rootcert::conjecture::{batch_report, random_depressed, write_counterexamples};
use rootcert::interlace::{
    a0_interval, certify_all_real_with, decompose, detect_degenerate, CertifyOptions, Membership,
};
use rootcert::quintic::{
    admissible_s_interval, degenerate_consecutive, degenerate_separated, hypothesis_check,
    quartic_conditions, sublevel_s_interval_via_r2_roots, triple_double_point, FamilyMember,
    QuarticParams, QuinticError, QuinticParams,
};
use rootcert::roots::isolate_squarefree;
use rootcert::sturm::{quintic_sturm_conditions, SturmError};
use rootcert::{
    count_real_roots, format_rational, isolate_real_roots, parse_rational, ExtendedRational,
    Polynomial, Rational, DEFAULT_BUDGET,
};

use render::*;

/// Exit status for malformed input.
const EXIT_PARSE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "rootcert",
    version,
    about = "Exact certification of real-rooted polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Refinement rounds allowed for one sign or order decision.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    max_refine: usize,
    /// Width to which reported enclosures are refined.
    #[arg(long, default_value = "1/1000000000000", global = true)]
    tol: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// Coefficients inline (one string or several arguments) or from a file.
#[derive(Args)]
struct PolyInput {
    /// Low-to-high coefficients, e.g. "2 -3 0 1".
    #[arg(num_args = 0..)]
    coeffs: Vec<String>,
    /// Read polynomials from a file, one per line.
    #[arg(long, conflicts_with = "coeffs")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every root is real and simple, with the level trail.
    Certify(PolyInput),
    /// Count distinct real roots in (lo, hi] and list them.
    Count {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        lo: Option<String>,
        #[arg(long)]
        hi: Option<String>,
    },
    /// Admissible interval for the constant term given the other coefficients.
    Interval(PolyInput),
    /// Sample polynomials with only real, distinct roots.
    Build {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1/10")]
        margin: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// The x^(n-2) coefficient is drawn from [-G, 0).
        #[arg(long, default_value_t = DEFAULT_GATE_RANGE.to_string())]
        gate_range: String,
    },
    /// Quintic x^5 + (10p/3)x^3 + 10qx^2 + 20rx + 20s tools.
    Quintic {
        #[command(subcommand)]
        command: QuinticCommand,
    },
    /// Multiplicity structure of a polynomial with repeated roots.
    Degenerate(PolyInput),
    /// Run all three certifiers over a corpus file and report disagreements.
    Compare { file: PathBuf },
    /// Test sign(S_0) = sign(disc) on a corpus or random inputs.
    Conjecture {
        file: Option<PathBuf>,
        /// Number of random depressed inputs (instead of a file).
        #[arg(long, conflicts_with = "file")]
        random: Option<usize>,
        #[arg(long, default_value_t = 5)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write disagreeing inputs.
        #[arg(long)]
        counterexamples: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum QuinticCommand {
    /// All condition sets and the certified verdict for (p, q, r, s).
    Check {
        #[arg(num_args = 4)]
        params: Vec<String>,
    },
    /// Admissible interval for s given (p, q, r).
    SInterval {
        #[arg(num_args = 3)]
        params: Vec<String>,
    },
    /// Parameters where the quintic acquires multiple roots.
    Degenerate {
        #[command(subcommand)]
        family: FamilyCommand,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Two consecutive double roots, given p and r.
    Consecutive { p: String, r: String },
    /// Two double roots around a simple one, given p and r.
    Separated { p: String, r: String },
    /// A triple and a double root, given p.
    Triple { p: String },
}

/// Failure that ends the command with a specific status.
struct Exit(u8);

fn parse_error(what: &str, msg: impl std::fmt::Display) -> Exit {
    eprintln!("error: {what}: {msg}");
    Exit(EXIT_PARSE)
}

fn rational_arg(name: &str, token: &str) -> Result<Rational, Exit> {
    parse_rational(token.trim()).map_err(|e| parse_error(name, e))
}

/// Polynomials with their source text; a file may hold several.
fn read_polys(input: &PolyInput) -> Result<Vec<(String, Polynomial)>, Exit> {
    match &input.file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| parse_error(&path.display().to_string(), e))?;
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.split('#').next().unwrap_or("").trim().is_empty() {
                    continue;
                }
                let p = Polynomial::parse_text(line)
                    .map_err(|e| parse_error(&format!("{}:{}", path.display(), i + 1), e))?;
                out.push((line.trim().to_string(), p));
            }
            Ok(out)
        }
        None => {
            let line = input
                .coeffs
                .iter()
                .map(|c| c.trim())
                .collect::<Vec<_>>()
                .join(" ");
            let p = Polynomial::parse_text(&line).map_err(|e| parse_error("coefficients", e))?;
            Ok(vec![(line, p)])
        }
    }
}

/// Shields negative numbers such as `-9/2` from being read as flags.
fn shield_negatives(args: impl Iterator<Item = OsString>) -> Vec<OsString> {
    args.map(|a| match a.to_str() {
        Some(s)
            if s.len() > 1
                && s.starts_with('-')
                && s[1..].starts_with(|c: char| c.is_ascii_digit() || c == '.') =>
        {
            OsString::from(format!(" {s}"))
        }
        _ => a,
    })
    .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(shield_negatives(std::env::args_os())) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let tol = match parse_rational(cli.tol.trim()) {
        Ok(t) if t > Rational::from_integer(0.into()) => t,
        Ok(_) => return ExitCode::from(parse_error("--tol", "must be positive").0),
        Err(e) => return ExitCode::from(parse_error("--tol", e).0),
    };
    let ctx = Ctx {
        machine: cli.format == Format::Machine,
        budget: cli.max_refine,
        tol,
    };
    let result = match &cli.command {
        Command::Certify(input) => certify(input, &ctx),
        Command::Count { input, lo, hi } => count(input, lo.as_deref(), hi.as_deref(), &ctx),
        Command::Interval(input) => interval(input, &ctx),
        Command::Build {
            degree,
            seed,
            margin,
            count,
            gate_range,
        } => build(*degree, *seed, margin, *count, gate_range, &ctx),
        Command::Quintic { command } => quintic(command, &ctx),
        Command::Degenerate(input) => degenerate(input, &ctx),
        Command::Compare { file } => compare(file, &ctx),
        Command::Conjecture {
            file,
            random,
            degree,
            seed,
            counterexamples,
        } => conjecture(
            file.as_ref(),
            *random,
            *degree,
            *seed,
            counterexamples.as_ref(),
            &ctx,
        ),
    };
    match result {
        Ok(code) | Err(Exit(code)) => ExitCode::from(code),
    }
}

fn certify(input: &PolyInput, ctx: &Ctx) -> Result<u8, Exit> {
    let opts = CertifyOptions {
        max_refine: ctx.budget,
        intervals: true,
    };
    let mut worst = 0;
    for (text, p) in read_polys(input)? {
        let cert = certify_all_real_with(&p, &opts);
        ctx.emit(jcertificate(&text, &cert, ctx), || {
            tcertificate(&text, &cert, ctx)
        });
        worst = worst.max(cert.verdict.exit_code() as u8);
    }
    Ok(worst)
}

fn count(input: &PolyInput, lo: Option<&str>, hi: Option<&str>, ctx: &Ctx) -> Result<u8, Exit> {
    let bound = |name, v: Option<&str>, inf| match v {
        None => Ok(inf),
        Some(t) => rational_arg(name, t).map(ExtendedRational::Finite),
    };
    let a = bound("--lo", lo, ExtendedRational::NegInf)?;
    let b = bound("--hi", hi, ExtendedRational::PosInf)?;
    for (text, p) in read_polys(input)? {
        let n = count_real_roots(&p, &a, &b).map_err(|e| parse_error("polynomial", e))?;
        let inside = |r: &rootcert::RealRoot| {
            let above = match &a {
                ExtendedRational::Finite(x) => r.cmp_rational(x).is_gt(),
                _ => true,
            };
            let below = match &b {
                ExtendedRational::Finite(x) => r.cmp_rational(x).is_le(),
                _ => true,
            };
            above && below
        };
        let roots = isolate_real_roots(&p);
        let listed: Vec<_> = roots.roots().iter().filter(|r| inside(&r.root)).collect();
        let record = json!({
            "command": "count",
            "input": text,
            "count": n,
            "roots": listed.iter().map(|r| json!({
                "root": jroot(&r.root, ctx),
                "multiplicity": r.multiplicity,
            })).collect::<Vec<_>>(),
        });
        ctx.emit(record, || {
            let mut out = vec![
                format!("input: {text}"),
                format!("distinct real roots: {n}"),
            ];
            for r in &listed {
                out.push(format!(
                    "  {} (multiplicity {})",
                    troot(&r.root, ctx),
                    r.multiplicity
                ));
            }
            out.join("\n")
        });
    }
    Ok(0)
}

fn interval(input: &PolyInput, ctx: &Ctx) -> Result<u8, Exit> {
    let mut worst = 0;
    for (text, p) in read_polys(input)? {
        let dep = p.depress().map_err(|e| parse_error("polynomial", e))?;
        let n = dep.poly.degree().unwrap_or(0);
        let d = decompose(&dep.poly).map_err(|e| parse_error("polynomial", e))?;
        let roots = isolate_squarefree(&d.p_nminus1);
        let real_rooted = d.p_nminus1.is_squarefree() && roots.len() + 1 == n;
        let (code, iv, place) = if !real_rooted {
            (1, None, "derivative-not-real-rooted")
        } else {
            match a0_interval(&d.r0, &roots, n, ctx.budget).and_then(|iv| {
                let m = iv.membership(&d.a0, ctx.budget)?;
                Ok((iv, m))
            }) {
                Ok((iv, Membership::Inside)) => (0, Some(iv), "inside"),
                Ok((iv, Membership::OnBoundary)) => (2, Some(iv), "boundary"),
                Ok((iv, Membership::Outside)) => (1, Some(iv), "outside"),
                Err(_) => (3, None, "unresolved"),
            }
        };
        worst = worst.max(code);
        let record = json!({
            "command": "interval",
            "input": text,
            "depressed": dep.poly.to_text(),
            "shift": jrat(&dep.shift),
            "derivative": d.p_nminus1.to_text(),
            "r0": d.r0.to_text(),
            "a0": jrat(&d.a0),
            "interval": iv.as_ref().map(|iv| jinterval(iv, ctx)),
            "a0_position": place,
        });
        ctx.emit(record, || {
            let mut out = vec![
                format!("input: {text}"),
                format!("depressed: {}", dep.poly),
                format!("P' / n: {}", d.p_nminus1),
                format!("R0: {}", d.r0),
            ];
            if let Some(iv) = &iv {
                out.push(format!("a0 interval: {}", tinterval(iv, ctx)));
            }
            out.push(format!("a0 = {}: {place}", format_rational(&d.a0)));
            out.join("\n")
        });
    }
    Ok(worst)
}

fn build(
    degree: usize,
    seed: u64,
    margin: &str,
    count: usize,
    gate: &str,
    ctx: &Ctx,
) -> Result<u8, Exit> {
    let opts = SampleOptions {
        margin: rational_arg("--margin", margin)?,
        gate_range: rational_arg("--gate-range", gate)?,
        budget: ctx.budget,
    };
    for k in 0..count as u64 {
        let s = seed.wrapping_add(k);
        let state =
            sample_real_rooted_with(degree, s, &opts).map_err(|e| parse_error("build", e))?;
        let record = json!({
            "command": "build",
            "seed": s,
            "poly": state.poly.to_text(),
            "constants": state.history.iter().map(|c| json!({
                "degree": c.level,
                "constant": jrat(&c.constant),
                "interval": c.interval.as_ref().map(|iv| jinterval(iv, ctx)),
            })).collect::<Vec<_>>(),
        });
        ctx.emit(record, || state.poly.to_text());
    }
    Ok(0)
}

fn degenerate(input: &PolyInput, ctx: &Ctx) -> Result<u8, Exit> {
    let mut worst = 0;
    for (text, p) in read_polys(input)? {
        let d = detect_degenerate(&p).map_err(|e| parse_error("polynomial", e))?;
        let code = if d.profile.iter().all(|&m| m == 1) {
            0
        } else {
            2
        };
        worst = worst.max(code);
        let mut record = jdegenerate(&d, ctx);
        record["command"] = json!("degenerate");
        record["input"] = json!(text);
        ctx.emit(record, || {
            let mut out = vec![format!("input: {text}")];
            out.extend(tdegenerate(&d, ctx));
            out.join("\n")
        });
    }
    Ok(worst)
}

fn compare(file: &PathBuf, ctx: &Ctx) -> Result<u8, Exit> {
    let text = fs::read_to_string(file).map_err(|e| parse_error(&file.display().to_string(), e))?;
    let mut parse_failures = 0;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.split('#').next().unwrap_or("").trim().is_empty() {
            continue;
        }
        match Polynomial::parse_text(line) {
            Ok(p) => rows.push((i + 1, p)),
            Err(e) => {
                eprintln!("warning: {}:{}: {e}", file.display(), i + 1);
                parse_failures += 1;
            }
        }
    }
    let polys: Vec<Polynomial> = rows.iter().map(|(_, p)| p.clone()).collect();
    let results: Vec<MethodComparison> = compare_corpus(&polys);
    let mut disagreements = 0;
    for ((line, p), m) in rows.iter().zip(&results) {
        disagreements += !m.agree() as usize;
        let record = json!({
            "command": "compare",
            "line": line,
            "poly": p.to_text(),
            "interlace": verdict_tag(&m.interlace),
            "sturm": m.sturm,
            "isolation": m.isolation,
            "agree": m.agree(),
        });
        ctx.emit(record, || {
            format!(
                "{line:>5}  {:<18} sturm={:<5} isolation={:<5} {}",
                verdict_tag(&m.interlace),
                m.sturm,
                m.isolation,
                if m.agree() { "agree" } else { "DISAGREE" }
            )
        });
    }
    let summary = json!({
        "command": "compare",
        "total": results.len(),
        "disagreements": disagreements,
        "parse_failures": parse_failures,
    });
    ctx.emit(summary, || {
        format!(
            "{} polynomials, {disagreements} disagreements, {parse_failures} unparsed lines",
            results.len()
        )
    });
    Ok(if disagreements > 0 {
        1
    } else if parse_failures > 0 {
        EXIT_PARSE
    } else {
        0
    })
}

fn conjecture(
    file: Option<&PathBuf>,
    random: Option<usize>,
    degree: usize,
    seed: u64,
    out: Option<&PathBuf>,
    ctx: &Ctx,
) -> Result<u8, Exit> {
    let polys = match (file, random) {
        (Some(path), _) => {
            let input = PolyInput {
                coeffs: Vec::new(),
                file: Some(path.clone()),
            };
            read_polys(&input)?.into_iter().map(|(_, p)| p).collect()
        }
        (None, Some(n)) => random_depressed(degree, n, seed),
        (None, None) => {
            return Err(parse_error(
                "conjecture",
                "give a corpus file or --random N",
            ))
        }
    };
    let summary = batch_report(&polys);
    if let Some(path) = out {
        let f = fs::File::create(path).map_err(|e| parse_error(&path.display().to_string(), e))?;
        write_counterexamples(BufWriter::new(f), &summary.counterexamples)
            .map_err(|e| parse_error(&path.display().to_string(), e))?;
    }
    let record: serde_json::Value =
        serde_json::from_str(&summary.to_json()).expect("valid summary JSON");
    ctx.emit(record, || summary.to_string());
    Ok(if summary.disagreements > 0 { 1 } else { 0 })
}

fn quintic(command: &QuinticCommand, ctx: &Ctx) -> Result<u8, Exit> {
    match command {
        QuinticCommand::Check { params } => {
            let v = parse_params(params)?;
            quintic_check(
                QuinticParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()),
                ctx,
            )
        }
        QuinticCommand::SInterval { params } => {
            let v = parse_params(params)?;
            s_interval(
                QuarticParams::new(v[0].clone(), v[1].clone(), v[2].clone()),
                ctx,
            )
        }
        QuinticCommand::Degenerate { family } => family_command(family, ctx),
    }
}

fn parse_params(params: &[String]) -> Result<Vec<Rational>, Exit> {
    let names = ["p", "q", "r", "s"];
    params
        .iter()
        .zip(names)
        .map(|(t, n)| rational_arg(n, t))
        .collect()
}

fn quintic_error_tag(e: &QuinticError) -> &'static str {
    match e {
        QuinticError::NotDepressed(_) => "not-depressed",
        QuinticError::PreconditionFailed(_) => "precondition-failed",
        QuinticError::HypothesisFailed => "hypothesis-failed",
        QuinticError::NegativeDelta2 => "negative-delta2",
        QuinticError::OutOfRange(_) => "out-of-range",
        QuinticError::Unresolved(_) => "unresolved",
    }
}

fn quintic_error(e: &QuinticError) -> serde_json::Value {
    json!({ "error": quintic_error_tag(e), "message": e.to_string() })
}

fn quintic_check(qp: QuinticParams, ctx: &Ctx) -> Result<u8, Exit> {
    let p5 = qp.assemble();
    let (sturm, pivot) = match quintic_sturm_conditions(&qp) {
        Ok(rep) => (rep, None),
        Err(SturmError::DegenerateChain { pivot, report }) => (*report, Some(pivot.to_string())),
        Err(e) => return Err(parse_error("quintic", e)),
    };
    let quartic = qp.quartic();
    let qc = quartic_conditions(&quartic, ctx.budget);
    let hyp = hypothesis_check(&quartic, ctx.budget);
    let cert = certify_all_real_with(
        &p5,
        &CertifyOptions {
            max_refine: ctx.budget,
            intervals: true,
        },
    );
    let record = json!({
        "command": "quintic-check",
        "poly": p5.to_text(),
        "sturm_conditions": jconditions(&sturm),
        "sturm_pivot_vanishes": pivot,
        "quartic_conditions": jconditions(&qc),
        "hypothesis": match &hyp {
            Ok(h) => json!({
                "holds": h.holds.to_string(),
                "via_x": h.via_x.to_string(),
                "case": h.case.to_string(),
                "x": jalg(&h.x, ctx),
            }),
            Err(e) => quintic_error(e),
        },
        "certificate": jcertificate(&p5.to_text(), &cert, ctx),
    });
    ctx.emit(record, || {
        let mut out = vec![format!("quintic: {p5}")];
        out.extend(tconditions("sturm conditions", &sturm));
        if let Some(piv) = &pivot {
            out.push(format!(
                "  chain pivot {piv} vanishes; conditions are not decisive"
            ));
        }
        out.extend(tconditions("derivative conditions", &qc));
        match &hyp {
            Ok(h) => out.push(format!(
                "hypothesis on s-interval: {} (case {}, X = {})",
                h.holds,
                h.case,
                talg(&h.x, ctx)
            )),
            Err(e) => out.push(format!("hypothesis on s-interval: {e}")),
        }
        out.push(format!("verdict: {}", cert.verdict));
        if let Some(p) = cert.profile_text() {
            out.push(format!("profile: {p}"));
        }
        out.join("\n")
    });
    Ok(cert.verdict.exit_code() as u8)
}

fn s_interval(qp: QuarticParams, ctx: &Ctx) -> Result<u8, Exit> {
    let qc = quartic_conditions(&qp, ctx.budget);
    let iv = admissible_s_interval(&qp, ctx.budget);
    let sub = sublevel_s_interval_via_r2_roots(&qp, ctx.budget);
    let empty = match &iv {
        Ok(iv) => iv.is_empty(ctx.budget).ok(),
        Err(_) => None,
    };
    let record = json!({
        "command": "quintic-s-interval",
        "quartic_conditions": jconditions(&qc),
        "s_interval": match &iv {
            Ok(iv) => json!({ "interval": jinterval(iv, ctx), "empty": empty }),
            Err(e) => quintic_error(e),
        },
        "r3_three_real_roots": match &sub {
            Ok(s) => json!({
                "interval": jinterval(&s.interval, ctx),
                "delta2": jrat(&s.delta2),
                "closed_form_agrees": s.closed_form_agrees,
            }),
            Err(e) => quintic_error(e),
        },
    });
    ctx.emit(record, || {
        let mut out = tconditions("derivative conditions", &qc);
        match &iv {
            Ok(iv) => {
                let tag = match empty {
                    Some(true) => " (empty)",
                    Some(false) => "",
                    None => " (endpoint order unresolved)",
                };
                out.push(format!("s interval: {}{tag}", tinterval(iv, ctx)));
            }
            Err(e) => out.push(format!("s interval: none, {e}")),
        }
        match &sub {
            Ok(s) => out.push(format!(
                "R3 has three real roots for s in {} (delta2 = {})",
                tinterval(&s.interval, ctx),
                format_rational(&s.delta2)
            )),
            Err(e) => out.push(format!("R3 interval: none, {e}")),
        }
        out.join("\n")
    });
    Ok(match (&iv, empty) {
        (Ok(_), Some(false)) => 0,
        (Ok(_), None) | (Err(QuinticError::Unresolved(_)), _) => 3,
        _ => 1,
    })
}

fn family_command(family: &FamilyCommand, ctx: &Ctx) -> Result<u8, Exit> {
    let (name, members) = match family {
        FamilyCommand::Triple { p } => return triple(&rational_arg("p", p)?, ctx),
        FamilyCommand::Consecutive { p, r } => {
            let (p, r) = (rational_arg("p", p)?, rational_arg("r", r)?);
            ("consecutive", degenerate_consecutive(&p, &r, ctx.budget))
        }
        FamilyCommand::Separated { p, r } => {
            let (p, r) = (rational_arg("p", p)?, rational_arg("r", r)?);
            ("separated", degenerate_separated(&p, &r, ctx.budget))
        }
    };
    let members = match members {
        Ok(m) => m,
        Err(e) => {
            ctx.emit(json!({ "command": "quintic-degenerate", "family": name, "result": quintic_error(&e) }), || {
                format!("{name}: {e}")
            });
            return Ok(if matches!(e, QuinticError::Unresolved(_)) {
                3
            } else {
                1
            });
        }
    };
    let jm = |m: &FamilyMember| {
        json!({
            "q": jalg(&m.q, ctx),
            "s": jalg(&m.s, ctx),
            "y": jalg(&m.y, ctx),
            "x": jalg(&m.x, ctx),
            "exact": m.params.as_ref().map(|qp| qp.assemble().to_text()),
            "residual_vanishes": m.residual_vanishes(),
        })
    };
    let record = json!({
        "command": "quintic-degenerate",
        "family": name,
        "members": members.iter().map(jm).collect::<Vec<_>>(),
    });
    ctx.emit(record, || {
        let mut out = vec![format!("{name} family, {} members", members.len())];
        for m in &members {
            out.push(format!("  q = {}", talg(&m.q, ctx)));
            out.push(format!("  s = {}", talg(&m.s, ctx)));
            if let Some(qp) = &m.params {
                out.push(format!("  quintic: {}", qp.assemble()));
            }
            out.push(format!(
                "  factorization residual vanishes: {}",
                m.residual_vanishes()
            ));
        }
        out.join("\n")
    });
    Ok(0)
}

fn triple(p: &Rational, ctx: &Ctx) -> Result<u8, Exit> {
    let v = match triple_double_point(p) {
        Ok(v) => v,
        Err(e) => {
            ctx.emit(json!({ "command": "quintic-degenerate", "family": "triple", "result": quintic_error(&e) }), || {
                format!("triple: {e}")
            });
            return Ok(1);
        }
    };
    let record = json!({
        "command": "quintic-degenerate",
        "family": "triple",
        "members": v.iter().map(|t| json!({
            "q": jalg(&t.q, ctx),
            "r": jrat(&t.r),
            "s": jalg(&t.s, ctx),
            "exact": t.params.as_ref().map(|qp| qp.assemble().to_text()),
        })).collect::<Vec<_>>(),
    });
    ctx.emit(record, || {
        let mut out = vec!["triple and double root".to_string()];
        for t in &v {
            out.push(format!(
                "  q = {}, r = {}, s = {}",
                talg(&t.q, ctx),
                format_rational(&t.r),
                talg(&t.s, ctx)
            ));
            if let Some(qp) = &t.params {
                out.push(format!("  quintic: {}", qp.assemble()));
            }
        }
        out.join("\n")
    });
    Ok(0)
}
