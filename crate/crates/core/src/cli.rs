//! The `moment-forge` command line.
//!
//! Exit codes: 0 when the computation finished and any property it checks
//! held within the window, 1 for an interesting finding (a counterexample
//! candidate, a failed congruence or crosscheck, a failed self-test), 2 for
//! usage errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::functionals::{
    apply_en, halfdisk_integral, hermite_pairing, hermite_pairing_via_en, torus_ct, FunctionalKind,
};
use crate::harness::{
    default_pairing, double_homog_reduce, frobenius_certificate, gaussian_torus_crosscheck,
    mz_probe, one_ps_check, vanish_scan, CertStatus, OnePs, Pairing, ProbeVerdict,
    VanishingProfile, DEFAULT_WINDOW,
};
use crate::io::format::{default_names, format_poly};
use crate::io::parser::{parse_laurent, parse_poly, validate_variables, PolySource, Ring};
use crate::io::report;
use crate::poly::{AnyPoly, LaurentPoly, MPoly};
use crate::scalar::ExactValue;
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDING: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const GRAMMAR: &str = "\
Polynomial grammar (multiplication must be explicit):
  expr     := ('+'|'-')? term (('+'|'-') term)*
  term     := factor ('*' factor)*
  factor   := base ('^' integer)?
  base     := rational | 'i' | identifier | '(' expr ')'
  rational := integer ('/' positive-integer)?
Negative exponents are accepted only for the torus functional.
Example: --vars x,y --poly \"(x+i*y)^2 - 3/2*x*y\"";

#[derive(Parser, Debug)]
#[command(
    name = "moment-forge",
    version,
    about = "Exact Gaussian moments, torus constant terms and Mathieu-Zhao probes",
    after_help = GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vanishing profile L(P^m), m = 1..M
    Moments(PolyArgs),
    /// Profile of L(P^m) together with L(P^m Q)
    Probe(PolyArgs),
    /// Hermite pairing F_n(P) with variables (w1..wn, z1..zn)
    Pairing(PolyArgs),
    /// E_n(P) = P(d/dz) Q(z) with variables (w1..wn, z1..zn)
    En(PolyArgs),
    /// Exact integral over the upper half of the unit disk
    Halfdisk(PolyArgs),
    /// Constant term of a Laurent polynomial
    Torus(PolyArgs),
    /// Angular part F_L of a doubly homogeneous polynomial
    Reduce(PolyArgs),
    /// Compare Gaussian moments of P^m with constant terms of F_L^m
    Crosscheck(PolyArgs),
    /// Nonvanishing certificate from E[F^p] = F(0) (mod p)
    Cert(PolyArgs),
    /// Hilbert-Mumford membership P(lambda(t) x) in t C[t][x]
    #[command(name = "one-ps")]
    OnePs(PolyArgs),
    /// Run the acceptance suite and print a pass/fail ledger
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Comma-separated variable names, in order
    #[arg(long)]
    vars: Option<String>,
    /// The polynomial P (or F)
    #[arg(long)]
    poly: Option<String>,
    /// Companion polynomial Q for `probe`
    #[arg(long)]
    q: Option<String>,
    /// gaussian, hermite_pairing, halfdisk or torus_ct
    #[arg(long, default_value = "gaussian")]
    functional: String,
    /// Window bound M
    #[arg(short = 'M', long = "bound", default_value_t = DEFAULT_WINDOW)]
    bound: u32,
    /// Odd prime for `cert`
    #[arg(short = 'p', long = "prime")]
    prime: Option<u64>,
    /// Rows separated by ';', entries by ',', each a Laurent polynomial in t;
    /// or `rotation`
    #[arg(long)]
    lambda: Option<String>,
    /// Variable pairs such as `x1:y1,x2:y2`; default pairs k with n+k
    #[arg(long)]
    pairing: Option<String>,
    #[arg(long, value_enum, default_value_t = Output::Table)]
    output: Output,
    /// Seed for randomized procedures
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only the listed criteria, e.g. `--only 1,5,10`
    #[arg(long, value_delimiter = ',')]
    only: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Output::Table)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
}

/// What a command produced: its exit code and the text for each stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n\n{GRAMMAR}\n\nRun `moment-forge --help` for the flag synopsis.\n"),
        }
    }
}

/// A usage error raised while interpreting arguments.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Usage>;

/// Runs the command line `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => Outcome::usage(
                    e.render()
                        .to_string()
                        .trim_end()
                        .trim_start_matches("error: "),
                ),
            };
        }
    };
    let result = match &cli.command {
        Command::Moments(a) => moments(a),
        Command::Probe(a) => probe(a),
        Command::Pairing(a) => pairing(a),
        Command::En(a) => en(a),
        Command::Halfdisk(a) => halfdisk(a),
        Command::Torus(a) => torus(a),
        Command::Reduce(a) => reduce(a),
        Command::Crosscheck(a) => crosscheck(a),
        Command::Cert(a) => cert(a),
        Command::OnePs(a) => one_ps(a),
        Command::Selftest(a) => selftest_cmd(a),
    };
    match result {
        Ok(o) => o,
        Err(Usage(msg)) => Outcome::usage(msg),
    }
}

/// Parsed polynomial inputs shared by every subcommand.
struct Inputs {
    vars: Vec<String>,
    p: AnyPoly,
    q: Option<AnyPoly>,
}

impl PolyArgs {
    fn variables(&self) -> Run<Vec<String>> {
        let text = self
            .vars
            .as_deref()
            .ok_or_else(|| Usage("--vars is required".into()))?;
        let vars: Vec<String> = if text.trim().is_empty() {
            Vec::new()
        } else {
            text.split(',').map(|s| s.trim().to_string()).collect()
        };
        validate_variables(&vars).map_err(|e| Usage(format!("--vars: {}", e.kind)))?;
        Ok(vars)
    }

    fn functional(&self) -> Run<FunctionalKind> {
        Ok(self.functional.parse::<FunctionalKind>()?)
    }

    fn inputs(&self, ring: Ring, with_q: bool) -> Run<Inputs> {
        let vars = self.variables()?;
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        let read = |flag: &str, text: &str| -> Run<AnyPoly> {
            parse_poly(&PolySource::new(text, ring, &refs))
                .map_err(|e| Usage(format!("{flag}: {e}")))
        };
        let text = self
            .poly
            .as_deref()
            .ok_or_else(|| Usage("--poly is required".into()))?;
        let p = read("--poly", text)?;
        let q = match (&self.q, with_q) {
            (Some(t), true) => Some(read("--q", t)?),
            (None, true) => return Err(Usage("--q is required".into())),
            (Some(_), false) => return Err(Usage("--q is only used by `probe`".into())),
            (None, false) => None,
        };
        Ok(Inputs { vars, p, q })
    }

    fn bound(&self) -> Run<u32> {
        if self.bound == 0 {
            return Err(Usage("-M must be at least 1".into()));
        }
        Ok(self.bound)
    }

    fn echo(&self, subcommand: &str, extra: Vec<(&str, Value)>) -> Value {
        let mut pairs = vec![("subcommand", json!(subcommand))];
        if let Some(v) = &self.vars {
            pairs.push(("vars", json!(v)));
        }
        if let Some(p) = &self.poly {
            pairs.push(("poly", json!(p)));
        }
        pairs.extend(extra);
        report::object(pairs)
    }
}

fn ring_for(functional: FunctionalKind) -> Ring {
    if functional == FunctionalKind::TorusCt {
        Ring::Laurent
    } else {
        Ring::Poly
    }
}

fn text_of(p: &AnyPoly, vars: &[String]) -> String {
    match p {
        AnyPoly::Poly(p) => format_poly(p, vars),
        AnyPoly::Laurent(f) => format_poly(f, vars),
    }
}

fn emit(output: Output, table: String, command: Value, result: Value, code: i32) -> Outcome {
    let stdout = match output {
        Output::Table => table,
        Output::Json => {
            let doc = report::document(command, result);
            debug_assert!(report::validate(&doc).is_ok());
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn opt_index(v: Option<u32>) -> Value {
    v.map_or(Value::Null, |m| json!(m))
}

fn values_json(values: &[ExactValue]) -> Value {
    Value::Array(values.iter().map(|v| json!(v.to_string())).collect())
}

fn profile_table(out: &mut String, prof: &VanishingProfile, label: &str) {
    let _ = writeln!(out, "m\t{label}");
    for (k, v) in prof.values.iter().enumerate() {
        let _ = writeln!(out, "{}\t{v}", k + 1);
    }
}

fn moments(a: &PolyArgs) -> Run<Outcome> {
    let functional = a.functional()?;
    let bound = a.bound()?;
    let inp = a.inputs(ring_for(functional), false)?;
    let prof = vanish_scan(&inp.p, functional, bound)?;
    // an all-zero Gaussian profile of a nonzero univariate P would contradict
    // the one-variable case of the conjecture
    let candidate = functional == FunctionalKind::Gaussian
        && inp.vars.len() == 1
        && prof.all_zero
        && !inp.p.is_zero();
    let mut t = String::new();
    let _ = writeln!(t, "functional: {functional}");
    let _ = writeln!(t, "P = {}", text_of(&prof.poly, &inp.vars));
    let _ = writeln!(t, "window: m = 1..{bound}");
    profile_table(&mut t, &prof, "L(P^m)");
    match prof.first_nonzero {
        Some(m) => {
            let _ = writeln!(t, "first nonzero: m = {m}");
        }
        None => {
            let _ = writeln!(
                t,
                "first nonzero: none; all {bound} values vanish within the window"
            );
        }
    }
    if candidate {
        let _ = writeln!(
            t,
            "counterexample candidate: nonzero univariate P with vanishing moments"
        );
    }
    let result = json!({
        "functional": functional.tag(),
        "poly": text_of(&prof.poly, &inp.vars),
        "bound": bound,
        "values": values_json(&prof.values),
        "first_nonzero": opt_index(prof.first_nonzero),
        "all_zero": prof.all_zero,
        "counterexample_candidate": candidate,
    });
    let command = a.echo(
        "moments",
        vec![("functional", json!(functional.tag())), ("M", json!(bound))],
    );
    let code = if candidate { EXIT_FINDING } else { EXIT_OK };
    Ok(emit(a.output, t, command, result, code))
}

fn probe(a: &PolyArgs) -> Run<Outcome> {
    let functional = a.functional()?;
    let bound = a.bound()?;
    let inp = a.inputs(ring_for(functional), true)?;
    let q = inp.q.expect("required above");
    let r = mz_probe(&inp.p, &q, functional, bound)?;
    let verdict = r.verdict();
    let verdict_text = match verdict {
        ProbeVerdict::HypothesisFails => "hypothesis fails: some L(P^m) is nonzero",
        ProbeVerdict::Consistent => {
            "consistent: all L(P^m) vanish and L(P^m Q) vanishes eventually within the window"
        }
        ProbeVerdict::CounterexampleCandidate => {
            "counterexample candidate: all L(P^m) vanish but L(P^M Q) is nonzero"
        }
    };
    let mut t = String::new();
    let _ = writeln!(t, "functional: {functional}");
    let _ = writeln!(t, "P = {}", text_of(&r.profile.poly, &inp.vars));
    let _ = writeln!(t, "Q = {}", text_of(&r.companion_poly, &inp.vars));
    let _ = writeln!(t, "window: m = 1..{bound}");
    let _ = writeln!(t, "m\tL(P^m)\tL(P^m Q)");
    for (k, (v, c)) in r.profile.values.iter().zip(&r.companion).enumerate() {
        let _ = writeln!(t, "{}\t{v}\t{c}", k + 1);
    }
    match r.zero_from {
        Some(m) => {
            let _ = writeln!(t, "L(P^m Q) = 0 for m = {m}..{bound}");
        }
        None => {
            let _ = writeln!(t, "L(P^m Q) is nonzero at m = {bound}");
        }
    }
    let _ = writeln!(t, "verdict: {verdict_text}");
    let tag = match verdict {
        ProbeVerdict::HypothesisFails => "hypothesis_fails",
        ProbeVerdict::Consistent => "consistent",
        ProbeVerdict::CounterexampleCandidate => "counterexample_candidate",
    };
    let result = json!({
        "functional": functional.tag(),
        "bound": bound,
        "values": values_json(&r.profile.values),
        "first_nonzero": opt_index(r.profile.first_nonzero),
        "all_zero": r.profile.all_zero,
        "companion": values_json(&r.companion),
        "last_nonzero": opt_index(r.last_nonzero),
        "zero_from": opt_index(r.zero_from),
        "eventually_zero_up_to_m": r.eventually_zero_up_to_m,
        "verdict": tag,
    });
    let command = a.echo(
        "probe",
        vec![
            ("q", json!(a.q)),
            ("functional", json!(functional.tag())),
            ("M", json!(bound)),
        ],
    );
    let code = if verdict == ProbeVerdict::CounterexampleCandidate {
        EXIT_FINDING
    } else {
        EXIT_OK
    };
    Ok(emit(a.output, t, command, result, code))
}

fn mpoly(inp: &Inputs) -> MPoly {
    inp.p.as_poly().expect("parsed in the polynomial ring")
}

fn pairing(a: &PolyArgs) -> Run<Outcome> {
    let inp = a.inputs(Ring::Poly, false)?;
    let p = mpoly(&inp);
    let value = hermite_pairing(&p)?;
    let via_en = hermite_pairing_via_en(&p)?;
    if value != via_en {
        return Ok(Outcome {
            code: EXIT_FINDING,
            stdout: String::new(),
            stderr: format!("internal inconsistency: F_n = {value}, E_n path = {via_en}\n"),
        });
    }
    let t = format!("F_n(P) = {value}\n");
    let result = json!({ "value": value.to_string() });
    Ok(emit(
        a.output,
        t,
        a.echo("pairing", vec![]),
        result,
        EXIT_OK,
    ))
}

fn en(a: &PolyArgs) -> Run<Outcome> {
    let inp = a.inputs(Ring::Poly, false)?;
    let p = mpoly(&inp);
    let image = apply_en(&p)?;
    let z_names = inp.vars[inp.vars.len() / 2..].to_vec();
    let text = format_poly(&image, &z_names);
    let at_zero = image.constant_term();
    let t = format!("E_n(P) = {text}\nE_n(P)|_(z=0) = {at_zero}\n");
    let result = json!({
        "image": text,
        "variables": z_names,
        "at_zero": at_zero.to_string(),
    });
    Ok(emit(a.output, t, a.echo("en", vec![]), result, EXIT_OK))
}

fn halfdisk(a: &PolyArgs) -> Run<Outcome> {
    let inp = a.inputs(Ring::Poly, false)?;
    let value = halfdisk_integral(&mpoly(&inp))?;
    let t = format!("halfdisk(P) = {value}\n");
    let result = json!({
        "value": value.to_string(),
        "rational_part": value.rat.to_string(),
        "pi_part": value.pi.to_string(),
    });
    Ok(emit(
        a.output,
        t,
        a.echo("halfdisk", vec![]),
        result,
        EXIT_OK,
    ))
}

fn torus(a: &PolyArgs) -> Run<Outcome> {
    let inp = a.inputs(Ring::Laurent, false)?;
    let value = torus_ct(&inp.p.as_laurent());
    let t = format!("CT(F) = {value}\n");
    let result = json!({ "value": value.to_string() });
    Ok(emit(a.output, t, a.echo("torus", vec![]), result, EXIT_OK))
}

fn parse_pairing(text: Option<&str>, vars: &[String]) -> Run<Pairing> {
    let Some(text) = text else {
        return Ok(default_pairing(vars.len())?);
    };
    let index = |name: &str| -> Run<usize> {
        vars.iter()
            .position(|v| v == name.trim())
            .ok_or_else(|| Usage(format!("--pairing: unknown variable `{}`", name.trim())))
    };
    text.split(',')
        .map(|pair| {
            let (x, y) = pair
                .split_once(':')
                .ok_or_else(|| Usage(format!("--pairing: expected `x:y`, found `{pair}`")))?;
            Ok((index(x)?, index(y)?))
        })
        .collect()
}

fn angular_names(n: usize) -> Vec<String> {
    default_names("z", n)
}

fn degrees_json(d: &[u32]) -> Value {
    Value::Array(d.iter().map(|&k| json!(k)).collect())
}

fn pairing_echo(a: &PolyArgs) -> Vec<(&'static str, Value)> {
    a.pairing
        .as_ref()
        .map(|p| vec![("pairing", json!(p))])
        .unwrap_or_default()
}

fn reduce(a: &PolyArgs) -> Run<Outcome> {
    let inp = a.inputs(Ring::Poly, false)?;
    let pairing = parse_pairing(a.pairing.as_deref(), &inp.vars)?;
    let r = double_homog_reduce(&mpoly(&inp), &pairing)?;
    let names = angular_names(pairing.len());
    let text = format_poly(&r.angular, &names);
    let pairs: Vec<String> = r
        .pairing
        .iter()
        .map(|&(x, y)| format!("({}, {})", inp.vars[x], inp.vars[y]))
        .collect();
    let mut t = String::new();
    let _ = writeln!(t, "pairs: {}", pairs.join(", "));
    let _ = writeln!(t, "degrees: {:?}", r.degrees);
    let _ = writeln!(t, "F_L = {text}");
    let result = json!({
        "degrees": degrees_json(&r.degrees),
        "angular": text,
        "angular_variables": names,
    });
    Ok(emit(
        a.output,
        t,
        a.echo("reduce", pairing_echo(a)),
        result,
        EXIT_OK,
    ))
}

fn crosscheck(a: &PolyArgs) -> Run<Outcome> {
    let bound = a.bound()?;
    let inp = a.inputs(Ring::Poly, false)?;
    let pairing = parse_pairing(a.pairing.as_deref(), &inp.vars)?;
    let r = gaussian_torus_crosscheck(&mpoly(&inp), &pairing, bound)?;
    let names = angular_names(pairing.len());
    let mut t = String::new();
    let _ = writeln!(t, "degrees: {:?}", r.reduction.degrees);
    let _ = writeln!(t, "F_L = {}", format_poly(&r.reduction.angular, &names));
    let _ = writeln!(t, "m\tE[P^m]\tCT(F_L^m)\tA_m\tcheck");
    let mut rows = Vec::new();
    for row in &r.rows {
        let scale = row
            .scale
            .as_ref()
            .map_or("-".to_string(), |s| s.to_string());
        let check = match (row.vanishing_agrees, row.ratio_holds) {
            (false, _) => "vanishing differs",
            (true, Some(false)) => "ratio fails",
            (true, Some(true)) => "ratio holds",
            (true, None) => "vanishing agrees",
        };
        let _ = writeln!(
            t,
            "{}\t{}\t{}\t{scale}\t{check}",
            row.m, row.gaussian, row.torus
        );
        rows.push(json!({
            "m": row.m,
            "gaussian": row.gaussian.to_string(),
            "torus": row.torus.to_string(),
            "scale": row.scale.as_ref().map(|s| s.to_string()),
            "vanishing_agrees": row.vanishing_agrees,
            "ratio_holds": row.ratio_holds,
        }));
    }
    let _ = writeln!(
        t,
        "{}",
        if r.holds {
            "crosscheck holds for every m in the window"
        } else {
            "crosscheck FAILED"
        }
    );
    let result = json!({
        "degrees": degrees_json(&r.reduction.degrees),
        "angular": format_poly(&r.reduction.angular, &names),
        "rows": rows,
        "holds": r.holds,
    });
    let mut extra = pairing_echo(a);
    extra.push(("M", json!(bound)));
    let code = if r.holds { EXIT_OK } else { EXIT_FINDING };
    Ok(emit(a.output, t, a.echo("crosscheck", extra), result, code))
}

fn cert(a: &PolyArgs) -> Run<Outcome> {
    let p = a.prime.ok_or_else(|| Usage("-p is required".into()))?;
    let inp = a.inputs(Ring::Poly, false)?;
    let r = frobenius_certificate(&mpoly(&inp), p)?;
    let relation = if r.valid { "≡" } else { "≢" };
    let mut t = format!(
        "Φ(F^{p}) = {} {relation} {} (mod {p}): {}",
        r.exact_value, r.expected, r.status
    );
    if r.status == CertStatus::Inconclusive {
        let _ = write!(t, " ({p} divides F(0))");
    }
    t.push('\n');
    let status = match r.status {
        CertStatus::Certified => "certified",
        CertStatus::Inconclusive => "inconclusive",
        CertStatus::CongruenceFailed => "congruence_failed",
    };
    let result = json!({
        "prime": p,
        "value": r.exact_value.to_string(),
        "residue": r.residue.to_string(),
        "expected": r.expected.to_string(),
        "valid": r.valid,
        "status": status,
    });
    let code = if r.status == CertStatus::CongruenceFailed {
        EXIT_FINDING
    } else {
        EXIT_OK
    };
    Ok(emit(
        a.output,
        t,
        a.echo("cert", vec![("p", json!(p))]),
        result,
        code,
    ))
}

fn parse_lambda(text: &str) -> Run<OnePs> {
    if text.trim() == "rotation" {
        return Ok(OnePs::rotation());
    }
    let mut matrix: Vec<Vec<LaurentPoly>> = Vec::new();
    for row in text.split(';') {
        let entries = row
            .split(',')
            .map(|e| {
                parse_laurent(e, &["t"])
                    .map_err(|err| Usage(format!("--lambda entry `{}`: {err}", e.trim())))
            })
            .collect::<Run<Vec<_>>>()?;
        matrix.push(entries);
    }
    Ok(OnePs::new(matrix)?)
}

fn one_ps(a: &PolyArgs) -> Run<Outcome> {
    let lambda_text = a
        .lambda
        .as_deref()
        .ok_or_else(|| Usage("--lambda is required".into()))?;
    let lambda = parse_lambda(lambda_text)?;
    let inp = a.inputs(Ring::Poly, false)?;
    let r = one_ps_check(&mpoly(&inp), &lambda)?;
    let mut names = vec!["t".to_string()];
    names.extend(inp.vars.iter().cloned());
    if names[1..].iter().any(|v| v == "t") {
        return Err(Usage(
            "`t` is the subgroup parameter; choose other variable names".into(),
        ));
    }
    let show = |e: Option<i32>| e.map_or("none (P = 0)".to_string(), |e| e.to_string());
    let mut t = String::new();
    let _ = writeln!(t, "P(λ(t)x) = {}", format_poly(&r.substituted, &names));
    let _ = writeln!(
        t,
        "λ(t):   min t-exponent {}, {}",
        show(r.min_t_exponent),
        if r.member {
            "member of tC[t][x]"
        } else {
            "not a member"
        }
    );
    let _ = writeln!(
        t,
        "λ(t⁻¹): min t-exponent {}, {}",
        show(r.inverse_min_t_exponent),
        if r.inverse_member {
            "member of tC[t][x]"
        } else {
            "not a member"
        }
    );
    let signed = |e: Option<i32>| e.map_or(Value::Null, |e| json!(e.to_string()));
    let result = json!({
        "substituted": format_poly(&r.substituted, &names),
        "min_t_exponent": signed(r.min_t_exponent),
        "member": r.member,
        "inverse_min_t_exponent": signed(r.inverse_min_t_exponent),
        "inverse_member": r.inverse_member,
    });
    let command = a.echo("one-ps", vec![("lambda", json!(lambda_text))]);
    Ok(emit(a.output, t, command, result, EXIT_OK))
}

fn selftest_cmd(a: &SelftestArgs) -> Run<Outcome> {
    let ids: Vec<u32> = if a.only.is_empty() {
        selftest::CRITERIA.iter().map(|c| c.0).collect()
    } else {
        a.only.clone()
    };
    let mut outcomes = Vec::new();
    let mut stderr = String::new();
    for id in ids {
        let o = selftest::run_criterion(id, a.seed)
            .ok_or_else(|| Usage(format!("no acceptance criterion {id} (expected 1..11)")))?;
        let _ = writeln!(stderr, "criterion {id}: {:.2}s", o.elapsed.as_secs_f64());
        outcomes.push(o);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut t = String::new();
    for o in &outcomes {
        let _ = writeln!(t, "{}", o.ledger_line());
    }
    let _ = writeln!(t, "{} passed, {failed} failed", outcomes.len() - failed);
    let result = json!({
        "seed": a.seed,
        "criteria": outcomes.iter().map(|o| json!({
            "id": o.id,
            "name": o.name,
            "passed": o.passed,
            "detail": o.detail,
        })).collect::<Vec<_>>(),
        "failed": failed,
    });
    let command = json!({ "subcommand": "selftest", "seed": a.seed });
    let code = if failed == 0 { EXIT_OK } else { EXIT_FINDING };
    let mut out = emit(a.output, t, command, result, code);
    out.stderr = stderr;
    Ok(out)
}

/// Sizes the global thread pool from `MOMENT_FORGE_THREADS`.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(value) = std::env::var("MOMENT_FORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("MOMENT_FORGE_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}
