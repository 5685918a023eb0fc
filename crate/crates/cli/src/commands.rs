use std::collections::BTreeMap;
use std::fmt::Write;
use std::io::Read;

use kalvar_core::arith::{Field, FieldTag, PrimeField, RationalField};
use kalvar_core::degrees::{
    degree_all, degree_grid, expand_degree_series, multidegree_incidence, schur_decompose, DegreeMethod,
};
use kalvar_core::groebner_d2::{
    agreement_threshold, gb_reports, hilbert_function, hilbert_polynomial, hilbert_series_closed,
};
use kalvar_core::kalman::{
    brute_force_member, census_text, degree_census, kalman_matrix, make_witness, membership, reduced_kalman_matrix,
    reduced_kalman_symbolic, small_kalman_matrix, stratum_generators, symbolic_matrix, GeneratorSource, StratumSpec,
    DEFAULT_ENUMERATION_CAP,
};
use kalvar_core::matrix::{Matrix, MatrixJson};
use kalvar_core::polyring::{buchberger_complete, Budget, CompletionStatus, MultiPoly, PolyRing};
use kalvar_core::Error;
use serde_json::{json, Value};

use crate::{MatrixKind, MethodArg, StratumArgs};

/// Text to print and whether the command's checks passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CriteriaDisagree { .. }
            | Error::NotSymmetric
            | Error::NonIntegralSchur { .. }
            | Error::NonIntegerDegree(_)
            | Error::NonIntegralSeries(_) => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<Output, CliError>;

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn stratum(a: StratumArgs) -> Result<StratumSpec, CliError> {
    Ok(StratumSpec::new(a.s, a.d, a.n)?)
}

fn source(kind: MatrixKind) -> GeneratorSource {
    match kind {
        MatrixKind::Full => GeneratorSource::Full,
        MatrixKind::Small => GeneratorSource::Small,
        MatrixKind::Reduced => GeneratorSource::Reduced,
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut buf = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut buf).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| buf = s)
    };
    res.map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
    Ok(buf)
}

fn read_matrix_json(path: &str) -> Result<MatrixJson, CliError> {
    serde_json::from_str(&read_input(path)?).map_err(|e| CliError::usage(format!("malformed matrix JSON: {e}")))
}

/// Runs `$body` with `$f` bound to the field selected by an optional modulus.
macro_rules! with_field {
    ($p:expr, $f:ident => $body:expr) => {
        match $p {
            None => {
                let $f = &RationalField;
                $body
            }
            Some(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn field_modulus(tag: FieldTag) -> Option<u64> {
    match tag {
        FieldTag::Q => None,
        FieldTag::GFp(p) => Some(p as u64),
    }
}

fn render_matrix<E: Clone>(m: &Matrix<E>, json: bool, text: impl Fn(&E) -> String) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(&text).collect()).collect();
    if json {
        return pretty(&json!({"rows": m.rows(), "cols": m.cols(), "entries": rows}));
    }
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "[{}]", r.join(", "));
    }
    out
}

pub fn matrix(d: usize, n: usize, kind: MatrixKind, file: Option<&str>, p: Option<u64>, json: bool) -> CmdResult {
    if d == 0 || d >= n {
        return Err(Error::DimensionOutOfRange { d, n }.into());
    }
    match file {
        Some(path) => {
            let mj = read_matrix_json(path)?;
            if mj.n != n {
                return Err(CliError::usage(format!("matrix JSON has n={}, expected {n}", mj.n)));
            }
            with_field!(field_modulus(mj.field), f => {
                let a = mj.to_matrix(f)?;
                let m = match kind {
                    MatrixKind::Full => kalman_matrix(f, &a, d)?,
                    MatrixKind::Small => small_kalman_matrix(f, &a, d)?,
                    MatrixKind::Reduced => reduced_kalman_matrix(f, &a, d)?,
                };
                Ok(Output::ok(render_matrix(&m, json, |e| e.to_string())))
            })
        }
        None => with_field!(p, f => {
            let ring = PolyRing::new(*f);
            let m = match kind {
                MatrixKind::Full => kalman_matrix(&ring, &symbolic_matrix(f, n), d)?,
                MatrixKind::Small => small_kalman_matrix(&ring, &symbolic_matrix(f, n), d)?,
                MatrixKind::Reduced => reduced_kalman_symbolic(f, d, n)?,
            };
            Ok(Output::ok(render_matrix(&m, json, |e| e.to_text())))
        }),
    }
}

fn census_json(census: &BTreeMap<u32, usize>) -> Value {
    census.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>().into()
}

fn poly_list<F: Field>(polys: &[MultiPoly<F>], json: bool) -> (Value, String) {
    if json {
        let v = polys.iter().map(|g| serde_json::to_value(g.to_json()).expect("polys serialize")).collect();
        return (Value::Array(v), String::new());
    }
    let mut out = String::new();
    for g in polys {
        let _ = writeln!(out, "{}", g.to_text());
    }
    (Value::Null, out)
}

pub fn generators(args: StratumArgs, kind: MatrixKind, p: Option<u64>, json: bool) -> CmdResult {
    let spec = stratum(args)?;
    with_field!(p, f => {
        let gens = stratum_generators(f, &spec, source(kind))?;
        let census = degree_census(&gens);
        let (list, text) = poly_list(&gens, json);
        if json {
            return Ok(Output::ok(pretty(&json!({
                "stratum": spec,
                "field": f.tag(),
                "source": format!("{kind:?}").to_lowercase(),
                "count": gens.len(),
                "census": census_json(&census),
                "generators": list,
            }))));
        }
        Ok(Output::ok(format!("count {}\ncensus {}\n{text}", gens.len(), census_text(&census))))
    })
}

pub fn complete(
    args: StratumArgs,
    kind: MatrixKind,
    p: Option<u64>,
    max_pairs: usize,
    max_degree: u32,
    json: bool,
) -> CmdResult {
    let spec = stratum(args)?;
    with_field!(p, f => {
        let gens = stratum_generators(f, &spec, source(kind))?;
        let done = buchberger_complete(&gens, Budget { max_pairs, max_poly_degree: max_degree });
        let complete = done.status == CompletionStatus::Complete;
        let census = degree_census(&done.basis);
        let squarefree = done.basis.iter().all(|g| g.leading_monomial().is_ok_and(|m| m.is_squarefree()));
        let (list, text) = poly_list(&done.basis, json);
        let status = if complete { "complete" } else { "budget exceeded" };
        let out = if json {
            pretty(&json!({
                "stratum": spec,
                "status": status,
                "pairs_reduced": done.pairs_reduced,
                "pairs_skipped": done.pairs_skipped,
                "census": census_json(&census),
                "squarefree_leading_terms": squarefree,
                "basis": list,
            }))
        } else {
            format!(
                "status {status}\npairs reduced {} skipped {}\ncensus {}\nsquarefree leading terms {squarefree}\n{text}",
                done.pairs_reduced,
                done.pairs_skipped,
                census_text(&census)
            )
        };
        Ok(Output { text: out, pass: complete })
    })
}

pub fn member(args: StratumArgs, file: &str, brute: bool, json: bool) -> CmdResult {
    let spec = stratum(args)?;
    let mj = read_matrix_json(file)?;
    let modulus = field_modulus(mj.field);
    if brute && modulus.is_none() {
        return Err(CliError::usage("--brute needs a matrix over a prime field"));
    }
    let report = with_field!(modulus, f => membership(f, &mj.to_matrix(f)?, &spec)?);
    let brute_verdict = match modulus {
        Some(p) if brute => {
            let f = PrimeField::new(p)?;
            Some(brute_force_member(&f, &mj.to_matrix(&f)?, &spec, DEFAULT_ENUMERATION_CAP)?)
        }
        _ => None,
    };
    let pass = brute_verdict.is_none_or(|b| b == report.member);
    let text = if json {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        if let Some(b) = brute_verdict {
            v["brute_force_member"] = json!(b);
        }
        pretty(&v)
    } else {
        let mut t = format!(
            "{}\nkalman rank {} (member iff <= {})\nsmall rank {} (member iff <= {})\n",
            report.member, report.kalman_rank, report.kalman_bound, report.small_rank, report.small_bound
        );
        if let Some(b) = brute_verdict {
            let _ = writeln!(t, "brute force {b}");
        }
        t
    };
    Ok(Output { text, pass })
}

pub fn witness(args: StratumArgs, seed: u64, p: Option<u64>) -> CmdResult {
    let spec = stratum(args)?;
    with_field!(p, f => {
        let w = make_witness(&spec, f, seed);
        let mut v = serde_json::to_value(MatrixJson::from_matrix(f, &w.matrix)?).expect("matrix serializes");
        let basis: Vec<Vec<String>> = w.basis.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        v["basis"] = json!(basis);
        Ok(Output::ok(pretty(&v)))
    })
}

fn method(m: MethodArg) -> Option<DegreeMethod> {
    match m {
        MethodArg::All => None,
        MethodArg::Schur => Some(DegreeMethod::Schur),
        MethodArg::Binomial => Some(DegreeMethod::Binomial),
        MethodArg::Univariate => Some(DegreeMethod::Univariate),
        MethodArg::Koutschan => Some(DegreeMethod::Koutschan),
    }
}

pub fn degree(args: StratumArgs, m: MethodArg, expansion: bool, json: bool) -> CmdResult {
    let spec = stratum(args)?;
    let schur = if expansion {
        Some(schur_decompose(&expand_degree_series(&spec)?)?)
    } else {
        None
    };
    let (mut value, mut text, pass) = match method(m) {
        Some(single) => {
            let v = single.compute(&spec)?;
            (json!({"stratum": spec, "method": single, "degree": v.to_string()}), format!("{v}\n"), true)
        }
        None => {
            let r = degree_all(&spec)?;
            let mut t = format!("degree {}\n", r.degree());
            for (m, v) in &r.values {
                let _ = writeln!(t, "{m} {v}");
            }
            let _ = writeln!(t, "{}", if r.agree { "methods agree" } else { "METHODS DISAGREE" });
            let mut v = serde_json::to_value(&r).expect("report serializes");
            v["degree"] = json!(r.degree().to_string());
            (v, t, r.agree)
        }
    };
    if let Some(e) = schur {
        let coeffs: serde_json::Map<String, Value> =
            e.coeffs().iter().map(|(p, c)| (p.to_string(), json!(c.to_string()))).collect();
        value["expansion"] = coeffs.into();
        let _ = writeln!(text, "expansion {e}");
    }
    Ok(Output {
        text: if json { pretty(&value) } else { text },
        pass,
    })
}

pub fn grid_degree(nmax: usize, json: bool) -> CmdResult {
    if nmax == 0 {
        return Err(CliError::usage("--nmax must be at least 1"));
    }
    let grid = degree_grid(nmax)?;
    let pass = grid.iter().all(|r| r.agree);
    if json {
        return Ok(Output {
            text: pretty(&serde_json::to_value(&grid).expect("grid serializes")),
            pass,
        });
    }
    let mut t = String::from("s d n degree methods agree\n");
    for r in &grid {
        let methods: Vec<&str> = r.methods().iter().map(|m| m.name()).collect();
        let _ = writeln!(t, "{} {} {} {} {} {}", r.s, r.d, r.n, r.degree(), methods.join(","), r.agree);
    }
    Ok(Output { text: t, pass })
}

pub fn hilbert(n: usize, max_t: u32, json: bool) -> CmdResult {
    let series = hilbert_series_closed(n)?;
    let coeffs = series.series_coefficients(max_t as usize)?;
    let poly = hilbert_polynomial(n)?;
    let threshold = agreement_threshold(n, max_t)?;
    let mut rows = Vec::new();
    let mut pass = threshold.is_some();
    for t in 0..=max_t {
        let hf = hilbert_function(n, t)?;
        let hp = poly.eval(t as i64);
        pass &= hf == coeffs[t as usize];
        rows.push((t, hf, coeffs[t as usize].clone(), hp));
    }
    let text = if json {
        pretty(&json!({
            "n": n,
            "series": series.to_string(),
            "polynomial": poly.to_string(),
            "threshold": threshold,
            "table": rows.iter().map(|(t, hf, sc, hp)| json!({
                "t": t, "hf": hf.to_string(), "series": sc.to_string(), "polynomial": hp.to_string()
            })).collect::<Vec<_>>(),
        }))
    } else {
        let mut out = format!("series {series}\npolynomial {poly}\n");
        match threshold {
            Some(k) => {
                let _ = writeln!(out, "polynomial agrees from t = {k}");
            }
            None => out.push_str("polynomial does not agree by the last tested t\n"),
        }
        out.push_str("t hf series polynomial\n");
        for (t, hf, sc, hp) in &rows {
            let _ = writeln!(out, "{t} {hf} {sc} {hp}");
        }
        out
    };
    Ok(Output { text, pass })
}

pub fn gbcheck(n: usize, max_t: u32, json: bool) -> CmdResult {
    let reports = gb_reports(n, max_t)?;
    let pass = reports.iter().all(|r| r.pass);
    let text = if json {
        pretty(&serde_json::to_value(&reports).expect("reports serialize"))
    } else {
        let mut out = String::new();
        for r in &reports {
            let _ = writeln!(out, "{} {} {}", if r.pass { "PASS" } else { "FAIL" }, r.check, r.details);
        }
        out
    };
    Ok(Output { text, pass })
}

pub fn multidegree(n: usize, json: bool) -> CmdResult {
    let (plain, shifted) = multidegree_incidence(n)?;
    let text = if json {
        let strs = |c: &[kalvar_core::arith::Integer]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        pretty(&json!({
            "n": n,
            "multidegree": strs(&plain.coeffs),
            "shifted": strs(&shifted.coeffs),
        }))
    } else {
        format!("multidegree {plain}\nshifted {shifted}\n")
    };
    Ok(Output::ok(text))
}
