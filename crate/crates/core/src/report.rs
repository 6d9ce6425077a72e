//! Runs several distance computations on one code and cross-checks them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::boolean::{prop_check, Filtration};
use crate::budget::Budget;
use crate::code::LinearCode;
use crate::codefile::AnyCode;
use crate::error::{Error, Result};
use crate::field::{Field, Fp, Rationals};
use crate::graded::{alpha_m_fitt, distance_via_afold, mds_star_check, tutte_via_berget};
use crate::inverse::{code_chow_form, ApolarProfile};
use crate::matroid::{distance_from_tutte, is_mds, tutte};
use crate::orlik_terao::ot_distance_report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Brute,
    Tutte,
    Afold,
    Berget,
    AlphaFitt,
    Inverse,
    Binary,
    Ot,
    Mds,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Brute,
        Method::Tutte,
        Method::Afold,
        Method::Berget,
        Method::AlphaFitt,
        Method::Inverse,
        Method::Binary,
        Method::Ot,
        Method::Mds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Tutte => "tutte",
            Method::Afold => "afold",
            Method::Berget => "berget",
            Method::AlphaFitt => "alpha-fitt",
            Method::Inverse => "inverse",
            Method::Binary => "binary",
            Method::Ot => "ot",
            Method::Mds => "mds",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::BadRange(format!("unknown method {s:?}")))
    }
}

/// `"all"` or a comma-separated list of method names.
pub fn parse_methods(spec: &str) -> Result<Vec<Method>> {
    if spec.trim() == "all" {
        return Ok(Method::ALL.to_vec());
    }
    let mut out: Vec<Method> = spec.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeInfo {
    pub n: usize,
    pub k: usize,
    pub field: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub name: String,
    /// `"ok"` or `"error"`.
    pub status: String,
    pub d: Option<usize>,
    pub extra: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub name: String,
    pub value: usize,
    /// `value <= d`, when some exact method produced `d`.
    pub satisfied: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ok,
    Disagreement,
    ViolatedBound,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ok => 0,
            Verdict::Disagreement => 2,
            Verdict::ViolatedBound => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub code: CodeInfo,
    pub methods: Vec<MethodResult>,
    pub bounds: Vec<BoundResult>,
    pub verdict: Verdict,
    pub timings_ms: BTreeMap<String, f64>,
}

impl Report {
    /// The distance all exact methods agree on.
    pub fn distance(&self) -> Option<usize> {
        let ds: Vec<usize> = self.methods.iter().filter_map(|m| m.d).collect();
        match ds.first() {
            Some(&d) if ds.iter().all(|&x| x == d) => Some(d),
            _ => None,
        }
    }

    pub fn method(&self, name: &str) -> Option<&MethodResult> {
        self.methods.iter().find(|m| m.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    /// The report with timings cleared, for comparisons across runs.
    pub fn without_timings(&self) -> Report {
        Report { timings_ms: BTreeMap::new(), ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("code [{}, {}] over {}\n", self.code.n, self.code.k, self.code.field);
        for m in &self.methods {
            let d = m.d.map_or("-".to_string(), |d| d.to_string());
            out += &format!("  {:<11} {:<6} d={:<3} {}\n", m.name, m.status, d, m.extra);
        }
        for b in &self.bounds {
            let s = match b.satisfied {
                Some(true) => "satisfied",
                Some(false) => "VIOLATED",
                None => "unchecked",
            };
            out += &format!("  bound {:<13} {} ({s})\n", b.name, b.value);
        }
        let verdict = serde_json::to_value(self.verdict).expect("verdict serializes");
        out += &format!("verdict: {}\n", verdict.as_str().unwrap_or_default());
        out
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub budget: Budget,
    /// Prime for Betti numbers of rational ideals.
    pub prime: Option<u64>,
    pub t_max: usize,
    /// A rational matrix used by the characteristic-zero methods (inverse
    /// systems, Orlik-Terao) when it has the same matroid as the code.
    pub rational_model: Option<LinearCode<Rationals>>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        let budget = Budget::default();
        ReportOptions { budget, prime: None, t_max: 8, rational_model: None }
    }
}

fn ok(name: &str, d: Option<usize>, extra: Value) -> MethodResult {
    MethodResult { name: name.into(), status: "ok".into(), d, extra }
}

fn failed(name: &str, e: &Error) -> MethodResult {
    MethodResult { name: name.into(), status: "error".into(), d: None, extra: json!({ "error": e.to_string() }) }
}

struct Run {
    methods: Vec<MethodResult>,
    bounds: Vec<(String, usize)>,
    timings: BTreeMap<String, f64>,
}

impl Run {
    fn record(&mut self, m: Method, f: impl FnOnce(&mut Vec<(String, usize)>) -> Result<MethodResult>) {
        let start = Instant::now();
        let res = f(&mut self.bounds).unwrap_or_else(|e| failed(m.name(), &e));
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        self.timings.insert(m.name().into(), (ms * 1000.0).round() / 1000.0);
        self.methods.push(res);
    }
}

fn weight_map(dist: &BTreeMap<usize, u64>) -> Value {
    Value::Object(dist.iter().map(|(w, c)| (w.to_string(), json!(c))).collect())
}

/// The rational model if its matroid matches the code's.
fn matching_model<'a, F: Field>(
    code: &LinearCode<F>,
    model: Option<&'a LinearCode<Rationals>>,
    budget: &Budget,
) -> Option<&'a LinearCode<Rationals>> {
    let m = model?;
    let same = m.n() == code.n() && m.k() == code.k() && tutte(m, budget).ok()? == tutte(code, budget).ok()?;
    same.then_some(m)
}

fn inverse_result<F: Field>(code: &LinearCode<F>, bounds: &mut Vec<(String, usize)>) -> Result<MethodResult> {
    let prof = ApolarProfile::new(&code_chow_form(code)?)?;
    let alpha = prof.alpha_ann();
    bounds.push(("inverse".into(), alpha - 1));
    Ok(ok(
        "inverse",
        None,
        json!({
            "field": code.field().ctx().to_string(),
            "hf": prof.hf,
            "alpha_ann": alpha,
            "symmetric": prof.is_symmetric(),
        }),
    ))
}

fn ot_result<F: Field>(
    code: &LinearCode<F>,
    opts: &ReportOptions,
    bounds: &mut Vec<(String, usize)>,
) -> Result<MethodResult> {
    let r = ot_distance_report(code, opts.prime, &opts.budget)?;
    bounds.push(("orlik-terao".into(), r.bound));
    // alpha = 3 asserts the code is MDS, an exact value.
    let d = r.mds.then_some(r.bound);
    Ok(ok(
        "ot",
        d,
        json!({
            "field": code.field().ctx().to_string(),
            "alpha": r.alpha,
            "delta": r.delta,
            "mds": r.mds,
        }),
    ))
}

fn run_generic<F: Field>(
    code: &LinearCode<F>,
    binary: Option<&LinearCode<Fp>>,
    methods: &[Method],
    opts: &ReportOptions,
) -> Run {
    let b = &opts.budget;
    let (n, k) = (code.n(), code.k());
    let mut run = Run { methods: Vec::new(), bounds: Vec::new(), timings: BTreeMap::new() };
    let model = matching_model(code, opts.rational_model.as_ref(), b);
    for &m in methods {
        match m {
            Method::Brute => run.record(m, |_| {
                let r = code.min_distance_brute(b)?;
                Ok(ok(
                    "brute",
                    Some(r.d),
                    json!({
                        "projective_count": r.projective_count,
                        "weight_distribution": weight_map(&r.weight_distribution),
                    }),
                ))
            }),
            Method::Tutte => run.record(m, |_| {
                let t = tutte(code, b)?;
                let (d, count) = distance_from_tutte(&t, n, k)?;
                Ok(ok("tutte", Some(d), json!({ "projective_count": count, "polynomial": t.to_string() })))
            }),
            Method::Afold => run.record(m, |_| Ok(ok("afold", Some(distance_via_afold(code, b)?), json!({})))),
            Method::Berget => run.record(m, |_| {
                let t = tutte_via_berget(code, b)?;
                let (d, count) = distance_from_tutte(&t, n, k)?;
                Ok(ok("berget", Some(d), json!({ "projective_count": count, "polynomial": t.to_string() })))
            }),
            Method::AlphaFitt => run.record(m, |_| {
                let alpha = alpha_m_fitt(code, b)?;
                Ok(ok("alpha-fitt", Some(alpha - 1), json!({ "alpha": alpha })))
            }),
            Method::Inverse => run.record(m, |bounds| {
                let c = code.field().characteristic();
                if c == 0 || c > n as u64 {
                    inverse_result(code, bounds)
                } else if let Some(q) = model {
                    inverse_result(q, bounds)
                } else {
                    Err(Error::BadCharacteristic { characteristic: c, degree: n })
                }
            }),
            Method::Binary => run.record(m, |_| {
                let c = binary.ok_or_else(|| Error::UnsupportedField("GF(2)".into()))?;
                let f = Filtration::new(c, b)?;
                let g = f.gr_dims();
                let boundary = (1..=n).take_while(|&a| prop_check(c, a, b).unwrap_or(false)).last().unwrap_or(0);
                Ok(ok(
                    "binary",
                    Some(n - g.top_jump()),
                    json!({
                        "gr_dims": g.dims,
                        "top_jump": g.top_jump(),
                        "literal_alpha_positive": g.literal_alpha_positive(),
                        "prop_boundary": boundary,
                    }),
                ))
            }),
            Method::Ot => run.record(m, |bounds| match model {
                Some(q) => ot_result(q, opts, bounds),
                None => ot_result(code, opts, bounds),
            }),
            Method::Mds => run.record(m, |_| {
                let mds = is_mds(code, b)?;
                let star = if mds && k >= 2 { Some(mds_star_check(code, opts.t_max, b)?) } else { None };
                Ok(ok("mds", None, json!({ "is_mds": mds, "star_check": star, "t_max": opts.t_max })))
            }),
        }
    }
    run
}

pub fn run_report(code: &AnyCode, methods: &[Method], opts: &ReportOptions) -> Report {
    let run = match code {
        AnyCode::Prime(c) => {
            let binary = (c.field().modulus() == 2).then_some(c);
            run_generic(c, binary, methods, opts)
        }
        AnyCode::Rational(c) => run_generic(c, None, methods, opts),
    };
    let info = CodeInfo { n: code.n(), k: code.k(), field: code.field().to_string() };
    Report::assemble(info, run.methods, run.bounds, run.timings)
}

impl Report {
    /// Checks agreement of the exact methods and the bounds against the
    /// agreed distance.
    pub fn assemble(
        code: CodeInfo,
        methods: Vec<MethodResult>,
        bounds: Vec<(String, usize)>,
        timings_ms: BTreeMap<String, f64>,
    ) -> Report {
        let ds: Vec<usize> = methods.iter().filter_map(|m| m.d).collect();
        let agreed = ds.first().copied().filter(|&d| ds.iter().all(|&x| x == d));
        let bounds: Vec<BoundResult> = bounds
            .into_iter()
            .map(|(name, value)| BoundResult { name, value, satisfied: agreed.map(|d| value <= d) })
            .collect();
        let verdict = if !ds.is_empty() && agreed.is_none() {
            Verdict::Disagreement
        } else if bounds.iter().any(|b| b.satisfied == Some(false)) {
            Verdict::ViolatedBound
        } else {
            Verdict::Ok
        };
        Report { code, methods, bounds, verdict, timings_ms }
    }
}
