//! Command implementations behind the `qhlip` binary. Each command returns
//! its JSON document and exit code so it can be tested without a process.

pub mod json;
pub mod scan;

use qhlip_core::lipclass::{classify_pair, critical_data};
use qhlip_core::parse::{self, Bindings, ParseError};
use qhlip_core::poly::BiPoly;
use qhlip_core::qh::{decide, infer_beta, validate_qh, QHError, QHPoly, VerdictKind};
use qhlip_core::witness::{full_report, GridSpec, InverseBetaTransform};
use serde::Serialize;

use crate::json::{
    verdict1d, verdict2d, BetaCandidateJson, ErrorBody, ErrorJson, InferBetaJson, ReportJson,
    WitnessJson,
};

pub const EXIT_EQUIVALENT: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;
/// `witness` on an Equivalent verdict whose numeric checks failed.
pub const EXIT_WITNESS_FAILED: i32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Parse { input: String, err: ParseError },
    Qh(QHError),
    BetaInference(String),
    Scan(String),
    Usage(String),
}

impl CliError {
    pub fn to_json(&self) -> ErrorJson {
        let body = match self {
            CliError::Parse { input, err } => ErrorBody {
                kind: "parse".into(),
                message: err.kind.to_string(),
                column: Some(err.pos + 1),
                input: Some(input.clone()),
            },
            CliError::Qh(e) => ErrorBody {
                kind: "beta".into(),
                message: e.to_string(),
                column: None,
                input: None,
            },
            CliError::BetaInference(m) => ErrorBody {
                kind: "beta_inference".into(),
                message: m.clone(),
                column: None,
                input: None,
            },
            CliError::Usage(m) => ErrorBody {
                kind: "usage".into(),
                message: m.clone(),
                column: None,
                input: None,
            },
            CliError::Scan(m) => ErrorBody {
                kind: "scan".into(),
                message: m.clone(),
                column: None,
                input: None,
            },
        };
        ErrorJson { error: body }
    }
}

impl From<QHError> for CliError {
    fn from(e: QHError) -> Self {
        CliError::Qh(e)
    }
}

/// A finished command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub json: String,
    pub code: i32,
}

pub fn render<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn exit_code(kind: VerdictKind) -> i32 {
    match kind {
        VerdictKind::Equivalent => EXIT_EQUIVALENT,
        VerdictKind::NotEquivalent => EXIT_NOT_EQUIVALENT,
        VerdictKind::Unknown => EXIT_UNKNOWN,
    }
}

pub fn bindings_from(lets: &[String]) -> Result<Bindings, CliError> {
    let mut b = Bindings::new();
    for l in lets {
        let (k, v) = parse::parse_binding(l).map_err(|err| CliError::Parse {
            input: l.clone(),
            err,
        })?;
        b.insert(k, v);
    }
    Ok(b)
}

pub fn parse_bi(text: &str, b: &Bindings) -> Result<BiPoly, CliError> {
    parse::parse_bi(text, b).map_err(|err| CliError::Parse {
        input: text.to_string(),
        err,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaArg {
    Given(u32, u32),
    Infer,
}

pub fn parse_beta_arg(text: &str) -> Result<BetaArg, CliError> {
    let (r, s) = parse::parse_beta(text).map_err(|err| CliError::Parse {
        input: text.to_string(),
        err,
    })?;
    Ok(BetaArg::Given(r, s))
}

fn infer_one(p: &BiPoly) -> Result<Option<(u32, u32)>, CliError> {
    let inf = infer_beta(p);
    if inf.ambiguous {
        return Ok(None);
    }
    match inf.candidates.first() {
        Some(&(r, s, _)) => Ok(Some((r, s))),
        None => Err(CliError::BetaInference(format!(
            "no beta = r/s > 1 makes {p} quasihomogeneous"
        ))),
    }
}

/// Validates both inputs under a given or inferred β.
pub fn resolve_pair(f: &BiPoly, g: &BiPoly, beta: BetaArg) -> Result<(QHPoly, QHPoly), CliError> {
    let (r, s) = match beta {
        BetaArg::Given(r, s) => (r, s),
        BetaArg::Infer => match (infer_one(f)?, infer_one(g)?) {
            (Some(a), Some(b)) if a != b => {
                return Err(QHError::BetaMismatch(a.0, a.1, b.0, b.1).into())
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => {
                return Err(CliError::BetaInference(
                    "both inputs are monomials, so any beta fits; pass --beta r/s".into(),
                ))
            }
        },
    };
    Ok((validate_qh(f, r, s)?, validate_qh(g, r, s)?))
}

pub fn cmd_classify1(f: &str, g: &str, lets: &[String]) -> Result<Outcome, CliError> {
    let b = bindings_from(lets)?;
    let parse_u = |t: &str| {
        parse::parse_uni(t, &b).map_err(|err| CliError::Parse {
            input: t.to_string(),
            err,
        })
    };
    let (pf, pg) = (parse_u(f)?, parse_u(g)?);
    let v = classify_pair(&pf, &pg);
    let sf = critical_data(&pf).ok().map(|c| c.symbol());
    let sg = critical_data(&pg).ok().map(|c| c.symbol());
    let doc = verdict1d(
        &pf.to_string(),
        &pg.to_string(),
        &v,
        sf.as_ref(),
        sg.as_ref(),
    );
    let code = if v.is_equivalent() {
        EXIT_EQUIVALENT
    } else {
        EXIT_NOT_EQUIVALENT
    };
    Ok(Outcome {
        json: render(&doc),
        code,
    })
}

pub fn cmd_classify2(
    f: &str,
    g: &str,
    beta: BetaArg,
    lets: &[String],
) -> Result<Outcome, CliError> {
    let b = bindings_from(lets)?;
    let (qf, qg) = resolve_pair(&parse_bi(f, &b)?, &parse_bi(g, &b)?, beta)?;
    let v = decide(&qf, &qg)?;
    Ok(Outcome {
        json: render(&verdict2d(&qf, &qg, &v)),
        code: exit_code(v.kind()),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessOptions {
    pub grid: GridSpec,
    pub tol: f64,
    pub lipschitz_bound: f64,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            grid: GridSpec::default(),
            tol: 1e-8,
            lipschitz_bound: 1e6,
        }
    }
}

pub fn cmd_witness(
    f: &str,
    g: &str,
    beta: BetaArg,
    lets: &[String],
    opts: &WitnessOptions,
) -> Result<Outcome, CliError> {
    let b = bindings_from(lets)?;
    let (qf, qg) = resolve_pair(&parse_bi(f, &b)?, &parse_bi(g, &b)?, beta)?;
    let v = decide(&qf, &qg)?;
    let mut code = exit_code(v.kind());
    let report = v.certificate().map(|c| {
        let t = InverseBetaTransform::new(c.zygothety.clone(), qf.r(), qf.s())
            .expect("certificates carry regular zygotheties");
        full_report(&qf, &qg, &t, &opts.grid, opts.tol, opts.lipschitz_bound)
    });
    if report.as_ref().is_some_and(|r| !r.passed()) {
        code = EXIT_WITNESS_FAILED;
    }
    let doc = WitnessJson {
        verdict: verdict2d(&qf, &qg, &v),
        report: report.as_ref().map(ReportJson::from),
    };
    Ok(Outcome {
        json: render(&doc),
        code,
    })
}

pub fn cmd_infer_beta(f: &str, lets: &[String]) -> Result<Outcome, CliError> {
    let b = bindings_from(lets)?;
    let p = parse_bi(f, &b)?;
    let inf = infer_beta(&p);
    let doc = InferBetaJson {
        poly: p.to_string(),
        candidates: inf
            .candidates
            .iter()
            .map(|&(r, s, d)| BetaCandidateJson {
                beta: format!("{r}/{s}"),
                r,
                s,
                degree: d,
            })
            .collect(),
        ambiguous: inf.ambiguous,
    };
    Ok(Outcome {
        json: render(&doc),
        code: 0,
    })
}
