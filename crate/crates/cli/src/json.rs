//! Output schema. Field order is fixed by struct declaration, so output is
//! byte-stable for fixed inputs.

use serde::Serialize;

use qhlip_core::lipclass::{CSet, MultSymbol, Pairing1D, Verdict1D};
use qhlip_core::qh::{
    ArgumentOrder, Certificate, ConstructionKind, HeightSymbols, NecessityCondition,
    NotEquivalentReason2D, PairingAttempt, PairingTrace, QHPoly, UnknownReason, Verdict2D,
};
use qhlip_core::realalg::RealAlg;
use qhlip_core::witness::{AsymptoticReport, LipschitzReport, VerificationReport};
use qhlip_core::zygothety::{PLMap, Zygothety};

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RealAlgJson {
    /// Exact value when rational, as `p/q`.
    pub rational: Option<String>,
    pub defpoly: String,
    pub interval: [String; 2],
    pub approx: f64,
}

impl From<&RealAlg> for RealAlgJson {
    fn from(a: &RealAlg) -> Self {
        let (lo, hi) = a.interval();
        RealAlgJson {
            rational: a.as_rational().map(|q| q.to_string()),
            defpoly: a.defpoly().to_string(),
            interval: [lo.to_string(), hi.to_string()],
            approx: a.to_f64(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CSetJson {
    Unique { c: RealAlgJson },
    AnyPositive,
}

impl From<&CSet> for CSetJson {
    fn from(c: &CSet) -> Self {
        match c {
            CSet::UniqueC(a) => CSetJson::Unique { c: a.into() },
            CSet::AnyPositive => CSetJson::AnyPositive,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct PairingJson {
    pub orientation: String,
    pub c_set: CSetJson,
}

impl From<&Pairing1D> for PairingJson {
    fn from(p: &Pairing1D) -> Self {
        PairingJson {
            orientation: p.orientation.to_string(),
            c_set: (&p.c_set).into(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SymbolJson {
    pub values: Vec<RealAlgJson>,
    pub mults: Vec<u32>,
}

impl From<&MultSymbol> for SymbolJson {
    fn from(s: &MultSymbol) -> Self {
        SymbolJson {
            values: s.values.iter().map(Into::into).collect(),
            mults: s.mults.clone(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PLMapJson {
    Affine {
        a: String,
        b: String,
    },
    Branch {
        c: RealAlgJson,
        orientation: String,
        f: String,
        g: String,
    },
    Neg {
        inner: Box<PLMapJson>,
    },
    NegConj {
        inner: Box<PLMapJson>,
    },
    Compose {
        outer: Box<PLMapJson>,
        inner: Box<PLMapJson>,
    },
}

impl From<&PLMap> for PLMapJson {
    fn from(m: &PLMap) -> Self {
        match m {
            PLMap::Affine { a, b } => PLMapJson::Affine {
                a: a.to_string(),
                b: b.to_string(),
            },
            PLMap::Branch(bm) => PLMapJson::Branch {
                c: bm.c().into(),
                orientation: bm.orientation().to_string(),
                f: bm.f().to_string(),
                g: bm.g().to_string(),
            },
            PLMap::Neg(i) => PLMapJson::Neg {
                inner: Box::new(i.as_ref().into()),
            },
            PLMap::NegConj(i) => PLMapJson::NegConj {
                inner: Box::new(i.as_ref().into()),
            },
            PLMap::Compose(o, i) => PLMapJson::Compose {
                outer: Box::new(o.as_ref().into()),
                inner: Box::new(i.as_ref().into()),
            },
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ZygothetyJson {
    pub lambda1: RealAlgJson,
    pub lambda2: RealAlgJson,
    pub phi1: PLMapJson,
    pub phi2: PLMapJson,
    pub limit_slope1: RealAlgJson,
    pub limit_slope2: RealAlgJson,
}

impl From<&Zygothety> for ZygothetyJson {
    fn from(z: &Zygothety) -> Self {
        ZygothetyJson {
            lambda1: z.lambda1().into(),
            lambda2: z.lambda2().into(),
            phi1: z.phi1().into(),
            phi2: z.phi2().into(),
            limit_slope1: (&z.phi1().limit_slope()).into(),
            limit_slope2: (&z.phi2().limit_slope()).into(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TraceJson {
    Heights {
        lambda_sign: String,
        plus: PairingJson,
        minus: PairingJson,
        c1: RealAlgJson,
        c2: RealAlgJson,
        construction: String,
    },
    Cxd {
        a: String,
        b: String,
        d: u32,
        kappa: RealAlgJson,
    },
}

fn construction_name(k: ConstructionKind) -> &'static str {
    match k {
        ConstructionKind::Duplicate => "duplicate",
        ConstructionKind::Conjugate => "conjugate",
        ConstructionKind::Separate => "separate",
        ConstructionKind::CommonC => "common_c",
        ConstructionKind::Scaling => "scaling",
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CertificateJson {
    pub theorem: String,
    pub trace: TraceJson,
    pub zygothety: ZygothetyJson,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        let trace = match &c.trace {
            PairingTrace::Heights {
                sign,
                plus,
                minus,
                c1,
                c2,
                construction,
            } => TraceJson::Heights {
                lambda_sign: sign.to_string(),
                plus: plus.into(),
                minus: minus.into(),
                c1: c1.into(),
                c2: c2.into(),
                construction: construction_name(*construction).to_string(),
            },
            PairingTrace::Cxd { a, b, d, kappa } => TraceJson::Cxd {
                a: a.to_string(),
                b: b.to_string(),
                d: *d,
                kappa: kappa.into(),
            },
        };
        CertificateJson {
            theorem: c.theorem.as_str().to_string(),
            trace,
            zygothety: (&c.zygothety).into(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct AttemptJson {
    pub lambda_sign: String,
    /// 1-D reason for `f_+`; null when that pair is equivalent.
    pub plus: Option<String>,
    pub minus: Option<String>,
}

impl From<&PairingAttempt> for AttemptJson {
    fn from(a: &PairingAttempt) -> Self {
        AttemptJson {
            lambda_sign: a.sign.to_string(),
            plus: a.plus.map(|r| r.to_string()),
            minus: a.minus.map(|r| r.to_string()),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ConditionJson {
    /// `a`: real zeros and no X factor; `b`: two distinct real zeros.
    pub condition: String,
    pub description: String,
    pub order: String,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct HeightSymbolsJson {
    pub f_plus: Option<SymbolJson>,
    pub f_minus: Option<SymbolJson>,
    pub g_plus: Option<SymbolJson>,
    pub g_minus: Option<SymbolJson>,
}

impl From<&HeightSymbols> for HeightSymbolsJson {
    fn from(h: &HeightSymbols) -> Self {
        let s = |o: &Option<MultSymbol>| o.as_ref().map(Into::into);
        HeightSymbolsJson {
            f_plus: s(&h.f_plus),
            f_minus: s(&h.f_minus),
            g_plus: s(&h.g_plus),
            g_minus: s(&h.g_minus),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "type")]
pub enum ReasonJson {
    CxdSignMismatch {
        d: u32,
    },
    HeightsNotPairable {
        conditions: Vec<ConditionJson>,
        attempts: Vec<AttemptJson>,
        symbols: HeightSymbolsJson,
    },
    MixedCxdCase,
    NecessityConditionsUnavailable {
        attempts: Vec<AttemptJson>,
        symbols: HeightSymbolsJson,
    },
    SufficiencyGap,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Verdict2DJson {
    pub verdict: String,
    pub beta: String,
    pub degree: u32,
    pub f: String,
    pub g: String,
    pub certificate: Option<CertificateJson>,
    pub reason: Option<ReasonJson>,
}

pub fn verdict2d(f: &QHPoly, g: &QHPoly, v: &Verdict2D) -> Verdict2DJson {
    let (certificate, reason) = match v {
        Verdict2D::Equivalent(c) => (Some(c.as_ref().into()), None),
        Verdict2D::NotEquivalent(r) => (None, Some(not_equivalent(r))),
        Verdict2D::Unknown(r) => (None, Some(unknown(r))),
    };
    Verdict2DJson {
        verdict: v.kind().to_string(),
        beta: format!("{}/{}", f.r(), f.s()),
        degree: f.d(),
        f: f.poly().to_string(),
        g: g.poly().to_string(),
        certificate,
        reason,
    }
}

fn not_equivalent(r: &NotEquivalentReason2D) -> ReasonJson {
    match r {
        NotEquivalentReason2D::CxdSignMismatch { d } => ReasonJson::CxdSignMismatch { d: *d },
        NotEquivalentReason2D::HeightsNotPairable {
            conditions,
            attempts,
            symbols,
        } => ReasonJson::HeightsNotPairable {
            conditions: conditions
                .iter()
                .map(|w| {
                    let (tag, description) = match w.condition {
                        NecessityCondition::RealZeroAndNoXFactor => (
                            "a",
                            "each height of the first has a real zero and X does not divide the second",
                        ),
                        NecessityCondition::TwoDistinctRealZeros => {
                            ("b", "each height of the first has two distinct real zeros")
                        }
                    };
                    ConditionJson {
                        condition: tag.to_string(),
                        description: description.to_string(),
                        order: match w.order {
                            ArgumentOrder::FG => "FG",
                            ArgumentOrder::GF => "GF",
                        }
                        .to_string(),
                    }
                })
                .collect(),
            attempts: attempts.iter().map(Into::into).collect(),
            symbols: symbols.into(),
        },
    }
}

fn unknown(r: &UnknownReason) -> ReasonJson {
    match r {
        UnknownReason::MixedCxdCase => ReasonJson::MixedCxdCase,
        UnknownReason::NecessityConditionsUnavailable { attempts, symbols } => {
            ReasonJson::NecessityConditionsUnavailable {
                attempts: attempts.iter().map(Into::into).collect(),
                symbols: symbols.into(),
            }
        }
        UnknownReason::SufficiencyGap => ReasonJson::SufficiencyGap,
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Verdict1DJson {
    pub verdict: String,
    pub f: String,
    pub g: String,
    pub pairings: Vec<PairingJson>,
    pub reason: Option<String>,
    pub symbol_f: Option<SymbolJson>,
    pub symbol_g: Option<SymbolJson>,
}

pub fn verdict1d(
    f: &str,
    g: &str,
    v: &Verdict1D,
    sf: Option<&MultSymbol>,
    sg: Option<&MultSymbol>,
) -> Verdict1DJson {
    let (verdict, reason) = match v {
        Verdict1D::Equivalent(_) => ("Equivalent", None),
        Verdict1D::NotEquivalent(r) => ("NotEquivalent", Some(r.to_string())),
    };
    Verdict1DJson {
        verdict: verdict.to_string(),
        f: f.to_string(),
        g: g.to_string(),
        pairings: v.pairings().iter().map(Into::into).collect(),
        reason,
        symbol_f: sf.map(Into::into),
        symbol_g: sg.map(Into::into),
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct AsymptoticJson {
    pub lambda_est: f64,
    pub k_est: f64,
    pub alpha_tail_max: f64,
    pub shell_near: f64,
    pub shell_far: f64,
    pub passed: bool,
}

impl From<&AsymptoticReport> for AsymptoticJson {
    fn from(a: &AsymptoticReport) -> Self {
        AsymptoticJson {
            lambda_est: a.lambda_est,
            k_est: a.k_est,
            alpha_tail_max: a.alpha_tail_max,
            shell_near: a.shell_near,
            shell_far: a.shell_far,
            passed: a.passed,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct LipschitzJson {
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub bound: f64,
    pub passed: bool,
}

impl From<&LipschitzReport> for LipschitzJson {
    fn from(l: &LipschitzReport) -> Self {
        LipschitzJson {
            ratio_min: l.ratio_min,
            ratio_max: l.ratio_max,
            bound: l.bound,
            passed: l.passed,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ReportJson {
    pub max_rel_residual: f64,
    pub worst_point: [f64; 2],
    pub tol: f64,
    pub samples: usize,
    pub delta: f64,
    pub conjugacy_passed: bool,
    pub lipschitz: Option<LipschitzJson>,
    pub asymptotic: Vec<AsymptoticJson>,
    pub passed: bool,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            max_rel_residual: r.max_rel_residual,
            worst_point: [r.worst_point.0, r.worst_point.1],
            tol: r.tol,
            samples: r.samples,
            delta: r.delta,
            conjugacy_passed: r.conjugacy_passed,
            lipschitz: r.lipschitz.as_ref().map(Into::into),
            asymptotic: r.asymptotic.iter().map(Into::into).collect(),
            passed: r.passed(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct WitnessJson {
    #[serde(flatten)]
    pub verdict: Verdict2DJson,
    pub report: Option<ReportJson>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct BetaCandidateJson {
    pub beta: String,
    pub r: u32,
    pub s: u32,
    pub degree: u32,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct InferBetaJson {
    pub poly: String,
    pub candidates: Vec<BetaCandidateJson>,
    pub ambiguous: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ErrorJson {
    pub error: ErrorBody,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    /// 1-based column for parse errors.
    pub column: Option<usize>,
    pub input: Option<String>,
}
