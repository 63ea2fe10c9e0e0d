//! β-quasihomogeneous plane polynomials `F = Σ c_k X^{d-rk} Y^{sk}` and the
//! decision procedure for their semialgebraic Lipschitz equivalence.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lipclass::{
    classify_crit, classify_pair, critical_data, CSet, CritData, MultSymbol, NotEquivalentReason,
    Pairing1D, Verdict1D,
};
use crate::poly::{int, BiPoly, PolyError, Rat, SturmSeq, UniPoly};
use crate::realalg::RealAlg;
use crate::zygothety::{cxd_zygothety, make_regular, Recipe, Zygothety};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QHError {
    #[error("the zero polynomial is not quasihomogeneous")]
    ZeroPolynomial,
    #[error("beta = {r}/{s} must satisfy r > s > 0")]
    BetaOutOfRange { r: u32, s: u32 },
    #[error("beta = {r}/{s} is not in lowest terms")]
    BetaNotReduced { r: u32, s: u32 },
    #[error("monomial X^{i} Y^{j} is off the weighted line for beta = {r}/{s}")]
    NotQuasihomogeneous { i: u32, j: u32, r: u32, s: u32 },
    #[error("quasihomogeneous degree must be a positive integer")]
    NonPositiveDegree,
    #[error("beta differs: {0}/{1} vs {2}/{3}")]
    BetaMismatch(u32, u32, u32, u32),
    #[error("quasihomogeneous degree differs: {0} vs {1}")]
    DegreeMismatch(u32, u32),
}

impl From<PolyError> for QHError {
    fn from(_: PolyError) -> Self {
        QHError::ZeroPolynomial
    }
}

/// Height functions `f_+(t) = F(1, t)` and `f_-(t) = F(-1, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightPair {
    pub f_plus: UniPoly,
    pub f_minus: UniPoly,
}

/// A validated β-quasihomogeneous polynomial with `β = r/s`.
#[derive(Clone, Debug)]
pub struct QHPoly {
    poly: BiPoly,
    r: u32,
    s: u32,
    d: u32,
    e: u32,
    n: u32,
    heights: HeightPair,
}

pub fn validate_qh(poly: &BiPoly, r: u32, s: u32) -> Result<QHPoly, QHError> {
    if poly.is_zero() {
        return Err(QHError::ZeroPolynomial);
    }
    if !(r > s && s > 0) {
        return Err(QHError::BetaOutOfRange { r, s });
    }
    if r.gcd(&s) != 1 {
        return Err(QHError::BetaNotReduced { r, s });
    }
    let mut d: Option<u64> = None;
    let mut n = 0u32;
    for ((i, j), _) in poly.terms() {
        let off = || QHError::NotQuasihomogeneous { i: *i, j: *j, r, s };
        if j % s != 0 {
            return Err(off());
        }
        let k = j / s;
        let di = *i as u64 + r as u64 * k as u64;
        match d {
            None => d = Some(di),
            Some(d0) if d0 != di => return Err(off()),
            _ => {}
        }
        n = n.max(k);
    }
    let d = d.expect("nonzero polynomial");
    if d == 0 {
        return Err(QHError::NonPositiveDegree);
    }
    let d = u32::try_from(d).map_err(|_| QHError::NonPositiveDegree)?;
    let e = d - r * n;
    let heights = HeightPair {
        f_plus: poly.at_x(&int(1)),
        f_minus: poly.at_x(&int(-1)),
    };
    debug_assert_eq!(heights.f_plus.deg() as u32, s * n);
    debug_assert_eq!(heights.f_minus.deg() as u32, s * n);
    Ok(QHPoly {
        poly: poly.clone(),
        r,
        s,
        d,
        e,
        n,
        heights,
    })
}

impl QHPoly {
    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    pub fn d(&self) -> u32 {
        self.d
    }
    /// X-multiplicity.
    pub fn e(&self) -> u32 {
        self.e
    }
    /// Top index of the expansion.
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn heights(&self) -> HeightPair {
        self.heights.clone()
    }
    pub fn height_pair(&self) -> &HeightPair {
        &self.heights
    }
    pub fn beta_f64(&self) -> f64 {
        self.r as f64 / self.s as f64
    }
    /// `Some(c)` when `F = c X^d`.
    pub fn cxd_coeff(&self) -> Option<Rat> {
        self.poly.is_cxd().ok().flatten().map(|(c, _)| c)
    }
    pub fn y_divides(&self) -> bool {
        self.poly.y_divides().unwrap_or(false)
    }
}

/// Result of weight inference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaInference {
    /// `(r, s, d)` triples.
    pub candidates: Vec<(u32, u32, u32)>,
    /// Set for monomials, where every β fits.
    pub ambiguous: bool,
}

pub fn infer_beta(poly: &BiPoly) -> BetaInference {
    let keys: Vec<(u32, u32)> = poly.terms().map(|(k, _)| *k).collect();
    if keys.len() <= 1 {
        return BetaInference {
            candidates: Vec::new(),
            ambiguous: true,
        };
    }
    let none = BetaInference {
        candidates: Vec::new(),
        ambiguous: false,
    };
    let (i0, j0) = keys[0];
    let Some(&(i1, j1)) = keys.iter().find(|(_, j)| *j != j0) else {
        return none;
    };
    // i0 + β j0 = i1 + β j1
    let num = i0 as i64 - i1 as i64;
    let den = j1 as i64 - j0 as i64;
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    if num <= den {
        return none;
    }
    let g = num.gcd(&den);
    let (Ok(r), Ok(s)) = (u32::try_from(num / g), u32::try_from(den / g)) else {
        return none;
    };
    match validate_qh(poly, r, s) {
        Ok(q) => BetaInference {
            candidates: vec![(r, s, q.d)],
            ambiguous: false,
        },
        Err(_) => none,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaSign {
    Positive,
    Negative,
}

impl fmt::Display for LambdaSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaSign::Positive => "Positive",
            LambdaSign::Negative => "Negative",
        })
    }
}

/// A way to match the heights of `F` with those of `G`: `f_+` with
/// `g_+` (positive sign) or `g_-` (negative sign), and `f_-` with the other.
#[derive(Clone, Debug)]
pub struct PairingOption {
    pub sign: LambdaSign,
    /// Pairing of `f_+`; its c-set is `c₁`.
    pub plus: Pairing1D,
    /// Pairing of `f_-`; its c-set is `c₂`.
    pub minus: Pairing1D,
}

impl PairingOption {
    /// A common admissible `c₁ = c₂`, if any.
    pub fn common_c(&self) -> Option<RealAlg> {
        self.plus.c_set.common(&self.minus.c_set)
    }
}

/// Outcome of one λ-sign attempt; `None` marks an equivalent pair.
#[derive(Clone, Debug)]
pub struct PairingAttempt {
    pub sign: LambdaSign,
    pub plus: Option<NotEquivalentReason>,
    pub minus: Option<NotEquivalentReason>,
}

#[derive(Clone, Debug)]
pub struct PairingSearch {
    pub options: Vec<PairingOption>,
    pub attempts: Vec<PairingAttempt>,
    pub symbols: HeightSymbols,
}

/// Multiplicity symbols of the four heights; `None` for constant heights.
#[derive(Clone, Debug)]
pub struct HeightSymbols {
    pub f_plus: Option<MultSymbol>,
    pub f_minus: Option<MultSymbol>,
    pub g_plus: Option<MultSymbol>,
    pub g_minus: Option<MultSymbol>,
}

fn crit_or_none(h: &UniPoly) -> Option<CritData> {
    (!h.is_constant()).then(|| critical_data(h).expect("nonconstant"))
}

fn classify_cached(
    f: &UniPoly,
    cf: &Option<CritData>,
    g: &UniPoly,
    cg: &Option<CritData>,
) -> Verdict1D {
    match (cf, cg) {
        (Some(a), Some(b)) => classify_crit(a, b),
        _ => classify_pair(f, g),
    }
}

fn reason(v: &Verdict1D) -> Option<NotEquivalentReason> {
    match v {
        Verdict1D::Equivalent(_) => None,
        Verdict1D::NotEquivalent(r) => Some(*r),
    }
}

/// All λ-sign choices whose two height pairs are 1-D equivalent, with the
/// per-sign outcomes kept for diagnostics.
pub fn search_pairings(f: &QHPoly, g: &QHPoly) -> PairingSearch {
    let hf = &f.heights;
    let hg = &g.heights;
    let cfp = crit_or_none(&hf.f_plus);
    let cfm = crit_or_none(&hf.f_minus);
    let cgp = crit_or_none(&hg.f_plus);
    let cgm = crit_or_none(&hg.f_minus);
    let mut options = Vec::new();
    let mut attempts = Vec::new();
    for sign in [LambdaSign::Positive, LambdaSign::Negative] {
        let (g1, c1, g2, c2) = match sign {
            LambdaSign::Positive => (&hg.f_plus, &cgp, &hg.f_minus, &cgm),
            LambdaSign::Negative => (&hg.f_minus, &cgm, &hg.f_plus, &cgp),
        };
        let vp = classify_cached(&hf.f_plus, &cfp, g1, c1);
        let vm = if reason(&vp).is_some() {
            None
        } else {
            Some(classify_cached(&hf.f_minus, &cfm, g2, c2))
        };
        attempts.push(PairingAttempt {
            sign,
            plus: reason(&vp),
            minus: vm.as_ref().and_then(reason),
        });
        if let Some(vm) = vm {
            for p in vp.pairings() {
                for m in vm.pairings() {
                    options.push(PairingOption {
                        sign,
                        plus: p.clone(),
                        minus: m.clone(),
                    });
                }
            }
        }
    }
    let sym = |c: &Option<CritData>| c.as_ref().map(CritData::symbol);
    PairingSearch {
        options,
        attempts,
        symbols: HeightSymbols {
            f_plus: sym(&cfp),
            f_minus: sym(&cfm),
            g_plus: sym(&cgp),
            g_minus: sym(&cgm),
        },
    }
}

pub fn pairing_search(f: &QHPoly, g: &QHPoly) -> Vec<PairingOption> {
    search_pairings(f, g).options
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremTag {
    CxdCase,
    SuffAParityEvenOrSOdd,
    SuffBEqualLambda,
    SuffCNoXFactor,
    CorNoCritPoints,
    CorROddSEvenNoYFactor,
    CorROddSEvenOneCrit,
}

impl TheoremTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::CxdCase => "CxdCase",
            TheoremTag::SuffAParityEvenOrSOdd => "SuffA_ParityEven_or_sOdd",
            TheoremTag::SuffBEqualLambda => "SuffB_EqualLambda",
            TheoremTag::SuffCNoXFactor => "SuffC_NoXFactor",
            TheoremTag::CorNoCritPoints => "Cor_NoCritPoints",
            TheoremTag::CorROddSEvenNoYFactor => "Cor_rOdd_sEven_NoYFactor",
            TheoremTag::CorROddSEvenOneCrit => "Cor_rOdd_sEven_OneCrit",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the certificate's zygothety was assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionKind {
    /// `(λ₁, λ₁), (φ₁, φ₁)`.
    Duplicate,
    /// `(λ₁, λ₁), (φ₁, t ↦ -φ₁(-t))`.
    Conjugate,
    /// Separate maps with their own constants.
    Separate,
    /// Separate maps with a common constant `c₁ = c₂`.
    CommonC,
    /// `κ X` scaling for the `c X^d` case.
    Scaling,
}

#[derive(Clone, Debug)]
pub enum PairingTrace {
    Heights {
        sign: LambdaSign,
        plus: Pairing1D,
        minus: Pairing1D,
        c1: RealAlg,
        c2: RealAlg,
        construction: ConstructionKind,
    },
    Cxd {
        a: Rat,
        b: Rat,
        d: u32,
        kappa: RealAlg,
    },
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub theorem: TheoremTag,
    pub zygothety: Zygothety,
    pub trace: PairingTrace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NecessityCondition {
    /// Each height of the first polynomial has a real zero and X does not
    /// divide the second.
    RealZeroAndNoXFactor,
    /// Each height of the first polynomial has two distinct real zeros.
    TwoDistinctRealZeros,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArgumentOrder {
    FG,
    GF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NecessityWitness {
    pub condition: NecessityCondition,
    pub order: ArgumentOrder,
}

#[derive(Clone, Debug)]
pub enum NotEquivalentReason2D {
    /// `a X^d` vs `b X^d` with `d` even and `ab < 0`.
    CxdSignMismatch { d: u32 },
    /// No pairing of heights exists and a necessity condition applies.
    HeightsNotPairable {
        conditions: Vec<NecessityWitness>,
        attempts: Vec<PairingAttempt>,
        symbols: HeightSymbols,
    },
}

#[derive(Clone, Debug)]
pub enum UnknownReason {
    MixedCxdCase,
    NecessityConditionsUnavailable {
        attempts: Vec<PairingAttempt>,
        symbols: HeightSymbols,
    },
    SufficiencyGap,
}

#[derive(Clone, Debug)]
pub enum Verdict2D {
    Equivalent(Box<Certificate>),
    NotEquivalent(NotEquivalentReason2D),
    Unknown(UnknownReason),
}

impl Verdict2D {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict2D::Equivalent(_) => VerdictKind::Equivalent,
            Verdict2D::NotEquivalent(_) => VerdictKind::NotEquivalent,
            Verdict2D::Unknown(_) => VerdictKind::Unknown,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict2D::Equivalent(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Equivalent,
    NotEquivalent,
    Unknown,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn distinct_real_zeros(h: &UniPoly) -> usize {
    if h.is_constant() {
        return 0;
    }
    let q = h.square_free_part().expect("nonzero");
    SturmSeq::new(&q).expect("nonzero").count_all()
}

/// Necessity conditions holding for the ordered pair `(a, b)`.
fn necessity(a: &QHPoly, b: &QHPoly, order: ArgumentOrder, out: &mut Vec<NecessityWitness>) {
    let zp = distinct_real_zeros(&a.heights.f_plus);
    let zm = distinct_real_zeros(&a.heights.f_minus);
    if zp >= 1 && zm >= 1 && b.e == 0 {
        out.push(NecessityWitness {
            condition: NecessityCondition::RealZeroAndNoXFactor,
            order,
        });
    }
    if zp >= 2 && zm >= 2 {
        out.push(NecessityWitness {
            condition: NecessityCondition::TwoDistinctRealZeros,
            order,
        });
    }
}

fn crit_count(h: &UniPoly) -> usize {
    if h.is_constant() {
        return 0;
    }
    RealAlg::isolate_real_roots(&h.derivative())
        .expect("nonzero")
        .len()
}

fn cxd_verdict(f: &QHPoly, a: &Rat, b: &Rat) -> Verdict2D {
    let d = f.d;
    if d % 2 == 0 && a.is_positive() != b.is_positive() {
        return Verdict2D::NotEquivalent(NotEquivalentReason2D::CxdSignMismatch { d });
    }
    let ratio = a / b;
    let mag = RealAlg::from_rat(ratio.abs())
        .nth_root_pos(d)
        .expect("nonzero ratio");
    let kappa = if ratio.is_negative() { mag.neg() } else { mag };
    let z = cxd_zygothety(kappa.clone());
    assert!(z.is_beta_regular(f.r, f.s));
    Verdict2D::Equivalent(Box::new(Certificate {
        theorem: TheoremTag::CxdCase,
        zygothety: z,
        trace: PairingTrace::Cxd {
            a: a.clone(),
            b: b.clone(),
            d,
            kappa,
        },
    }))
}

fn certify(
    f: &QHPoly,
    g: &QHPoly,
    option: &PairingOption,
    theorem: TheoremTag,
    construction: ConstructionKind,
    c1: RealAlg,
    c2: RealAlg,
) -> Option<Verdict2D> {
    let recipe = match construction {
        ConstructionKind::Duplicate => Recipe::Duplicate,
        ConstructionKind::Conjugate => Recipe::Conjugate,
        _ => Recipe::Separate {
            c1: c1.clone(),
            c2: c2.clone(),
        },
    };
    let z = make_regular(option, f, g, recipe).ok()?;
    Some(Verdict2D::Equivalent(Box::new(Certificate {
        theorem,
        zygothety: z,
        trace: PairingTrace::Heights {
            sign: option.sign,
            plus: option.plus.clone(),
            minus: option.minus.clone(),
            c1,
            c2,
            construction,
        },
    })))
}

/// First option admitting `c₁ = c₂`, certified with a common λ.
fn certify_common_c(
    f: &QHPoly,
    g: &QHPoly,
    options: &[PairingOption],
    theorem: TheoremTag,
) -> Option<Verdict2D> {
    options.iter().find_map(|o| {
        let c = o.common_c()?;
        certify(f, g, o, theorem, ConstructionKind::CommonC, c.clone(), c)
    })
}

/// Decides semialgebraic Lipschitz equivalence of `F` and `G`.
pub fn decide(f: &QHPoly, g: &QHPoly) -> Result<Verdict2D, QHError> {
    if (f.r, f.s) != (g.r, g.s) {
        return Err(QHError::BetaMismatch(f.r, f.s, g.r, g.s));
    }
    if f.d != g.d {
        return Err(QHError::DegreeMismatch(f.d, g.d));
    }
    match (f.cxd_coeff(), g.cxd_coeff()) {
        (Some(a), Some(b)) => return Ok(cxd_verdict(f, &a, &b)),
        (Some(_), None) | (None, Some(_)) => {
            return Ok(Verdict2D::Unknown(UnknownReason::MixedCxdCase))
        }
        (None, None) => {}
    }
    let search = search_pairings(f, g);
    let options = search.options;
    if options.is_empty() {
        let mut conditions = Vec::new();
        necessity(f, g, ArgumentOrder::FG, &mut conditions);
        necessity(g, f, ArgumentOrder::GF, &mut conditions);
        return Ok(if conditions.is_empty() {
            Verdict2D::Unknown(UnknownReason::NecessityConditionsUnavailable {
                attempts: search.attempts,
                symbols: search.symbols,
            })
        } else {
            Verdict2D::NotEquivalent(NotEquivalentReason2D::HeightsNotPairable {
                conditions,
                attempts: search.attempts,
                symbols: search.symbols,
            })
        });
    }
    assert_eq!(f.e, g.e, "paired heights force equal X-multiplicity");

    let heights = [
        &f.heights.f_plus,
        &f.heights.f_minus,
        &g.heights.f_plus,
        &g.heights.f_minus,
    ];
    let crits: Vec<usize> = heights.iter().map(|h| crit_count(h)).collect();

    if crits.contains(&0) {
        if let Some(v) = certify_common_c(f, g, &options, TheoremTag::CorNoCritPoints) {
            return Ok(v);
        }
    }
    let first = &options[0];
    let reps = || {
        (
            first.plus.c_set.representative(),
            first.minus.c_set.representative(),
        )
    };
    if f.r % 2 == 0 || f.s % 2 == 1 {
        let kind = if f.r % 2 == 0 {
            ConstructionKind::Duplicate
        } else {
            ConstructionKind::Conjugate
        };
        let (c1, _) = reps();
        if let Some(v) = certify(
            f,
            g,
            first,
            TheoremTag::SuffAParityEvenOrSOdd,
            kind,
            c1.clone(),
            c1,
        ) {
            return Ok(v);
        }
    } else {
        if f.e == 0 && g.e == 0 {
            let (c1, c2) = reps();
            if let Some(v) = certify(
                f,
                g,
                first,
                TheoremTag::SuffCNoXFactor,
                ConstructionKind::Separate,
                c1,
                c2,
            ) {
                return Ok(v);
            }
        }
        if !f.y_divides() && !g.y_divides() {
            if let Some(v) = certify_common_c(f, g, &options, TheoremTag::CorROddSEvenNoYFactor) {
                return Ok(v);
            }
        }
        if crits.contains(&1) {
            if let Some(v) = certify_common_c(f, g, &options, TheoremTag::CorROddSEvenOneCrit) {
                return Ok(v);
            }
        }
    }
    if let Some(v) = certify_common_c(f, g, &options, TheoremTag::SuffBEqualLambda) {
        return Ok(v);
    }
    Ok(Verdict2D::Unknown(UnknownReason::SufficiencyGap))
}

/// Whether `c` is the free c-set.
pub fn is_free(c: &CSet) -> bool {
    matches!(c, CSet::AnyPositive)
}

/// Convenience used by tests and the CLI: `F(aX, bY)`.
pub fn rescale(f: &QHPoly, a: &Rat, b: &Rat) -> Result<QHPoly, QHError> {
    if a.is_zero() || b.is_zero() {
        return Err(QHError::ZeroPolynomial);
    }
    validate_qh(&f.poly.scale_vars(a, b), f.r, f.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn family(l: Rat) -> BiPoly {
        BiPoly::from_terms([(int(1), 6, 0), (int(-3) * l, 4, 1), (int(1), 0, 3)])
    }

    fn qh(p: BiPoly, r: u32, s: u32) -> QHPoly {
        validate_qh(&p, r, s).unwrap()
    }

    #[test]
    fn validation_examples() {
        let f = qh(family(int(1)), 2, 1);
        assert_eq!((f.d(), f.e(), f.n()), (6, 0, 3));
        let f = qh(BiPoly::monomial(int(1), 1, 1), 2, 1);
        assert_eq!((f.d(), f.e(), f.n()), (3, 1, 1));
        let f = qh(&BiPoly::monomial(int(1), 2, 0) + &BiPoly::y(), 2, 1);
        assert_eq!((f.d(), f.e(), f.n()), (2, 0, 1));
        assert_eq!(
            validate_qh(&family(int(1)), 1, 2).unwrap_err(),
            QHError::BetaOutOfRange { r: 1, s: 2 }
        );
        assert_eq!(
            validate_qh(&family(int(1)), 4, 2).unwrap_err(),
            QHError::BetaNotReduced { r: 4, s: 2 }
        );
        assert!(matches!(
            validate_qh(&family(int(1)), 3, 1),
            Err(QHError::NotQuasihomogeneous { .. })
        ));
        assert_eq!(
            validate_qh(&BiPoly::constant(int(1)), 2, 1).unwrap_err(),
            QHError::NonPositiveDegree
        );
        assert_eq!(
            validate_qh(&BiPoly::zero(), 2, 1).unwrap_err(),
            QHError::ZeroPolynomial
        );
    }

    #[test]
    fn inference_examples() {
        assert_eq!(infer_beta(&family(int(1))).candidates, vec![(2, 1, 6)]);
        let two = BiPoly::from_terms([(int(1), 6, 0), (int(-3), 4, 1)]);
        assert_eq!(infer_beta(&two).candidates, vec![(2, 1, 6)]);
        let mono = infer_beta(&BiPoly::monomial(int(1), 3, 0));
        assert!(mono.ambiguous && mono.candidates.is_empty());
        // β = 1 is out of range
        let lin = BiPoly::from_terms([(int(1), 1, 0), (int(1), 0, 1)]);
        assert!(infer_beta(&lin).candidates.is_empty());
    }

    #[test]
    fn height_examples() {
        let h = qh(family(int(1)), 2, 1).heights();
        assert_eq!(h.f_plus, UniPoly::from_ints(&[1, -3, 0, 1]));
        assert_eq!(h.f_minus, h.f_plus);
        let h = qh(BiPoly::monomial(int(1), 1, 1), 2, 1).heights();
        assert_eq!(h.f_plus, UniPoly::from_ints(&[0, 1]));
        assert_eq!(h.f_minus, UniPoly::from_ints(&[0, -1]));
        let h = qh(family(int(-1)), 2, 1).heights();
        assert_eq!(h.f_plus, UniPoly::from_ints(&[1, 3, 0, 1]));
    }

    #[test]
    fn family_decisions() {
        let f1 = qh(family(int(1)), 2, 1);
        let f4 = qh(family(int(4)), 2, 1);
        assert!(pairing_search(&f1, &f4).is_empty());
        assert_eq!(decide(&f1, &f4).unwrap().kind(), VerdictKind::NotEquivalent);
        let m1 = qh(family(int(-1)), 2, 1);
        let m2 = qh(family(int(-2)), 2, 1);
        let v = decide(&m1, &m2).unwrap();
        assert_eq!(
            v.certificate().unwrap().theorem,
            TheoremTag::CorNoCritPoints
        );
        assert!(!pairing_search(&m1, &m1).is_empty());
    }

    #[test]
    fn cxd_examples() {
        let a = qh(BiPoly::monomial(int(2), 4, 0), 2, 1);
        let b = qh(BiPoly::monomial(int(-3), 4, 0), 2, 1);
        assert_eq!(decide(&a, &b).unwrap().kind(), VerdictKind::NotEquivalent);
        let c = qh(BiPoly::monomial(rat(1, 8), 4, 0), 2, 1);
        let v = decide(&a, &c).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.theorem, TheoremTag::CxdCase);
        assert_eq!(cert.zygothety.lambda1().as_rational(), Some(&int(2)));
        let o = qh(BiPoly::monomial(int(2), 3, 0), 2, 1);
        let p = qh(BiPoly::monomial(int(-3), 3, 0), 2, 1);
        assert_eq!(decide(&o, &p).unwrap().kind(), VerdictKind::Equivalent);
        let mixed = qh(BiPoly::monomial(int(1), 1, 1), 2, 1);
        assert!(matches!(
            decide(&o, &mixed).unwrap(),
            Verdict2D::Unknown(UnknownReason::MixedCxdCase)
        ));
    }

    #[test]
    fn precondition_errors() {
        let a = qh(family(int(1)), 2, 1);
        let b = qh(BiPoly::from_terms([(int(1), 3, 0), (int(1), 0, 2)]), 3, 2);
        assert!(matches!(decide(&a, &b), Err(QHError::BetaMismatch(..))));
        let c = qh(BiPoly::from_terms([(int(1), 4, 0), (int(1), 0, 2)]), 2, 1);
        assert!(matches!(decide(&a, &c), Err(QHError::DegreeMismatch(6, 4))));
    }
}
