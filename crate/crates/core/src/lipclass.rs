//! Lipschitz classification of univariate polynomial functions: `f ~ g`
//! when `g ∘ φ = c f` for a bi-Lipschitz homeomorphism `φ` and `c > 0`.

use std::cmp::Ordering;
use std::fmt;

use crate::poly::{sign_of, Rat, UniPoly};
use crate::realalg::{products_differ, RealAlg};

/// Critical structure of a nonconstant polynomial.
#[derive(Clone, Debug)]
pub struct CritData {
    /// Critical points, strictly increasing.
    pub points: Vec<RealAlg>,
    /// Multiplicity of `f` at each point, always >= 2.
    pub mults: Vec<u32>,
    /// Critical values `f(t_i)`.
    pub values: Vec<RealAlg>,
    pub degree: usize,
    pub leading_sign: i32,
}

impl CritData {
    pub fn count(&self) -> usize {
        self.points.len()
    }

    pub fn symbol(&self) -> MultSymbol {
        MultSymbol {
            values: self.values.clone(),
            mults: self.mults.clone(),
        }
    }
}

/// Ordered critical values with their multiplicities.
#[derive(Clone, Debug)]
pub struct MultSymbol {
    pub values: Vec<RealAlg>,
    pub mults: Vec<u32>,
}

impl MultSymbol {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn reversed(&self) -> MultSymbol {
        MultSymbol {
            values: self.values.iter().rev().cloned().collect(),
            mults: self.mults.iter().rev().copied().collect(),
        }
    }
}

/// Admissible scaling constants `c` in `g ∘ φ = c f`.
#[derive(Clone, Debug)]
pub enum CSet {
    /// Exactly one `c`, strictly positive.
    UniqueC(RealAlg),
    AnyPositive,
}

impl CSet {
    pub fn unique(&self) -> Option<&RealAlg> {
        match self {
            CSet::UniqueC(c) => Some(c),
            CSet::AnyPositive => None,
        }
    }

    /// A representative: the forced value, or 1 when free.
    pub fn representative(&self) -> RealAlg {
        self.unique().cloned().unwrap_or_else(RealAlg::one)
    }

    /// The set of `1/c`, for the swapped pair.
    pub fn reciprocal(&self) -> CSet {
        match self {
            CSet::UniqueC(c) => CSet::UniqueC(c.inv().expect("c > 0")),
            CSet::AnyPositive => CSet::AnyPositive,
        }
    }

    /// A common value of two c-sets, if one exists.
    pub fn common(&self, o: &CSet) -> Option<RealAlg> {
        match (self, o) {
            (CSet::AnyPositive, CSet::AnyPositive) => Some(RealAlg::one()),
            (CSet::UniqueC(c), CSet::AnyPositive) | (CSet::AnyPositive, CSet::UniqueC(c)) => {
                Some(c.clone())
            }
            (CSet::UniqueC(a), CSet::UniqueC(b)) => {
                (a.compare(b) == Ordering::Equal).then(|| a.clone())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Increasing,
    Decreasing,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Increasing => 1,
            Orientation::Decreasing => -1,
        }
    }

    pub fn from_sign(s: i32) -> Orientation {
        if s >= 0 {
            Orientation::Increasing
        } else {
            Orientation::Decreasing
        }
    }

    pub fn flip(self) -> Orientation {
        Orientation::from_sign(-self.sign())
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Increasing => "Increasing",
            Orientation::Decreasing => "Decreasing",
        })
    }
}

/// One realizable way of matching `f` to `g`.
#[derive(Clone, Debug)]
pub struct Pairing1D {
    pub orientation: Orientation,
    pub c_set: CSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotEquivalentReason {
    DegreeMismatch,
    CritCountMismatch,
    SignMismatch,
    ExtremumTypeMismatch,
    MultiplicityMismatch,
    SymbolNotSimilar,
    ConstantSignMismatch,
}

impl fmt::Display for NotEquivalentReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub enum Verdict1D {
    /// Nonempty list of realizable pairings.
    Equivalent(Vec<Pairing1D>),
    NotEquivalent(NotEquivalentReason),
}

impl Verdict1D {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict1D::Equivalent(_))
    }

    pub fn pairings(&self) -> &[Pairing1D] {
        match self {
            Verdict1D::Equivalent(p) => p,
            Verdict1D::NotEquivalent(_) => &[],
        }
    }
}

/// Outcome of comparing two multiplicity symbols.
#[derive(Clone, Debug)]
pub enum Similarity {
    Direct(CSet),
    Reverse(CSet),
    Both(CSet, CSet),
    NotSimilar,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LipClassError {
    #[error("critical data is undefined for constant polynomials")]
    ConstantInput,
}

/// Multiplicity of `f` at a critical point: the first `k` with
/// `f^(k)(t0) != 0`.
fn multiplicity_at(f: &UniPoly, t0: &RealAlg) -> u32 {
    let mut d = f.derivative().derivative();
    let mut k = 2;
    while t0.sign_of_poly(&d) == 0 {
        d = d.derivative();
        k += 1;
    }
    k
}

pub fn critical_data(f: &UniPoly) -> Result<CritData, LipClassError> {
    if f.is_constant() {
        return Err(LipClassError::ConstantInput);
    }
    let points = RealAlg::isolate_real_roots(&f.derivative()).expect("derivative is nonzero");
    let mults = points.iter().map(|t| multiplicity_at(f, t)).collect();
    let values = points.iter().map(|t| t.eval_poly(f)).collect();
    Ok(CritData {
        points,
        mults,
        values,
        degree: f.deg(),
        leading_sign: sign_of(&f.lc()),
    })
}

/// Tests `b = c a` for some `c > 0` with matching multiplicities.
fn directly_similar(a: &MultSymbol, b: &MultSymbol) -> Option<CSet> {
    if a.mults != b.mults {
        return None;
    }
    let sa: Vec<i32> = a.values.iter().map(RealAlg::sign).collect();
    let sb: Vec<i32> = b.values.iter().map(RealAlg::sign).collect();
    if sa != sb {
        return None;
    }
    let Some(j) = sa.iter().position(|&s| s != 0) else {
        return Some(CSet::AnyPositive);
    };
    // Cheap certified rejection before any exact arithmetic.
    for i in (0..a.len()).filter(|&i| i != j && sa[i] != 0) {
        if products_differ(&b.values[i], &a.values[j], &a.values[i], &b.values[j]) {
            return None;
        }
    }
    let c = b.values[j].div(&a.values[j]).expect("nonzero entry");
    for i in (0..a.len()).filter(|&i| i != j && sa[i] != 0) {
        let lhs = match c.as_rational() {
            Some(q) => a.values[i].scale(q),
            None => c.mul(&a.values[i]),
        };
        if lhs.compare(&b.values[i]) != Ordering::Equal {
            return None;
        }
    }
    Some(CSet::UniqueC(c))
}

/// Similarity of two symbols of equal length `p >= 2`.
pub fn similar(a: &MultSymbol, b: &MultSymbol) -> Similarity {
    assert_eq!(a.len(), b.len(), "symbols must have equal length");
    let direct = directly_similar(a, b);
    let reverse = directly_similar(&a.reversed(), b);
    match (direct, reverse) {
        (Some(d), Some(r)) => Similarity::Both(d, r),
        (Some(d), None) => Similarity::Direct(d),
        (None, Some(r)) => Similarity::Reverse(r),
        (None, None) => Similarity::NotSimilar,
    }
}

fn both_orientations(c: CSet) -> Vec<Pairing1D> {
    vec![
        Pairing1D {
            orientation: Orientation::Increasing,
            c_set: c.clone(),
        },
        Pairing1D {
            orientation: Orientation::Decreasing,
            c_set: c,
        },
    ]
}

/// Full 1-D decision for a pair of polynomials.
pub fn classify_pair(f: &UniPoly, g: &UniPoly) -> Verdict1D {
    use NotEquivalentReason::*;
    match (f.is_constant(), g.is_constant()) {
        (true, true) => {
            return if sign_of(&f.coeff(0)) == sign_of(&g.coeff(0)) {
                Verdict1D::Equivalent(both_orientations(CSet::AnyPositive))
            } else {
                Verdict1D::NotEquivalent(ConstantSignMismatch)
            };
        }
        (true, false) | (false, true) => return Verdict1D::NotEquivalent(DegreeMismatch),
        (false, false) => {}
    }
    if f.deg() != g.deg() {
        return Verdict1D::NotEquivalent(DegreeMismatch);
    }
    let cf = critical_data(f).expect("nonconstant");
    let cg = critical_data(g).expect("nonconstant");
    classify_crit(&cf, &cg)
}

/// Decision from precomputed critical data.
pub fn classify_crit(cf: &CritData, cg: &CritData) -> Verdict1D {
    use NotEquivalentReason::*;
    if cf.degree != cg.degree {
        return Verdict1D::NotEquivalent(DegreeMismatch);
    }
    if cf.count() != cg.count() {
        return Verdict1D::NotEquivalent(CritCountMismatch);
    }
    let d = cf.degree;
    // With no critical point or an odd degree, g∘φ = c f with c > 0 makes
    // φ increase exactly when the leading signs agree.
    let forced = Orientation::from_sign(cf.leading_sign * cg.leading_sign);
    let pairings = match cf.count() {
        0 => {
            assert!(
                d % 2 == 1,
                "a polynomial without critical points has odd degree"
            );
            vec![Pairing1D {
                orientation: forced,
                c_set: CSet::AnyPositive,
            }]
        }
        1 => {
            if cf.mults[0] != cg.mults[0] {
                return Verdict1D::NotEquivalent(MultiplicityMismatch);
            }
            let (a, b) = (&cf.values[0], &cg.values[0]);
            let (sa, sb) = (a.sign(), b.sign());
            if sa != sb {
                return Verdict1D::NotEquivalent(SignMismatch);
            }
            let c = if sa == 0 {
                CSet::AnyPositive
            } else {
                CSet::UniqueC(b.div(a).expect("nonzero"))
            };
            if d % 2 == 1 {
                vec![Pairing1D {
                    orientation: forced,
                    c_set: c,
                }]
            } else {
                if cf.leading_sign != cg.leading_sign {
                    return Verdict1D::NotEquivalent(ExtremumTypeMismatch);
                }
                both_orientations(c)
            }
        }
        _ => match similar(&cf.symbol(), &cg.symbol()) {
            Similarity::NotSimilar => return Verdict1D::NotEquivalent(SymbolNotSimilar),
            Similarity::Direct(c) => vec![Pairing1D {
                orientation: Orientation::Increasing,
                c_set: c,
            }],
            Similarity::Reverse(c) => vec![Pairing1D {
                orientation: Orientation::Decreasing,
                c_set: c,
            }],
            Similarity::Both(c1, c2) => vec![
                Pairing1D {
                    orientation: Orientation::Increasing,
                    c_set: c1,
                },
                Pairing1D {
                    orientation: Orientation::Decreasing,
                    c_set: c2,
                },
            ],
        },
    };
    Verdict1D::Equivalent(pairings)
}

/// Exact value of `c` when the c-set is a rational singleton.
pub fn unique_rational(c: &CSet) -> Option<Rat> {
    c.unique().and_then(|v| v.as_rational().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn sym(vals: &[i64], mults: &[u32]) -> MultSymbol {
        MultSymbol {
            values: vals.iter().map(|&v| RealAlg::from_int(v)).collect(),
            mults: mults.to_vec(),
        }
    }

    #[test]
    fn critical_data_examples() {
        let c = critical_data(&p(&[1, -3, 0, 1])).unwrap();
        assert_eq!(c.mults, vec![2, 2]);
        assert_eq!(c.points[0].as_rational(), Some(&int(-1)));
        assert_eq!(c.values[0].as_rational(), Some(&int(3)));
        assert_eq!(c.values[1].as_rational(), Some(&int(-1)));
        assert_eq!(critical_data(&p(&[1, 3, 0, 1])).unwrap().count(), 0);
        let c = critical_data(&p(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.mults, vec![4]);
        assert_eq!(c.values[0].as_rational(), Some(&int(0)));
        assert!(critical_data(&p(&[5])).is_err());
    }

    #[test]
    fn similarity_examples() {
        assert!(matches!(
            similar(&sym(&[3, -1], &[2, 2]), &sym(&[17, -15], &[2, 2])),
            Similarity::NotSimilar
        ));
        match similar(&sym(&[3, -1], &[2, 2]), &sym(&[6, -2], &[2, 2])) {
            Similarity::Direct(CSet::UniqueC(c)) => assert_eq!(c.as_rational(), Some(&int(2))),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            similar(&sym(&[0, 0], &[2, 3]), &sym(&[0, 0], &[2, 3])),
            Similarity::Direct(CSet::AnyPositive)
        ));
    }

    #[test]
    fn classify_examples() {
        assert!(matches!(
            classify_pair(&p(&[1, -3, 0, 1]), &p(&[1, -12, 0, 1])),
            Verdict1D::NotEquivalent(NotEquivalentReason::SymbolNotSimilar)
        ));
        let v = classify_pair(&p(&[1, 3, 0, 1]), &p(&[1, 6, 0, 1]));
        assert!(v.is_equivalent());
        let v = classify_pair(&p(&[0, 0, 0, 0, 1]), &p(&[0, 0, 0, 0, 1]));
        let ps = v.pairings();
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|q| matches!(q.c_set, CSet::AnyPositive)));
    }

    #[test]
    fn constant_and_degree_cases() {
        use NotEquivalentReason::*;
        assert!(classify_pair(&p(&[2]), &p(&[7])).is_equivalent());
        assert!(classify_pair(&p(&[]), &p(&[])).is_equivalent());
        assert!(matches!(
            classify_pair(&p(&[2]), &p(&[-7])),
            Verdict1D::NotEquivalent(ConstantSignMismatch)
        ));
        assert!(matches!(
            classify_pair(&p(&[2]), &p(&[0, 1])),
            Verdict1D::NotEquivalent(DegreeMismatch)
        ));
        assert!(matches!(
            classify_pair(&p(&[0, 1]), &p(&[0, 0, 1])),
            Verdict1D::NotEquivalent(DegreeMismatch)
        ));
        // t^3 has one critical point, t^3 + t has none.
        assert!(matches!(
            classify_pair(&p(&[0, 0, 0, 1]), &p(&[0, 1, 0, 1])),
            Verdict1D::NotEquivalent(CritCountMismatch)
        ));
    }

    #[test]
    fn single_critical_point_cases() {
        use NotEquivalentReason::*;
        // min vs max with equal critical value
        assert!(matches!(
            classify_pair(&p(&[-1, 0, 1]), &p(&[-1, 0, -1])),
            Verdict1D::NotEquivalent(ExtremumTypeMismatch)
        ));
        // critical values of opposite sign
        assert!(matches!(
            classify_pair(&p(&[1, 0, 1]), &p(&[-1, 0, -1])),
            Verdict1D::NotEquivalent(SignMismatch)
        ));
        // t^4 vs t^4 + t^2: one minimum each, multiplicities 4 and 2
        assert!(matches!(
            classify_pair(&p(&[0, 0, 0, 0, 1]), &p(&[0, 0, 1, 0, 1])),
            Verdict1D::NotEquivalent(MultiplicityMismatch)
        ));
        match classify_pair(&p(&[2, 0, 1]), &p(&[6, 0, 3])) {
            Verdict1D::Equivalent(ps) => {
                assert_eq!(ps.len(), 2);
                assert_eq!(unique_rational(&ps[0].c_set), Some(int(3)));
            }
            v => panic!("unexpected {v:?}"),
        }
        // odd degree, one inflection point: orientation forced by leading signs
        match classify_pair(&p(&[0, 0, 0, 1]), &p(&[0, 0, 0, -2])) {
            Verdict1D::Equivalent(ps) => {
                assert_eq!(ps.len(), 1);
                assert_eq!(ps[0].orientation, Orientation::Decreasing);
                assert!(matches!(ps[0].c_set, CSet::AnyPositive));
            }
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn reverse_similarity() {
        // f = t^3 - 3t has values (2, -2); g = -f(t) reversed pattern.
        let f = p(&[0, -3, 0, 1]);
        let g = p(&[0, -3, 0, 1]).reflect();
        match classify_pair(&f, &g) {
            Verdict1D::Equivalent(ps) => {
                assert!(ps.iter().any(|q| q.orientation == Orientation::Decreasing));
            }
            v => panic!("unexpected {v:?}"),
        }
    }
}
