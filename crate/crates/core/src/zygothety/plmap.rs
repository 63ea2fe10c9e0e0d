//! Monotone bijections of the real line described symbolically and
//! evaluated numerically on demand.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::lipclass::Orientation;
use crate::poly::{rat_to_f64, Rat, UniPoly};
use crate::realalg::RealAlg;

/// `φ = (g restricted to a monotone branch)^{-1} ∘ (c f)`, matching the
/// i-th monotone interval of `f` to the i-th (increasing) or (p-i)-th
/// (decreasing) interval of `g`.
#[derive(Debug)]
pub struct BranchMap {
    c: RealAlg,
    orientation: Orientation,
    f: UniPoly,
    g: UniPoly,
    crits_f: Vec<RealAlg>,
    crits_g: Vec<RealAlg>,
    num: BranchNumeric,
}

#[derive(Debug)]
struct BranchNumeric {
    identity: bool,
    c: f64,
    f: Vec<f64>,
    g: Vec<f64>,
    tf: Vec<f64>,
    sg: Vec<f64>,
    /// Whether `g` increases on branch `j` (branches `0..=p`).
    g_up: Vec<bool>,
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

/// Direction of `g` on each branch cut by its (sorted) critical points.
fn branch_directions(g: &UniPoly, crits: &[RealAlg]) -> Vec<bool> {
    let dg = g.derivative();
    let lc_pos = g.lc().is_positive();
    let p = crits.len();
    let mut out = Vec::with_capacity(p + 1);
    for j in 0..=p {
        let up = if j == p {
            lc_pos
        } else if j == 0 {
            // g(-inf) = -inf exactly when lc * (-1)^deg < 0
            lc_pos == (g.deg() % 2 == 1)
        } else {
            // exact rational point strictly between two critical points
            let mut a = crits[j - 1].clone();
            let mut b = crits[j].clone();
            while a.interval().1 >= b.interval().0 {
                a = a.bisect();
                b = b.bisect();
            }
            let mid = (a.interval().1 + b.interval().0) / Rat::from_integer(2.into());
            dg.sign_at(&mid) > 0
        };
        out.push(up);
    }
    out
}

impl BranchMap {
    /// Builds the map; the caller guarantees `g ∘ φ = c f` is realizable
    /// with the given orientation (equal degree and matching symbols).
    pub fn new(c: RealAlg, orientation: Orientation, f: UniPoly, g: UniPoly) -> BranchMap {
        let crits_f = RealAlg::isolate_real_roots(&f.derivative()).expect("nonconstant f");
        let crits_g = RealAlg::isolate_real_roots(&g.derivative()).expect("nonconstant g");
        assert_eq!(crits_f.len(), crits_g.len(), "critical counts must agree");
        assert_eq!(f.deg(), g.deg(), "degrees must agree");
        let identity = f == g
            && orientation == Orientation::Increasing
            && c.as_rational().is_some_and(One::is_one);
        let num = BranchNumeric {
            identity,
            c: c.to_f64(),
            f: f.to_f64_coeffs(),
            g: g.to_f64_coeffs(),
            tf: crits_f.iter().map(RealAlg::to_f64).collect(),
            sg: crits_g.iter().map(RealAlg::to_f64).collect(),
            g_up: branch_directions(&g, &crits_g),
        };
        BranchMap {
            c,
            orientation,
            f,
            g,
            crits_f,
            crits_g,
            num,
        }
    }

    pub fn c(&self) -> &RealAlg {
        &self.c
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn g(&self) -> &UniPoly {
        &self.g
    }

    pub fn crits_f(&self) -> &[RealAlg] {
        &self.crits_f
    }

    pub fn crits_g(&self) -> &[RealAlg] {
        &self.crits_g
    }

    pub fn is_identity(&self) -> bool {
        self.num.identity
    }

    /// The map `g ∘ ψ = c^{-1} f`'s counterpart: `ψ = φ^{-1}`.
    pub fn inverse(&self) -> BranchMap {
        BranchMap::new(
            self.c.inv().expect("c > 0"),
            self.orientation,
            self.g.clone(),
            self.f.clone(),
        )
    }

    /// `o · |c · lc(f) / lc(g)|^{1/deg}`.
    pub fn limit_slope(&self) -> RealAlg {
        let ratio = self.c.scale(&(self.f.lc() / self.g.lc())).abs();
        let root = ratio
            .nth_root_pos(self.f.deg() as u32)
            .expect("positive ratio");
        match self.orientation {
            Orientation::Increasing => root,
            Orientation::Decreasing => root.neg(),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let n = &self.num;
        if n.identity {
            return t;
        }
        let y = n.c * horner(&n.f, t);
        let p = n.tf.len();
        let i = n.tf.partition_point(|&x| x <= t);
        let j = match self.orientation {
            Orientation::Increasing => i,
            Orientation::Decreasing => p - i,
        };
        let left = (j > 0).then(|| n.sg[j - 1]);
        let right = (j < p).then(|| n.sg[j]);
        invert_monotone(&n.g, n.g_up[j], left, right, y)
    }
}

/// Solves `g(x) = y` on a branch where `g` is monotone (increasing when
/// `up`), clamping to the branch end when rounding puts `y` out of range.
fn invert_monotone(g: &[f64], up: bool, left: Option<f64>, right: Option<f64>, y: f64) -> f64 {
    let s = if up { 1.0 } else { -1.0 };
    let h = |x: f64| s * (horner(g, x) - y);
    let (mut lo, mut hi) = match (left, right) {
        (Some(a), Some(b)) => {
            if h(a) >= 0.0 {
                return a;
            }
            if h(b) <= 0.0 {
                return b;
            }
            (a, b)
        }
        (Some(a), None) => {
            if h(a) >= 0.0 {
                return a;
            }
            let mut step = 1.0f64.max(a.abs());
            let mut b = a + step;
            while h(b) < 0.0 && b.is_finite() {
                step *= 2.0;
                b = a + step;
            }
            (a, b)
        }
        (None, Some(b)) => {
            if h(b) <= 0.0 {
                return b;
            }
            let mut step = 1.0f64.max(b.abs());
            let mut a = b - step;
            while h(a) > 0.0 && a.is_finite() {
                step *= 2.0;
                a = b - step;
            }
            (a, b)
        }
        (None, None) => {
            let mut step = 1.0f64;
            let (mut a, mut b) = (-1.0, 1.0);
            while (h(a) > 0.0 || h(b) < 0.0) && step.is_finite() {
                step *= 2.0;
                a = -step;
                b = step;
            }
            (a, b)
        }
    };
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-16 * hi.abs().max(lo.abs()) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Symbolic monotone bijection of the reals.
#[derive(Clone, Debug)]
pub enum PLMap {
    /// `t ↦ a t + b`, `a != 0`.
    Affine {
        a: Rat,
        b: Rat,
    },
    Branch(Arc<BranchMap>),
    /// `t ↦ -m(t)`.
    Neg(Box<PLMap>),
    /// `t ↦ -m(-t)`.
    NegConj(Box<PLMap>),
    /// `outer ∘ inner`.
    Compose(Box<PLMap>, Box<PLMap>),
}

impl PLMap {
    pub fn identity() -> PLMap {
        PLMap::Affine {
            a: Rat::one(),
            b: Rat::zero(),
        }
    }

    pub fn affine(a: Rat, b: Rat) -> PLMap {
        assert!(!a.is_zero(), "affine slope must be nonzero");
        PLMap::Affine { a, b }
    }

    pub fn branch(c: RealAlg, orientation: Orientation, f: UniPoly, g: UniPoly) -> PLMap {
        PLMap::Branch(Arc::new(BranchMap::new(c, orientation, f, g)))
    }

    pub fn neg(self) -> PLMap {
        PLMap::Neg(Box::new(self))
    }

    pub fn neg_conj(self) -> PLMap {
        PLMap::NegConj(Box::new(self))
    }

    /// `self ∘ inner`.
    pub fn after(self, inner: PLMap) -> PLMap {
        match (&self, &inner) {
            (PLMap::Affine { a, b }, PLMap::Affine { a: a2, b: b2 }) => PLMap::Affine {
                a: a * a2,
                b: a * b2 + b,
            },
            _ if self.is_identity() => inner,
            _ if inner.is_identity() => self,
            _ => PLMap::Compose(Box::new(self), Box::new(inner)),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            PLMap::Affine { a, b } => a.is_one() && b.is_zero(),
            PLMap::Branch(m) => m.is_identity(),
            _ => false,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            PLMap::Affine { a, b } => rat_to_f64(a) * t + rat_to_f64(b),
            PLMap::Branch(m) => m.eval(t),
            PLMap::Neg(m) => -m.eval(t),
            PLMap::NegConj(m) => -m.eval(-t),
            PLMap::Compose(o, i) => o.eval(i.eval(t)),
        }
    }

    pub fn orientation(&self) -> Orientation {
        match self {
            PLMap::Affine { a, .. } => Orientation::from_sign(if a.is_positive() { 1 } else { -1 }),
            PLMap::Branch(m) => m.orientation(),
            PLMap::Neg(m) => m.orientation().flip(),
            PLMap::NegConj(m) => m.orientation(),
            PLMap::Compose(o, i) => {
                Orientation::from_sign(o.orientation().sign() * i.orientation().sign())
            }
        }
    }

    pub fn inverse(&self) -> PLMap {
        match self {
            PLMap::Affine { a, b } => PLMap::Affine {
                a: a.recip(),
                b: -(b / a),
            },
            PLMap::Branch(m) => PLMap::Branch(Arc::new(m.inverse())),
            PLMap::Neg(m) => m.inverse().neg_conj().neg(),
            PLMap::NegConj(m) => m.inverse().neg_conj(),
            PLMap::Compose(o, i) => i.inverse().after(o.inverse()),
        }
    }

    /// The two-sided limit of `m(t)/t` at infinity.
    pub fn limit_slope(&self) -> RealAlg {
        match self {
            PLMap::Affine { a, .. } => RealAlg::from_rat(a.clone()),
            PLMap::Branch(m) => m.limit_slope(),
            PLMap::Neg(m) => m.limit_slope().neg(),
            PLMap::NegConj(m) => m.limit_slope(),
            PLMap::Compose(o, i) => o.limit_slope().mul(&i.limit_slope()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn limit_slopes() {
        assert_eq!(
            PLMap::affine(int(3), int(7)).limit_slope().as_rational(),
            Some(&int(3))
        );
        let f = p(&[1, -3, 0, 1]);
        let id = PLMap::branch(RealAlg::one(), Orientation::Increasing, f.clone(), f);
        assert!(id.is_identity());
        assert_eq!(id.limit_slope().as_rational(), Some(&int(1)));
        let m = PLMap::branch(
            RealAlg::from_int(8),
            Orientation::Increasing,
            p(&[1, 3, 0, 1]),
            p(&[1, 6, 0, 1]),
        );
        assert_eq!(m.limit_slope().as_rational(), Some(&int(2)));
        assert_eq!(m.clone().neg().limit_slope().as_rational(), Some(&int(-2)));
        assert_eq!(m.neg_conj().limit_slope().as_rational(), Some(&int(2)));
    }

    #[test]
    fn branch_map_solves_the_conjugacy() {
        let f = p(&[1, 3, 0, 1]);
        let g = p(&[1, 6, 0, 1]);
        let m = PLMap::branch(
            RealAlg::from_int(8),
            Orientation::Increasing,
            f.clone(),
            g.clone(),
        );
        for k in -20..=20 {
            let t = k as f64 * 0.37;
            let x = m.eval(t);
            let lhs = g.eval_f64(x);
            let rhs = 8.0 * f.eval_f64(t);
            assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0), "t={t}");
        }
    }

    #[test]
    fn branch_map_with_critical_points() {
        // f = t^3 - 3t, g = f(-t) = -t^3 + 3t: decreasing matching with c = 1.
        let f = p(&[0, -3, 0, 1]);
        let g = f.reflect();
        let m = PLMap::branch(
            RealAlg::one(),
            Orientation::Decreasing,
            f.clone(),
            g.clone(),
        );
        let mut last = f64::INFINITY;
        for k in -30..=30 {
            let t = k as f64 * 0.1;
            let x = m.eval(t);
            assert!((x + t).abs() < 1e-9, "t={t} x={x}");
            assert!(x < last);
            last = x;
        }
    }

    #[test]
    fn inverses_compose_to_identity() {
        let f = p(&[1, 3, 0, 1]);
        let g = p(&[1, 6, 0, 1]);
        let m = PLMap::branch(RealAlg::from_int(8), Orientation::Increasing, f, g)
            .neg()
            .after(PLMap::affine(int(2), int(1)))
            .neg_conj();
        let inv = m.inverse();
        for k in -10..=10 {
            let t = k as f64 * 0.5;
            assert!((inv.eval(m.eval(t)) - t).abs() < 1e-9);
        }
        let l = m.limit_slope().mul(&inv.limit_slope());
        assert_eq!(l.as_rational(), Some(&int(1)));
    }
}
