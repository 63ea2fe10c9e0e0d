//! Real algebraic numbers as (square-free defining polynomial, isolating
//! interval), with exact comparison, sign tests and field arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{
    rat_pow, rat_to_f64, resultant_over_qx, sign_of, PolyError, Rat, SturmSeq, UniPoly,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealAlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand must be strictly positive")]
    NonPositiveRadicand,
    #[error("root exponent must be positive")]
    ZeroExponent,
    #[error("refinement width must be positive")]
    NonPositiveWidth,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Default number of bits kept when converting to `f64`.
pub const DEFAULT_PRECISION_BITS: u32 = 80;

/// Refinement precision for float conversion; `QHLIP_PRECISION_BITS`
/// overrides the default once per process.
pub fn precision_bits() -> u32 {
    static BITS: OnceLock<u32> = OnceLock::new();
    *BITS.get_or_init(|| {
        std::env::var("QHLIP_PRECISION_BITS")
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .filter(|b| (8..=4096).contains(b))
            .unwrap_or(DEFAULT_PRECISION_BITS)
    })
}

/// A real algebraic number.
///
/// Invariant: either `lo == hi` and `defpoly = t - lo`, or `lo < hi`,
/// `defpoly` is square-free and primitive with exactly one root in
/// `[lo, hi]`, and neither endpoint is a root.
#[derive(Clone)]
pub struct RealAlg {
    defpoly: UniPoly,
    lo: Rat,
    hi: Rat,
}

/// Closed rational interval used for enclosures.
#[derive(Clone, Debug)]
struct Iv {
    lo: Rat,
    hi: Rat,
}

impl Iv {
    fn point(q: Rat) -> Iv {
        Iv {
            lo: q.clone(),
            hi: q,
        }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn mul(&self, o: &Iv) -> Iv {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Iv { lo, hi }
    }

    fn poly(p: &UniPoly, x: &Iv) -> Iv {
        let mut acc = Iv::point(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add(&Iv::point(c.clone()));
        }
        acc
    }
}

/// Simplest rational (smallest denominator) in the closed interval.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    let mut terms: Vec<Rat> = Vec::new();
    let (mut a, mut b) = (lo.clone(), hi.clone());
    loop {
        let fl = a.floor();
        if a.is_integer() {
            terms.push(a);
            break;
        }
        let up = &fl + Rat::one();
        if up <= b {
            terms.push(up);
            break;
        }
        let na = (&b - &fl).recip();
        let nb = (&a - &fl).recip();
        terms.push(fl);
        a = na;
        b = nb;
    }
    let mut x = terms.pop().expect("at least one term");
    while let Some(t) = terms.pop() {
        x = t + x.recip();
    }
    x
}

/// Certifies `a b != c d` from refined enclosures. `false` means the
/// products could not be separated, not that they are equal.
pub fn products_differ(a: &RealAlg, b: &RealAlg, c: &RealAlg, d: &RealAlg) -> bool {
    let mut w = Rat::new(BigInt::one(), BigInt::one() << 16u32);
    for _ in 0..4 {
        let enc = |x: &RealAlg| {
            let r = x.refine(&w).expect("positive width");
            Iv { lo: r.lo, hi: r.hi }
        };
        let l = enc(a).mul(&enc(b));
        let r = enc(c).mul(&enc(d));
        if l.hi < r.lo || r.hi < l.lo {
            return true;
        }
        w = &w * &w;
    }
    false
}

/// Rational bounds `(l, u)` with `l^n <= x <= u^n`, `0 <= l` and
/// `u - l <= eps`, found by bisection.
fn nth_root_bracket(x: &Rat, n: u32, eps: &Rat) -> (Rat, Rat) {
    let mut l = Rat::zero();
    let mut u = if *x > Rat::one() {
        x.clone()
    } else {
        Rat::one()
    };
    while &u - &l > *eps {
        let m = (&l + &u) / Rat::from_integer(BigInt::from(2));
        if rat_pow(&m, n) <= *x {
            l = m;
        } else {
            u = m;
        }
    }
    (l, u)
}

fn exact_nth_root(q: &Rat, n: u32) -> Option<Rat> {
    let rn = q.numer().nth_root(n);
    let rd = q.denom().nth_root(n);
    let r = Rat::new(rn, rd);
    (rat_pow(&r, n) == *q).then_some(r)
}

/// Positive `n`-th root of a rational `q > 0`.
fn rational_nth_root(q: &Rat, n: u32) -> RealAlg {
    if let Some(r) = exact_nth_root(q, n) {
        return RealAlg::from_rat(r);
    }
    // t^n - q has a single positive root and no rational one, so any
    // bracket with a positive lower end isolates it.
    let mut eps = Rat::one();
    loop {
        let (l, u) = nth_root_bracket(q, n, &eps);
        if l.is_positive() {
            let p = (&UniPoly::monomial(Rat::one(), n as usize) + &UniPoly::constant(-q.clone()))
                .primitive();
            return RealAlg::from_isolating(p, l, u);
        }
        eps /= Rat::from_integer(BigInt::from(16));
    }
}

/// Picks the root of `r` that the enclosure sequence converges to.
/// `enc(k)` must return a closed interval containing the target at every
/// step and shrink to it as `k` grows.
fn select_root<F: FnMut(usize) -> Iv>(r: &UniPoly, mut enc: F) -> RealAlg {
    let q = r
        .square_free_part()
        .expect("resultant is nonzero")
        .primitive();
    if q.deg() == 1 {
        return RealAlg::from_rat(-q.coeff(0) / q.coeff(1));
    }
    let seq = SturmSeq::new(&q).expect("nonzero");
    for step in 0.. {
        let e = enc(step);
        if e.lo == e.hi {
            return RealAlg::from_rat(e.lo);
        }
        let n = seq.count_closed(&e.lo, &e.hi);
        debug_assert!(n >= 1, "enclosure lost the target root");
        if n == 1 {
            if q.eval(&e.lo).is_zero() {
                return RealAlg::from_rat(e.lo);
            }
            if q.eval(&e.hi).is_zero() {
                return RealAlg::from_rat(e.hi);
            }
            return RealAlg::from_isolating(q, e.lo, e.hi);
        }
    }
    unreachable!()
}

/// `Q[x][y]` helpers: vectors indexed by the power of `y`.
fn lift_const(p: &UniPoly) -> Vec<UniPoly> {
    p.coeffs()
        .iter()
        .map(|c| UniPoly::constant(c.clone()))
        .collect()
}

fn qxy_mul(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let mut v = vec![UniPoly::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            v[i + j] = &v[i + j] + &(ai * bj);
        }
    }
    v
}

impl RealAlg {
    pub fn from_rat(q: Rat) -> Self {
        RealAlg {
            defpoly: UniPoly::linear_root(&q),
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Wraps an isolating interval of a square-free polynomial and
    /// normalizes rational values to point form.
    fn from_isolating(p: UniPoly, lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo < hi);
        RealAlg {
            defpoly: p.primitive(),
            lo,
            hi,
        }
        .normalized()
    }

    /// Detects rational values exactly: a rational root of a primitive
    /// integer polynomial has denominator dividing the leading coefficient,
    /// so once the interval is narrower than `1 / lc^2` the simplest
    /// rational inside is the only candidate.
    fn normalized(mut self) -> Self {
        if self.is_rational() {
            return self;
        }
        if self.defpoly.deg() == 1 {
            let v = -self.defpoly.coeff(0) / self.defpoly.coeff(1);
            return Self::from_rat(v);
        }
        let lc = self.defpoly.lc().abs();
        if lc.numer().bits() > 4096 {
            return self;
        }
        let target = (&lc * &lc).recip();
        while &self.hi - &self.lo >= target {
            self = self.bisect();
            if self.is_rational() {
                return self;
            }
        }
        let q = simplest_rational_between(&self.lo, &self.hi);
        if self.defpoly.eval(&q).is_zero() {
            Self::from_rat(q)
        } else {
            self
        }
    }

    pub fn defpoly(&self) -> &UniPoly {
        &self.defpoly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.lo)
    }

    /// Sturm count of the defining polynomial on the closed interval; 1
    /// for every valid value.
    pub fn sturm_count(&self) -> usize {
        SturmSeq::new(&self.defpoly)
            .expect("defpoly is nonzero")
            .count_closed(&self.lo, &self.hi)
    }

    /// All distinct real roots of `p`, increasing.
    pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<RealAlg>, RealAlgError> {
        let q = p.square_free_part()?.primitive();
        if q.deg() == 0 {
            return Ok(Vec::new());
        }
        let seq = SturmSeq::new(&q)?;
        let b = q.root_bound();
        let two = Rat::from_integer(BigInt::from(2));
        let mut stack = vec![(-b.clone(), b, seq.count_all())];
        let mut roots = Vec::new();
        while let Some((lo, hi, n)) = stack.pop() {
            match n {
                0 => continue,
                1 => {
                    roots.push(RealAlg::from_isolating(q.clone(), lo, hi));
                    continue;
                }
                _ => {}
            }
            let mid = (&lo + &hi) / &two;
            if !q.eval(&mid).is_zero() {
                let left = seq.count(Some(&lo), Some(&mid));
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
                continue;
            }
            roots.push(RealAlg::from_rat(mid.clone()));
            let mut eps = (&hi - &lo) / Rat::from_integer(BigInt::from(4));
            loop {
                let a = &mid - &eps;
                let c = &mid + &eps;
                if !q.eval(&a).is_zero()
                    && !q.eval(&c).is_zero()
                    && seq.count(Some(&a), Some(&c)) == 1
                {
                    let left = seq.count(Some(&lo), Some(&a));
                    let right = seq.count(Some(&c), Some(&hi));
                    stack.push((c, hi, right));
                    stack.push((lo, a, left));
                    break;
                }
                eps /= &two;
            }
        }
        roots.sort_by(|a, b| a.compare(b));
        // Rational roots are known exactly; drop their factors from the
        // defining polynomial of the irrational ones.
        let mut reduced = q.clone();
        for r in roots.iter().filter(|r| r.is_rational()) {
            reduced = reduced.exact_div(&UniPoly::linear_root(&r.lo));
        }
        if reduced != q {
            let reduced = reduced.primitive();
            for r in roots.iter_mut().filter(|r| !r.is_rational()) {
                r.defpoly = reduced.clone();
            }
        }
        Ok(roots)
    }

    /// One bisection step; may collapse to a rational point.
    pub fn bisect(&self) -> RealAlg {
        if self.is_rational() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2));
        let vm = self.defpoly.eval(&mid);
        if vm.is_zero() {
            return Self::from_rat(mid);
        }
        let sl = self.defpoly.sign_at(&self.lo);
        let mut r = self.clone();
        if sl == sign_of(&vm) {
            r.lo = mid;
        } else {
            r.hi = mid;
        }
        r
    }

    /// Same number with interval width at most `width`.
    pub fn refine(&self, width: &Rat) -> Result<RealAlg, RealAlgError> {
        if !width.is_positive() {
            return Err(RealAlgError::NonPositiveWidth);
        }
        let mut r = self.clone();
        while &r.hi - &r.lo > *width {
            r = r.bisect();
        }
        Ok(r)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Certified equality test for two values whose intervals overlap.
    fn overlapping_equal(&self, o: &RealAlg, g: &UniPoly) -> bool {
        if g.deg() == 0 {
            return false;
        }
        let lo = if self.lo > o.lo { &self.lo } else { &o.lo };
        let hi = if self.hi < o.hi { &self.hi } else { &o.hi };
        if lo >= hi {
            return false;
        }
        // g divides both defining polynomials, so it has at most one root
        // in the intersection and none at its endpoints.
        g.sign_at(lo) != g.sign_at(hi)
    }

    /// Exact total order.
    pub fn compare(&self, o: &RealAlg) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return a.cmp(b);
        }
        let mut a = self.clone();
        let mut b = o.clone();
        let mut g: Option<UniPoly> = None;
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            match (a.as_rational(), b.as_rational()) {
                (Some(x), Some(y)) => return x.cmp(y),
                (Some(x), None) => {
                    if b.defpoly.eval(x).is_zero() {
                        return Ordering::Equal;
                    }
                    b = b.bisect();
                    continue;
                }
                (None, Some(y)) => {
                    if a.defpoly.eval(y).is_zero() {
                        return Ordering::Equal;
                    }
                    a = a.bisect();
                    continue;
                }
                (None, None) => {}
            }
            let gg = g.get_or_insert_with(|| {
                a.defpoly
                    .gcd(&b.defpoly)
                    .expect("nonzero defining polynomials")
            });
            if a.overlapping_equal(&b, gg) {
                return Ordering::Equal;
            }
            a = a.bisect();
            b = b.bisect();
        }
    }

    pub fn sign(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return sign_of(q);
        }
        let mut a = self.clone();
        loop {
            if !a.lo.is_negative() {
                return 1;
            }
            if !a.hi.is_positive() {
                return -1;
            }
            a = a.bisect();
            if let Some(q) = a.as_rational() {
                return sign_of(q);
            }
        }
    }

    /// Exact sign of `p` at this number.
    pub fn sign_of_poly(&self, p: &UniPoly) -> i32 {
        if let Some(q) = self.as_rational() {
            return p.sign_at(q);
        }
        if p.is_zero() {
            return 0;
        }
        let g = self.defpoly.gcd(p).expect("defpoly is nonzero");
        if g.deg() > 0 && g.sign_at(&self.lo) != g.sign_at(&self.hi) {
            return 0;
        }
        let sp = SturmSeq::new(&p.square_free_part().expect("nonzero")).expect("nonzero");
        let mut a = self.clone();
        loop {
            if let Some(q) = a.as_rational() {
                return p.sign_at(q);
            }
            if !p.eval(&a.lo).is_zero() && sp.count(Some(&a.lo), Some(&a.hi)) == 0 {
                return p.sign_at(&a.lo);
            }
            a = a.bisect();
        }
    }

    /// The algebraic number `p(self)`.
    pub fn eval_poly(&self, p: &UniPoly) -> RealAlg {
        if let Some(q) = self.as_rational() {
            return Self::from_rat(p.eval(q));
        }
        let p = p.rem(&self.defpoly);
        if p.deg() <= 1 {
            let c1 = p.coeff(1);
            return self.scale(&c1).add_rat(&p.coeff(0));
        }
        // Res_t(A(t), x - p(t)) in Q[x].
        let a = lift_const(&self.defpoly);
        let mut b: Vec<UniPoly> = p.coeffs().iter().map(|c| UniPoly::constant(-c)).collect();
        b[0] = &b[0] + &UniPoly::x();
        let r = resultant_over_qx(&a, &b).expect("nonzero operands");
        let mut cur = self.clone();
        select_root(&r, |step| {
            if step > 0 {
                cur = cur.bisect();
            }
            Iv::poly(
                &p,
                &Iv {
                    lo: cur.lo.clone(),
                    hi: cur.hi.clone(),
                },
            )
        })
    }

    pub fn neg(&self) -> RealAlg {
        if let Some(q) = self.as_rational() {
            return Self::from_rat(-q);
        }
        RealAlg {
            defpoly: self.defpoly.reflect().primitive(),
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn abs(&self) -> RealAlg {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// `self + q` for rational `q`.
    pub fn add_rat(&self, q: &Rat) -> RealAlg {
        if let Some(v) = self.as_rational() {
            return Self::from_rat(v + q);
        }
        RealAlg {
            defpoly: self.defpoly.compose_linear(&Rat::one(), &-q).primitive(),
            lo: &self.lo + q,
            hi: &self.hi + q,
        }
    }

    /// `self * q` for rational `q`.
    pub fn scale(&self, q: &Rat) -> RealAlg {
        if q.is_zero() {
            return Self::zero();
        }
        if let Some(v) = self.as_rational() {
            return Self::from_rat(v * q);
        }
        let (lo, hi) = if q.is_positive() {
            (&self.lo * q, &self.hi * q)
        } else {
            (&self.hi * q, &self.lo * q)
        };
        RealAlg {
            defpoly: self
                .defpoly
                .compose_linear(&q.recip(), &Rat::zero())
                .primitive(),
            lo,
            hi,
        }
    }

    pub fn add(&self, o: &RealAlg) -> RealAlg {
        if let Some(q) = o.as_rational() {
            return self.add_rat(q);
        }
        if let Some(q) = self.as_rational() {
            return o.add_rat(q);
        }
        // Res_y(A(y), B(x - y)).
        let a = lift_const(&self.defpoly);
        let x_minus_y = vec![UniPoly::x(), UniPoly::constant(-Rat::one())];
        let mut b = vec![UniPoly::zero()];
        let mut pw = vec![UniPoly::one()];
        for c in o.defpoly.coeffs() {
            let term: Vec<UniPoly> = pw.iter().map(|u| u.scale(c)).collect();
            if term.len() > b.len() {
                b.resize(term.len(), UniPoly::zero());
            }
            for (k, t) in term.into_iter().enumerate() {
                b[k] = &b[k] + &t;
            }
            pw = qxy_mul(&pw, &x_minus_y);
        }
        let r = resultant_over_qx(&a, &b).expect("nonzero operands");
        let (mut x, mut y) = (self.clone(), o.clone());
        select_root(&r, |step| {
            if step > 0 {
                x = x.bisect();
                y = y.bisect();
            }
            Iv {
                lo: &x.lo + &y.lo,
                hi: &x.hi + &y.hi,
            }
        })
    }

    pub fn sub(&self, o: &RealAlg) -> RealAlg {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RealAlg) -> RealAlg {
        if let Some(q) = o.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return o.scale(q);
        }
        // Res_y(A(y), y^m B(x / y)).
        let a = lift_const(&self.defpoly);
        let m = o.defpoly.deg();
        let b: Vec<UniPoly> = (0..=m)
            .map(|k| UniPoly::monomial(o.defpoly.coeff(m - k), m - k))
            .collect();
        let r = resultant_over_qx(&a, &b).expect("nonzero operands");
        let (mut x, mut y) = (self.clone(), o.clone());
        select_root(&r, |step| {
            if step > 0 {
                x = x.bisect();
                y = y.bisect();
            }
            Iv {
                lo: x.lo.clone(),
                hi: x.hi.clone(),
            }
            .mul(&Iv {
                lo: y.lo.clone(),
                hi: y.hi.clone(),
            })
        })
    }

    pub fn inv(&self) -> Result<RealAlg, RealAlgError> {
        if let Some(q) = self.as_rational() {
            if q.is_zero() {
                return Err(RealAlgError::DivisionByZero);
            }
            return Ok(Self::from_rat(q.recip()));
        }
        let mut a = self.clone();
        while a.lo.is_negative() && a.hi.is_positive() {
            a = a.bisect();
            if let Some(q) = a.as_rational() {
                return Ok(Self::from_rat(q.recip()));
            }
        }
        let k = a.defpoly.zero_root_multiplicity();
        let p = a.defpoly.shift_down(k).reverse().primitive();
        Ok(RealAlg::from_isolating(p, a.hi.recip(), a.lo.recip()))
    }

    pub fn div(&self, o: &RealAlg) -> Result<RealAlg, RealAlgError> {
        if let Some(q) = self.rational_ratio(o) {
            return Ok(Self::from_rat(q));
        }
        Ok(self.mul(&o.inv()?))
    }

    /// `self / o` when it is rational and both numbers are irrational of
    /// the same degree; avoids the resultant in the common case.
    fn rational_ratio(&self, o: &RealAlg) -> Option<Rat> {
        if self.is_rational() || o.is_rational() {
            return None;
        }
        let (a, b) = (&o.defpoly, &self.defpoly);
        let n = a.deg();
        if b.deg() != n {
            return None;
        }
        // self = c o forces b(t) ∝ a(t / c), i.e. b_k / b_n = c^(n-k) a_k / a_n.
        let k = (0..n).rev().find(|&k| !a.coeff(k).is_zero())?;
        let m = (n - k) as u32;
        let pw = (b.coeff(k) * a.coeff(n)) / (b.coeff(n) * a.coeff(k));
        let sign = self.sign() * o.sign();
        let target = if m % 2 == 1 && sign < 0 {
            -&pw
        } else {
            pw.clone()
        };
        if target.is_negative() {
            return None;
        }
        let mut c = exact_nth_root(&target, m)?;
        if sign < 0 {
            c = -c;
        }
        if m % 2 == 1 && rat_pow(&c, m) != pw {
            return None;
        }
        (o.scale(&c).compare(self) == Ordering::Equal).then_some(c)
    }

    pub fn pow(&self, k: u32) -> RealAlg {
        match k {
            0 => Self::one(),
            1 => self.clone(),
            _ => self.eval_poly(&UniPoly::monomial(Rat::one(), k as usize)),
        }
    }

    /// The positive real `n`-th root of a positive number.
    pub fn nth_root_pos(&self, n: u32) -> Result<RealAlg, RealAlgError> {
        if n == 0 {
            return Err(RealAlgError::ZeroExponent);
        }
        if self.sign() <= 0 {
            return Err(RealAlgError::NonPositiveRadicand);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        if let Some(q) = self.as_rational() {
            return Ok(rational_nth_root(q, n));
        }
        let mut a = self.clone();
        while !a.lo.is_positive() {
            a = a.bisect();
            if let Some(q) = a.as_rational() {
                return Ok(rational_nth_root(q, n));
            }
        }
        let a_seq = SturmSeq::new(&a.defpoly)?;
        let p = a.defpoly.substitute_power(n as usize);
        loop {
            let eps = (&a.hi - &a.lo) / Rat::from_integer(BigInt::from(4 * n));
            let (l, _) = nth_root_bracket(&a.lo, n, &eps);
            let (_, u) = nth_root_bracket(&a.hi, n, &eps);
            let (ln, un) = (rat_pow(&l, n), rat_pow(&u, n));
            if l.is_positive()
                && !a.defpoly.eval(&ln).is_zero()
                && !a.defpoly.eval(&un).is_zero()
                && a_seq.count_closed(&ln, &un) == 1
            {
                return Ok(RealAlg::from_isolating(p, l, u));
            }
            a = a.bisect();
            if let Some(q) = a.as_rational() {
                return Ok(rational_nth_root(q, n));
            }
        }
    }

    /// Float value, from an interval of width at most `2^-bits`.
    pub fn to_f64_with(&self, bits: u32) -> f64 {
        if let Some(q) = self.as_rational() {
            return rat_to_f64(q);
        }
        let w = Rat::new(BigInt::one(), BigInt::one() << bits);
        let r = self.refine(&w).expect("positive width");
        rat_to_f64(&((&r.lo + &r.hi) / Rat::from_integer(BigInt::from(2))))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_f64_with(precision_bits())
    }
}

impl PartialEq for RealAlg {
    fn eq(&self, o: &Self) -> bool {
        self.compare(o) == Ordering::Equal
    }
}

impl Eq for RealAlg {}

impl PartialOrd for RealAlg {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.compare(o))
    }
}

impl Ord for RealAlg {
    fn cmp(&self, o: &Self) -> Ordering {
        self.compare(o)
    }
}

impl From<Rat> for RealAlg {
    fn from(q: Rat) -> Self {
        RealAlg::from_rat(q)
    }
}

impl fmt::Display for RealAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(
                f,
                "root of {} in [{}, {}] ~ {}",
                self.defpoly,
                self.lo,
                self.hi,
                self.to_f64_with(64)
            ),
        }
    }
}

impl fmt::Debug for RealAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealAlg({self})")
    }
}
