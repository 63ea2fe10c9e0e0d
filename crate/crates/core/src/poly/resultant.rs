//! Resultants via the subresultant pseudo-remainder sequence, generic over
//! an integral domain with exact division.

use num_traits::{One, Zero};

use super::{PolyError, Rat, UniPoly};

/// Integral domain operations needed by the subresultant sequence.
pub trait ResultantRing: Clone {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn r_is_zero(&self) -> bool;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_neg(&self) -> Self;
    /// Division known to be exact.
    fn r_exact_div(&self, o: &Self) -> Self;
}

impl ResultantRing for Rat {
    fn r_zero() -> Self {
        Zero::zero()
    }
    fn r_one() -> Self {
        One::one()
    }
    fn r_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn r_exact_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl ResultantRing for UniPoly {
    fn r_zero() -> Self {
        UniPoly::zero()
    }
    fn r_one() -> Self {
        UniPoly::one()
    }
    fn r_is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn r_exact_div(&self, o: &Self) -> Self {
        UniPoly::exact_div(self, o)
    }
}

fn trim<R: ResultantRing>(v: &mut Vec<R>) {
    while v.last().is_some_and(|c| c.r_is_zero()) {
        v.pop();
    }
}

fn ring_pow<R: ResultantRing>(a: &R, k: usize) -> R {
    let mut acc = R::r_one();
    for _ in 0..k {
        acc = acc.r_mul(a);
    }
    acc
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b, b nonzero).
fn prem<R: ResultantRing>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<R> = a.to_vec();
    let mut e = a.len() - b.len() + 1;
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        for c in r.iter_mut() {
            *c = c.r_mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].r_sub(&lr.r_mul(bj));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = ring_pow(lb, e);
        for c in r.iter_mut() {
            *c = c.r_mul(&f);
        }
    }
    r
}

/// Resultant of two polynomials given by coefficient vectors (index =
/// exponent) over `R`. Returns zero when they share a factor.
pub fn resultant_generic<R: ResultantRing>(a: &[R], b: &[R]) -> Result<R, PolyError> {
    let mut a: Vec<R> = a.to_vec();
    let mut b: Vec<R> = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut negate = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            negate = true;
        }
    }
    let mut g = R::r_one();
    let mut h = R::r_one();
    while b.len() > 1 {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return Ok(R::r_zero());
        }
        let div = g.r_mul(&ring_pow(&h, delta));
        a = b;
        b = r.iter().map(|c| c.r_exact_div(&div)).collect();
        g = a[a.len() - 1].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => ring_pow(&g, delta).r_exact_div(&ring_pow(&h, delta - 1)),
        };
    }
    let da = a.len() - 1;
    let lb = &b[0];
    let res = if da == 0 {
        R::r_one()
    } else {
        ring_pow(lb, da).r_exact_div(&ring_pow(&h, da - 1))
    };
    Ok(if negate { res.r_neg() } else { res })
}

/// Scalar resultant of two rational polynomials.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rat, PolyError> {
    resultant_generic(p.coeffs(), q.coeffs())
}

/// `Res_t(p, q)` for `p, q` in `Q[x][t]`, given as coefficient lists in `t`
/// whose entries are polynomials in `x`.
pub fn resultant_over_qx(p: &[UniPoly], q: &[UniPoly]) -> Result<UniPoly, PolyError> {
    resultant_generic(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    /// `x - t^k` lifted to `Q[x][t]`.
    fn x_minus_power(k: usize) -> Vec<UniPoly> {
        let mut v = vec![UniPoly::zero(); k + 1];
        v[0] = UniPoly::x();
        v[k] = &v[k] - &UniPoly::one();
        v
    }

    fn lift(f: &UniPoly) -> Vec<UniPoly> {
        f.coeffs()
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect()
    }

    #[test]
    fn scalar_resultants() {
        // Res(t - a, t - b) = a - b
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-5, 1])).unwrap(), int(-3));
        // common root
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), int(0));
        // Res(t^2 + 1, t) = 1
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap(), int(1));
        // Res(t^2 - 2, 3) = 9
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[3])).unwrap(), int(9));
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(a, b) = lc(a)^deg b * prod b(alpha) over roots of a.
        let a = p(&[-6, 11, -6, 1]); // roots 1, 2, 3
        let b = p(&[1, 2, 0, 3]);
        let expect = b.eval(&int(1)) * b.eval(&int(2)) * b.eval(&int(3));
        assert_eq!(resultant(&a, &b).unwrap(), expect);
        // Res(b, a) = (-1)^{deg a deg b} Res(a, b)
        assert_eq!(resultant(&b, &a).unwrap(), -expect);
    }

    #[test]
    fn over_qx_examples() {
        let r = resultant_over_qx(&lift(&p(&[-2, 0, 1])), &x_minus_power(1)).unwrap();
        assert_eq!(r.monic(), p(&[-2, 0, 1]));
        let r = resultant_over_qx(&lift(&p(&[-2, 0, 1])), &x_minus_power(2)).unwrap();
        assert_eq!(r.monic(), p(&[4, -4, 1]));
        // Res_t(3t^2 - 3, x - (t^3 - 3t + 1)) vanishes at 3 and -1.
        let f = p(&[1, -3, 0, 1]);
        let mut q: Vec<UniPoly> = f.coeffs().iter().map(|c| UniPoly::constant(-c)).collect();
        q[0] = &q[0] + &UniPoly::x();
        let r = resultant_over_qx(&lift(&p(&[-3, 0, 3])), &q).unwrap();
        assert!(r.eval(&int(3)).is_zero());
        assert!(r.eval(&int(-1)).is_zero());
        assert_eq!(r.deg(), 2);
    }

    #[test]
    fn zero_input_is_error() {
        assert!(resultant(&UniPoly::zero(), &p(&[1, 1])).is_err());
    }
}
