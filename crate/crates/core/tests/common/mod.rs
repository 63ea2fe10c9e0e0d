//! Random generators shared by the integration and acceptance targets.
#![allow(dead_code)]

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qhlip_core::poly::{int, rat, BiPoly, Rat, UniPoly};
use qhlip_core::qh::{validate_qh, QHPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn small_rat(r: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    rat(r.gen_range(-max_num..=max_num), r.gen_range(1..=max_den))
}

pub fn nonzero_rat(r: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    loop {
        let q = small_rat(r, max_num, max_den);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn positive_rat(r: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    rat(r.gen_range(1..=max_num), r.gen_range(1..=max_den))
}

/// Integer coefficients in `[-c, c]`, exact degree `deg`.
pub fn random_uni(r: &mut ChaCha8Rng, deg: usize, c: i64) -> UniPoly {
    let mut coeffs: Vec<i64> = (0..=deg).map(|_| r.gen_range(-c..=c)).collect();
    while coeffs[deg] == 0 {
        coeffs[deg] = r.gen_range(-c..=c);
    }
    UniPoly::from_ints(&coeffs)
}

pub const BETAS: [(u32, u32); 4] = [(3, 2), (2, 1), (5, 2), (3, 1)];

/// A random `β`-quasihomogeneous polynomial of degree at most `dmax` that is
/// not of the form `c X^d`.
pub fn random_qh(r: &mut ChaCha8Rng, (br, bs): (u32, u32), dmax: u32) -> QHPoly {
    let n = r.gen_range(1..=dmax / br);
    let e = r.gen_range(0..=dmax - br * n);
    let d = e + br * n;
    let mut terms = Vec::new();
    for k in 0..=n {
        let mut c = r.gen_range(-4i64..=4);
        if k == n {
            while c == 0 {
                c = r.gen_range(-4i64..=4);
            }
        }
        terms.push((int(c), d - br * k, bs * k));
    }
    validate_qh(&BiPoly::from_terms(terms), br, bs).expect("on the weighted line")
}

/// `F(aX, bY)`.
pub fn rescaled(f: &QHPoly, a: &Rat, b: &Rat) -> QHPoly {
    validate_qh(&f.poly().scale_vars(a, b), f.r(), f.s()).expect("rescaling keeps weights")
}

/// `X^6 - 3λX^4Y + Y^3` with `β = 2`.
pub fn cubic_family(l: Rat) -> QHPoly {
    let p = BiPoly::from_terms([(int(1), 6, 0), (int(-3) * l, 4, 1), (int(1), 0, 3)]);
    validate_qh(&p, 2, 1).expect("weighted homogeneous")
}
