//! Zygotheties `((λ₁, λ₂), (φ₁, φ₂))` with `λ₁λ₂ > 0`: group law, action
//! on height pairs, β-regularity and regularizing constructions.

mod plmap;

pub use plmap::{BranchMap, PLMap};

use std::cmp::Ordering;

use thiserror::Error;

use crate::lipclass::Orientation;
use crate::poly::UniPoly;
use crate::qh::{LambdaSign, PairingOption, QHPoly};
use crate::realalg::RealAlg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZygError {
    #[error("lambda components must be nonzero with equal signs")]
    LambdaSignMismatch,
    #[error("pairing orientations are incoherent and the heights are not even")]
    Incoherent,
    #[error("constructed zygothety is not beta-regular")]
    NotRegular,
}

#[derive(Clone, Debug)]
pub struct Zygothety {
    lambda1: RealAlg,
    lambda2: RealAlg,
    phi1: PLMap,
    phi2: PLMap,
}

/// How `make_regular` assembles a zygothety from a pairing option.
#[derive(Clone, Debug)]
pub enum Recipe {
    /// `(λ₁, λ₁), (φ₁, φ₁)`; valid when `r` is even.
    Duplicate,
    /// `(λ₁, λ₁), (φ₁, t ↦ -φ₁(-t))`; valid when `r` and `s` are odd.
    Conjugate,
    /// Each side matched with its own `c`; `φ₂` is negated when the
    /// orientations differ, which needs even heights (`s` even).
    Separate { c1: RealAlg, c2: RealAlg },
}

impl Zygothety {
    pub fn new(
        lambda1: RealAlg,
        lambda2: RealAlg,
        phi1: PLMap,
        phi2: PLMap,
    ) -> Result<Self, ZygError> {
        let (s1, s2) = (lambda1.sign(), lambda2.sign());
        if s1 == 0 || s1 != s2 {
            return Err(ZygError::LambdaSignMismatch);
        }
        Ok(Zygothety {
            lambda1,
            lambda2,
            phi1,
            phi2,
        })
    }

    pub fn identity() -> Self {
        Zygothety {
            lambda1: RealAlg::one(),
            lambda2: RealAlg::one(),
            phi1: PLMap::identity(),
            phi2: PLMap::identity(),
        }
    }

    pub fn lambda1(&self) -> &RealAlg {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &RealAlg {
        &self.lambda2
    }

    pub fn phi1(&self) -> &PLMap {
        &self.phi1
    }

    pub fn phi2(&self) -> &PLMap {
        &self.phi2
    }

    pub fn lambda_positive(&self) -> bool {
        self.lambda1.sign() > 0
    }

    /// `outer · inner`; an inner λ < 0 swaps the outer components.
    pub fn compose(outer: &Zygothety, inner: &Zygothety) -> Zygothety {
        let (m1, m2, p1, p2) = if inner.lambda_positive() {
            (&outer.lambda1, &outer.lambda2, &outer.phi1, &outer.phi2)
        } else {
            (&outer.lambda2, &outer.lambda1, &outer.phi2, &outer.phi1)
        };
        Zygothety {
            lambda1: inner.lambda1.mul(m1),
            lambda2: inner.lambda2.mul(m2),
            phi1: p1.clone().after(inner.phi1.clone()),
            phi2: p2.clone().after(inner.phi2.clone()),
        }
    }

    pub fn inverse(&self) -> Zygothety {
        let inv = |l: &RealAlg| l.inv().expect("nonzero lambda");
        if self.lambda_positive() {
            Zygothety {
                lambda1: inv(&self.lambda1),
                lambda2: inv(&self.lambda2),
                phi1: self.phi1.inverse(),
                phi2: self.phi2.inverse(),
            }
        } else {
            Zygothety {
                lambda1: inv(&self.lambda2),
                lambda2: inv(&self.lambda1),
                phi1: self.phi2.inverse(),
                phi2: self.phi1.inverse(),
            }
        }
    }

    /// `|λ₁|^β L₁ = |λ₂|^β L₂` with `β = r/s`, decided exactly by comparing
    /// `|λ₁|^r |L₁|^s` with `|λ₂|^r |L₂|^s` after matching signs of `L`.
    pub fn is_beta_regular(&self, r: u32, s: u32) -> bool {
        let l1 = self.phi1.limit_slope();
        let l2 = self.phi2.limit_slope();
        let (s1, s2) = (l1.sign(), l2.sign());
        if s1 == 0 || s1 != s2 {
            return false;
        }
        let a1 = self.lambda1.abs();
        let a2 = self.lambda2.abs();
        if a1.compare(&a2) == Ordering::Equal {
            return l1.compare(&l2) == Ordering::Equal;
        }
        let lhs = a1.pow(r).mul(&l1.abs().pow(s));
        let rhs = a2.pow(r).mul(&l2.abs().pow(s));
        lhs.compare(&rhs) == Ordering::Equal
    }

    /// Numeric action on the height pair of `G`, evaluated at `t`:
    /// `(|λ₁|^d g₁(φ₁(t)), |λ₂|^d g₂(φ₂(t)))`, with `g₁, g₂` swapped when λ < 0.
    pub fn act_eval(&self, g_plus: &UniPoly, g_minus: &UniPoly, d: u32, t: f64) -> (f64, f64) {
        let (g1, g2) = if self.lambda_positive() {
            (g_plus, g_minus)
        } else {
            (g_minus, g_plus)
        };
        let k1 = self.lambda1.to_f64().abs().powi(d as i32);
        let k2 = self.lambda2.to_f64().abs().powi(d as i32);
        (
            k1 * g1.eval_f64(self.phi1.eval(t)),
            k2 * g2.eval_f64(self.phi2.eval(t)),
        )
    }
}

/// `σ · c^{-1/d}`.
pub fn lambda_for(c: &RealAlg, d: u32, sign: LambdaSign) -> RealAlg {
    let mag = c.inv().expect("c > 0").nth_root_pos(d).expect("c > 0");
    match sign {
        LambdaSign::Positive => mag,
        LambdaSign::Negative => mag.neg(),
    }
}

/// Builds a β-regular zygothety from a pairing option of `(F, G)`.
pub fn make_regular(
    option: &PairingOption,
    f: &QHPoly,
    g: &QHPoly,
    recipe: Recipe,
) -> Result<Zygothety, ZygError> {
    let hf = f.heights();
    let hg = g.heights();
    let (g1, g2) = match option.sign {
        LambdaSign::Positive => (hg.f_plus.clone(), hg.f_minus.clone()),
        LambdaSign::Negative => (hg.f_minus.clone(), hg.f_plus.clone()),
    };
    let d = f.d();
    let z = match recipe {
        Recipe::Duplicate | Recipe::Conjugate => {
            let c1 = option.plus.c_set.representative();
            let phi1 = PLMap::branch(c1.clone(), option.plus.orientation, hf.f_plus, g1);
            let lambda = lambda_for(&c1, d, option.sign);
            let phi2 = match recipe {
                Recipe::Duplicate => phi1.clone(),
                _ => phi1.clone().neg_conj(),
            };
            Zygothety::new(lambda.clone(), lambda, phi1, phi2)?
        }
        Recipe::Separate { c1, c2 } => {
            let phi1 = PLMap::branch(c1.clone(), option.plus.orientation, hf.f_plus, g1);
            let mut phi2 = PLMap::branch(c2.clone(), option.minus.orientation, hf.f_minus, g2);
            if option.plus.orientation != option.minus.orientation {
                if f.s() % 2 != 0 {
                    return Err(ZygError::Incoherent);
                }
                phi2 = phi2.neg();
            }
            debug_assert_eq!(phi1.orientation(), phi2.orientation());
            Zygothety::new(
                lambda_for(&c1, d, option.sign),
                lambda_for(&c2, d, option.sign),
                phi1,
                phi2,
            )?
        }
    };
    if !z.is_beta_regular(f.r(), f.s()) {
        return Err(ZygError::NotRegular);
    }
    Ok(z)
}

/// The zygothety `(κ, κ), (id, id)` for `a X^d` versus `b X^d`, where
/// `κ^d = a / b`.
pub fn cxd_zygothety(kappa: RealAlg) -> Zygothety {
    Zygothety::new(kappa.clone(), kappa, PLMap::identity(), PLMap::identity())
        .expect("kappa is nonzero")
}

/// Orientation shared by the two maps of a coherent zygothety.
pub fn common_orientation(z: &Zygothety) -> Option<Orientation> {
    let (a, b) = (z.phi1.orientation(), z.phi2.orientation());
    (a == b).then_some(a)
}
