//! Numeric materialization of the inverse β-transform of a β-regular
//! zygothety, with desk-scale checks of conjugacy, Lipschitz bounds on a
//! strip and the affine asymptotics of its maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::qh::QHPoly;
use crate::realalg::RealAlg;
use crate::zygothety::{PLMap, Zygothety};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("zygothety is not beta-regular for beta = {0}/{1}")]
    NotRegular(u32, u32),
}

/// `Φ(x, y)`: `(λ₁x, |λ₁|^β φ₁(t) x^β)` for `x > 0`, the `φ₂` analogue for
/// `x < 0` with `t = y/|x|^β`, and the linear map `y ↦ |λ₁|^β L₁ y` on the axis.
#[derive(Clone, Debug)]
pub struct InverseBetaTransform {
    z: Zygothety,
    r: u32,
    s: u32,
    l1: RealAlg,
    l2: RealAlg,
    lam: [f64; 2],
    lam_beta: [f64; 2],
    vertical: f64,
}

impl InverseBetaTransform {
    pub fn new(z: Zygothety, r: u32, s: u32) -> Result<Self, WitnessError> {
        if !z.is_beta_regular(r, s) {
            return Err(WitnessError::NotRegular(r, s));
        }
        let l1 = z.phi1().limit_slope();
        let l2 = z.phi2().limit_slope();
        let beta = r as f64 / s as f64;
        let lam = [z.lambda1().to_f64(), z.lambda2().to_f64()];
        let lam_beta = [lam[0].abs().powf(beta), lam[1].abs().powf(beta)];
        let vertical = lam_beta[0] * l1.to_f64();
        Ok(InverseBetaTransform {
            z,
            r,
            s,
            l1,
            l2,
            lam,
            lam_beta,
            vertical,
        })
    }

    pub fn zygothety(&self) -> &Zygothety {
        &self.z
    }

    pub fn beta(&self) -> (u32, u32) {
        (self.r, self.s)
    }

    pub fn limit_slopes(&self) -> (&RealAlg, &RealAlg) {
        (&self.l1, &self.l2)
    }

    /// The transform of the inverse zygothety.
    pub fn inverse(&self) -> Self {
        Self::new(self.z.inverse(), self.r, self.s).expect("inverse of a regular zygothety")
    }

    /// Copy with `λ₁` multiplied by `factor` in the float data only; used to
    /// check that the harness detects a wrong witness.
    pub fn perturbed(&self, factor: f64) -> Self {
        let mut t = self.clone();
        t.lam[0] *= factor;
        let beta = self.r as f64 / self.s as f64;
        t.lam_beta[0] = t.lam[0].abs().powf(beta);
        t.vertical = t.lam_beta[0] * self.l1.to_f64();
        t
    }

    pub fn eval(&self, x: f64, y: f64) -> (f64, f64) {
        let beta = self.r as f64 / self.s as f64;
        if x == 0.0 {
            return (0.0, self.vertical * y);
        }
        let (i, phi) = if x > 0.0 {
            (0, self.z.phi1())
        } else {
            (1, self.z.phi2())
        };
        if phi.is_identity() {
            return (self.lam[i] * x, self.lam_beta[i] * y);
        }
        let xb = x.abs().powf(beta);
        let t = y / xb;
        (self.lam[i] * x, self.lam_beta[i] * phi.eval(t) * xb)
    }
}

pub fn eval_transform(t: &InverseBetaTransform, p: (f64, f64)) -> (f64, f64) {
    t.eval(p.0, p.1)
}

/// Sample layout for the conjugacy check.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    /// Half-width of the strip `|x| ≤ δ`.
    pub delta: f64,
    pub samples: usize,
    /// Smallest sampled `|x|`.
    pub x_min: f64,
    /// `t = y/|x|^β` ranges over `[-t_window, t_window]`.
    pub t_window: f64,
    pub seed: u64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            delta: 1.0,
            samples: 10_000,
            x_min: 1e-6,
            t_window: 2.0,
            seed: 0x5eed,
        }
    }
}

impl GridSpec {
    /// Points `(x, t|x|^β)` on a log-spaced `|x|` grid of both signs and a
    /// uniform `t` grid, plus points on the axis `x = 0`; exactly `samples`
    /// points in total.
    pub fn points(&self, beta: f64) -> Vec<(f64, f64)> {
        let n = self.samples.max(4);
        let n_axis = (n / 100).max(2);
        let n_t = ((n - n_axis) as f64 / 2.0).sqrt().ceil().max(1.0) as usize;
        let n_x = ((n - n_axis) / (2 * n_t)).max(1);
        let mut out = Vec::with_capacity(n);
        let (lmin, lmax) = (self.x_min.ln(), self.delta.ln());
        for i in 0..n_x {
            let frac = if n_x == 1 {
                1.0
            } else {
                i as f64 / (n_x - 1) as f64
            };
            let ax = (lmin + (lmax - lmin) * frac).exp();
            for j in 0..n_t {
                let t = if n_t == 1 {
                    0.0
                } else {
                    -self.t_window + 2.0 * self.t_window * j as f64 / (n_t - 1) as f64
                };
                let y = t * ax.powf(beta);
                out.push((ax, y));
                out.push((-ax, y));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        while out.len() < n - n_axis {
            let ax = rng.gen_range(lmin..=lmax).exp();
            let sx = if rng.gen_bool(0.5) { ax } else { -ax };
            let t = rng.gen_range(-self.t_window..=self.t_window);
            out.push((sx, t * ax.powf(beta)));
        }
        out.truncate(n - n_axis);
        for k in 0..n_axis {
            let y = -self.delta + 2.0 * self.delta * k as f64 / (n_axis - 1) as f64;
            out.push((0.0, y));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub lambda_est: f64,
    pub k_est: f64,
    pub alpha_tail_max: f64,
    /// Max `|α|` on the shell `|t| = 10⁴`.
    pub shell_near: f64,
    /// Max `|α|` on the shell `|t| = 10⁶`.
    pub shell_far: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LipschitzReport {
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub max_rel_residual: f64,
    /// Sample attaining the maximum residual.
    pub worst_point: (f64, f64),
    pub tol: f64,
    pub samples: usize,
    pub delta: f64,
    pub conjugacy_passed: bool,
    pub lipschitz: Option<LipschitzReport>,
    /// One entry per map `φ₁, φ₂`.
    pub asymptotic: Vec<AsymptoticReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.conjugacy_passed
            && self.lipschitz.as_ref().is_none_or(|l| l.passed)
            && self.asymptotic.iter().all(|a| a.passed)
    }
}

/// Max of `|G(Φ(p)) − F(p)| / max(1, |F(p)|)` over the grid.
pub fn verify_conjugacy(
    f: &QHPoly,
    g: &QHPoly,
    t: &InverseBetaTransform,
    grid: &GridSpec,
    tol: f64,
) -> VerificationReport {
    let beta = f.beta_f64();
    let pts = grid.points(beta);
    let mut worst = (0.0f64, (0.0, 0.0));
    for &(x, y) in &pts {
        let fv = f.poly().eval_f64(x, y);
        let (u, v) = t.eval(x, y);
        let gv = g.poly().eval_f64(u, v);
        let res = (gv - fv).abs() / fv.abs().max(1.0);
        // NaN counts as a failure
        if !(res <= worst.0) {
            worst = (if res.is_nan() { f64::INFINITY } else { res }, (x, y));
        }
    }
    VerificationReport {
        max_rel_residual: worst.0,
        worst_point: worst.1,
        tol,
        samples: pts.len(),
        delta: grid.delta,
        conjugacy_passed: worst.0 <= tol,
        lipschitz: None,
        asymptotic: Vec::new(),
    }
}

/// Extremes of `|Φ(p) − Φ(q)| / |p − q|` over random pairs in the strip
/// `|x| < δ`, `|y| ≤ t_window·δ^β`.
pub fn verify_lipschitz(
    t: &InverseBetaTransform,
    samples: usize,
    delta: f64,
    t_window: f64,
    seed: u64,
) -> (f64, f64) {
    let beta = t.r as f64 / t.s as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point = |rng: &mut ChaCha8Rng| {
        let x: f64 = rng.gen_range(-delta..delta);
        let tt: f64 = rng.gen_range(-t_window..=t_window);
        (x, tt * x.abs().powf(beta))
    };
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for _ in 0..samples {
        let p = point(&mut rng);
        let q = point(&mut rng);
        let dist = ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt();
        if dist < 1e-9 {
            continue;
        }
        let (a, b) = (t.eval(p.0, p.1), t.eval(q.0, q.1));
        let img = ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
        let ratio = img / dist;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    (lo, hi)
}

pub fn lipschitz_report(
    t: &InverseBetaTransform,
    samples: usize,
    delta: f64,
    t_window: f64,
    seed: u64,
    bound: f64,
) -> LipschitzReport {
    let (ratio_min, ratio_max) = verify_lipschitz(t, samples, delta, t_window, seed);
    let passed = ratio_min > 0.0 && ratio_max.is_finite() && ratio_max / ratio_min < bound;
    LipschitzReport {
        ratio_min,
        ratio_max,
        bound,
        passed,
    }
}

const SHELLS: [f64; 5] = [
    1e4,
    1e4 * 3.1622776601683795,
    1e5,
    1e5 * 3.1622776601683795,
    1e6,
];

/// `φ(t) = λt + k + α(t)`: exact `λ`, `k` from `|t| = 10⁶`, and the tail of
/// `α` on `10⁴ ≤ |t| ≤ 10⁶`. Passes when the far shell is at least ten times
/// smaller than the near one or below the float noise floor.
pub fn verify_asymptotic(m: &PLMap) -> AsymptoticReport {
    let lambda = m.limit_slope().to_f64();
    let far = SHELLS[SHELLS.len() - 1];
    let k = 0.5 * ((m.eval(far) - lambda * far) + (m.eval(-far) - lambda * -far));
    let shell = |r: f64| {
        [r, -r]
            .iter()
            .map(|&t| (m.eval(t) - lambda * t - k).abs())
            .fold(0.0f64, f64::max)
    };
    let vals: Vec<f64> = SHELLS.iter().map(|&r| shell(r)).collect();
    let alpha_tail_max = vals.iter().cloned().fold(0.0f64, f64::max);
    let (near, far_v) = (vals[0], vals[vals.len() - 1]);
    let floor = 1e-8 * lambda.abs().max(1.0);
    let passed =
        lambda.is_finite() && k.is_finite() && (far_v <= near / 10.0 || alpha_tail_max <= floor);
    AsymptoticReport {
        lambda_est: lambda,
        k_est: k,
        alpha_tail_max,
        shell_near: near,
        shell_far: far_v,
        passed,
    }
}

/// Conjugacy, Lipschitz and asymptotic checks with one grid.
pub fn full_report(
    f: &QHPoly,
    g: &QHPoly,
    t: &InverseBetaTransform,
    grid: &GridSpec,
    tol: f64,
    lipschitz_bound: f64,
) -> VerificationReport {
    let mut rep = verify_conjugacy(f, g, t, grid, tol);
    rep.lipschitz = Some(lipschitz_report(
        t,
        grid.samples.min(5_000),
        grid.delta,
        grid.t_window,
        grid.seed,
        lipschitz_bound,
    ));
    rep.asymptotic = vec![
        verify_asymptotic(t.zygothety().phi1()),
        verify_asymptotic(t.zygothety().phi2()),
    ];
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lipclass::Orientation;
    use crate::poly::{int, BiPoly, UniPoly};
    use crate::qh::{decide, validate_qh};

    fn scaling(l: i64) -> InverseBetaTransform {
        let z = Zygothety::new(
            RealAlg::from_int(l),
            RealAlg::from_int(l),
            PLMap::identity(),
            PLMap::identity(),
        )
        .unwrap();
        InverseBetaTransform::new(z, 2, 1).unwrap()
    }

    fn family(l: i64) -> QHPoly {
        let p = BiPoly::from_terms([(int(1), 6, 0), (int(-3 * l), 4, 1), (int(1), 0, 3)]);
        validate_qh(&p, 2, 1).unwrap()
    }

    #[test]
    fn transform_examples() {
        let id = InverseBetaTransform::new(Zygothety::identity(), 2, 1).unwrap();
        assert_eq!(id.eval(0.3, -0.5), (0.3, -0.5));
        let t = scaling(2);
        assert_eq!(t.eval(1.0, 3.0), (2.0, 12.0));
        assert_eq!(t.eval(0.0, 5.0), (0.0, 20.0));
        let n = scaling(-2);
        assert_eq!(n.eval(1.0, 3.0), (-2.0, 12.0));
    }

    #[test]
    fn grid_has_requested_size() {
        for n in [4, 10, 100, 10_000, 12_345] {
            let g = GridSpec {
                samples: n,
                ..GridSpec::default()
            };
            let pts = g.points(2.0);
            assert_eq!(pts.len(), n);
            assert!(pts.iter().any(|p| p.0 == 0.0));
            assert!(pts.iter().all(|p| p.0.abs() <= 1.0));
        }
    }

    #[test]
    fn identity_residual_is_zero() {
        let f = family(1);
        let id = InverseBetaTransform::new(Zygothety::identity(), 2, 1).unwrap();
        let rep = verify_conjugacy(&f, &f, &id, &GridSpec::default(), 1e-12);
        assert!(rep.max_rel_residual <= 1e-12, "{rep:?}");
        let v = decide(&f, &f).unwrap();
        let z = v.certificate().unwrap().zygothety.clone();
        let t = InverseBetaTransform::new(z, 2, 1).unwrap();
        let rep = verify_conjugacy(&f, &f, &t, &GridSpec::default(), 1e-12);
        assert!(rep.conjugacy_passed, "{rep:?}");
    }

    #[test]
    fn negative_family_certificate_and_sensitivity() {
        let (f, g) = (family(-1), family(-2));
        let z = decide(&f, &g)
            .unwrap()
            .certificate()
            .unwrap()
            .zygothety
            .clone();
        let t = InverseBetaTransform::new(z, 2, 1).unwrap();
        let rep = full_report(&f, &g, &t, &GridSpec::default(), 1e-8, 1e6);
        assert!(rep.passed(), "{rep:?}");
        let bad = verify_conjugacy(&f, &g, &t.perturbed(1.01), &GridSpec::default(), 1e-8);
        assert!(bad.max_rel_residual > 1e-3, "{bad:?}");
    }

    #[test]
    fn lipschitz_examples() {
        let id = InverseBetaTransform::new(Zygothety::identity(), 2, 1).unwrap();
        let (lo, hi) = verify_lipschitz(&id, 500, 1.0, 2.0, 1);
        assert!((lo - 1.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);
        let (lo, hi) = verify_lipschitz(&scaling(2), 2000, 1.0, 2.0, 1);
        assert!(lo >= 2.0 - 1e-9 && hi <= 4.0 + 1e-9, "{lo} {hi}");
    }

    #[test]
    fn asymptotic_examples() {
        let a = verify_asymptotic(&PLMap::affine(int(3), int(7)));
        assert_eq!((a.lambda_est, a.k_est, a.alpha_tail_max), (3.0, 7.0, 0.0));
        assert!(a.passed);
        let f = UniPoly::from_ints(&[1, -3, 0, 1]);
        let id = PLMap::branch(RealAlg::one(), Orientation::Increasing, f.clone(), f);
        let a = verify_asymptotic(&id);
        assert_eq!(a.lambda_est, 1.0);
        assert!(a.k_est.abs() < 1e-6 && a.passed);
        let m = PLMap::branch(
            RealAlg::from_int(8),
            Orientation::Increasing,
            UniPoly::from_ints(&[1, 3, 0, 1]),
            UniPoly::from_ints(&[1, 6, 0, 1]),
        );
        let a = verify_asymptotic(&m);
        assert_eq!(a.lambda_est, 2.0);
        assert!(a.k_est.is_finite() && a.passed, "{a:?}");
    }

    #[test]
    fn inverse_transform_round_trips() {
        let (f, g) = (family(-1), family(-3));
        let z = decide(&f, &g)
            .unwrap()
            .certificate()
            .unwrap()
            .zygothety
            .clone();
        let t = InverseBetaTransform::new(z, 2, 1).unwrap();
        let ti = t.inverse();
        let grid = GridSpec {
            samples: 400,
            ..GridSpec::default()
        };
        for &(x, y) in grid.points(2.0).iter() {
            let (u, v) = t.eval(x, y);
            let (a, b) = ti.eval(u, v);
            assert!(
                (a - x).abs() <= 1e-8 && (b - y).abs() <= 1e-8,
                "{x} {y} -> {a} {b}"
            );
        }
    }
}
