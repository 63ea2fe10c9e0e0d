mod common;

use std::cmp::Ordering;

use num_traits::{One, Zero};
use proptest::prelude::*;

use common::{random_qh, rescaled, rng, BETAS};
use qhlip_core::lipclass::{classify_pair, CSet, Orientation};
use qhlip_core::parse::{parse_bi, parse_uni, Bindings};
use qhlip_core::poly::{rat, rat_to_f64, BiPoly, Rat, UniPoly};
use qhlip_core::qh::{decide, QHPoly};
use qhlip_core::realalg::RealAlg;
use qhlip_core::witness::InverseBetaTransform;
use qhlip_core::zygothety::{PLMap, Zygothety};

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonconstant(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    uni(max_deg).prop_filter("nonconstant", |p| !p.is_constant())
}

fn square_free(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    nonconstant(max_deg).prop_filter("square-free", |p| {
        p.gcd(&p.derivative()).expect("nonzero").deg() == 0
    })
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |q| !q.is_zero())
}

fn positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn bi() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-5i64..=5, 1i64..=4, 0u32..6, 0u32..6), 0..6)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(n, d, i, j)| (rat(n, d), i, j))))
}

/// A random quasihomogeneous pair `(F, F(aX, bY))`.
fn qh_pair(seed: u64) -> (QHPoly, QHPoly) {
    let mut r = rng(seed);
    let beta = BETAS[(seed % BETAS.len() as u64) as usize];
    let f = random_qh(&mut r, beta, 10);
    let a = rat(1 + (seed % 3) as i64, 1 + (seed % 2) as i64);
    let b = rat(if seed % 2 == 0 { 2 } else { -3 }, 2);
    let g = rescaled(&f, &a, &b);
    (f, g)
}

fn certificate_transform(f: &QHPoly, g: &QHPoly) -> InverseBetaTransform {
    let v = decide(f, g).expect("valid pair");
    let c = v.certificate().expect("rescaled pairs are equivalent");
    InverseBetaTransform::new(c.zygothety.clone(), f.r(), f.s()).expect("regular")
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_identity(a in uni(7), b in nonconstant(4)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn gcd_divides_both(a in nonconstant(5), b in nonconstant(5), c in nonconstant(2)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(ac.rem(&g).is_zero());
        prop_assert!(bc.rem(&g).is_zero());
        prop_assert!(g.deg() >= c.deg());
    }

    #[test]
    fn product_evaluates_pointwise(a in uni(5), b in uni(5), x in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn linear_substitution_round_trip(p in uni(6), a in nonzero_rat(), b in small_rat()) {
        let inv = Rat::one() / &a;
        let back = p.compose_linear(&a, &b).compose_linear(&inv, &(-(&b) * &inv));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn isolated_roots_are_sorted_and_exact(p in square_free(7)) {
        let roots = RealAlg::isolate_real_roots(&p).unwrap();
        prop_assert!(roots.len() <= p.deg());
        for w in roots.windows(2) {
            prop_assert_eq!(w[0].compare(&w[1]), Ordering::Less);
        }
        for a in &roots {
            prop_assert_eq!(a.sign_of_poly(&p), 0);
        }
    }

    #[test]
    fn refinement_keeps_containment(p in square_free(6), k in 4u32..40) {
        let w = Rat::new(1.into(), num_bigint::BigInt::one() << k);
        for a in RealAlg::isolate_real_roots(&p).unwrap() {
            let b = a.refine(&w).unwrap();
            let (lo, hi) = b.interval();
            prop_assert!(hi - lo <= w);
            let (alo, ahi) = a.interval();
            prop_assert!(alo <= lo && hi <= ahi);
            prop_assert_eq!(a.compare(&b), Ordering::Equal);
        }
    }

    #[test]
    fn field_operations_match_floats(p in square_free(4), q in square_free(3)) {
        let (ra, rb) = (
            RealAlg::isolate_real_roots(&p).unwrap(),
            RealAlg::isolate_real_roots(&q).unwrap(),
        );
        if let (Some(a), Some(b)) = (ra.first(), rb.last()) {
            prop_assert!(close(a.add(b).to_f64(), a.to_f64() + b.to_f64(), 1e-9));
            prop_assert!(close(a.mul(b).to_f64(), a.to_f64() * b.to_f64(), 1e-9));
            prop_assert_eq!(a.sub(a).sign(), 0);
            prop_assert_eq!(a.compare(b), b.compare(a).reverse());
        }
    }

    #[test]
    fn classify_is_reflexive(f in nonconstant(6)) {
        let v = classify_pair(&f, &f);
        prop_assert!(v.is_equivalent());
        let inc = v.pairings().iter().find(|p| p.orientation == Orientation::Increasing);
        let inc = inc.expect("identity pairing");
        match &inc.c_set {
            CSet::UniqueC(c) => prop_assert!(c.as_rational().is_some_and(One::is_one)),
            CSet::AnyPositive => {}
        }
    }

    #[test]
    fn classify_is_symmetric(f in nonconstant(5), g in nonconstant(5)) {
        prop_assert_eq!(
            classify_pair(&f, &g).is_equivalent(),
            classify_pair(&g, &f).is_equivalent()
        );
    }

    #[test]
    fn classify_accepts_affine_images(
        f in nonconstant(6), a in nonzero_rat(), b in small_rat(), c in positive_rat()
    ) {
        let g = f.compose_linear(&a, &b).scale(&c);
        prop_assert!(classify_pair(&f, &g).is_equivalent());
    }

    #[test]
    fn branch_maps_are_monotone(f in nonconstant(5), a in nonzero_rat(), b in small_rat()) {
        // g(u) = f((u - b) / a), so g(φ(t)) = f(t) for φ(t) = a t + b.
        let g = f.compose_linear(&(Rat::one() / &a), &(-(&b) / &a));
        let orientation = if a > Rat::zero() { Orientation::Increasing } else { Orientation::Decreasing };
        let m = PLMap::branch(RealAlg::one(), orientation, f.clone(), g.clone());
        let ts: Vec<f64> = (0..41).map(|k| -4.0 + 0.2 * k as f64).collect();
        let ys: Vec<f64> = ts.iter().map(|&t| m.eval(t)).collect();
        for w in ys.windows(2) {
            match orientation {
                Orientation::Increasing => prop_assert!(w[0] <= w[1]),
                Orientation::Decreasing => prop_assert!(w[0] >= w[1]),
            }
        }
        let (af, bf) = (rat_to_f64(&a), rat_to_f64(&b));
        for (&t, &y) in ts.iter().zip(&ys) {
            prop_assert!(close(y, af * t + bf, 1e-6), "φ({}) = {}, want {}", t, y, af * t + bf);
        }
    }

    #[test]
    fn bi_print_round_trip(p in bi()) {
        let again = parse_bi(&p.to_string(), &Bindings::new()).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn uni_print_round_trip(p in uni(8)) {
        let again = parse_uni(&p.to_string(), &Bindings::new()).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn right_half_plane_is_the_plus_height(seed in 0u64..1000, x in 0.05f64..4.0, y in -4.0f64..4.0) {
        let mut r = rng(seed);
        let beta = BETAS[(seed % 4) as usize];
        let f = random_qh(&mut r, beta, 10);
        let h = f.heights();
        let xb = x.powf(f.beta_f64());
        let d = f.d() as i32;
        let want_plus = x.powi(d) * h.f_plus.eval_f64(y / xb);
        let want_minus = x.powi(d) * h.f_minus.eval_f64(y / xb);
        prop_assert!(close(f.poly().eval_f64(x, y), want_plus, 1e-9));
        prop_assert!(close(f.poly().eval_f64(-x, y), want_minus, 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn certificate_group_laws(seed in 0u64..500) {
        let (f, g) = qh_pair(seed);
        let t = certificate_transform(&f, &g);
        let z = t.zygothety().clone();
        let (r, s) = t.beta();
        prop_assert!(z.is_beta_regular(r, s));
        let zi = z.inverse();
        prop_assert!(zi.is_beta_regular(r, s));
        let id = Zygothety::compose(&z, &zi);
        prop_assert_eq!(id.lambda1().compare(&RealAlg::one()), Ordering::Equal);
        prop_assert_eq!(id.lambda2().compare(&RealAlg::one()), Ordering::Equal);
        for k in 0..21 {
            let u = -3.0 + 0.3 * k as f64;
            prop_assert!(close(id.phi1().eval(u), u, 1e-7));
            prop_assert!(close(id.phi2().eval(u), u, 1e-7));
        }
        let zz = Zygothety::compose(&z, &z);
        prop_assert!(zz.is_beta_regular(r, s));
    }

    #[test]
    fn transform_is_beta_homogeneous(seed in 0u64..500, mu in 0.1f64..10.0, x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let (f, g) = qh_pair(seed);
        let t = certificate_transform(&f, &g);
        let beta = f.beta_f64();
        let (a, b) = t.eval(x, y);
        let (sa, sb) = t.eval(mu * x, mu.powf(beta) * y);
        prop_assert!(close(sa, mu * a, 1e-9));
        prop_assert!(close(sb, mu.powf(beta) * b, 1e-7));
    }

    #[test]
    fn transform_inverse_round_trip(seed in 0u64..500, x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let (f, g) = qh_pair(seed);
        let t = certificate_transform(&f, &g);
        let (a, b) = t.eval(x, y);
        let (x2, y2) = t.inverse().eval(a, b);
        prop_assert!(close(x2, x, 1e-9));
        prop_assert!(close(y2, y, 1e-6), "y {} -> {}", y, y2);
    }
}
