//! Closed forms and worked examples as they are usually quoted, checked
//! against the general constructions.

use clausen_core::clausen::{self, ClausenParams};
use clausen_core::combinat::{binomial, factorial, rising_factorial};
use clausen_core::sampling::Sampler;
use clausen_core::series::{cauchy_product, derivative, series_coeffs, terminating_sum_unity, theta, SeriesSpec, TruncatedSeries};
use clausen_core::verify::{self, quadratic_closed_form, quadratic_sigma, Status};
use clausen_core::{RatPoly, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `2(a+b)(2a+1)(2b+1) P_2^{a,b}(t) = t^2 + (4a+4b+1+8ab) t + 2(a+b)(2a+1)(2b+1)`.
#[test]
fn quadratic_characteristic_polynomial() {
    let mut s = Sampler::new(3);
    for _ in 0..10 {
        let p = s.clausen_params(1);
        let (a, b) = (&p.a, &p.b);
        let norm = r(2) * (a + b) * (r(2) * a + r(1)) * (r(2) * b + r(1));
        let expected = RatPoly::new(vec![norm.clone(), r(4) * a + r(4) * b + r(1) + r(8) * a * b, r(1)]);
        assert_eq!(clausen::char_poly(&p).unwrap().scale(&norm), expected);
    }
}

/// The quartic normalization `64 (a+1/2)_2 (b+1/2)_2 (a+b)_2 P_4^{a,b}(t)`
/// with the coefficient of `ab` inside the linear term left as a parameter.
fn quartic(a: &Rational, b: &Rational, ab_linear: i64) -> (Rational, RatPoly) {
    let half = Rational::half();
    let norm = r(64) * rising_factorial(&(a + &half), 2) * rising_factorial(&(b + &half), 2) * rising_factorial(&(a + b), 2);
    let (ab, s, sq) = (a * b, a + b, a * a + b * b);
    let cubes = a * a * a + b * b * b;
    let t3 = r(2) * (r(8) * &ab + r(12) * &s + r(9));
    let t2 = r(64) * &ab * &ab + r(4) * &s * (r(36) * &ab + r(27)) + r(72) * &sq + r(288) * &ab + r(33);
    let t1 = r(2)
        * (&s * (r(64) * &ab * &ab + r(360) * &ab + r(66))
            + r(4) * &sq * (r(32) * &ab + r(27))
            + r(48) * cubes
            + r(288) * &ab * &ab
            + r(ab_linear) * &ab
            + r(9));
    (norm.clone(), RatPoly::new(vec![norm, t1, t2, t3, r(3)]))
}

#[test]
fn quartic_characteristic_polynomial_with_corrected_linear_term() {
    let mut s = Sampler::new(4);
    for _ in 0..10 {
        let p = s.clausen_params(2);
        let (norm, expected) = quartic(&p.a, &p.b, 296);
        assert_eq!(clausen::char_poly(&p).unwrap().scale(&norm), expected);
    }
}

/// With `26ab` in the linear coefficient the quartic is not the
/// characteristic polynomial: the discrepancy is exactly `540ab t`.
#[test]
fn quartic_as_commonly_printed_differs_in_linear_term() {
    let mut s = Sampler::new(4);
    for _ in 0..10 {
        let p = s.clausen_params(2);
        let (norm, printed) = quartic(&p.a, &p.b, 26);
        let diff = &clausen::char_poly(&p).unwrap().scale(&norm) - &printed;
        assert_eq!(diff, RatPoly::new(vec![r(0), r(540) * &p.a * &p.b]));
    }
}

#[test]
fn askey_case_half_half() {
    let p = ClausenParams::from_fracs((1, 2), (1, 2), 1);
    assert_eq!(clausen::char_poly(&p).unwrap(), RatPoly::new(vec![r(1), q(7, 8), q(1, 8)]));
}

fn x_pow_times(f: &TruncatedSeries, k: usize) -> TruncatedSeries {
    f.mul_x_pow(k)
}

fn d_n(f: &TruncatedSeries, n: usize) -> TruncatedSeries {
    (0..n).fold(f.clone(), |acc, _| derivative(&acc))
}

/// Pads with zeros (or truncates) to `len`, so that expressions built
/// from derivatives of different orders line up on a common window.
fn fit(f: &TruncatedSeries, len: usize) -> TruncatedSeries {
    let mut c = f.coeffs().to_vec();
    c.resize(len, r(0));
    TruncatedSeries::new(c)
}

fn theta_n(f: &TruncatedSeries, n: usize) -> TruncatedSeries {
    (0..n).fold(f.clone(), |acc, _| theta(&acc))
}

/// `f theta f = 1/2 x D f^2`, `f theta^2 f = 1/2 x D f^2 + 1/2 x^2 D^2 f^2 - x^2 f'^2`,
/// `f theta^3 f = 1/2 x D f^2 + 3/2 x^2 D^2 f^2 - 3 x^2 f'^2 + 1/2 x^3 D^3 f^2 - 3/2 x^3 D[f'^2]`,
/// compared on the coefficients below the shortest truncation.
#[test]
fn operator_expansions_for_small_n() {
    let mut s = Sampler::new(5);
    for _ in 0..5 {
        let f = s.series(20);
        let len = 20 - 3;
        let f2 = cauchy_product(&f, &f);
        let fp = derivative(&f);
        let fp2 = cauchy_product(&fp, &fp);
        let term = |g: &TruncatedSeries, k: usize, c: Rational| fit(&x_pow_times(&fit(g, 20), k), len).scale(&c);
        let lhs = |n: usize| fit(&cauchy_product(&f, &theta_n(&f, n)), len);

        let one = term(&d_n(&f2, 1), 1, q(1, 2));
        assert_eq!(lhs(1), one);

        let two = one.add(&term(&d_n(&f2, 2), 2, q(1, 2))).sub(&term(&fp2, 2, r(1)));
        assert_eq!(lhs(2), two);

        let three = term(&d_n(&f2, 1), 1, q(1, 2))
            .add(&term(&d_n(&f2, 2), 2, q(3, 2)))
            .sub(&term(&fp2, 2, r(3)))
            .add(&term(&d_n(&f2, 3), 3, q(1, 2)))
            .sub(&term(&d_n(&fp2, 1), 3, q(3, 2)));
        assert_eq!(lhs(3), three);
    }
}

#[test]
fn operator_lemma_general_on_random_series() {
    let mut s = Sampler::new(6);
    for n in 1..=5 {
        for _ in 0..3 {
            assert!(verify::verify_operator_lemma(&s.series(20), n).is_verified());
        }
    }
}

/// For `m = 1` the closed form of `hatP_4` agrees with Lagrange interpolation
/// through the terminating `5F4(-k, a, b, -1/2-k-a-b, f+2; a+b+3/2, 1-a-k, 1-b-k, f)` sums.
#[test]
fn quadratic_perturbation_by_five_f_four_interpolation() {
    let mut s = Sampler::new(8);
    for _ in 0..4 {
        let p = s.clausen_params(1);
        let f = loop {
            let f = s.nonzero_rational();
            if (&f * r(2)).nonpositive_integer().is_none() {
                break f;
            }
        };
        let (a, b) = (&p.a, &p.b);
        let mut poly = RatPoly::zero();
        for k in 0..=4usize {
            let kr = Rational::from(k);
            let sum = terminating_sum_unity(
                &SeriesSpec::new(
                    vec![-kr.clone(), a.clone(), b.clone(), Rational::half() - &kr - a - b - r(1), &f + r(2)],
                    vec![a + b + q(3, 2), r(1) - a - &kr, r(1) - b - &kr, f.clone()],
                )
                .unperturbed(),
            )
            .unwrap();
            let weight = Rational::from(binomial(4, k as i64)) / Rational::from(factorial(4)) * p.node_ratio(k).unwrap() * sum;
            // (-t)_k (t-4)_{4-k}
            let basis = &RatPoly::linear(r(0), r(-1)).rising_factorial(k) * &RatPoly::linear(r(-4), r(1)).rising_factorial(4 - k);
            poly = &poly + &basis.scale(&weight);
        }
        assert_eq!(poly, quadratic_closed_form(&p, &f).unwrap());
        assert_eq!(poly, clausen::hat_poly_direct(&p, &quadratic_sigma(&f).unwrap()).unwrap());
    }
}

#[test]
fn f_parameter_products() {
    let mut s = Sampler::new(9);
    for m in 0..=2 {
        let p = s.clausen_params(m);
        let f = q(5, 7);
        assert!(verify::verify_linear_perturbation(&p, &f, 30).is_verified());
        assert!(verify::verify_shifted_product(&p, 30).is_verified());
        let quad = verify::verify_quadratic_perturbation(&p, &f, 30);
        if m == 0 {
            assert_eq!(quad.status, Status::Degenerate);
        } else {
            assert!(quad.is_verified());
        }
    }
}

/// The f = a specialization of the linear perturbation is the shifted product.
#[test]
fn linear_perturbation_at_f_equal_a() {
    let p = ClausenParams::from_fracs((2, 7), (-1, 3), 2);
    let lin = verify::verify_linear_perturbation(&p, &p.a.clone(), 25);
    let shifted = verify::verify_shifted_product(&p, 25);
    assert!(lin.is_verified() && shifted.is_verified());
    let gauss = series_coeffs(&p.gauss_spec().unperturbed(), 25).unwrap();
    let up = series_coeffs(&SeriesSpec::new(vec![&p.a + r(1), p.b.clone()], vec![p.c()]).unperturbed(), 25).unwrap();
    let lhs = cauchy_product(&gauss, &up);
    let lin_lhs: Vec<_> = lin.rows.iter().map(|c| c.lhs.clone()).collect();
    assert_eq!(lhs.coeffs(), &lin_lhs[..]);
}

#[test]
fn karlsson_single_difference() {
    let top = [q(1, 3), q(-2, 5), q(3, 7)];
    let bottom = [q(5, 4), q(7, 3)];
    for f in [q(2, 9), q(-7, 2), q(11, 3)] {
        assert!(verify::verify_karlsson(&top, &bottom, &[f], &[1], 20).is_verified());
    }
    assert!(verify::verify_karlsson(&top, &bottom, &[q(2, 9), q(1, 6)], &[1, 2], 15).is_verified());
    assert!(verify::verify_karlsson(&top, &bottom, &[q(2, 9), q(1, 6)], &[0, 0], 15).is_verified());
}

/// The shifted sum `4F3(-k, a+1, b, 1/2-k-a-b-m; c, 1-k-a, 1-k-b)` is
/// normalized by `(a)_k (b)_k`, not by `(c)_k`: at `m = 0, k = 1` it equals
/// `(2a+1)/a`, whereas the `(c)_k` form would give `(2a+1) b / (a+b+1/2)`.
#[test]
fn shifted_sum_normalization() {
    let p = ClausenParams::from_fracs((2, 7), (3, 5), 0);
    let (a, b) = (&p.a, &p.b);
    let sum = terminating_sum_unity(
        &SeriesSpec::new(vec![r(-1), a + r(1), b.clone(), q(-1, 2) - a - b], vec![p.c(), -a.clone(), -b.clone()])
            .unperturbed(),
    )
    .unwrap();
    assert_eq!(sum, (r(2) * a + r(1)) / a);
    assert_ne!(sum, (r(2) * a + r(1)) * b / (a + b + q(1, 2)));
    let report = verify::verify_summations(&p, &clausen::PerturbationInput::constant_one(), 1);
    assert!(report.is_verified());
    assert_eq!(report.rows[5].lhs, sum);
}
