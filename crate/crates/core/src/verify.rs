//! Executable checks of the product formulas, summation formulas and lemmas.
//!
//! Every check compares two independently computed sequences of rationals
//! and reports exact equality. There are no tolerances anywhere: a report
//! is [`Status::Verified`] only if every compared pair is identical.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::clausen::{self, ClausenParams, PerturbationInput};
use crate::combinat::{binomial, orthogonality_weight, rising_factorial, rising_factorial_product, stirling2};
use crate::error::Error;
use crate::poly::RatPoly;
use crate::rational::Rational;
use crate::series::{cauchy_product, derivative, series_coeffs, terminating_sum_unity, theta, SeriesSpec, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `[2F1]^2` against the `3F2` perturbed by `P_{2m}^{a,b}`.
    Square,
    /// `2F1 * F(..|F_s|..)` against the `3F2` perturbed by `hatP_{2m+s}`.
    Product,
    /// The product check with the interpolated `hatP` when `s > 2m+1`.
    ProductBeyondBound,
    /// Unit-argument summation formulas implied by the product formulas.
    Summations,
    Recurrence,
    Whipple,
    Karlsson,
    OperatorLemma,
    /// `2F1(a,b;c) 3F2(a,b,f+1;c,f)` against `F(2a,2b,a+b,2f+1; c,2a+2b+2m,2f | P)`.
    LinearPerturbation,
    /// `2F1(a,b;c) 2F1(a+1,b;c)` against `F(2a+1,2b,a+b; c,2a+2b+2m | P)`.
    ShiftedProduct,
    /// `2F1(a,b;c) 3F2(a,b,f+2;c,f)` with the two-term closed form of `hatP_{2m+2}`.
    QuadraticPerturbation,
    /// Direct construction of `P_{2m}^{a,b}` against interpolation.
    CharPoly,
    /// Direct construction of `hatP_{2m+s}` against interpolation.
    HatPoly,
    /// Coefficient listing; nothing is compared.
    Series,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned));
        f.write_str(s.as_deref().unwrap_or("?"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Verified,
    Deviation,
    Degenerate,
    Refused,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One compared pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    #[serde(rename = "k")]
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<&'static str>,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub params: BTreeMap<String, String>,
    pub terms_checked: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_deviation: Option<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<RatPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<TruncatedSeries>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Every compared pair in order; emitted by the CSV writer only.
    #[serde(skip)]
    pub rows: Vec<Comparison>,
}

impl VerifyReport {
    fn empty(identity: Identity, params: Params) -> Self {
        VerifyReport {
            identity,
            params: params.0,
            terms_checked: 0,
            status: Status::Verified,
            first_deviation: None,
            polynomial: None,
            coefficients: None,
            reason: None,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(identity: Identity, params: Params, rows: Vec<Comparison>) -> Self {
        let mut report = Self::empty(identity, params);
        report.terms_checked = rows.len();
        report.first_deviation = rows.iter().find(|c| !c.equal()).cloned();
        if report.first_deviation.is_some() {
            report.status = Status::Deviation;
        }
        report.rows = rows;
        report
    }

    pub fn degenerate(identity: Identity, params: Params, reason: impl ToString) -> Self {
        let mut report = Self::empty(identity, params);
        report.status = Status::Degenerate;
        report.reason = Some(reason.to_string());
        report
    }

    pub fn refused(identity: Identity, params: Params, reason: impl ToString) -> Self {
        let mut report = Self::empty(identity, params);
        report.status = Status::Refused;
        report.reason = Some(reason.to_string());
        report
    }

    /// A listing with no comparisons, e.g. series coefficients.
    pub fn listing(identity: Identity, params: Params) -> Self {
        Self::empty(identity, params)
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    fn with_polynomial(mut self, poly: RatPoly) -> Self {
        self.polynomial = Some(poly);
        self
    }
}

/// Ordered parameter map serialized into reports.
#[derive(Clone, Debug, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_list<T: ToString>(self, key: &str, values: &[T]) -> Self {
        let joined = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        self.with(key, joined)
    }

    fn clausen(params: &ClausenParams) -> Self {
        Params::new().with("a", &params.a).with("b", &params.b).with("m", params.m)
    }
}

fn rows_from(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Vec<Comparison> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .map(|(index, (l, r))| Comparison {
            index,
            label: None,
            lhs: l.clone(),
            rhs: r.clone(),
        })
        .collect()
}

fn poly_rows(lhs: &RatPoly, rhs: &RatPoly, label: &'static str) -> Vec<Comparison> {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    (0..len)
        .map(|i| Comparison {
            index: i,
            label: Some(label),
            lhs: lhs.coeff(i),
            rhs: rhs.coeff(i),
        })
        .collect()
}

/// Compares `lhs_factor * F(a, b; c | perturb)` (the product of the Gauss
/// function with its perturbation) against `F(2a, 2b, a+b; c, 2a+2b+2m | rhs)`
/// to order `terms`.
fn product_rows(
    params: &ClausenParams,
    left_perturb: &RatPoly,
    rhs_perturb: &RatPoly,
    terms: usize,
) -> Result<Vec<Comparison>, Error> {
    let gauss = series_coeffs(&params.gauss_spec().unperturbed(), terms)?;
    let perturbed = series_coeffs(&params.gauss_spec().perturbed(left_perturb.clone()), terms)?;
    let lhs = cauchy_product(&gauss, &perturbed);
    let rhs = series_coeffs(&params.rhs_spec().perturbed(rhs_perturb.clone()), terms)?;
    Ok(rows_from(&lhs, &rhs))
}

/// `[2F1(a,b;c|x)]^2` against `F(2a,2b,a+b; c, 2a+2b+2m | P_{2m}^{a,b} | x)`
/// for the coefficients of `x^0 .. x^terms`.
pub fn verify_square(params: &ClausenParams, terms: usize) -> VerifyReport {
    let p = Params::clausen(params).with("terms", terms);
    let poly = match clausen::char_poly(params) {
        Ok(poly) => poly,
        Err(e) => return VerifyReport::degenerate(Identity::Square, p, e),
    };
    match product_rows(params, &RatPoly::one(), &poly, terms) {
        Ok(rows) => VerifyReport::from_rows(Identity::Square, p, rows).with_polynomial(poly),
        Err(e) => VerifyReport::degenerate(Identity::Square, p, e),
    }
}

/// `2F1(a,b;c|x) F(a,b;c|F_s|x)` against the `3F2` perturbed by
/// `hatP_{2m+s}`. Refused when `s > 2m+1`.
pub fn verify_product(params: &ClausenParams, f: &PerturbationInput, terms: usize) -> VerifyReport {
    let p = Params::clausen(params).with_list("sigma", f.sigma()).with("terms", terms);
    let s = f.degree();
    if s > 2 * params.m + 1 {
        return VerifyReport::refused(
            Identity::Product,
            p,
            format!("s = {s} > 2m+1 = {}: the product formula requires s <= 2m+1", 2 * params.m + 1),
        );
    }
    let hat = match clausen::hat_poly_direct(params, f) {
        Ok(hat) => hat,
        Err(e) => return VerifyReport::degenerate(Identity::Product, p, e),
    };
    match product_rows(params, &f.as_poly(), &hat, terms) {
        Ok(rows) => VerifyReport::from_rows(Identity::Product, p, rows).with_polynomial(hat),
        Err(e) => VerifyReport::degenerate(Identity::Product, p, e),
    }
}

/// Substitutes the interpolated `hatP_{2m+s}` into the product formula
/// regardless of the degree bound, comparing `2m+s+10` further coefficients.
/// By construction the coefficients up to `x^{2m+s}` agree; for `s > 2m+1`
/// the report is expected to carry a deviation beyond that index.
pub fn verify_product_beyond_bound(params: &ClausenParams, f: &PerturbationInput) -> VerifyReport {
    let terms = 2 * params.m + f.degree() + 10;
    let p = Params::clausen(params).with_list("sigma", f.sigma()).with("terms", terms);
    let hat = match clausen::hat_poly_interp(params, f) {
        Ok(hat) => hat,
        Err(e) => return VerifyReport::degenerate(Identity::ProductBeyondBound, p, e),
    };
    let p = p.with("identity_valid", hat.identity_valid);
    match product_rows(params, &f.as_poly(), &hat.poly, terms) {
        Ok(rows) => VerifyReport::from_rows(Identity::ProductBeyondBound, p, rows).with_polynomial(hat.poly),
        Err(e) => VerifyReport::degenerate(Identity::ProductBeyondBound, p, e),
    }
}

/// For `k = 0..=k_max` checks
///
/// 1. `4F3(-k, a, b, 1/2-k-a-b-m; 1-k-a, 1-k-b, c) = R_k P(k)`,
/// 2. the same sum perturbed by `F_s` equals `R_k hatP(k)`,
/// 3. `4F3(-k, a+1, b, 1/2-k-a-b-m; c, 1-k-a, 1-k-b) = R'_k P(k)`,
///
/// where `R_k = (2a)_k (2b)_k (a+b)_k / ((a)_k (b)_k (2a+2b+2m)_k)` and
/// `R'_k` is `R_k` with `(2a)_k` replaced by `(2a+1)_k`. The third sum is the
/// k-th coefficient of `2F1(a,b;c) 2F1(a+1,b;c)` divided by
/// `(a)_k (b)_k / ((c)_k k!)`.
pub fn verify_summations(params: &ClausenParams, f: &PerturbationInput, k_max: usize) -> VerifyReport {
    let p = Params::clausen(params).with_list("sigma", f.sigma()).with("k_max", k_max);
    let id = Identity::Summations;
    if f.degree() > 2 * params.m + 1 {
        return VerifyReport::refused(id, p, Error::DegreeBound { s: f.degree(), m: params.m });
    }
    let built = clausen::char_poly(params).and_then(|poly| Ok((poly, clausen::hat_poly_direct(params, f)?)));
    let (poly, hat) = match built {
        Ok(x) => x,
        Err(e) => return VerifyReport::degenerate(id, p, e),
    };
    let (a, b) = (&params.a, &params.b);
    let one = Rational::one();
    let two = Rational::from(2i64);
    let mut rows = Vec::with_capacity(3 * (k_max + 1));
    for k in 0..=k_max {
        let k_r = Rational::from(k);
        let den = rising_factorial(a, k) * rising_factorial(b, k) * rising_factorial(&params.d(), k);
        if den.is_zero() {
            return VerifyReport::degenerate(id, p, format!("(a)_k (b)_k (2a+2b+2m)_k vanishes at k = {k}"));
        }
        let common = rising_factorial(&(b * &two), k) * rising_factorial(&(a + b), k) / den;
        let ratio = rising_factorial(&(a * &two), k) * &common;
        let ratio_shifted = rising_factorial(&(a * &two + &one), k) * &common;

        let node = params.node_sum_spec(k);
        let shifted = SeriesSpec::new(
            vec![
                -k_r.clone(),
                a + &one,
                b.clone(),
                Rational::half() - &k_r - a - b - Rational::from(params.m),
            ],
            vec![params.c(), &one - &k_r - a, &one - &k_r - b],
        );
        let sums = terminating_sum_unity(&node.clone().unperturbed())
            .and_then(|s1| Ok((s1, terminating_sum_unity(&node.perturbed(f.as_poly()))?)))
            .and_then(|(s1, s2)| Ok((s1, s2, terminating_sum_unity(&shifted.unperturbed())?)));
        let (s1, s2, s3) = match sums {
            Ok(x) => x,
            Err(e) => return VerifyReport::degenerate(id, p, e),
        };
        rows.push(Comparison { index: k, label: Some("4F3"), lhs: s1, rhs: &ratio * poly.eval(&k_r) });
        rows.push(Comparison { index: k, label: Some("perturbed"), lhs: s2, rhs: &ratio * hat.eval(&k_r) });
        rows.push(Comparison { index: k, label: Some("shifted"), lhs: s3, rhs: ratio_shifted * poly.eval(&k_r) });
    }
    VerifyReport::from_rows(id, p, rows)
}

/// `P(n+1) = beta0(n) P(n) + beta1(n) P(n-1)` for `n = 1..=n_max`.
pub fn verify_recurrence(params: &ClausenParams, n_max: usize) -> VerifyReport {
    let p = Params::clausen(params).with("n_max", n_max);
    let poly = match clausen::char_poly(params) {
        Ok(poly) => poly,
        Err(e) => return VerifyReport::degenerate(Identity::Recurrence, p, e),
    };
    let at = |n: usize| poly.eval(&Rational::from(n));
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let beta = match clausen::recurrence_coeffs(params, n) {
            Ok(beta) => beta,
            Err(e) => return VerifyReport::degenerate(Identity::Recurrence, p, e),
        };
        rows.push(Comparison {
            index: n,
            label: None,
            lhs: at(n + 1),
            rhs: beta.beta0 * at(n) + beta.beta1 * at(n - 1),
        });
    }
    VerifyReport::from_rows(Identity::Recurrence, p, rows).with_polynomial(poly)
}

/// Parameter lists of the two sides of Whipple's transformation: the very
/// well-poised `7F6`, the prefactor's numerator and denominator arguments,
/// and the balanced `4F3`.
struct WhippleSides {
    left: SeriesSpec,
    right: SeriesSpec,
    prefactor_num: [Rational; 2],
    prefactor_den: [Rational; 2],
}

fn whipple_sides(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational, n: usize) -> WhippleSides {
    let one = Rational::one();
    let n_r = Rational::from(n);
    let a1 = a + &one;
    let half_a = a / Rational::from(2i64);
    WhippleSides {
        left: SeriesSpec::new(
            vec![a.clone(), &half_a + &one, b.clone(), c.clone(), d.clone(), e.clone(), -n_r.clone()],
            vec![half_a, &a1 - b, &a1 - c, &a1 - d, &a1 - e, &a1 + &n_r],
        ),
        right: SeriesSpec::new(
            vec![-n_r.clone(), &a1 - d - e, b.clone(), c.clone()],
            vec![b + c - &n_r - a, &a1 - d, &a1 - e],
        ),
        prefactor_num: [a1.clone(), &a1 - b - c],
        prefactor_den: [&a1 - b, &a1 - c],
    }
}

/// Reason the Whipple check is ill-posed at this point, if any. Bottom
/// parameters are checked over the full window `0..=n` on both sides, even
/// if another top parameter terminates a sum earlier: a cancelling
/// zero-over-zero is not evaluable termwise.
pub fn whipple_degeneracy(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational, n: usize) -> Option<String> {
    let sides = whipple_sides(a, b, c, d, e, n);
    let bottoms = sides.left.bottom.iter().chain(&sides.right.bottom).chain(&sides.prefactor_den);
    for x in bottoms {
        if rising_factorial(x, n).is_zero() {
            return Some(format!("bottom parameter {x} vanishes within the window 0..={n}"));
        }
    }
    None
}

/// Whipple's transformation of a terminating very well-poised `7F6` at unit
/// argument into a balanced `4F3`.
pub fn verify_whipple(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational, n: usize) -> VerifyReport {
    let p = Params::new()
        .with("a", a)
        .with("b", b)
        .with("c", c)
        .with("d", d)
        .with("e", e)
        .with("n", n);
    if let Some(reason) = whipple_degeneracy(a, b, c, d, e, n) {
        return VerifyReport::degenerate(Identity::Whipple, p, reason);
    }
    let sides = whipple_sides(a, b, c, d, e, n);
    let lhs = terminating_sum_unity(&sides.left.unperturbed());
    let rhs = terminating_sum_unity(&sides.right.unperturbed()).map(|s| {
        rising_factorial_product(&sides.prefactor_num, n) / rising_factorial_product(&sides.prefactor_den, n) * s
    });
    match (lhs, rhs) {
        (Ok(lhs), Ok(rhs)) => {
            VerifyReport::from_rows(Identity::Whipple, p, vec![Comparison { index: n, label: None, lhs, rhs }])
        }
        (Err(e), _) | (_, Err(e)) => VerifyReport::degenerate(Identity::Whipple, p, e),
    }
}

/// Karlsson's expansion of a series with positive integral parameter
/// differences,
///
/// ```text
/// F(base_top, f+m; base_bottom, f | x) = sum_j A(j) x^|j| F(base_top+|j|; base_bottom+|j| | x)
/// ```
///
/// with `A(j) = prod C(m_i, j_i) * prod_{i>=2} (f_i+m_i)_{j_1+..+j_{i-1}}
/// (base_top)_|j| / (prod_i (f_i)_{j_1+..+j_i} (base_bottom)_|j|)`.
pub fn verify_karlsson(
    base_top: &[Rational],
    base_bottom: &[Rational],
    f: &[Rational],
    mvec: &[usize],
    terms: usize,
) -> VerifyReport {
    let p = Params::new()
        .with_list("top", base_top)
        .with_list("bottom", base_bottom)
        .with_list("f", f)
        .with_list("mvec", mvec)
        .with("terms", terms);
    let id = Identity::Karlsson;
    if f.is_empty() || f.len() != mvec.len() {
        return VerifyReport::degenerate(id, p, "f and mvec must be nonempty and of equal length");
    }
    let mut top = base_top.to_vec();
    top.extend(f.iter().zip(mvec).map(|(fi, &mi)| fi + Rational::from(mi)));
    let mut bottom = base_bottom.to_vec();
    bottom.extend(f.iter().cloned());
    let lhs = match series_coeffs(&SeriesSpec::new(top, bottom).unperturbed(), terms) {
        Ok(lhs) => lhs,
        Err(e) => return VerifyReport::degenerate(id, p, e),
    };

    let base = SeriesSpec::new(base_top.to_vec(), base_bottom.to_vec());
    let mut rhs = vec![Rational::zero(); terms + 1];
    let mut j = vec![0usize; f.len()];
    loop {
        let total: usize = j.iter().sum();
        if total <= terms {
            let mut coeff: Rational = j
                .iter()
                .zip(mvec)
                .map(|(&ji, &mi)| Rational::from(binomial(mi, ji as i64)))
                .product();
            let mut partial = 0;
            let mut den = rising_factorial_product(base_bottom, total);
            for (i, (fi, &mi)) in f.iter().zip(mvec).enumerate() {
                if i > 0 {
                    coeff *= rising_factorial(&(fi + Rational::from(mi)), partial);
                }
                partial += j[i];
                den *= rising_factorial(fi, partial);
            }
            if den.is_zero() {
                return VerifyReport::degenerate(id, p, format!("A(j) has a vanishing denominator at j = {j:?}"));
            }
            coeff = coeff * rising_factorial_product(base_top, total) / den;
            let shifted = match series_coeffs(&base.shifted(&Rational::from(total)).unperturbed(), terms - total) {
                Ok(s) => s,
                Err(e) => return VerifyReport::degenerate(id, p, e),
            };
            for (k, c) in shifted.coeffs().iter().enumerate() {
                rhs[k + total] += &coeff * c;
            }
        }
        // odometer over 0..=m_i
        let mut i = 0;
        while i < j.len() && j[i] == mvec[i] {
            j[i] = 0;
            i += 1;
        }
        if i == j.len() {
            break;
        }
        j[i] += 1;
    }
    VerifyReport::from_rows(id, p, rows_from(&lhs, &TruncatedSeries::new(rhs)))
}

fn derivative_n(f: &TruncatedSeries, n: usize) -> TruncatedSeries {
    (0..n).fold(f.clone(), |acc, _| derivative(&acc))
}

/// `f (x d/dx)^n f` against
/// `1/2 sum_k S(n,k) x^k sum_j (-1)^j k/(k-j) C(k-j,j) d^{k-2j}/dx^{k-2j} [f^{(j)}]^2`
/// on the coefficients of `x^0 .. x^{len-1}`.
pub fn verify_operator_lemma(fcoeffs: &TruncatedSeries, n: usize) -> VerifyReport {
    let len = fcoeffs.len();
    let p = Params::new().with_list("f", fcoeffs.coeffs()).with("n", n);
    if n == 0 || len < n + 2 {
        return VerifyReport::degenerate(
            Identity::OperatorLemma,
            p,
            format!("need n >= 1 and at least n+2 coefficients (n = {n}, len = {len})"),
        );
    }
    let theta_n = (0..n).fold(fcoeffs.clone(), |acc, _| theta(&acc));
    let lhs = cauchy_product(fcoeffs, &theta_n);

    let mut rhs = vec![Rational::zero(); len];
    for k in 1..=n {
        let s_nk = Rational::from(stirling2(n, k));
        if s_nk.is_zero() {
            continue;
        }
        for j in 0..=k / 2 {
            let fj = derivative_n(fcoeffs, j);
            let inner = derivative_n(&cauchy_product(&fj, &fj), k - 2 * j);
            let w = Rational::from(orthogonality_weight(k, j)) * &s_nk * Rational::half();
            // x^k * inner; inner has len - k + j >= len - k valid coefficients
            for (i, slot) in rhs.iter_mut().enumerate().skip(k) {
                *slot += &w * &inner.coeffs()[i - k];
            }
        }
    }
    VerifyReport::from_rows(Identity::OperatorLemma, p, rows_from(&lhs, &TruncatedSeries::new(rhs)))
}

/// `2F1(a,b;c) 3F2(a,b,f+1;c,f) = F(2a,2b,a+b,2f+1; c,2a+2b+2m,2f | P_{2m}^{a,b})`.
pub fn verify_linear_perturbation(params: &ClausenParams, f: &Rational, terms: usize) -> VerifyReport {
    let p = Params::clausen(params).with("f", f).with("terms", terms);
    let id = Identity::LinearPerturbation;
    let one = Rational::one();
    let two = Rational::from(2i64);
    let (a, b) = (&params.a, &params.b);
    let run = || -> Result<(Vec<Comparison>, RatPoly), Error> {
        let poly = clausen::char_poly(params)?;
        let gauss = series_coeffs(&params.gauss_spec().unperturbed(), terms)?;
        let other = SeriesSpec::new(vec![a.clone(), b.clone(), f + &one], vec![params.c(), f.clone()]);
        let lhs = cauchy_product(&gauss, &series_coeffs(&other.unperturbed(), terms)?);
        let rhs_spec = SeriesSpec::new(
            vec![a * &two, b * &two, a + b, f * &two + &one],
            vec![params.c(), params.d(), f * &two],
        );
        let rhs = series_coeffs(&rhs_spec.perturbed(poly.clone()), terms)?;
        Ok((rows_from(&lhs, &rhs), poly))
    };
    match run() {
        Ok((rows, poly)) => VerifyReport::from_rows(id, p, rows).with_polynomial(poly),
        Err(e) => VerifyReport::degenerate(id, p, e),
    }
}

/// `2F1(a,b;c) 2F1(a+1,b;c) = F(2a+1, 2b, a+b; c, 2a+2b+2m | P_{2m}^{a,b})`.
pub fn verify_shifted_product(params: &ClausenParams, terms: usize) -> VerifyReport {
    let p = Params::clausen(params).with("terms", terms);
    let id = Identity::ShiftedProduct;
    let one = Rational::one();
    let two = Rational::from(2i64);
    let (a, b) = (&params.a, &params.b);
    let run = || -> Result<(Vec<Comparison>, RatPoly), Error> {
        let poly = clausen::char_poly(params)?;
        let gauss = series_coeffs(&params.gauss_spec().unperturbed(), terms)?;
        let shifted = SeriesSpec::new(vec![a + &one, b.clone()], vec![params.c()]);
        let lhs = cauchy_product(&gauss, &series_coeffs(&shifted.unperturbed(), terms)?);
        let rhs_spec = SeriesSpec::new(vec![a * &two + &one, b * &two, a + b], vec![params.c(), params.d()]);
        let rhs = series_coeffs(&rhs_spec.perturbed(poly.clone()), terms)?;
        Ok((rows_from(&lhs, &rhs), poly))
    };
    match run() {
        Ok((rows, poly)) => VerifyReport::from_rows(id, p, rows).with_polynomial(poly),
        Err(e) => VerifyReport::degenerate(id, p, e),
    }
}

/// Two-term closed form of `hatP_{2m+2}` for `F_2(y) = (f+y)(f+1+y)/(f(f+1))`:
///
/// ```text
/// (1 + (2f+1)/(2f(f+1)) t + t^2/(2f(f+1))) P_{2m}^{a,b}(t)
///   - ab(a+b+m)(a+b+m-1/2+t) t(t-1) / (f(f+1)(2a+1)(2b+1)(a+b)_2) P_{2m-2}^{a+1,b+1}(t-2)
/// ```
///
/// Requires `m >= 1`.
pub fn quadratic_closed_form(params: &ClausenParams, f: &Rational) -> Result<RatPoly, Error> {
    if params.m == 0 {
        return Err(Error::DegreeBound { s: 2, m: 0 });
    }
    let (a, b) = (&params.a, &params.b);
    let one = Rational::one();
    let two = Rational::from(2i64);
    let ff1 = f * (f + &one);
    if ff1.is_zero() {
        return Err(Error::DegenerateParams("f(f+1) vanishes".into()));
    }
    let p = clausen::char_poly(params)?;
    let raised = ClausenParams::new(a + &one, b + &one, params.m - 1)?;
    let q = clausen::char_poly(&raised)?.shift(&-two.clone());
    let first = RatPoly::new(vec![
        one.clone(),
        (&two * f + &one) / (&two * &ff1),
        (&two * &ff1).recip(),
    ]);
    let abm = a + b + Rational::from(params.m);
    let den = &ff1 * (&two * a + &one) * (&two * b + &one) * rising_factorial(&(a + b), 2);
    if den.is_zero() {
        return Err(Error::DegenerateParams("(2a+1)(2b+1)(a+b)_2 vanishes".into()));
    }
    let scalar = a * b * &abm / den;
    // (a+b+m-1/2+t) t (t-1)
    let cubic = &RatPoly::linear(&abm - Rational::half(), one.clone())
        * &RatPoly::new(vec![Rational::zero(), -one.clone(), one.clone()]);
    Ok(&(&first * &p) - &(&cubic * &q).scale(&scalar))
}

/// `sigma` of `F_2(y) = (f+y)(f+1+y)/(f(f+1))`, lowest degree first.
pub fn quadratic_sigma(f: &Rational) -> Result<PerturbationInput, Error> {
    let one = Rational::one();
    let ff1 = f * (f + &one);
    if ff1.is_zero() {
        return Err(Error::DegenerateParams("f(f+1) vanishes".into()));
    }
    PerturbationInput::new(vec![
        Rational::one(),
        (Rational::from(2i64) * f + &one) / &ff1,
        ff1.recip(),
    ])
}

/// Checks the closed form of `hatP_{2m+2}` against the general construction,
/// coefficient by coefficient, and then the product
/// `2F1(a,b;c) 3F2(a,b,f+2;c,f) = F(2a,2b,a+b; c,2a+2b+2m | hatP_{2m+2})`.
pub fn verify_quadratic_perturbation(params: &ClausenParams, f: &Rational, terms: usize) -> VerifyReport {
    let p = Params::clausen(params).with("f", f).with("terms", terms);
    let id = Identity::QuadraticPerturbation;
    let (a, b) = (&params.a, &params.b);
    let run = || -> Result<(Vec<Comparison>, RatPoly), Error> {
        let closed = quadratic_closed_form(params, f)?;
        let general = clausen::hat_poly_direct(params, &quadratic_sigma(f)?)?;
        let mut rows = poly_rows(&closed, &general, "closed_form");
        let gauss = series_coeffs(&params.gauss_spec().unperturbed(), terms)?;
        let other = SeriesSpec::new(
            vec![a.clone(), b.clone(), f + Rational::from(2i64)],
            vec![params.c(), f.clone()],
        );
        let lhs = cauchy_product(&gauss, &series_coeffs(&other.unperturbed(), terms)?);
        let rhs = series_coeffs(&params.rhs_spec().perturbed(closed.clone()), terms)?;
        rows.extend(rows_from(&lhs, &rhs));
        Ok((rows, closed))
    };
    match run() {
        Ok((rows, poly)) => VerifyReport::from_rows(id, p, rows).with_polynomial(poly),
        Err(e) => VerifyReport::degenerate(id, p, e),
    }
}

/// Builds `P_{2m}^{a,b}` directly and compares it with the interpolation
/// route. If the interpolation route is degenerate at this point, the
/// directly built polynomial is still reported, with nothing compared.
pub fn check_char_poly(params: &ClausenParams) -> VerifyReport {
    let p = Params::clausen(params);
    let direct = match clausen::char_poly(params) {
        Ok(poly) => poly,
        Err(e) => return VerifyReport::degenerate(Identity::CharPoly, p, e),
    };
    match clausen::char_poly_via_interpolation(params) {
        Ok(interp) => {
            VerifyReport::from_rows(Identity::CharPoly, p, poly_rows(&direct, &interp, "interpolation")).with_polynomial(direct)
        }
        Err(e) => {
            let mut report = VerifyReport::listing(Identity::CharPoly, p).with_polynomial(direct);
            report.reason = Some(format!("interpolation route unavailable: {e}"));
            report
        }
    }
}

/// `hatP_{2m+s}` by both routes. For `s > 2m+1` only the interpolated
/// polynomial exists; it is reported with status `Refused`.
pub fn check_hat_poly(params: &ClausenParams, f: &PerturbationInput) -> VerifyReport {
    let p = Params::clausen(params).with_list("sigma", f.sigma());
    let id = Identity::HatPoly;
    if f.degree() > 2 * params.m + 1 {
        return match clausen::hat_poly_interp(params, f) {
            Ok(hat) => {
                let mut report = VerifyReport::refused(
                    id,
                    p.with("identity_valid", hat.identity_valid),
                    Error::DegreeBound { s: f.degree(), m: params.m },
                );
                report.polynomial = Some(hat.poly);
                report
            }
            Err(e) => VerifyReport::degenerate(id, p, e),
        };
    }
    let direct = match clausen::hat_poly_direct(params, f) {
        Ok(poly) => poly,
        Err(e) => return VerifyReport::degenerate(id, p, e),
    };
    match clausen::hat_poly_interp(params, f) {
        Ok(hat) => VerifyReport::from_rows(id, p, poly_rows(&direct, &hat.poly, "interpolation")).with_polynomial(direct),
        Err(e) => {
            let mut report = VerifyReport::listing(id, p).with_polynomial(direct);
            report.reason = Some(format!("interpolation route unavailable: {e}"));
            report
        }
    }
}
