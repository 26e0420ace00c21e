//! Characteristic polynomials of the extended Clausen product formulas.
//!
//! For `c = a + b + m + 1/2`,
//!
//! ```text
//! [2F1(a, b; c | x)]^2 = F(2a, 2b, a+b; c, 2a+2b+2m | P_{2m}^{a,b} | x)
//! 2F1(a, b; c | x) * F(a, b; c | F_s | x)
//!                      = F(2a, 2b, a+b; c, 2a+2b+2m | hatP_{2m+s} | x),  s <= 2m+1
//! ```
//!
//! Each polynomial is built by two independent routes: a closed-form
//! expansion in the polynomial ring, and interpolation through its values
//! at `t = 0, 1, ...`, which are terminating `4F3`-type sums at unit
//! argument.

use serde::Serialize;

use crate::combinat::{binomial, rising_factorial, stirling2};
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::Rational;
use crate::series::{terminating_sum_unity, SeriesSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClausenParams {
    pub a: Rational,
    pub b: Rational,
    pub m: usize,
}

impl ClausenParams {
    /// Rejects parameters for which a bottom parameter of the product formula
    /// is a non-positive integer, or a normalizing Pochhammer symbol of
    /// `P_{2m}^{a,b}` vanishes.
    pub fn new(a: Rational, b: Rational, m: usize) -> Result<Self> {
        let p = ClausenParams { a, b, m };
        if p.c().nonpositive_integer().is_some() {
            return Err(degenerate(format!("a+b+m+1/2 = {} is a non-positive integer", p.c())));
        }
        if p.d().nonpositive_integer().is_some() {
            return Err(degenerate(format!("2a+2b+2m = {} is a non-positive integer", p.d())));
        }
        let half = Rational::half();
        for (name, x) in [
            ("(a+b)_m", &p.a + &p.b),
            ("(a+1/2)_m", &p.a + &half),
            ("(b+1/2)_m", &p.b + &half),
        ] {
            if rising_factorial(&x, m).is_zero() {
                return Err(degenerate(format!("{name} vanishes")));
            }
        }
        Ok(p)
    }

    /// Convenience for literals; panics on a degenerate point.
    pub fn from_fracs(a: (i64, i64), b: (i64, i64), m: usize) -> Self {
        Self::new(Rational::new(a.0, a.1), Rational::new(b.0, b.1), m)
            .expect("admissible parameters")
    }

    /// Bottom parameter of the Gauss function, `a + b + m + 1/2`.
    pub fn c(&self) -> Rational {
        &self.a + &self.b + Rational::from(self.m) + Rational::half()
    }

    /// Second bottom parameter of the right-hand side, `2a + 2b + 2m`.
    pub fn d(&self) -> Rational {
        (&self.a + &self.b + Rational::from(self.m)) * Rational::from(2i64)
    }

    /// `(a + j, b + j, m - j)`, the parameters of the `j`-th derivative's
    /// square.
    fn lowered(&self, j: usize) -> Result<ClausenParams> {
        let j_r = Rational::from(j);
        ClausenParams::new(&self.a + &j_r, &self.b + &j_r, self.m - j)
    }

    /// `2F1(a, b; c)`.
    pub fn gauss_spec(&self) -> SeriesSpec {
        SeriesSpec::new(vec![self.a.clone(), self.b.clone()], vec![self.c()])
    }

    /// `3F2(2a, 2b, a+b; c, 2a+2b+2m)`, the series perturbed on the right.
    pub fn rhs_spec(&self) -> SeriesSpec {
        let two = Rational::from(2i64);
        SeriesSpec::new(
            vec![&self.a * &two, &self.b * &two, &self.a + &self.b],
            vec![self.c(), self.d()],
        )
    }

    /// `(a)_k (b)_k (2a+2b+2m)_k / ((2a)_k (2b)_k (a+b)_k)`, the factor
    /// relating the value of a characteristic polynomial at `k` to the
    /// `4F3`-type sum of the k-th product coefficient.
    pub fn node_ratio(&self, k: usize) -> Result<Rational> {
        let two = Rational::from(2i64);
        let den = rising_factorial(&(&self.a * &two), k)
            * rising_factorial(&(&self.b * &two), k)
            * rising_factorial(&(&self.a + &self.b), k);
        if den.is_zero() {
            return Err(degenerate(format!("(2a)_k (2b)_k (a+b)_k vanishes at k = {k}")));
        }
        Ok(rising_factorial(&self.a, k) * rising_factorial(&self.b, k) * rising_factorial(&self.d(), k) / den)
    }

    /// Parameters of the terminating sum
    /// `F(-k, a, b, 1/2-k-a-b-m; a+b+m+1/2, 1-a-k, 1-b-k | 1)`.
    pub fn node_sum_spec(&self, k: usize) -> SeriesSpec {
        let k_r = Rational::from(k);
        let one = Rational::one();
        SeriesSpec::new(
            vec![
                -k_r.clone(),
                self.a.clone(),
                self.b.clone(),
                Rational::half() - &k_r - &self.a - &self.b - Rational::from(self.m),
            ],
            vec![self.c(), &one - &self.a - &k_r, &one - &self.b - &k_r],
        )
    }
}

fn degenerate(msg: String) -> Error {
    Error::DegenerateParams(msg)
}

/// Maps series-level degeneracies into parameter-level ones.
fn as_params_error(e: Error) -> Error {
    match e {
        Error::DegenerateParameter { param, index } => {
            degenerate(format!("bottom parameter {param} vanishes at term {index}"))
        }
        other => other,
    }
}

/// Coefficients `sigma_0 .. sigma_s` of the perturbing polynomial `F_s(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationInput {
    sigma: Vec<Rational>,
}

impl PerturbationInput {
    /// Requires at least one coefficient and a nonzero leading one.
    pub fn new(sigma: Vec<Rational>) -> Result<Self> {
        match sigma.last() {
            None => Err(Error::InvalidPerturbation("empty coefficient list")),
            Some(c) if c.is_zero() => Err(Error::InvalidPerturbation("leading coefficient is zero")),
            Some(_) => Ok(PerturbationInput { sigma }),
        }
    }

    pub fn constant_one() -> Self {
        PerturbationInput {
            sigma: vec![Rational::one()],
        }
    }

    pub fn sigma(&self) -> &[Rational] {
        &self.sigma
    }

    /// Degree `s`.
    pub fn degree(&self) -> usize {
        self.sigma.len() - 1
    }

    pub fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.sigma.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceCoeffs {
    pub beta0: Rational,
    pub beta1: Rational,
}

/// `P_{2m}^{a,b}(t)` expanded directly in the polynomial ring:
///
/// ```text
/// sum_{j=0}^{m} C(m,j) (a)_m (b)_m (a+b+t/2+j)_{m-j} (-t/2)_j
///               / ((-1)^j (a+b)_m (a+1/2)_m (b+1/2)_m)
///   * 3F2(-m+j, (1-t)/2-a-b-m, 1/2; 1-a-m, 1-b-m | 1)
/// ```
///
/// The terminating `3F2` contributes `m-j+1` terms, each a polynomial in `t`.
pub fn char_poly(params: &ClausenParams) -> Result<RatPoly> {
    let ClausenParams { a, b, m } = params;
    let m = *m;
    let half = Rational::half();
    let one = Rational::one();
    let m_r = Rational::from(m);
    let ab = a + b;

    let norm = rising_factorial(&ab, m)
        * rising_factorial(&(a + &half), m)
        * rising_factorial(&(b + &half), m);
    let prefactor = rising_factorial(a, m) * rising_factorial(b, m) / norm;

    let bottom1 = &one - a - &m_r;
    let bottom2 = &one - b - &m_r;
    // (1-t)/2 - a - b - m
    let inner_top = RatPoly::linear(&half - &ab - &m_r, -half.clone());
    let minus_half_t = RatPoly::linear(Rational::zero(), -half.clone());

    // inner 3F2 terms: (inner_top)_i * w_i with scalar w_i
    let mut inner_weights = Vec::with_capacity(m + 1);
    let mut w = Rational::one();
    for i in 0..=m {
        if i > 0 {
            let im1 = Rational::from(i - 1);
            let den = (&bottom1 + &im1) * (&bottom2 + &im1) * Rational::from(i);
            if den.is_zero() {
                return Err(degenerate(format!(
                    "bottom parameter of the inner 3F2 vanishes at term {i}"
                )));
            }
            // (-m+j)_i depends on j; applied below. Here (1/2)_i / ((1-a-m)_i (1-b-m)_i i!).
            w = w * (&half + &im1) / den;
        }
        inner_weights.push(w.clone());
    }
    let inner_rf: Vec<RatPoly> = (0..=m).map(|i| inner_top.rising_factorial(i)).collect();

    let mut acc = RatPoly::zero();
    for j in 0..=m {
        let sign = if j % 2 == 0 { one.clone() } else { -one.clone() };
        let scalar = Rational::from(binomial(m, j as i64)) * &prefactor * sign;
        let pochhammer_t = RatPoly::linear(&ab + Rational::from(j), half.clone()).rising_factorial(m - j);
        let minus_t_half = minus_half_t.rising_factorial(j);
        let top_j = Rational::from(j) - &m_r;
        let mut inner = RatPoly::zero();
        for i in 0..=(m - j) {
            let c = rising_factorial(&top_j, i) * &inner_weights[i];
            if !c.is_zero() {
                inner = &inner + &inner_rf[i].scale(&c);
            }
        }
        let term = &(&pochhammer_t * &minus_t_half) * &inner;
        acc = &acc + &term.scale(&scalar);
    }
    Ok(acc)
}

/// Value of `P_{2m}^{a,b}` at `t = k` from the unit-argument summation
/// `4F3(-k, a, b, 1/2-k-a-b-m; 1-k-a, 1-k-b, a+b+m+1/2) * node_ratio(k)`.
pub fn char_poly_value_from_sum(params: &ClausenParams, k: usize) -> Result<Rational> {
    let ratio = params.node_ratio(k)?;
    let sum = terminating_sum_unity(&params.node_sum_spec(k).unperturbed()).map_err(as_params_error)?;
    Ok(ratio * sum)
}

/// `P_{2m}^{a,b}` interpolated through its values at `t = 0..=2m`.
pub fn char_poly_via_interpolation(params: &ClausenParams) -> Result<RatPoly> {
    let values = (0..=2 * params.m)
        .map(|k| char_poly_value_from_sum(params, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatPoly::interpolate(&values))
}

/// Coefficients of the three-term recurrence
/// `P(n+1) = beta0(n) P(n) + beta1(n) P(n-1)` satisfied by the values of
/// `P_{2m}^{a,b}` at positive integers, with `c = a + b + m + 1/2`.
pub fn recurrence_coeffs(params: &ClausenParams, n: usize) -> Result<RecurrenceCoeffs> {
    let (a, b) = (&params.a, &params.b);
    let c = params.c();
    let n_r = Rational::from(n);
    let two = Rational::from(2i64);
    let three = Rational::from(3i64);
    let four = Rational::from(4i64);
    let one = Rational::one();

    let den = (a * &two + &n_r) * (b * &two + &n_r) * (a + b + &n_r);
    if den.is_zero() {
        return Err(degenerate(format!("(2a+n)(2b+n)(a+b+n) vanishes at n = {n}")));
    }
    let ab = a * b;
    let n2 = &n_r * &n_r;
    let n3 = &n2 * &n_r;
    let num0 = &two * &n3
        + &three * (a + b + &c - &one) * &n2
        + ((a + b) * (&four * &c - &three) + &four * &ab - &c + &one) * &n_r
        + &two * &ab * (&two * &c - &one);
    let num1 = &n_r * (&c + &n_r - &one) * (&two * &c - &two + &n_r);
    Ok(RecurrenceCoeffs {
        beta0: num0 / &den,
        beta1: -(num1 / den),
    })
}

/// `hatP_{2m+s}` from the closed form
///
/// ```text
/// sigma_0 P_{2m}^{a,b}(t)
///   + 1/2 sum_{n=1}^{s} sigma_n sum_{k=1}^{n} (-1)^k S(n,k)
///       sum_{j=0}^{k/2} k/(k-j) C(k-j,j) A_j(t) (-t)_k P_{2m-2j}^{a+j,b+j}(t-2j)
/// ```
///
/// with `A_j(t) = (a)_j (b)_j (a+b+m)_j (1/2-a-b-m-t)_j
/// / (4^j (a+1/2)_j (b+1/2)_j (a+b)_{2j})`. Only defined for `s <= 2m+1`.
pub fn hat_poly_direct(params: &ClausenParams, f: &PerturbationInput) -> Result<RatPoly> {
    let s = f.degree();
    let m = params.m;
    if s > 2 * m + 1 {
        return Err(Error::DegreeBound { s, m });
    }
    let (a, b) = (&params.a, &params.b);
    let half = Rational::half();
    let ab = a + b;
    let abm = &ab + Rational::from(m);

    let max_j = s / 2;
    // shifted characteristic polynomials P_{2m-2j}^{a+j,b+j}(t-2j) and the
    // polynomial weights A_j(t)
    let mut shifted = Vec::with_capacity(max_j + 1);
    let mut weights = Vec::with_capacity(max_j + 1);
    for j in 0..=max_j {
        let lowered = params.lowered(j)?;
        shifted.push(char_poly(&lowered)?.shift(&-Rational::from(2 * j)));
        let den = Rational::from(4i64).pow(j as i32)
            * rising_factorial(&(a + &half), j)
            * rising_factorial(&(b + &half), j)
            * rising_factorial(&ab, 2 * j);
        if den.is_zero() {
            return Err(degenerate(format!("normalization of the j = {j} term vanishes")));
        }
        let scalar = rising_factorial(a, j) * rising_factorial(b, j) * rising_factorial(&abm, j) / den;
        let t_poch = RatPoly::linear(&half - &abm, -Rational::one()).rising_factorial(j);
        weights.push(t_poch.scale(&scalar));
    }
    let minus_t = RatPoly::linear(Rational::zero(), -Rational::one());

    let sigma = f.sigma();
    let mut acc = shifted[0].scale(&sigma[0]);
    for k in 1..=s {
        // coefficient of the k-block: 1/2 (-1)^k sum_{n>=k} sigma_n S(n,k)
        let block: Rational = (k..=s)
            .map(|n| &sigma[n] * Rational::from(stirling2(n, k)))
            .sum();
        if block.is_zero() {
            continue;
        }
        let sign = if k % 2 == 0 { half.clone() } else { -half.clone() };
        let mut inner = RatPoly::zero();
        for j in 0..=k / 2 {
            let w = Rational::from(crate::combinat::orthogonality_weight(k, j));
            // the (-1)^j of the weight cancels against (a+b+m+1/2+t-j)_j = (-1)^j (1/2-a-b-m-t)_j
            let w = if j % 2 == 0 { w } else { -w };
            inner = &inner + &(&weights[j] * &shifted[j]).scale(&w);
        }
        let term = &minus_t.rising_factorial(k) * &inner;
        acc = &acc + &term.scale(&(block * sign));
    }
    Ok(acc)
}

/// Output of the interpolation route. `identity_valid` is false when
/// `s > 2m+1`: the polynomial is well defined but the product formula does
/// not hold with it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatPoly {
    pub poly: RatPoly,
    pub identity_valid: bool,
}

/// Value of `hatP_{2m+s}` at `t = k`: `node_ratio(k)` times the terminating
/// sum `F(-k, a, b, 1/2-k-a-b-m; a+b+m+1/2, 1-a-k, 1-b-k | F_s | 1)`.
pub fn hat_poly_value_from_sum(params: &ClausenParams, f: &PerturbationInput, k: usize) -> Result<Rational> {
    let ratio = params.node_ratio(k)?;
    let spec = params.node_sum_spec(k).perturbed(f.as_poly());
    let sum = terminating_sum_unity(&spec).map_err(as_params_error)?;
    Ok(ratio * sum)
}

/// `hatP_{2m+s}` interpolated through its values at `t = 0..=2m+s`.
pub fn hat_poly_interp(params: &ClausenParams, f: &PerturbationInput) -> Result<HatPoly> {
    let n = 2 * params.m + f.degree();
    let values = (0..=n)
        .map(|k| hat_poly_value_from_sum(params, f, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(HatPoly {
        poly: RatPoly::interpolate(&values),
        identity_valid: f.degree() <= 2 * params.m + 1,
    })
}
