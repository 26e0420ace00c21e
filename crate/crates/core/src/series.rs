//! Truncated coefficient sequences of generalized hypergeometric series and
//! their polynomial perturbations
//! `F(a; b | P | x) = sum_k (a)_k / ((b)_k k!) P(k) x^k`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::Rational;

/// Parameter lists of `pFq(top; bottom; x)`. Not validated on construction;
/// degenerate bottom parameters are reported when coefficients are computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesSpec {
    pub top: Vec<Rational>,
    pub bottom: Vec<Rational>,
}

impl SeriesSpec {
    pub fn new(top: Vec<Rational>, bottom: Vec<Rational>) -> Self {
        SeriesSpec { top, bottom }
    }

    pub fn unperturbed(self) -> PerturbedSpec {
        PerturbedSpec::new(self, RatPoly::one())
    }

    pub fn perturbed(self, perturb: RatPoly) -> PerturbedSpec {
        PerturbedSpec::new(self, perturb)
    }

    /// Every parameter shifted by `h`.
    pub fn shifted(&self, h: &Rational) -> SeriesSpec {
        SeriesSpec {
            top: self.top.iter().map(|a| a + h).collect(),
            bottom: self.bottom.iter().map(|b| b + h).collect(),
        }
    }

    /// Smallest `p` such that some top parameter equals `-p`.
    pub fn termination_index(&self) -> Option<usize> {
        self.top.iter().filter_map(Rational::nonpositive_integer).min()
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}F{}({}; {})", self.top.len(), self.bottom.len(), join(&self.top), join(&self.bottom))
    }
}

/// A series whose k-th hypergeometric coefficient is scaled by `perturb(k)`.
/// `perturb = 1` is the plain series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbedSpec {
    pub spec: SeriesSpec,
    pub perturb: RatPoly,
}

impl PerturbedSpec {
    pub fn new(spec: SeriesSpec, perturb: RatPoly) -> Self {
        PerturbedSpec { spec, perturb }
    }
}

/// Coefficients `c_0 .. c_{len-1}` of a formal power series in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zeros(len: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); len],
        }
    }

    /// `1 + 0 x + ...` of the given length.
    pub fn unit(len: usize) -> Self {
        let mut s = Self::zeros(len);
        if let Some(c) = s.coeffs.first_mut() {
            *c = Rational::one();
        }
        s
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn truncate(mut self, len: usize) -> Self {
        self.coeffs.truncate(len);
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Elementwise sum, truncated to the shorter length.
    pub fn add(&self, other: &Self) -> Self {
        TruncatedSeries::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        TruncatedSeries::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    /// Multiplication by `x^k`, keeping the length.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let len = self.len();
        let mut coeffs = vec![Rational::zero(); k.min(len)];
        coeffs.extend(self.coeffs.iter().take(len.saturating_sub(k)).cloned());
        TruncatedSeries::new(coeffs)
    }
}

/// Coefficients `c_0 .. c_terms` (length `terms + 1`) of
/// `F(top; bottom | perturb | x)`.
///
/// The hypergeometric factor is accumulated as a running product of top
/// factors over bottom factors and `k`, so a vanishing top factor never
/// causes a division.
pub fn series_coeffs(spec: &PerturbedSpec, terms: usize) -> Result<TruncatedSeries> {
    let SeriesSpec { top, bottom } = &spec.spec;
    let mut coeffs = Vec::with_capacity(terms + 1);
    let mut base = Rational::one();
    for k in 0..=terms {
        if k > 0 {
            let km1 = Rational::from(k - 1);
            let mut denom = Rational::from(k);
            for b in bottom {
                let factor = b + &km1;
                if factor.is_zero() {
                    return Err(Error::DegenerateParameter {
                        param: b.clone(),
                        index: k,
                    });
                }
                denom *= factor;
            }
            if !base.is_zero() {
                for a in top {
                    base *= a + &km1;
                }
                base /= denom;
            }
        }
        let p = spec.perturb.eval(&Rational::from(k));
        coeffs.push(&base * &p);
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Convolution `h_k = sum_{n<=k} f_n g_{k-n}`, truncated to the shorter input.
pub fn cauchy_product(f: &TruncatedSeries, g: &TruncatedSeries) -> TruncatedSeries {
    let len = f.len().min(g.len());
    let (f, g) = (&f.coeffs[..len], &g.coeffs[..len]);
    let coeffs = (0..len)
        .map(|k| {
            let mut acc = Rational::zero();
            for n in 0..=k {
                if f[n].is_zero() || g[k - n].is_zero() {
                    continue;
                }
                acc += &f[n] * &g[k - n];
            }
            acc
        })
        .collect();
    TruncatedSeries::new(coeffs)
}

/// `d/dx`; the result is one coefficient shorter. Panics on an empty series.
pub fn derivative(f: &TruncatedSeries) -> TruncatedSeries {
    assert!(!f.is_empty(), "derivative of an empty series");
    TruncatedSeries::new(
        f.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from(k))
            .collect(),
    )
}

/// Euler operator `x d/dx`: `c_k -> k c_k`.
pub fn theta(f: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::new(
        f.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::from(k))
            .collect(),
    )
}

/// Exact value at `x = 1` of a terminating series: the sum of terms
/// `0..=p`, where `-p` is the smallest termination index among the top
/// parameters.
pub fn terminating_sum_unity(spec: &PerturbedSpec) -> Result<Rational> {
    let p = spec.spec.termination_index().ok_or(Error::NonTerminating)?;
    let coeffs = series_coeffs(spec, p)?;
    Ok(coeffs.coeffs.into_iter().sum())
}
