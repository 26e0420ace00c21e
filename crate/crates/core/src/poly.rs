//! Dense univariate polynomials over [`Rational`] in the indeterminate `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::combinat::binomial;
use crate::rational::Rational;

/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c0 + c1 t`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `t -> P(t + h)`.
    pub fn shift(&self, h: &Rational) -> Self {
        if h.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        // Horner in the ring: P(t+h) = (...(c_n (t+h) + c_{n-1})(t+h) + ...).
        let step = RatPoly::linear(h.clone(), Rational::one());
        self.coeffs.iter().rev().fold(RatPoly::zero(), |acc, c| {
            &(&acc * &step) + &RatPoly::constant(c.clone())
        })
    }

    /// Rising factorial `(P)_k = P (P+1) ... (P+k-1)` in the ring.
    pub fn rising_factorial(&self, k: usize) -> Self {
        let mut acc = RatPoly::one();
        let mut factor = self.clone();
        let one = RatPoly::one();
        for _ in 0..k {
            acc = &acc * &factor;
            factor = &factor + &one;
        }
        acc
    }

    /// The unique polynomial of degree at most `n` with `P(j) = values[j]`
    /// for `j = 0..=n`, in Newton form
    /// `sum_k (-t)_k / k! * sum_{j<=k} (-1)^j C(k,j) values[j]`.
    ///
    /// Panics on an empty slice.
    pub fn interpolate(values: &[Rational]) -> Self {
        assert!(!values.is_empty(), "interpolation needs at least one node");
        let minus_t = RatPoly::linear(Rational::zero(), -Rational::one());
        let mut basis = RatPoly::one(); // (-t)_k / k!
        let mut acc = RatPoly::zero();
        for k in 0..values.len() {
            if k > 0 {
                let step = &minus_t + &RatPoly::constant(Rational::from(k - 1));
                basis = (&basis * &step).scale(&Rational::from(k).recip());
            }
            let diff: Rational = values[..=k]
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let c = Rational::from(binomial(k, j as i64)) * v;
                    if j % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum();
            if !diff.is_zero() {
                acc = &acc + &basis.scale(&diff);
            }
        }
        acc
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: RatPoly) -> RatPoly {
                $imp::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}
