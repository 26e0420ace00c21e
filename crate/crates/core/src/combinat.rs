//! Pochhammer symbols and the integer combinatorics used by the identities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// `(x)_k = x (x+1) ... (x+k-1)`, with `(x)_0 = 1`.
pub fn rising_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    let one = Rational::one();
    for _ in 0..k {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += &one;
    }
    acc
}

/// Product of `(x)_k` over a parameter list.
pub fn rising_factorial_product(xs: &[Rational], k: usize) -> Rational {
    xs.iter().map(|x| rising_factorial(x, k)).product()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero whenever `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Stirling number of the second kind from the explicit alternating sum
/// `S(n,k) = (1/k!) sum_i (-1)^(k-i) C(k,i) i^n`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for i in 0..=k {
        // 0^0 = 1 makes S(0,0) = 1.
        let power = num_traits::pow(BigInt::from(i), n);
        let term = binomial(k, i as i64) * power;
        if (k - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (quot, rem) = sum.div_rem(&factorial(k));
    debug_assert!(rem.is_zero());
    quot
}

/// Weight `(-1)^j k/(k-j) C(k-j, j)` of the j-th term in the binomial
/// orthogonality sum and in the `f (x d/dx)^n f` expansion. Always an integer.
pub fn orthogonality_weight(k: usize, j: usize) -> BigInt {
    debug_assert!(k >= 1 && 2 * j <= k);
    let numer = BigInt::from(k) * binomial(k - j, j as i64);
    let (w, rem) = numer.div_rem(&BigInt::from(k - j));
    debug_assert!(rem.is_zero());
    if j.is_multiple_of(2) {
        w
    } else {
        -w
    }
}

/// The raw sum `H_{l,k} = sum_j (-1)^j k/(k-j) C(k-j,j) C(k-2j, l-j)`,
/// which equals 1 for `l` in `{0, k}` and 0 otherwise.
pub fn orthogonality_h(ell: usize, k: usize) -> BigInt {
    assert!(k >= 1, "orthogonality sum needs k >= 1");
    (0..=k / 2)
        .map(|j| orthogonality_weight(k, j) * binomial(k - 2 * j, ell as i64 - j as i64))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&q(3, 1), 4), q(360, 1));
        assert_eq!(rising_factorial(&q(7, 3), 0), Rational::one());
        assert_eq!(rising_factorial(&q(1, 2), 2), q(3, 4));
        assert_eq!(rising_factorial(&q(-2, 1), 4), Rational::zero());
        assert_eq!(rising_factorial(&q(-2, 1), 2), q(2, 1));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        for n in 0..10 {
            assert_eq!(binomial(n, 0), BigInt::one());
            assert_eq!(binomial(n, n as i64), BigInt::one());
        }
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    /// Triangle recurrence `S(n,k) = k S(n-1,k) + S(n-1,k-1)`, independent of
    /// the alternating-sum formula.
    fn stirling_table(n_max: usize) -> Vec<Vec<BigInt>> {
        let mut t = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
        t[0][0] = BigInt::one();
        for n in 1..=n_max {
            for k in 1..=n {
                t[n][k] = BigInt::from(k) * &t[n - 1][k] + &t[n - 1][k - 1];
            }
        }
        t
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 0), BigInt::zero());
        assert_eq!(stirling2(3, 5), BigInt::zero());
        for n in 0..12 {
            assert_eq!(stirling2(n, n), BigInt::one());
        }
    }

    #[test]
    fn stirling2_matches_triangle_recurrence() {
        let table = stirling_table(25);
        for (n, row) in table.iter().enumerate() {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&stirling2(n, k), expected, "S({n},{k})");
            }
        }
    }

    #[test]
    fn orthogonality_examples() {
        for k in 1..8 {
            assert_eq!(orthogonality_h(0, k), BigInt::one());
        }
        assert_eq!(orthogonality_h(1, 2), BigInt::zero());
        assert_eq!(orthogonality_h(3, 3), BigInt::one());
    }

    #[test]
    fn orthogonality_is_kronecker_pair() {
        for k in 1..=20 {
            for ell in 0..=k {
                let expected = if ell == 0 || ell == k { 1 } else { 0 };
                assert_eq!(orthogonality_h(ell, k), BigInt::from(expected), "H({ell},{k})");
            }
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
    }

    proptest! {
        #[test]
        fn rising_factorial_splits(x in small_rational(), p in 0usize..8, r in 0usize..8) {
            let lhs = rising_factorial(&x, p + r);
            let rhs = rising_factorial(&x, p) * rising_factorial(&(&x + Rational::from(p)), r);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rising_factorial_reflection(x in small_rational(), n in 0usize..10) {
            let reflected = Rational::one() - &x - Rational::from(n);
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            prop_assert_eq!(rising_factorial(&x, n), sign * rising_factorial(&reflected, n));
        }

        #[test]
        fn legendre_duplication(a in small_rational(), m in 0usize..8) {
            let lhs = rising_factorial(&a, m) * rising_factorial(&(&a + Rational::half()), m);
            let two_a = &a * Rational::from(2i64);
            let rhs = rising_factorial(&two_a, 2 * m) / Rational::from(4i64).pow(m as i32);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
