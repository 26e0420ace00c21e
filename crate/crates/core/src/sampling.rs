//! Seeded generation of admissible parameters for randomized sweeps.
//!
//! Rationals have numerators in `[-9, 9]` and denominators in `[1, 9]`.
//! Degenerate draws are rejected and redrawn, so a seed always yields the
//! same admissible sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clausen::{ClausenParams, PerturbationInput};
use crate::rational::Rational;
use crate::series::TruncatedSeries;
use crate::verify::whipple_degeneracy;

const MAX_NUM: i64 = 9;
const MAX_DEN: i64 = 9;
const MAX_ATTEMPTS: usize = 10_000;

pub struct Sampler {
    rng: ChaCha8Rng,
}

fn twice_nonpositive_integer(x: &Rational) -> bool {
    (x * Rational::from(2i64)).nonpositive_integer().is_some()
}

/// Whether `(a, b, m)` is outside every degenerate set of the constructions.
///
/// Rejects `2a`, `2b`, `2(a+b)` at non-positive integers (which covers
/// `a+1/2`, `b+1/2` and `c = a+b+m+1/2` there) on top of the checks of
/// [`ClausenParams::new`].
pub fn admissible(a: &Rational, b: &Rational, m: usize) -> Option<ClausenParams> {
    if twice_nonpositive_integer(a) || twice_nonpositive_integer(b) || twice_nonpositive_integer(&(a + b)) {
        return None;
    }
    ClausenParams::new(a.clone(), b.clone(), m).ok()
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-MAX_NUM..=MAX_NUM);
        let den = self.rng.gen_range(1..=MAX_DEN);
        Rational::new(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let x = self.rational();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn clausen_params(&mut self, m: usize) -> ClausenParams {
        for _ in 0..MAX_ATTEMPTS {
            let (a, b) = (self.rational(), self.rational());
            if let Some(params) = admissible(&a, &b, m) {
                return params;
            }
        }
        unreachable!("no admissible parameters after {MAX_ATTEMPTS} draws")
    }

    /// Coefficients `sigma_0..sigma_s` with a nonzero leading coefficient.
    pub fn perturbation(&mut self, s: usize) -> PerturbationInput {
        let mut sigma: Vec<Rational> = (0..s).map(|_| self.rational()).collect();
        sigma.push(self.nonzero_rational());
        PerturbationInput::new(sigma).expect("leading coefficient is nonzero")
    }

    pub fn series(&mut self, len: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..len).map(|_| self.rational()).collect())
    }

    /// `(a, b, c, d, e)` for which the Whipple check at `n` is well posed.
    pub fn whipple_tuple(&mut self, n: usize) -> [Rational; 5] {
        for _ in 0..MAX_ATTEMPTS {
            let t: [Rational; 5] = std::array::from_fn(|_| self.rational());
            if whipple_degeneracy(&t[0], &t[1], &t[2], &t[3], &t[4], n).is_none() {
                return t;
            }
        }
        unreachable!("no admissible Whipple tuple after {MAX_ATTEMPTS} draws")
    }

    /// A rational that is not a non-positive integer, for bottom parameters.
    pub fn bottom_parameter(&mut self) -> Rational {
        loop {
            let x = self.rational();
            if x.nonpositive_integer().is_none() {
                return x;
            }
        }
    }
}
