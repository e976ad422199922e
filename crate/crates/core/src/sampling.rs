//! Seeded sampling of generic parameter sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{admissible, FamilyId, Param, ParameterSet};
use crate::scalar::{ratio, Scalar};

/// Retry budget before a draw is reported as inadmissible.
pub const MAX_RETRIES: usize = 256;

pub const Q_CHOICES: [(i64, i64); 3] = [(2, 5), (3, 5), (5, 3)];

pub struct SampleRng(ChaCha8Rng);

impl SampleRng {
    pub fn seeded(seed: u64) -> Self {
        SampleRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// A rational `p/d` with `2 ≤ d ≤ 13`, in `(0, 1) ∪ (1, 2)`, in lowest terms.
    pub fn small_rational(&mut self) -> Scalar {
        loop {
            let d: i64 = self.0.gen_range(2..=13);
            let p: i64 = self.0.gen_range(1..2 * d);
            if p != d && num_integer::gcd(p, d) == 1 {
                return ratio(p, d);
            }
        }
    }

    pub fn q(&mut self) -> Scalar {
        let (p, d) = Q_CHOICES[self.0.gen_range(0..Q_CHOICES.len())];
        ratio(p, d)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }
}

/// One unchecked draw for `family`.
pub fn sample_params(family: FamilyId, n: u32, rng: &mut SampleRng) -> ParameterSet {
    let mut p = ParameterSet::new(family, n);
    for &name in family.params() {
        let v = if name == Param::Q { rng.q() } else { rng.small_rational() };
        p.set(name, v);
    }
    p
}

/// Draws until `accept` succeeds, up to [`MAX_RETRIES`] attempts.
pub fn sample_where(
    family: FamilyId,
    n: u32,
    rng: &mut SampleRng,
    accept: &dyn Fn(&ParameterSet) -> Result<()>,
) -> Result<ParameterSet> {
    let mut last = None;
    for _ in 0..MAX_RETRIES {
        let p = sample_params(family, n, rng);
        match accept(&p) {
            Ok(()) => return Ok(p),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::SingularParameters(family.code().into())))
}

/// Draws an admissible parameter set for `family`.
pub fn sample_admissible(family: FamilyId, n: u32, rng: &mut SampleRng) -> Result<ParameterSet> {
    sample_where(family, n, rng, &admissible)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = sample_params(FamilyId::QRacah, 3, &mut SampleRng::seeded(9));
        let b = sample_params(FamilyId::QRacah, 3, &mut SampleRng::seeded(9));
        assert_eq!(a, b);
    }

    #[test]
    fn values_in_range() {
        let mut rng = SampleRng::seeded(1);
        for _ in 0..200 {
            let v = rng.small_rational();
            assert!(v > Scalar::from_integer(0.into()) && v < ratio(2, 1) && v != ratio(1, 1));
        }
    }
}
