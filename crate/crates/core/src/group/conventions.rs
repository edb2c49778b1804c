//! Choices that are only fixed up to isomorphism: subgroup-class
//! representatives, coset transversals, double-coset representatives, orbit
//! base points. The canonical conventions take the least candidate; seeded
//! conventions pick pseudo-randomly so that tests can check that invariant
//! outputs do not depend on the choices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Conventions {
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Choice {
    ClassRep = 1,
    Transporter = 2,
    Transversal = 3,
    DoubleCoset = 4,
    BasePoint = 5,
    OrbitOrder = 6,
}

impl Conventions {
    pub const CANONICAL: Conventions = Conventions { seed: None };

    pub fn seeded(seed: u64) -> Self {
        Conventions { seed: Some(seed) }
    }

    pub fn is_canonical(&self) -> bool {
        self.seed.is_none()
    }

    fn rng(seed: u64, what: Choice, key: u64) -> ChaCha8Rng {
        let mixed = seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .rotate_left(17)
            ^ ((what as u64) << 56)
            ^ key.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        ChaCha8Rng::seed_from_u64(mixed)
    }

    /// Index into `n` candidates (ordered least first).
    pub(crate) fn pick(&self, what: Choice, key: u64, n: usize) -> usize {
        assert!(n > 0);
        match self.seed {
            None => 0,
            Some(s) => Self::rng(s, what, key).gen_range(0..n),
        }
    }

    pub(crate) fn shuffle<T>(&self, what: Choice, key: u64, items: &mut [T]) {
        if let Some(s) = self.seed {
            items.shuffle(&mut Self::rng(s, what, key));
        }
    }
}
