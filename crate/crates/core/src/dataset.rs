//! Seeded synthetic hexahedra for tests and benchmarks.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{HexNodes, Point3, CORNER_REF};

/// Unit cube with every node moved by an independent uniform offset in
/// `[-amplitude, amplitude]^3`.
pub fn jittered_cube<R: Rng + ?Sized>(rng: &mut R, amplitude: f64) -> HexNodes {
    let nodes = CORNER_REF.map(|[x, y, z]| {
        let mut j = || {
            if amplitude > 0.0 {
                rng.gen_range(-amplitude..=amplitude)
            } else {
                0.0
            }
        };
        Point3::new(x + j(), y + j(), z + j())
    });
    HexNodes::new(nodes).expect("jitter keeps coordinates finite")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mix {
    /// Mildly distorted cubes; essentially all valid.
    Valid,
    /// Heavily distorted cubes; almost all invalid.
    Invalid,
    /// Alternating valid and invalid draws.
    Mixed,
}

impl FromStr for Mix {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "valid" => Ok(Mix::Valid),
            "invalid" => Ok(Mix::Invalid),
            "mixed" => Ok(Mix::Mixed),
            other => Err(format!("unknown mix '{other}' (expected valid|invalid|mixed)")),
        }
    }
}

pub const VALID_JITTER: f64 = 0.15;
pub const INVALID_JITTER: f64 = 1.0;

/// Deterministic dataset of `count` hexahedra for a given seed.
pub fn synthetic(count: usize, mix: Mix, seed: u64) -> Vec<HexNodes> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let amp = match mix {
                Mix::Valid => VALID_JITTER,
                Mix::Invalid => INVALID_JITTER,
                Mix::Mixed if i % 2 == 0 => VALID_JITTER,
                Mix::Mixed => INVALID_JITTER,
            };
            jittered_cube(&mut rng, amp)
        })
        .collect()
}
