use rand::Rng;

use crate::bezier::BezierCoeffs27;
pub use crate::counterexamples::*;
pub use crate::dataset::jittered_cube;

pub fn random_coeffs<R: Rng>(rng: &mut R) -> BezierCoeffs27 {
    let mut b = [0.0; 27];
    b.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
    BezierCoeffs27::new(b)
}
