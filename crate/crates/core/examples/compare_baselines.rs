//! False-valid and false-invalid counts of the corner screens against the
//! robust checker on a random dataset.

use hexvalid::cli::{compare_elements, CompareOptions};
use hexvalid::dataset::jittered_cube;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let hexes: Vec<_> = (0..50_000).map(|_| jittered_cube(&mut rng, 0.45)).collect();
    for quality_min in [0.0, 0.2, 0.5] {
        let opts = CompareOptions {
            quality_min,
            ..Default::default()
        };
        let r = compare_elements(&hexes, &opts).unwrap();
        println!(
            "{} elements, {} invalid, {} undetermined, scaled-Jacobian threshold {quality_min}",
            r.elements, r.invalid, r.undetermined
        );
        for m in &r.methods {
            println!(
                "  {:<16} false valid {:>5}  false invalid {:>5}  {:.4} s",
                m.method, m.false_valid, m.false_invalid, m.time_s
            );
        }
    }
}
