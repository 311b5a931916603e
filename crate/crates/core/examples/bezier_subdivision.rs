//! Bezier coefficients of the Jacobian determinant and how subdivision
//! tightens the bounds they give.

use hexvalid::bezier::{bezier_from_samples20, subdivide_octants};
use hexvalid::counterexamples::invalid_positive_at_27_nodes;
use hexvalid::{jacobian_det_at, sample_20, BezierCoeffs27, RefPoint};

fn main() {
    let h = invalid_positive_at_27_nodes();
    let samples = sample_20(&h);
    println!("min of the 20 tetrahedral samples  {:.4e}", samples.min());

    let b = bezier_from_samples20(&samples);
    let p = RefPoint::new(0.3, 0.6, 0.8).unwrap();
    println!(
        "Bezier value {:.12e}, direct value {:.12e}",
        b.eval(p),
        jacobian_det_at(&h, p)
    );

    // each level replaces every cell by its 8 octants
    let mut cells: Vec<BezierCoeffs27> = vec![b];
    for level in 0..=4 {
        let lower = cells.iter().map(|c| c.min()).fold(f64::INFINITY, f64::min);
        let upper = cells
            .iter()
            .flat_map(|c| c.corners().iter().copied())
            .fold(f64::INFINITY, f64::min);
        println!(
            "level {level}: {:>5} cells, minimum in [{lower:.4e}, {upper:.4e}]",
            cells.len()
        );
        cells = cells.iter().flat_map(subdivide_octants).collect();
    }
}
