//! Two-sided bounds on the minimum of the Jacobian determinant, refined
//! best-first until the gap is small.

use hexvalid::baselines::dense_grid_min;
use hexvalid::counterexamples::{invalid_good_corner_quality, valid_rejected_by_tet_tests};
use hexvalid::{CheckConfig, MinJacobianSearch};

fn main() {
    let cfg = CheckConfig {
        bound_tol: 1e-6,
        ..CheckConfig::default()
    };
    for (name, h) in [
        ("valid, rejected by tetrahedra", valid_rejected_by_tet_tests()),
        ("invalid, good corner quality", invalid_good_corner_quality()),
    ] {
        let mut search = MinJacobianSearch::new(&h, &cfg);
        println!("{name}");
        while !search.converged() {
            let (lower, upper) = search.bounds();
            if search.steps().is_power_of_two() {
                println!("  step {:>6}: [{lower:.6e}, {upper:.6e}]", search.steps());
            }
            if !search.step() {
                break;
            }
        }
        let (lower, upper) = search.bounds();
        let (grid, _) = dense_grid_min(&h, 100).unwrap();
        println!("  final after {} steps: [{lower:.6e}, {upper:.6e}]", search.steps());
        println!("  dense grid minimum: {grid:.6e}");
    }
}
