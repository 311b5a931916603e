//! Validity of linear quadrangles, decided by the four corner Jacobians.

use hexvalid::geometry::quad_corner_jacobians;
use hexvalid::{check_quad, CheckConfig, QuadNodes};

fn main() {
    let quads = [
        ("square", [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]),
        ("trapezoid", [[0.0, 0.0], [2.0, 0.0], [1.5, 1.0], [0.5, 1.0]]),
        ("chevron", [[0.0, 0.0], [1.0, 0.0], [0.2, 0.2], [0.0, 1.0]]),
        ("bow tie", [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]),
    ];
    let cfg = CheckConfig::default();
    for (name, c) in quads {
        let q = QuadNodes::from_coords(c).unwrap();
        let j = quad_corner_jacobians(&q);
        let v = check_quad(&q, &cfg);
        println!(
            "{name:<10} {:<8} J = {j:?}, J1 + J3 - J2 - J4 = {:.1e}",
            v.status.as_str(),
            j[0] + j[2] - j[1] - j[3]
        );
    }
}
