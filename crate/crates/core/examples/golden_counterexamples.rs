//! Three hexahedra on which cheap validity screens give the wrong answer,
//! next to the verdict of the robust checker.

use hexvalid::baselines::{corner_scaled_jacobian_min, corner_tet_test, dense_grid_min};
use hexvalid::counterexamples::{
    invalid_good_corner_quality, invalid_positive_at_27_nodes, valid_rejected_by_tet_tests,
};
use hexvalid::sampling::sample_27;
use hexvalid::{check_hex, CheckConfig};

fn main() {
    let cfg = CheckConfig::default();
    let cases = [
        ("positive at all 27 nodes", invalid_positive_at_27_nodes()),
        ("rejected by tetrahedra tests", valid_rejected_by_tet_tests()),
        ("good corner quality", invalid_good_corner_quality()),
    ];
    for (name, h) in cases {
        let verdict = check_hex(&h, &cfg);
        let node_min = sample_27(&h).into_iter().fold(f64::INFINITY, f64::min);
        let (grid_min, at) = dense_grid_min(&h, 100).expect("grid resolution is valid");
        println!("{name}");
        println!("  robust verdict          {}", verdict.status);
        println!(
            "  corner tetrahedra test  {}",
            if corner_tet_test(&h) { "pass" } else { "fail" }
        );
        println!(
            "  corner scaled Jacobian  {:.4}",
            corner_scaled_jacobian_min(&h).unwrap()
        );
        println!("  min over 27 nodes       {node_min:.4e}");
        println!("  dense grid minimum      {grid_min:.4e} at {:?}", at.to_array());
        if let Some(w) = verdict.witness {
            println!("  witness                 {:.4e} at {:?}", w.value, w.point.to_array());
        }
    }
}
