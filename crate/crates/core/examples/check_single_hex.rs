//! Check one hexahedron given on the command line as 24 numbers, or a
//! sheared cube when no arguments are given.

use hexvalid::{check_hex, CheckConfig, HexNodes};

fn main() {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("coordinates must be numbers"))
        .collect();
    let coords: [[f64; 3]; 8] = if args.is_empty() {
        [
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.3, 0.0, 1.0],
            [1.3, 0.0, 1.0],
            [1.3, 1.0, 1.0],
            [0.3, 1.0, 1.0],
        ]
    } else {
        assert_eq!(args.len(), 24, "expected 8 nodes of 3 coordinates");
        std::array::from_fn(|k| [args[3 * k], args[3 * k + 1], args[3 * k + 2]])
    };
    let h = HexNodes::from_coords(coords).expect("finite coordinates");
    let v = check_hex(&h, &CheckConfig::default());
    println!("status        {}", v.status);
    match (v.witness, v.lower_bound) {
        (Some(w), _) => println!("witness       det J = {:.6e} at {:?}", w.value, w.point.to_array()),
        (None, Some(lb)) => println!("lower bound   {lb:.6e}"),
        _ => {}
    }
    println!("subdivisions  {}", v.subdivisions);
    println!("depth         {}", v.depth);
}
