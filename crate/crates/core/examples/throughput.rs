//! Single-threaded and parallel throughput on synthetic datasets.
//! Build with `--release` for meaningful numbers.

use hexvalid::cli::{cmd_bench, default_jobs, BenchOptions};
use hexvalid::dataset::Mix;

fn main() {
    let count = std::env::args().nth(1).map_or(1_000_000, |a| a.parse().expect("count"));
    let mut out = std::io::stdout().lock();
    for mix in [Mix::Valid, Mix::Invalid, Mix::Mixed] {
        let opts = BenchOptions {
            count,
            mix,
            jobs: default_jobs(),
            ..Default::default()
        };
        cmd_bench(&opts, &mut out).unwrap();
        println!();
    }
}
