//! Write a hexlist file, then check it in parallel and print the report.

use hexvalid::cli::{cmd_check, default_jobs, write_hexlist, CheckOptions, Format};
use hexvalid::dataset::{synthetic, Mix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join("hexvalid_example.hexlist");
    let hexes = synthetic(8, Mix::Mixed, 3);
    let ids: Vec<String> = (0..hexes.len()).map(|i| format!("elem{i}")).collect();
    let mut file = std::fs::File::create(&path)?;
    write_hexlist(&mut file, ids.iter().map(String::as_str).zip(&hexes))?;
    drop(file);

    let mut out = std::io::stdout().lock();
    for format in [Format::Table, Format::Jsonl] {
        let opts = CheckOptions {
            jobs: default_jobs(),
            format,
            ..Default::default()
        };
        let run = cmd_check(&path, &opts, &mut out)?;
        println!("exit code {}\n", run.exit_code());
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
