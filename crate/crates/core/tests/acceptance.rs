//! Runs every verification check and prints one line per check.

use salient::verify::checks;
use salient::Limits;

fn main() {
    // let the libtest-style filter argument pick checks by name or number
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let limits = Limits::default();
    let mut failed = 0;
    let mut ran = 0;
    for check in checks() {
        if let Some(f) = &filter {
            if check.name != f && check.id.to_string() != *f {
                continue;
            }
        }
        let report = check.run(&limits);
        println!("{report}");
        ran += 1;
        if !report.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
