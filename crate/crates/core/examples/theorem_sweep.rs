//! Re-check every statement on all structures up to a size given on the
//! command line (default 6).

use paraortho::search::{run_harness, summary, HarnessSpec, THEOREMS};

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let spec = HarnessSpec::new(max_n);
    let results = run_harness(&spec, THEOREMS).expect("known theorems");
    print!("{}", summary(&results));
    let bad = results.iter().filter(|r| !r.passed()).count();
    println!("{} of {} theorems clean", results.len() - bad, results.len());
}
