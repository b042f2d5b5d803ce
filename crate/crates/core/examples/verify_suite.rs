//! The seeded invariant suite, run directly from the library.
//!
//! ```bash
//! cargo run -p ghg --release --example verify_suite -- 42
//! ```

use ghg::catalog::Catalog;
use ghg::verify::{run_suite, DEFAULT_SEED};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    let report = run_suite(&Catalog::builtin(), seed);
    println!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 3 });
}
