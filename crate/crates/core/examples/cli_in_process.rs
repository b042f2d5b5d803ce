//! Driving the command-line interface in process, capturing its output.
//!
//! ```bash
//! cargo run -p ghg --example cli_in_process
//! ```

use ghg::cli::run_with_io;

fn main() {
    for args in [
        "compute --group SU2 --base sphere:4 --class 6 --degree 2",
        "compute --group SU2 --base sphere:4 --class 6 --degree 2 --format json",
        "rational --group SU2 --base surface:2 --degree 2",
        "compute --group SU3 --base sphere:4 --class 1 --degree 2",
        "compute --group SU2 --base sphere:4 --class 1 --degree 0",
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ghg").chain(args.split_whitespace());
        let code = run_with_io(argv, &mut out, &mut err);
        println!("$ ghg {args}");
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("[exit {code}]");
    }
}
