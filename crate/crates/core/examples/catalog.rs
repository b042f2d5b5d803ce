//! Inspecting the homotopy catalog and evaluating Samelson products.
//!
//! Pass a path to load a custom catalog instead of the built-in one.
//!
//! ```bash
//! cargo run -p ghg --example catalog
//! cargo run -p ghg --example catalog -- path/to/catalog.json
//! ```

use std::path::PathBuf;

use ghg::catalog::{samelson_apply, Catalog};

fn main() {
    let path = std::env::args_os().nth(1).map(PathBuf::from);
    let catalog = Catalog::resolve(path.as_deref()).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });

    for entry in catalog.entries() {
        println!("{} (exponents {:?}, depth {})", entry.name(), entry.rational_exponents(), entry.depth());
        for n in 0..=entry.depth().min(8) {
            let pi = entry.lookup_pi(n).unwrap();
            println!("  pi_{n:<2} = {:<12} {}", pi.to_string(), entry.pi_entry(n).unwrap().source);
        }
    }

    let su2 = catalog.entry("SU2").unwrap();
    let pairing = su2.lookup_samelson(3, 3).unwrap().unwrap();
    let a = pairing.left().element_i64(&[2]).unwrap();
    let b = pairing.right().element_i64(&[3]).unwrap();
    println!("SU2: <2, 3> = {} in pi_6", samelson_apply(&pairing, &a, &b).unwrap());

    match su2.lookup_pi(40) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
}
