//! Rational homotopy of gauge groups from the exponents of `K`.
//!
//! ```bash
//! cargo run -p ghg --example rational
//! ```

use ghg::catalog::Catalog;
use ghg::gaugecalc::{rational_dimension, rational_dimension_via_sequence, Base};

fn main() {
    let catalog = Catalog::builtin();
    for name in ["SU2", "SU3", "U1"] {
        let entry = catalog.entry(name).unwrap();
        for base in [Base::Sphere(2), Base::Sphere(4), Base::Surface(0), Base::Surface(2)] {
            let dims: Vec<usize> = (1..=10).map(|n| rational_dimension(entry, base, n).unwrap()).collect();
            let check: Vec<usize> = (1..=10)
                .map(|n| rational_dimension_via_sequence(entry, base, n).unwrap())
                .collect();
            assert_eq!(dims, check);
            println!("{name:<4} over {base:<10} n = 1..10: {dims:?}");
        }
    }
}
