//! Gauge groups over closed orientable surfaces.
//!
//! Uses the synthetic `TEST` entry, whose `pi_1 = Z` and catalogued Samelson
//! products give nonzero connecting maps. Ambiguous extensions are listed.
//!
//! ```bash
//! cargo run -p ghg --example surfaces
//! ```

use ghg::catalog::Catalog;
use ghg::cli::describe;
use ghg::gaugecalc::{connecting_hom_surface, gauge_homotopy, rational_dimension, Base, BundleSpec};
use num_bigint::BigInt;

fn main() {
    let catalog = Catalog::builtin();
    let entry = catalog.entry("TEST").unwrap();

    let b = entry.lookup_pi(1).unwrap().generator(0);
    let d = connecting_hom_surface(entry, 1, &b, 1).unwrap();
    println!("d_1 over the torus: {} -> {}, matrix {:?}", d.domain(), d.codomain(), d.matrix());

    for genus in 0..=2 {
        for k in [0, 1, 2] {
            let bundle = BundleSpec::from_coords(entry, Base::Surface(genus), &[BigInt::from(k)]).unwrap();
            for n in 1..=2 {
                let r = gauge_homotopy(entry, &bundle, n).unwrap();
                let q = rational_dimension(entry, Base::Surface(genus), n).unwrap();
                println!("genus {genus}, class {k}, pi_{n} = {}   (rank {q})", describe(&r));
            }
        }
    }
}
