//! `pi_2` of the gauge groups of the principal `SU2`-bundles over `S^4`.
//!
//! The bundle with second Chern class `k` has `pi_2(Gau P_k) = Z/gcd(k, 12)`;
//! `k = 1` is the quaternionic Hopf bundle, whose gauge group has vanishing
//! `pi_2`.
//!
//! ```bash
//! cargo run -p ghg --example su2_over_s4
//! ```

use ghg::catalog::Catalog;
use ghg::gaugecalc::{gauge_homotopy, su2_s4_pi2, Base, BundleSpec};
use num_bigint::BigInt;

fn main() {
    let catalog = Catalog::builtin();
    for k in -12..=24 {
        println!("k = {k:>3}: pi_2 = {}", su2_s4_pi2(&catalog, k).unwrap());
    }

    // The same computation with the intermediate groups visible.
    let su2 = catalog.entry("SU2").unwrap();
    let bundle = BundleSpec::from_coords(su2, Base::Sphere(4), &[BigInt::from(8)]).unwrap();
    let r = gauge_homotopy(su2, &bundle, 2).unwrap();
    println!("k = 8: coker d_3 = {}, ker d_2 = {}, pi_2 = {}", r.sub, r.quot, r.resolved().unwrap());
}
