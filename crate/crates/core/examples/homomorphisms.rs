//! Kernel, image and cokernel of homomorphisms.
//!
//! ```bash
//! cargo run -p ghg --example homomorphisms
//! ```

use ghg::fgab::{hom_decompose, FgAbGroup, Homomorphism};

fn show(label: &str, f: &Homomorphism) {
    let d = hom_decompose(f).unwrap();
    println!("{label}: ker {}, im {}, coker {}", d.kernel, d.image, d.cokernel);
}

fn main() {
    let z = FgAbGroup::free(1);
    let z12 = FgAbGroup::cyclic(12);

    show("Z -> Z/12, 1 -> 5", &Homomorphism::from_rows(z.clone(), z12.clone(), &[[5]]).unwrap());
    show("Z -> Z/12, 1 -> 8", &Homomorphism::from_rows(z.clone(), z12.clone(), &[[8]]).unwrap());
    show("Z -> Z, doubling", &Homomorphism::from_rows(z.clone(), z, &[[2]]).unwrap());

    let z4 = FgAbGroup::cyclic(4);
    let z8 = FgAbGroup::cyclic(8);
    show("Z/4 -> Z/8, 1 -> 2", &Homomorphism::from_rows(z4.clone(), z8.clone(), &[[2]]).unwrap());

    // 1 -> 1 is not well defined from Z/4 to Z/8
    match Homomorphism::from_rows(z4, z8, &[[1]]) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
