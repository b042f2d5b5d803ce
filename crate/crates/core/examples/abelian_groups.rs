//! Canonical forms of finitely generated abelian groups.
//!
//! ```bash
//! cargo run -p ghg --example abelian_groups
//! ```

use ghg::fgab::{direct_sum, enumerate_elements, tensor_q, FgAbGroup, IntMatrix, Presentation};

fn main() {
    // <x, y | 2x, 3y> is cyclic of order 6
    let p = Presentation::new(2, IntMatrix::diagonal(&[2, 3])).unwrap();
    let z6 = p.canonicalize();
    println!("<x, y | 2x, 3y> = {z6}");

    // a free generator survives, a relation between two generators merges them
    let p = Presentation::new(3, IntMatrix::from_rows(3, &[[4, 2, 0], [0, 6, 0]]).unwrap()).unwrap();
    let g = p.canonicalize();
    println!("<a, b, c | 4a + 2b, 6b> = {g}, rank {}, torsion order {}", g.rank(), g.torsion_order());

    let sum = direct_sum(&z6, &FgAbGroup::from_u64(1, &[4]).unwrap());
    println!("{z6} + (Z + Z/4) = {sum}, rational rank {}", tensor_q(&sum));

    let x = z6.element_i64(&[5]).unwrap();
    println!("{x} has order {}", x.order().unwrap());
    println!("elements of {z6}: {}", enumerate_elements(&z6, 100).unwrap().len());
}
