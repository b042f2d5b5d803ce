//! Smith normal form of an integer matrix, with the unimodular transforms.
//!
//! ```bash
//! cargo run -p ghg --example smith_normal_form
//! ```

use ghg::fgab::{snf, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(3, &[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).unwrap();
    let s = snf(&a);

    println!("A = {a:?}");
    println!("D = {:?}", s.d);
    println!("invariant factors: {:?}", s.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("rank {}", s.rank());

    assert_eq!(&(&s.u * &a) * &s.v, s.d);
    assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(3));
    println!("U * A * V == D and V * V^-1 == I");
}
