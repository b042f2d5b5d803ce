//! Solving for the middle term of an exact sequence `A -> B -> X -> C -> D`.
//!
//! ```bash
//! cargo run -p ghg --example extensions
//! ```

use ghg::exactseq::{middle_group, resolve_extension, DEFAULT_TORSION_BOUND};
use ghg::fgab::{FgAbGroup, Homomorphism};

fn main() {
    let g = |rank, f: &[u64]| FgAbGroup::from_u64(rank, f).unwrap();

    for (sub, quot) in [
        (g(0, &[3]), g(0, &[4])),
        (g(0, &[2]), g(0, &[2])),
        (g(0, &[2, 2]), g(0, &[2])),
        (g(1, &[]), g(0, &[2])),
        (g(0, &[2]), g(1, &[])),
    ] {
        let ext = resolve_extension(&sub, &quot, DEFAULT_TORSION_BOUND).unwrap();
        let names: Vec<String> = ext.candidates().iter().map(ToString::to_string).collect();
        println!("0 -> {sub} -> X -> {quot} -> 0:  X in {{{}}}", names.join(", "));
    }

    // Z --2--> Z -> X -> Z --0--> Z/3 gives 0 -> Z/2 -> X -> Z -> 0
    let z = FgAbGroup::free(1);
    let left = Homomorphism::from_rows(z.clone(), z.clone(), &[[2]]).unwrap();
    let right = Homomorphism::zero(z, FgAbGroup::cyclic(3));
    let r = middle_group(&left, &right).unwrap();
    println!("coker {} , ker {} => X = {}", r.sub, r.quot, r.resolved().unwrap());
}
