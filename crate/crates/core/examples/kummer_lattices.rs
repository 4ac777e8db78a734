//! The lattices attached to a Kummer-type frame and their indices.

use hklat::kummer::lattices::{index_in, line_bundle_lattice};
use hklat::kummer::{geometric_lattice, kum_lattice, kummer_frame, lambda_a, named_example_vectors};

fn main() -> hklat::Result<()> {
    let k = kummer_frame(4)?;
    let lx = kum_lattice(&k);
    let lg = geometric_lattice(&k);
    println!("Λ_X: rank {} det {}", lx.rank(), lx.det());
    println!("Λ_A: rank {} det {}", lambda_a(&k).rank(), lambda_a(&k).det());
    println!("[Λ_g : Λ_X] = {}", index_in(&lg, &lx).expect("sublattice"));
    println!("Λ_LB: rank {}, inside Λ_g: {}", line_bundle_lattice(&k).rank(), lg.contains_lattice(&line_bundle_lattice(&k)));

    for (name, v) in named_example_vectors(&k) {
        println!("{name:>16}: square {}  {}", v.square(), v.vector);
    }
    Ok(())
}
