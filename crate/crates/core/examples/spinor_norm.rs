//! Factor an isometry into reflections and read off its spinor norms.

use hklat::classify::classify;
use hklat::isometry::reflection;
use hklat::kummer::{kum_lattice, kummer_frame};
use hklat::spinor::{reflection_factorization, spinor_norm_rational, spinor_norm_real};

fn main() -> hklat::Result<()> {
    let k = kummer_frame(3)?;
    let lx = kum_lattice(&k);
    // s_{e1+e2} has square 2, s_{δ̃'} has square -6.
    let g = reflection(&(&k.e(1) + &k.e(2)))?.compose(&reflection(&k.delta_tilde())?)?;
    let factors = reflection_factorization(&g);
    println!("{} reflections", factors.len());
    for v in &factors {
        println!("  v^2 = {}", v.square());
    }
    println!("sn_R = {}  sn_Q = {} mod squares", spinor_norm_real(&g), spinor_norm_rational(&g));

    let m = classify(&g, &lx)?;
    println!("{m:?}");
    assert_eq!(spinor_norm_rational(&g), (-3).into());
    Ok(())
}
