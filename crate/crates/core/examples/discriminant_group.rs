//! Discriminant group and quadratic form of the Kummer-type lattice.

use hklat::disc::discriminant_group;
use hklat::kummer::{kum_lattice, kummer_frame};

fn main() -> hklat::Result<()> {
    for n in [3, 4, 5] {
        let k = kummer_frame(n)?;
        let d = discriminant_group(&kum_lattice(&k))?;
        let factors: Vec<String> = d.invariant_factors().iter().map(|x| x.to_string()).collect();
        println!(
            "n = {n}: D = Z/{}  cyclic {}  q(gen) = {} mod 2",
            factors.join(" x Z/"),
            d.is_cyclic(),
            d.qvalues()[0]
        );
    }
    Ok(())
}
