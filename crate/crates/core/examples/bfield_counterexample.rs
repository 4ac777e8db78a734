//! At n = 900 the B-field B_{5δ'/6} preserves 30Λ_A ⊕ Zδ̃' but not Λ_X.

use hklat::kummer::lattices::{invariant_candidate, largest_square_divisor};
use hklat::kummer::{bfield, kum_lattice, kummer_frame};
use hklat::rational::frac;

fn main() -> hklat::Result<()> {
    let k = kummer_frame(900)?;
    let b = bfield(&k.delta().scale(&frac(5, 6)))?;
    let image = b.apply(&k.alpha_tilde())?;
    println!("B(α̃) = {image}");
    let l = largest_square_divisor(900) as i64;
    let gamma = invariant_candidate(&k, l)?;
    println!("largest square divisor: {l}");
    println!("preserves {l}Λ_A ⊕ Zδ̃': {}", b.preserves(&gamma));
    println!("preserves Λ_X: {}", b.preserves(&kum_lattice(&k)));
    Ok(())
}
