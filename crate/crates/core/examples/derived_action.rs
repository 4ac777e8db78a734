//! Push an isometry of the abelian surface lattice through d_n.

use hklat::classify::classify;
use hklat::kummer::{abelian_frame, d_n, kum_lattice, kummer_frame};
use hklat::verify::sampling::abelian_isometry;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hklat::Result<()> {
    let a = abelian_frame();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [3, 4] {
        let k = kummer_frame(n)?;
        let lx = kum_lattice(&k);
        for _ in 0..3 {
            let g = abelian_isometry(&mut rng, &a, 4, 2);
            let h = d_n(&k, &g)?;
            let m = classify(&h, &lx)?;
            println!(
                "n = {n}: det g = {:>2}  preserves Λ_X {}  det d_n(g) = {:>2}  action on D: {:?}",
                g.det(),
                m.preserves_lattice,
                m.det,
                m.disc_action.expect("preserves Λ_X")
            );
        }
    }
    Ok(())
}
