//! The lattices `H̃(X,Z)`, `Λ_X`, `Λ_A`, `Λ_{g,X}`, `Λ_{LB,X}` and the candidates
//! `kΛ_A ⊕ Zδ̃'` inside `H̃(X,Q)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::frame::LatVec;
use crate::lattice::{span_sublattice, QuadLattice};
use crate::rational::{frac, int};

use super::frames::KummerFrame;
use super::mukai::ext_mukai_vector;

/// `H̃(X,Z) = Zα ⊕ H²(X,Z) ⊕ Zβ`.
pub fn mukai_lattice(k: &KummerFrame) -> QuadLattice {
    QuadLattice::standard(k.frame())
}

/// Basis `α̃, e_1..e_6, β` of `Λ_A`.
pub fn lambda_a_basis(k: &KummerFrame) -> Vec<LatVec> {
    let mut b = vec![k.alpha_tilde()];
    b.extend(k.e_block());
    b.push(k.beta());
    b
}

/// `Λ_X` with basis `α̃, e_1..e_6, δ̃', β`.
pub fn kum_lattice(k: &KummerFrame) -> QuadLattice {
    let mut b = vec![k.alpha_tilde()];
    b.extend(k.e_block());
    b.push(k.delta_tilde());
    b.push(k.beta());
    QuadLattice::from_basis(k.frame(), &b).expect("independent basis")
}

pub fn lambda_a(k: &KummerFrame) -> QuadLattice {
    QuadLattice::from_basis(k.frame(), &lambda_a_basis(k)).expect("independent basis")
}

/// `Λ_X' = θ(H²(A,Z)) ⊕ Zδ̃'`.
pub fn lambda_x_prime(k: &KummerFrame) -> QuadLattice {
    QuadLattice::from_basis(k.frame(), &k.lambda_x_prime_basis()).expect("independent basis")
}

/// `Λ_{g,X} = Λ_A ⊕ Z(δ̃'/2)`, basis `α̃, e_1..e_6, δ̃'/2, β`.
pub fn geometric_lattice(k: &KummerFrame) -> QuadLattice {
    let mut b = vec![k.alpha_tilde()];
    b.extend(k.e_block());
    b.push(k.delta_tilde().scale(&frac(1, 2)));
    b.push(k.beta());
    QuadLattice::from_basis(k.frame(), &b).expect("independent basis")
}

/// `ṽ(0)`, `ṽ(λ_i)`, `ṽ(λ_i + λ_j)` for `i < j` and `ṽ(2λ_i)` over the basis `λ_i` of
/// `H²(X,Z)`. Since `ṽ` is quadratic in `λ`, these span everything `ṽ` reaches.
pub fn line_bundle_generators(k: &KummerFrame) -> Vec<LatVec> {
    let h2 = k.h2_basis();
    let v = |l: &LatVec| ext_mukai_vector(k, l);
    let mut out = vec![v(&k.zero())];
    for (i, li) in h2.iter().enumerate() {
        out.push(v(li));
        out.push(v(&li.scale(&int(2))));
        for lj in &h2[i + 1..] {
            out.push(v(&(li + lj)));
        }
    }
    out
}

/// `Λ_{LB,X}`, the span of the extended Mukai vectors of topological line bundles.
pub fn line_bundle_lattice(k: &KummerFrame) -> QuadLattice {
    span_sublattice(k.frame(), &line_bundle_generators(k)).expect("nonempty")
}

/// Largest `l` with `l² | n`.
pub fn largest_square_divisor(n: u64) -> u64 {
    assert!(n >= 1, "n must be positive");
    num_prime::nt_funcs::factorize64(n)
        .into_iter()
        .map(|(p, e)| p.pow((e / 2) as u32))
        .product()
}

/// `kΛ_A ⊕ Zδ̃'` for `k | 2n`.
pub fn invariant_candidate(k_frame: &KummerFrame, k: i64) -> Result<QuadLattice> {
    let n = k_frame.n();
    if k <= 0 || (2 * n) % k != 0 {
        return Err(Error::InvalidParam(format!("k = {k} does not divide 2n = {}", 2 * n)));
    }
    let mut b: Vec<LatVec> = lambda_a_basis(k_frame).iter().map(|v| v.scale(&int(k))).collect();
    b.push(k_frame.delta_tilde());
    QuadLattice::from_basis(k_frame.frame(), &b)
}

/// `[big : small]`, when `small ⊆ big` have the same rank.
pub fn index_in(big: &QuadLattice, small: &QuadLattice) -> Option<BigInt> {
    big.index_of(small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::Isometry;
    use crate::kummer::frames::{bfield, kummer_frame};

    #[test]
    fn kum_lattice_is_bfield_image() {
        for n in [3, 4, 12] {
            let k = kummer_frame(n).unwrap();
            let b = bfield(&k.delta().scale(&frac(-1, 2))).unwrap();
            let images: Vec<LatVec> = mukai_lattice(&k)
                .basis_vectors()
                .iter()
                .map(|v| b.apply(v).unwrap())
                .collect();
            let image = span_sublattice(k.frame(), &images).unwrap();
            let lx = kum_lattice(&k);
            assert!(image.same_as(&lx));
            assert!(lx.is_even());
            assert_eq!(lx.det(), &int(-2 * n));
        }
    }

    #[test]
    fn geometric_index_two_and_gram_shape() {
        let k = kummer_frame(5).unwrap();
        let g = geometric_lattice(&k);
        assert_eq!(g.index_of(&kum_lattice(&k)), Some(BigInt::from(2)));
        let gram = g.gram();
        for i in 0..9 {
            for j in 0..9 {
                let integral = gram[(i, j)].is_integer();
                assert_eq!(integral, !(i == 7 && j == 7), "entry ({i},{j})");
            }
        }
        assert_eq!(gram[(7, 7)], frac(-5, 2));
    }

    #[test]
    fn line_bundle_lattice_has_full_rank() {
        let k = kummer_frame(4).unwrap();
        let lb = line_bundle_lattice(&k);
        assert_eq!(lb.rank(), 9);
        assert!(geometric_lattice(&k).contains_lattice(&lb));
    }

    #[test]
    fn square_divisors() {
        assert_eq!(largest_square_divisor(900), 30);
        assert_eq!(largest_square_divisor(12), 2);
        assert_eq!(largest_square_divisor(30), 1);
        assert_eq!(largest_square_divisor(1), 1);
    }

    #[test]
    fn candidates() {
        let k = kummer_frame(900).unwrap();
        assert!(invariant_candidate(&k, 7).is_err());
        assert!(invariant_candidate(&k, 1).unwrap().same_as(&kum_lattice(&k)));
        let gamma = invariant_candidate(&k, 30).unwrap();
        let b = bfield(&k.delta().scale(&frac(5, 6))).unwrap();
        assert!(b.preserves(&gamma));
        assert!(!b.preserves(&kum_lattice(&k)));
        assert!(Isometry::identity(k.frame()).preserves(&gamma));
    }
}
