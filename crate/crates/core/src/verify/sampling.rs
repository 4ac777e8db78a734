//! Random inputs for the checks: lattice vectors, rationals, and integral isometries.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::eichler::EuSplit;
use crate::frame::{FrameExt, LatVec};
use crate::intmat::gcd_all;
use crate::isometry::{reflection, Isometry};
use crate::kummer::frames::{bfield, AbelianFrame, KummerFrame};
use crate::kummer::lattices::kum_lattice;
use crate::lattice::QuadLattice;
use crate::rational::{frac, from_bigint, int, Rational};

pub fn small<R: Rng>(rng: &mut R, height: i64) -> i64 {
    rng.gen_range(-height..=height)
}

pub fn combination<R: Rng>(rng: &mut R, basis: &[LatVec], height: i64) -> LatVec {
    let zero = basis[0].frame().zero_vector();
    basis
        .iter()
        .fold(zero, |acc, b| &acc + &b.scale(&int(small(rng, height))))
}

pub fn nonzero_combination<R: Rng>(rng: &mut R, basis: &[LatVec], height: i64) -> LatVec {
    loop {
        let v = combination(rng, basis, height);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random `λ ∈ H²(X,Z)`.
pub fn h2_x<R: Rng>(rng: &mut R, k: &KummerFrame, height: i64) -> LatVec {
    combination(rng, &k.h2_basis(), height)
}

/// Random `λ ∈ θ(H²(A,Z))`.
pub fn theta_h2_a<R: Rng>(rng: &mut R, k: &KummerFrame, height: i64) -> LatVec {
    combination(rng, &k.e_block(), height)
}

/// Random nonzero `p/q` with `|p|, q ≤ height`.
pub fn rational<R: Rng>(rng: &mut R, height: i64) -> Rational {
    loop {
        let p = small(rng, height);
        if p != 0 {
            return frac(p, rng.gen_range(1..=height.max(1)));
        }
    }
}

/// Random primitive vector of `l`.
pub fn primitive<R: Rng>(rng: &mut R, l: &QuadLattice, height: i64) -> LatVec {
    let basis = l.basis_vectors();
    loop {
        let coeffs: Vec<BigInt> = (0..basis.len()).map(|_| BigInt::from(small(rng, height))).collect();
        let g = gcd_all(&coeffs);
        if g.is_zero() {
            continue;
        }
        let zero = l.frame().zero_vector();
        return basis.iter().zip(&coeffs).fold(zero, |acc, (b, c)| {
            &acc + &b.scale(&from_bigint(c / &g))
        });
    }
}

/// `Λ_X = U ⊕ Λ_X'` with `U = ⟨α̃, −β⟩`.
pub fn kum_split(k: &KummerFrame) -> EuSplit {
    EuSplit::new(&kum_lattice(k), k.alpha_tilde(), -k.beta(), &k.lambda_x_prime_basis())
        .expect("Λ_X splits as U ⊕ Λ_X'")
}

/// Random isometry of `H̃(A,Z)`: a word in integral B-fields and reflections in `±2`-vectors.
pub fn abelian_isometry<R: Rng>(rng: &mut R, a: &AbelianFrame, max_len: usize, height: i64) -> Isometry {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut g = Isometry::identity(a.frame());
    for _ in 0..len {
        let step = match rng.gen_range(0..3) {
            0 => bfield(&nonzero_combination(rng, &a.e_block(), height)).expect("H² class"),
            1 => {
                // e_{2i-1} ± e_{2i} has square ±2.
                let i = rng.gen_range(0..3);
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let root = &a.e(2 * i + 1) + &a.e(2 * i + 2).scale(&int(sign));
                reflection(&root).expect("anisotropic")
            }
            _ => {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                reflection(&(&a.alpha() + &a.beta().scale(&int(sign)))).expect("anisotropic")
            }
        };
        g = g.compose(&step).expect("same frame");
    }
    g
}

/// `λ` with its `β`-coordinate removed, i.e. the `H²` part of `λ ∈ Λ_X'`.
pub fn h2_part(k: &KummerFrame, lambda: &LatVec) -> LatVec {
    lambda - &k.beta().scale(lambda.coord(crate::kummer::frames::BETA))
}

