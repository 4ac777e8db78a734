//! Cartan–Dieudonné factorization over `Q` and spinor norms.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::frame::{pair, FrameExt, FrameRef, LatVec};
use crate::isometry::{reflection, Isometry};
use crate::rational::{from_bigint, lcm_of_denominators, Rational};

/// An orthogonal basis of anisotropic vectors, built from `seed` (which must span the frame).
pub fn orthogonal_basis(seed: &[LatVec]) -> Vec<LatVec> {
    let mut pool: Vec<LatVec> = seed.to_vec();
    let mut out = Vec::new();
    while !pool.is_empty() {
        let pick = match pool.iter().position(|w| !w.square().is_zero()) {
            Some(i) => pool.remove(i),
            None => {
                let mut found = None;
                'outer: for i in 0..pool.len() {
                    for j in i + 1..pool.len() {
                        if !pair(&pool[i], &pool[j]).expect("same frame").is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        let w = &pool[i] + &pool[j];
                        pool.remove(i);
                        w
                    }
                    // The remaining pool spans a totally isotropic radical; cannot happen in a
                    // nondegenerate frame when seed spans it.
                    None => panic!("degenerate frame in orthogonal_basis"),
                }
            }
        };
        let w = primitive_integral(&pick);
        let q = w.square();
        pool = pool
            .into_iter()
            .map(|s| {
                let c = pair(&s, &w).expect("same frame") / &q;
                primitive_integral(&(&s - &w.scale(&c)))
            })
            .filter(|s| !s.is_zero())
            .collect();
        out.push(w);
    }
    out
}

/// Positive rational multiple with coprime integer coordinates.
fn primitive_integral(v: &LatVec) -> LatVec {
    if v.is_zero() {
        return v.clone();
    }
    let d = lcm_of_denominators(v.coords());
    let ints: Vec<BigInt> = v
        .coords()
        .iter()
        .map(|x| (x * from_bigint(d.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    v.scale(&Rational::new(d, g))
}

/// Vectors `v_1..v_m` with `g = s_{v_1} ∘ ... ∘ s_{v_m}`, `m ≤ 2·dim`; empty for the identity.
pub fn reflection_factorization(g: &Isometry) -> Vec<LatVec> {
    let frame = g.frame();
    let seed: Vec<LatVec> = (0..frame.dim()).map(|i| frame.unit(i)).collect();
    reflection_factorization_from(g, &seed)
}

/// Same as [`reflection_factorization`] but orthogonalizing `seed` in the given order,
/// which yields a genuinely different factorization in general.
pub fn reflection_factorization_from(g: &Isometry, seed: &[LatVec]) -> Vec<LatVec> {
    let basis = orthogonal_basis(seed);
    let mut h = g.clone();
    // Invariant: h = s_{v_k} ∘ ... ∘ s_{v_1} ∘ g fixes basis[..i].
    let mut vs: Vec<LatVec> = Vec::new();
    for x in &basis {
        let y = h.apply(x).expect("same frame");
        if &y == x {
            continue;
        }
        let diff = &y - x;
        let steps = if !diff.square().is_zero() {
            vec![diff]
        } else {
            // y - x isotropic forces y + x anisotropic; s_{y+x} sends y to -x, then s_x.
            vec![&y + x, x.clone()]
        };
        for v in steps {
            let s = reflection(&v).expect("anisotropic by construction");
            h = s.compose(&h).expect("same frame");
            vs.push(v);
        }
    }
    debug_assert!(h.is_identity());
    vs
}

/// Recomposes `s_{v_1} ∘ ... ∘ s_{v_m}`.
pub fn product_of_reflections(frame: &FrameRef, vs: &[LatVec]) -> Isometry {
    vs.iter().fold(Isometry::identity(frame), |acc, v| {
        acc.compose(&reflection(v).expect("anisotropic")).expect("same frame")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinorField {
    Real,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinorNorm {
    /// Sign class in `R^×/(R^×)^2`.
    Real(i32),
    /// Squarefree representative in `Q^×/(Q^×)^2`.
    Rational(BigInt),
}

pub fn spinor_norm(g: &Isometry, field: SpinorField) -> SpinorNorm {
    let vs = reflection_factorization(g);
    spinor_norm_of_factors(&vs, field)
}

pub fn spinor_norm_of_factors(vs: &[LatVec], field: SpinorField) -> SpinorNorm {
    let factors = vs.iter().map(|v| -v.square() / Rational::from_integer(2.into()));
    match field {
        SpinorField::Real => {
            let negatives = factors.filter(|f| f.is_negative()).count();
            SpinorNorm::Real(if negatives % 2 == 0 { 1 } else { -1 })
        }
        SpinorField::Rational => {
            let mut acc = BigInt::one();
            for f in factors {
                acc = multiply_squarefree(&acc, &squarefree_rational(&f));
            }
            SpinorNorm::Rational(acc)
        }
    }
}

pub fn spinor_norm_real(g: &Isometry) -> i32 {
    match spinor_norm(g, SpinorField::Real) {
        SpinorNorm::Real(s) => s,
        SpinorNorm::Rational(_) => unreachable!(),
    }
}

pub fn spinor_norm_rational(g: &Isometry) -> BigInt {
    match spinor_norm(g, SpinorField::Rational) {
        SpinorNorm::Rational(s) => s,
        SpinorNorm::Real(_) => unreachable!(),
    }
}

/// Product of two squarefree classes, reduced back to squarefree.
pub fn multiply_squarefree(a: &BigInt, b: &BigInt) -> BigInt {
    let g = a.abs().gcd(&b.abs());
    (a / &g) * (b / &g)
}

/// Squarefree integer in the square class of a nonzero rational.
pub fn squarefree_rational(x: &Rational) -> BigInt {
    assert!(!x.is_zero(), "zero has no square class");
    let num = squarefree_part(&x.numer().magnitude().clone());
    let den = squarefree_part(&x.denom().magnitude().clone());
    let s = multiply_squarefree(&BigInt::from(num), &BigInt::from(den));
    if x.is_negative() {
        -s
    } else {
        s
    }
}

/// Product of the primes dividing `n` to an odd power.
pub fn squarefree_part(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    if let Some(small) = n.to_u64() {
        return num_prime::nt_funcs::factorize64(small)
            .into_iter()
            .filter(|(_, e)| e % 2 == 1)
            .fold(BigUint::one(), |acc, (p, _)| acc * p);
    }
    num_prime::nt_funcs::factorize(n.clone())
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(BigUint::one(), |acc, (p, _)| acc * p)
}
