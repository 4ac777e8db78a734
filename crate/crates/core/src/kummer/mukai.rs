//! Extended Mukai vectors, the named examples, the signum function, and the numerical
//! constraints `c_X = n`, `r_X = n/4`, `rank = (n−1)!·a^{n−1}/n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::{pair, LatVec};
use crate::rational::{frac, from_bigint, int, sign, Rational};

use super::frames::{in_h2, KummerFrame, ALPHA, BETA};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Line bundle with first Chern class `λ` (as a display string).
    LineBundle(String),
    Skyscraper,
    NamedExample(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtMukaiVector {
    pub vector: LatVec,
    pub provenance: Provenance,
}

impl ExtMukaiVector {
    pub fn square(&self) -> Rational {
        self.vector.square()
    }
}

/// `ṽ(λ) = α + λ + (n/4 + b(λ,λ)/2)β`, without checking `λ`.
pub fn ext_mukai_vector(k: &KummerFrame, lambda: &LatVec) -> LatVec {
    let s = frac(k.n(), 4) + lambda.square() / int(2);
    &(&k.alpha() + lambda) + &k.beta().scale(&s)
}

/// `ṽ(L)` for a line bundle with `c_1(L) = λ ∈ H²(X,Z)`.
pub fn ext_mukai_line_bundle(k: &KummerFrame, lambda: &LatVec) -> Result<ExtMukaiVector> {
    lambda.ensure_frame(k.frame())?;
    if !in_h2(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not in H²(X)")));
    }
    if !lambda.coords().iter().all(Rational::is_integer) {
        return Err(Error::NotIntegral);
    }
    Ok(ExtMukaiVector {
        vector: ext_mukai_vector(k, lambda),
        provenance: Provenance::LineBundle(lambda.to_string()),
    })
}

pub const NAMED_EXAMPLES: [&str; 4] = ["O_P", "fiber_bundle_L", "E1prime", "skyscraper"];

/// One of the named examples; `[E₁]` and `f` are realised by `e_1`.
pub fn named_example(k: &KummerFrame, name: &str) -> Result<ExtMukaiVector> {
    let half = frac(1, 2);
    let vector = match name {
        "O_P" => &(&k.e(1) + &k.delta_tilde().scale(&half)) - &k.beta(),
        "fiber_bundle_L" => k.e(1),
        "E1prime" => {
            if k.n() != 3 {
                return Err(Error::Precondition(format!(
                    "E1prime exists only for n = 3, not n = {}",
                    k.n()
                )));
            }
            k.alpha_tilde()
        }
        "skyscraper" => k.beta(),
        other => return Err(Error::InvalidParam(format!("unknown example vector {other:?}"))),
    };
    let provenance = if name == "skyscraper" {
        Provenance::Skyscraper
    } else {
        Provenance::NamedExample(name.to_string())
    };
    Ok(ExtMukaiVector { vector, provenance })
}

/// All named examples available for this `n`.
pub fn named_example_vectors(k: &KummerFrame) -> BTreeMap<&'static str, ExtMukaiVector> {
    NAMED_EXAMPLES
        .iter()
        .filter_map(|&name| named_example(k, name).ok().map(|v| (name, v)))
        .collect()
}

/// Expected self-pairing of a named example: `−n/2` on the line-bundle orbit, `0` on the
/// skyscraper orbit.
pub fn expected_square(k: &KummerFrame, name: &str) -> Option<Rational> {
    match name {
        "O_P" => Some(frac(-k.n(), 2)),
        "fiber_bundle_L" | "E1prime" | "skyscraper" => Some(Rational::zero()),
        _ => None,
    }
}

/// `sgn(r)` if `r ≠ 0`, else `sgn(b(ω,λ))` if `λ ≠ 0`, else `sgn(s)`, for `v = rα + λ + sβ`.
pub fn signum(v: &LatVec, omega: &LatVec) -> Result<i32> {
    omega.ensure_frame(v.frame())?;
    if !in_h2(omega) || !omega.square().is_positive() {
        return Err(Error::Precondition("ω must lie in H²⊗Q with (ω,ω) > 0".into()));
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let r = v.coord(ALPHA).clone();
    let s = v.coord(BETA).clone();
    if !r.is_zero() {
        return Ok(sign(&r));
    }
    let frame = v.frame();
    let lambda = v - &frame_vec(frame, BETA).scale(&s);
    if !lambda.is_zero() {
        let b = pair(omega, &lambda)?;
        if b.is_zero() {
            return Err(Error::NonGenericClass);
        }
        return Ok(sign(&b));
    }
    Ok(sign(&s))
}

fn frame_vec(frame: &crate::frame::FrameRef, label: &str) -> LatVec {
    crate::frame::FrameExt::basis_vector(frame, label)
}

/// `(c_X, r_X) = (n, n/4)`.
pub fn fujiki_and_r(n: i64) -> (i64, Rational) {
    (n, frac(n, 4))
}

/// True iff `rank = (n−1)!·a^{n−1}/n` for some integer `a`.
pub fn rank_constraint_check(n: i64, rank: &Rational) -> bool {
    assert!(n >= 3, "n must be at least 3");
    let fact: BigInt = (1..n).map(BigInt::from).product();
    // a^{n−1} = rank·n/(n−1)!
    let target = rank * from_bigint(BigInt::from(n)) / from_bigint(fact);
    if !target.is_integer() {
        return false;
    }
    let t = target.to_integer();
    let e = (n - 1) as u32;
    if t.is_negative() && e % 2 == 0 {
        return false;
    }
    let root = t.abs().nth_root(e);
    let root = if t.is_negative() { -root } else { root };
    num_traits::pow(root, e as usize) == t
}

/// A solution `a` of the rank constraint, nonnegative when `n−1` is even.
pub fn rank_constraint_solution(n: i64, rank: &Rational) -> Option<BigInt> {
    if !rank_constraint_check(n, rank) {
        return None;
    }
    let fact: BigInt = (1..n).map(BigInt::from).product();
    let t = (rank * from_bigint(BigInt::from(n)) / from_bigint(fact)).to_integer();
    let root = t.abs().nth_root((n - 1) as u32);
    Some(if t.is_negative() { -root } else { root })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kummer::frames::kummer_frame;

    #[test]
    fn line_bundle_vectors() {
        let k = kummer_frame(4).unwrap();
        let v0 = ext_mukai_line_bundle(&k, &k.zero()).unwrap();
        let expected = &k.alpha_tilde() + &k.delta_tilde().scale(&frac(1, 2));
        assert_eq!(v0.vector, expected);
        assert_eq!(v0.vector, &k.alpha() + &k.beta().scale(&int(1)));
        let vd = ext_mukai_line_bundle(&k, &k.delta()).unwrap();
        assert_eq!(vd.vector, &(&k.alpha() + &k.delta()) - &k.beta().scale(&int(3)));
        assert_eq!(vd.square(), int(-2));
        assert!(ext_mukai_line_bundle(&k, &k.delta().scale(&frac(1, 2))).is_err());
        assert!(ext_mukai_line_bundle(&k, &k.alpha()).is_err());
    }

    #[test]
    fn named_examples() {
        let k3 = kummer_frame(3).unwrap();
        let all = named_example_vectors(&k3);
        assert_eq!(all.len(), 4);
        for (name, v) in &all {
            assert_eq!(Some(v.square()), expected_square(&k3, name), "{name}");
        }
        let e1p = &(&k3.alpha() - &k3.delta().scale(&frac(1, 2))) - &k3.beta().scale(&frac(3, 4));
        assert_eq!(all["E1prime"].vector, e1p);
        let k5 = kummer_frame(5).unwrap();
        assert!(named_example(&k5, "E1prime").is_err());
        assert_eq!(named_example_vectors(&k5).len(), 3);
    }

    #[test]
    fn signum_cases() {
        let k = kummer_frame(3).unwrap();
        let omega = &k.e(1) + &k.e(2);
        let v = &(&k.alpha().scale(&int(2)) + &k.e(3)) + &k.beta().scale(&int(-7));
        assert_eq!(signum(&v, &omega).unwrap(), 1);
        assert_eq!(signum(&k.e(1).scale(&int(-1)), &omega).unwrap(), -1);
        assert_eq!(signum(&k.delta(), &omega), Err(Error::NonGenericClass));
        assert_eq!(signum(&k.beta().scale(&int(-3)), &omega).unwrap(), -1);
        assert!(signum(&k.beta(), &k.e(1)).is_err());
    }

    #[test]
    fn rank_constraints() {
        assert_eq!(fujiki_and_r(3), (3, frac(3, 4)));
        assert!(rank_constraint_check(3, &frac(2, 3)));
        assert!(!rank_constraint_check(3, &int(1)));
        assert!(rank_constraint_check(3, &int(0)));
        assert!(rank_constraint_check(3, &frac(8, 3)));
        // n = 4: rank = 6a³/4, a = -1 gives -3/2.
        assert!(rank_constraint_check(4, &frac(-3, 2)));
        assert!(!rank_constraint_check(4, &int(3)));
        assert_eq!(rank_constraint_solution(3, &frac(8, 3)), Some(BigInt::from(2)));
    }
}
