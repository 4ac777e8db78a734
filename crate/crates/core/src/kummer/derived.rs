//! Maps between `H̃(A)` and `H̃(X)`: `θ`, `θ̃`, `ι`, the derived action `g ↦ d_n(g)`,
//! and the isometries of the named equivalences.

use crate::error::{Error, Result};
use crate::frame::{AmbientFrame, FrameExt, LatVec};
use crate::isometry::{reflection, Isometry};
use crate::lattice::QuadLattice;
use crate::rational::frac;

use super::frames::{abelian_frame, bfield, in_h2, AbelianFrame, KummerFrame, DELTA};

fn ensure_abelian(v: &LatVec) -> Result<AbelianFrame> {
    let a = abelian_frame();
    v.ensure_frame(a.frame())?;
    Ok(a)
}

/// `θ̃`: `α ↦ α`, `e_i ↦ e_i`, `β ↦ β`.
pub fn theta_tilde(k: &KummerFrame, w: &LatVec) -> Result<LatVec> {
    let a = ensure_abelian(w)?;
    let mut out = k.zero();
    for (label, x) in a.frame().labels().iter().zip(w.coords()) {
        out = &out + &k.frame().basis_vector(label).scale(x);
    }
    Ok(out)
}

/// `θ: H²(A) → H²(X)`, the restriction of `θ̃`.
pub fn theta_embed(k: &KummerFrame, mu: &LatVec) -> Result<LatVec> {
    if !in_h2(mu) {
        return Err(Error::Precondition(format!("{mu} is not in H²(A)")));
    }
    theta_tilde(k, mu)
}

/// Left inverse of `θ̃` on `θ̃(H̃(A))`; `None` if `x` has a `δ'`-component.
pub fn theta_tilde_inverse(k: &KummerFrame, x: &LatVec) -> Option<LatVec> {
    let a = abelian_frame();
    if !AmbientFrame::same(x.frame(), k.frame()) || !num_traits::Zero::is_zero(x.coord(DELTA)) {
        return None;
    }
    let coords = a.frame().labels().iter().map(|l| x.coord(l).clone()).collect();
    a.frame().vector(coords).ok()
}

/// `ι(g)`: `θ̃(w) ↦ θ̃(g w)`, `δ' ↦ δ'`.
pub fn iota_extend(k: &KummerFrame, g: &Isometry) -> Result<Isometry> {
    let a = abelian_frame();
    if !AmbientFrame::same(g.frame(), a.frame()) {
        return Err(Error::FrameMismatch(g.frame().name().into(), a.frame().name().into()));
    }
    let images: Vec<LatVec> = k
        .frame()
        .labels()
        .iter()
        .map(|label| {
            let x = k.frame().basis_vector(label);
            if label == DELTA {
                return Ok(x);
            }
            let w = a.frame().basis_vector(label);
            let gw = LatVec::new(a.frame().clone(), g.matrix().apply(w.coords()))?;
            theta_tilde(k, &gw)
        })
        .collect::<Result<_>>()?;
    Isometry::from_images(k.frame(), &images)
}

/// `d_n(g) = det(g)^n · B_{−δ'/2} ∘ ι(g) ∘ B_{δ'/2}`.
pub fn d_n(k: &KummerFrame, g: &Isometry) -> Result<Isometry> {
    let a = abelian_frame();
    if !AmbientFrame::same(g.frame(), a.frame()) {
        return Err(Error::FrameMismatch(g.frame().name().into(), a.frame().name().into()));
    }
    if !g.preserves(&QuadLattice::standard(g.frame())) {
        return Err(Error::NotPreserved);
    }
    let half = k.delta().scale(&frac(1, 2));
    let inner = bfield(&-&half)?
        .compose(&iota_extend(k, g)?)?
        .compose(&bfield(&half)?)?;
    let out = if g.det() == -1 && k.n() % 2 == 1 {
        inner.negate()
    } else {
        inner
    };
    Ok(out.named(format!("d_{}(g)", k.n())))
}

/// `s_{δ̃'}`.
pub fn delta_reflection(k: &KummerFrame) -> Isometry {
    reflection(&k.delta_tilde()).expect("δ̃' is anisotropic")
}

/// `(−1)^n s_{δ̃'}`, the action of the sign-twisted equivalence `Φ_χ^{(n)}`.
pub fn sign_equivalence_action(k: &KummerFrame) -> Isometry {
    let s = delta_reflection(k);
    let out = if k.n() % 2 == 1 { s.negate() } else { s };
    out.named(format!("Phi_chi^({})", k.n()))
}

/// `−s_{δ̃'}`, the action of the `P^{n−2}`-functor twist.
pub fn p_twist_action(k: &KummerFrame) -> Isometry {
    delta_reflection(k).negate().named("T_pi")
}

/// The only recorded fact about the equivalence built from `E₁'`: it sends `β` to `α̃`.
pub fn e1prime_constraint(k: &KummerFrame) -> (LatVec, LatVec) {
    (k.beta(), k.alpha_tilde())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::pair;
    use crate::kummer::frames::kummer_frame;
    use crate::kummer::lattices::kum_lattice;
    use crate::rational::int;

    #[test]
    fn theta_is_isometric() {
        let k = kummer_frame(4).unwrap();
        let a = abelian_frame();
        let mu = &a.e(1) + &a.e(2).scale(&int(3));
        let nu = &a.e(2) - &a.e(5);
        let (tm, tn) = (theta_embed(&k, &mu).unwrap(), theta_embed(&k, &nu).unwrap());
        assert_eq!(pair(&tm, &tn).unwrap(), pair(&mu, &nu).unwrap());
        assert!(theta_embed(&k, &a.alpha()).is_err());
        assert_eq!(theta_tilde(&k, &a.alpha()).unwrap(), k.alpha());
        assert_eq!(theta_tilde_inverse(&k, &tm).unwrap(), mu);
    }

    #[test]
    fn iota_and_dn_of_identity() {
        let k = kummer_frame(3).unwrap();
        let id = Isometry::identity(abelian_frame().frame());
        assert!(iota_extend(&k, &id).unwrap().is_identity());
        assert!(d_n(&k, &id).unwrap().is_identity());
    }

    #[test]
    fn dn_of_bfield_is_bfield_of_theta() {
        let k = kummer_frame(5).unwrap();
        let a = abelian_frame();
        let mu = &a.e(3).scale(&int(2)) - &a.e(4);
        let lhs = d_n(&k, &bfield(&mu).unwrap()).unwrap();
        let rhs = bfield(&theta_embed(&k, &mu).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(lhs.preserves(&kum_lattice(&k)));
    }

    #[test]
    fn sign_equivalence() {
        let k = kummer_frame(3).unwrap();
        let s = sign_equivalence_action(&k);
        assert_eq!(s, delta_reflection(&k).negate());
        assert!(s.compose(&s).unwrap().is_identity());
        let k4 = kummer_frame(4).unwrap();
        assert_eq!(sign_equivalence_action(&k4), delta_reflection(&k4));
    }
}
