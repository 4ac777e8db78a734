//! The model `(Sym₂(Z,m), B)` of the algebraic Mukai lattice of an abelian surface with
//! `NS(A) = Z·H_A`, `H_A² = 2m`, and the groups `Ĝ ⊃ Stab₀(v) ⊃ Stab₀(v)*` acting on it.

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

/// `[[x, y√m], [y√m, z]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sym2Matrix {
    pub m: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// Image of the Mukai vector `(r, d·H_A, a)`.
pub fn yoshioka_matrix(r: i64, d: i64, a: i64, m: i64) -> Result<Sym2Matrix> {
    if m <= 0 {
        return Err(Error::InvalidParam(format!("m must be positive, got {m}")));
    }
    Ok(Sym2Matrix { m, x: r, y: d, z: a })
}

/// `B(M₁, M₂) = 2m·y₁y₂ − (x₁z₂ + z₁x₂)`.
pub fn yoshioka_pairing(p: &Sym2Matrix, q: &Sym2Matrix) -> Result<i64> {
    if p.m != q.m {
        return Err(Error::InvalidParam(format!("m differs: {} vs {}", p.m, q.m)));
    }
    Ok(2 * p.m * p.y * q.y - (p.x * q.z + p.z * q.x))
}

/// Mukai pairing `⟨(r,dH,a),(r',d'H,a')⟩ = 2m·dd' − (ra' + ar')`.
pub fn mukai_pairing(v: (i64, i64, i64), w: (i64, i64, i64), m: i64) -> i64 {
    2 * m * v.1 * w.1 - (v.0 * w.2 + v.2 * w.0)
}

/// `[[a√r, b√s], [c√s, d√r]]` with `rs = m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GhatElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub r: i64,
    pub s: i64,
}

impl GhatElement {
    pub fn m(&self) -> i64 {
        self.r * self.s
    }

    /// `adr − bcs`.
    pub fn det(&self) -> i64 {
        self.a * self.d * self.r - self.b * self.c * self.s
    }

    /// `M · g = gᵀ M g`; integral because `√(rs) = √m`.
    pub fn act(&self, mat: &Sym2Matrix) -> Result<Sym2Matrix> {
        if mat.m != self.m() {
            return Err(Error::InvalidParam("Ĝ element and matrix use different m".into()));
        }
        let (a, b, c, d, r, s, m) = (self.a, self.b, self.c, self.d, self.r, self.s, mat.m);
        let (x, y, z) = (mat.x, mat.y, mat.z);
        Ok(Sym2Matrix {
            m,
            x: a * a * r * x + 2 * a * c * m * y + c * c * s * z,
            y: a * b * x + a * d * r * y + b * c * s * y + c * d * z,
            z: b * b * s * x + 2 * b * d * m * y + d * d * r * z,
        })
    }

    /// The upper-right entry `b√s` lies in `√m·Z`, i.e. `b²/r` is a perfect square.
    pub fn upper_right_in_sqrt_m_z(&self) -> bool {
        let b2 = self.b * self.b;
        if b2 % self.r != 0 {
            return false;
        }
        let q = b2 / self.r;
        let root = q.sqrt();
        root * root == q
    }
}

fn check_rs(r: i64, s: i64, m: i64) -> Result<()> {
    if r <= 0 || s <= 0 || r * s != m {
        return Err(Error::InvalidParam(format!("need r, s > 0 with rs = m; got r={r}, s={s}, m={m}")));
    }
    Ok(())
}

/// Membership in `Ĝ`: `adr − bcs = ±1`.
pub fn ghat_member(a: i64, b: i64, c: i64, d: i64, r: i64, s: i64, m: i64) -> Result<bool> {
    check_rs(r, s, m)?;
    let g = GhatElement { a, b, c, d, r, s };
    Ok(g.det().abs() == 1)
}

/// Membership in `Stab₀(v)*`: `g ∈ Ĝ`, `v·g = v`, `det g = 1`, upper-right entry in `√m·Z`.
pub fn stab0_star_member(g: &GhatElement, v: (i64, i64, i64), m: i64) -> Result<bool> {
    check_rs(g.r, g.s, m)?;
    if v.0 == 0 {
        return Err(Error::InvalidParam("Stab₀(v) needs r ≠ 0".into()));
    }
    if g.det() != 1 || !g.upper_right_in_sqrt_m_z() {
        return Ok(false);
    }
    let mv = yoshioka_matrix(v.0, v.1, v.2, m)?;
    Ok(g.act(&mv)? == mv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kummer_vector_pairing() {
        for m in [1, 2, 3, 6] {
            let n = 5;
            let mv = yoshioka_matrix(1, 0, -n, m).unwrap();
            assert_eq!((mv.x, mv.y, mv.z), (1, 0, -n));
            assert_eq!(yoshioka_pairing(&mv, &mv).unwrap(), 2 * n);
        }
    }

    #[test]
    fn ghat_and_stabilizer() {
        assert!(ghat_member(1, 0, 0, 1, 1, 6, 6).unwrap());
        assert!(ghat_member(1, 0, 0, 1, 2, 2, 6).is_err());
        let id = GhatElement { a: 1, b: 0, c: 0, d: 1, r: 1, s: 3 };
        assert!(stab0_star_member(&id, (1, 0, -4), 3).unwrap());
        // Preserves B: check on a sample.
        let g = GhatElement { a: 1, b: 1, c: 0, d: 1, r: 1, s: 2 };
        let p = yoshioka_matrix(2, 1, -3, 2).unwrap();
        let q = yoshioka_matrix(-1, 4, 5, 2).unwrap();
        let before = yoshioka_pairing(&p, &q).unwrap();
        let after = yoshioka_pairing(&g.act(&p).unwrap(), &g.act(&q).unwrap()).unwrap();
        assert_eq!(before, after * g.det() * g.det());
    }
}
