//! Discriminant groups `D(L) = L^∨ / L` of even lattices with their `Q/2Z`-valued form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::frame::{pair, FrameExt, LatVec};
use crate::intmat::smith_normal_form;
use crate::lattice::QuadLattice;
use crate::matrix::Matrix;
use crate::rational::{int, reduce_mod, Rational};

#[derive(Clone, Debug)]
pub struct DiscGroup {
    lattice: QuadLattice,
    invariant_factors: Vec<BigInt>,
    generators: Vec<LatVec>,
    qvalues: Vec<Rational>,
    /// Positions of the nontrivial factors inside the full Smith diagonal.
    positions: Vec<usize>,
    /// Right Smith transform `V`, mapping dual-basis coordinates to Smith coordinates.
    right: Matrix,
}

pub fn discriminant_group(l: &QuadLattice) -> Result<DiscGroup> {
    if !l.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !l.is_even() {
        return Err(Error::NotEven);
    }
    if !l.is_nondegenerate() {
        return Err(Error::Precondition("degenerate lattice".into()));
    }
    let g = l.gram().to_integer_rows(&BigInt::one());
    let snf = smith_normal_form(&g);
    let left = Matrix::from_integer_rows(&snf.left, &BigInt::one());
    let right = Matrix::from_integer_rows(&snf.right, &BigInt::one());
    let ub = &left * l.basis();

    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    let mut qvalues = Vec::new();
    let mut positions = Vec::new();
    for (i, d) in snf.diagonal.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let gen = LatVec::new(l.frame().clone(), ub.row(i).to_vec())
            .expect("row length")
            .scale(&Rational::new(BigInt::one(), d.clone()));
        qvalues.push(reduce_mod(&gen.square(), &int(2)));
        generators.push(gen);
        invariant_factors.push(d.clone());
        positions.push(i);
    }
    Ok(DiscGroup {
        lattice: l.clone(),
        invariant_factors,
        generators,
        qvalues,
        positions,
        right,
    })
}

impl DiscGroup {
    pub fn lattice(&self) -> &QuadLattice {
        &self.lattice
    }

    /// Nontrivial invariant factors `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn generators(&self) -> &[LatVec] {
        &self.generators
    }

    /// `q(g_i) = b(g_i, g_i)` reduced into `[0, 2)`.
    pub fn qvalues(&self) -> &[Rational] {
        &self.qvalues
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Coordinates of the class of `v ∈ L^∨` on the generators, each reduced mod `d_i`.
    pub fn class_of(&self, v: &LatVec) -> Result<Vec<BigInt>> {
        let x = self
            .lattice
            .coordinates(v)
            .ok_or(Error::NotInLattice)?;
        let c = self.lattice.gram().left_apply(&x);
        if !c.iter().all(Rational::is_integer) {
            return Err(Error::NotInLattice);
        }
        let smith = self.right.left_apply(&c);
        Ok(self
            .positions
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&i, d)| smith[i].to_integer().mod_floor(d))
            .collect())
    }

    pub fn is_zero_class(&self, v: &LatVec) -> Result<bool> {
        Ok(self.class_of(v)?.iter().all(Zero::is_zero))
    }

    pub fn element(&self, coeffs: &[BigInt]) -> LatVec {
        assert_eq!(coeffs.len(), self.generators.len());
        self.generators
            .iter()
            .zip(coeffs)
            .fold(self.lattice.frame().zero_vector(), |acc, (g, c)| {
                &acc + &g.scale(&Rational::from_integer(c.clone()))
            })
    }

    /// Discriminant quadratic form value in `[0, 2)`.
    pub fn q(&self, v: &LatVec) -> Rational {
        reduce_mod(&v.square(), &int(2))
    }

    /// Discriminant bilinear form value in `[0, 1)`.
    pub fn b(&self, v: &LatVec, w: &LatVec) -> Result<Rational> {
        Ok(reduce_mod(&pair(v, w)?, &int(1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::AmbientFrame;
    use crate::lattice::span_sublattice;
    use crate::rational::frac;

    #[test]
    fn hyperbolic_plane_has_trivial_group() {
        let fr = AmbientFrame::new(
            "U",
            vec!["e".into(), "f".into()],
            Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
        )
        .unwrap();
        let d = discriminant_group(&QuadLattice::standard(&fr)).unwrap();
        assert!(d.is_trivial());
        assert_eq!(d.order(), BigInt::one());
    }

    #[test]
    fn rank_one_lattice() {
        let fr = AmbientFrame::new("A", vec!["x".into()], Matrix::from_i64_rows(&[&[-6]])).unwrap();
        let l = QuadLattice::standard(&fr);
        let d = discriminant_group(&l).unwrap();
        assert_eq!(d.invariant_factors(), &[BigInt::from(6)]);
        assert_eq!(d.qvalues()[0], reduce_mod(&frac(-1, 6), &int(2)));
        let x = fr.basis_vector("x");
        assert!(d.is_zero_class(&x).unwrap());
        assert_eq!(d.class_of(&x.scale(&frac(1, 6))).unwrap().len(), 1);
    }

    #[test]
    fn odd_lattice_rejected() {
        let fr = AmbientFrame::new("I", vec!["x".into()], Matrix::identity(1)).unwrap();
        assert!(matches!(
            discriminant_group(&QuadLattice::standard(&fr)),
            Err(Error::NotEven)
        ));
        let half = span_sublattice(&fr, &[fr.basis_vector("x").scale(&frac(1, 2))]).unwrap();
        assert!(matches!(discriminant_group(&half), Err(Error::NotIntegral)));
    }
}
