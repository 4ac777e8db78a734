//! Finite-rank lattices inside a labeled quadratic frame.
//!
//! A lattice is stored as a basis matrix (rows are basis vectors in ambient coordinates).
//! Two lattices are equal as subsets exactly when their Hermite normal forms agree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frame::{AmbientFrame, FrameRef, LatVec};
use crate::intmat::{gcd_all, hermite_normal_form};
use crate::matrix::Matrix;
use crate::rational::{lcm_of_denominators, Rational};

#[derive(Clone)]
pub struct QuadLattice {
    frame: FrameRef,
    basis: Matrix,
    gram: Matrix,
    det: Rational,
    integral: bool,
    even: bool,
}

impl QuadLattice {
    /// Lattice with the given basis rows; rejects dependent rows.
    pub fn from_matrix(frame: FrameRef, basis: Matrix) -> Result<Self> {
        if basis.ncols() != frame.dim() {
            return Err(Error::Dimension {
                expected: frame.dim(),
                got: basis.ncols(),
            });
        }
        if basis.rank() != basis.nrows() {
            return Err(Error::DependentBasis);
        }
        Ok(Self::from_independent(frame, basis))
    }

    pub fn from_basis(frame: &FrameRef, vectors: &[LatVec]) -> Result<Self> {
        for v in vectors {
            v.ensure_frame(frame)?;
        }
        let rows = vectors.iter().map(|v| v.coords().to_vec()).collect();
        let basis = if vectors.is_empty() {
            Matrix::zeros(0, frame.dim())
        } else {
            Matrix::from_rows(rows)
        };
        Self::from_matrix(frame.clone(), basis)
    }

    fn from_independent(frame: FrameRef, basis: Matrix) -> Self {
        let gram = &(&basis * frame.gram()) * &basis.transpose();
        let det = if gram.nrows() == 0 {
            Rational::one()
        } else {
            gram.det()
        };
        let integral = gram.is_integral();
        let even = integral
            && (0..gram.nrows()).all(|i| gram[(i, i)].to_integer().is_even());
        QuadLattice {
            frame,
            basis,
            gram,
            det,
            integral,
            even,
        }
    }

    /// The standard lattice `Z^dim` spanned by the frame's basis.
    pub fn standard(frame: &FrameRef) -> Self {
        Self::from_independent(frame.clone(), Matrix::identity(frame.dim()))
    }

    pub fn zero(frame: &FrameRef) -> Self {
        Self::from_independent(frame.clone(), Matrix::zeros(0, frame.dim()))
    }

    pub fn frame(&self) -> &FrameRef {
        &self.frame
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> LatVec {
        LatVec::new(self.frame.clone(), self.basis.row(i).to_vec()).expect("row length")
    }

    pub fn basis_vectors(&self) -> Vec<LatVec> {
        (0..self.rank()).map(|i| self.basis_vector(i)).collect()
    }

    /// Induced Gram matrix `B · gram · B^T`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det.is_zero()
    }

    /// Canonical basis: row-style HNF with positive pivots.
    pub fn hnf(&self) -> Matrix {
        canonical_rows(&self.basis)
    }

    pub fn same_as(&self, other: &QuadLattice) -> bool {
        AmbientFrame::same(&self.frame, &other.frame) && self.hnf() == other.hnf()
    }

    /// Same lattice re-expressed in its canonical basis.
    pub fn canonical(&self) -> QuadLattice {
        Self::from_independent(self.frame.clone(), self.hnf())
    }

    /// Rational coordinates of `v` in this basis, or `None` if `v` is outside `L ⊗ Q`.
    pub fn coordinates(&self, v: &LatVec) -> Option<Vec<Rational>> {
        if !AmbientFrame::same(&self.frame, v.frame()) {
            return None;
        }
        if self.rank() == 0 {
            return v.is_zero().then(Vec::new);
        }
        self.basis.solve_left(v.coords())
    }

    pub fn contains(&self, v: &LatVec) -> bool {
        self.coordinates(v)
            .is_some_and(|c| c.iter().all(Rational::is_integer))
    }

    pub fn contains_lattice(&self, other: &QuadLattice) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// `[self : sub]` when `sub ⊆ self` has full rank in `self`.
    pub fn index_of(&self, sub: &QuadLattice) -> Option<BigInt> {
        if sub.rank() != self.rank() || !self.contains_lattice(sub) {
            return None;
        }
        let rows: Vec<Vec<Rational>> = sub
            .basis_vectors()
            .iter()
            .map(|v| self.coordinates(v).expect("contained"))
            .collect();
        if rows.is_empty() {
            return Some(BigInt::one());
        }
        Some(Matrix::from_rows(rows).det().to_integer().abs())
    }

    pub fn scaled(&self, k: &Rational) -> QuadLattice {
        Self::from_independent(self.frame.clone(), self.basis.scale(k))
    }
}

impl std::fmt::Debug for QuadLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuadLattice")
            .field("frame", &self.frame.name())
            .field("rank", &self.rank())
            .field("basis", &self.basis)
            .finish()
    }
}

fn canonical_rows(m: &Matrix) -> Matrix {
    if m.nrows() == 0 {
        return m.clone();
    }
    let d = m.lcm_denominator();
    let h = hermite_normal_form(&m.to_integer_rows(&d));
    if h.is_empty() {
        Matrix::zeros(0, m.ncols())
    } else {
        Matrix::from_integer_rows(&h, &d)
    }
}

/// Integer span of `vectors`, returned with its canonical HNF basis.
pub fn span_sublattice(frame: &FrameRef, vectors: &[LatVec]) -> Result<QuadLattice> {
    if vectors.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for v in vectors {
        v.ensure_frame(frame)?;
    }
    let m = Matrix::from_rows(vectors.iter().map(|v| v.coords().to_vec()).collect());
    Ok(QuadLattice::from_independent(frame.clone(), canonical_rows(&m)))
}

/// External orthogonal direct sum; lives in the direct-sum frame of the two ambient frames.
pub fn direct_sum(l1: &QuadLattice, l2: &QuadLattice) -> QuadLattice {
    let f1 = l1.frame();
    let f2 = l2.frame();
    let (p1, p2) = if f1.name() == f2.name() {
        (format!("{}#1", f1.name()), format!("{}#2", f2.name()))
    } else {
        (f1.name().to_string(), f2.name().to_string())
    };
    let mut labels: Vec<String> = f1.labels().iter().map(|l| format!("{p1}.{l}")).collect();
    labels.extend(f2.labels().iter().map(|l| format!("{p2}.{l}")));
    let frame = AmbientFrame::new(
        format!("{}+{}", f1.name(), f2.name()),
        labels,
        Matrix::block_diagonal(f1.gram(), f2.gram()),
    )
    .expect("direct sum of nondegenerate frames is nondegenerate");
    let basis = Matrix::block_diagonal(l1.basis(), l2.basis());
    QuadLattice::from_independent(frame, basis)
}

/// Sum of two mutually orthogonal lattices in one frame.
pub fn orthogonal_sum(l1: &QuadLattice, l2: &QuadLattice) -> Result<QuadLattice> {
    if !AmbientFrame::same(l1.frame(), l2.frame()) {
        return Err(Error::FrameMismatch(
            l1.frame().name().into(),
            l2.frame().name().into(),
        ));
    }
    let cross = &(l1.basis() * l1.frame().gram()) * &l2.basis().transpose();
    if !cross.is_zero() {
        return Err(Error::Precondition("summands are not orthogonal".into()));
    }
    QuadLattice::from_matrix(l1.frame().clone(), l1.basis().stack(l2.basis()))
}

/// `L^∨ = {v ∈ L⊗Q : b(v, L) ⊆ Z}`, returned in the basis dual to `L`'s basis.
pub fn dual_lattice(l: &QuadLattice) -> Result<QuadLattice> {
    if !l.is_integral() {
        return Err(Error::NotIntegral);
    }
    if l.rank() == 0 {
        return Ok(l.clone());
    }
    let ginv = l.gram().inverse().ok_or(Error::Precondition("degenerate lattice".into()))?;
    Ok(QuadLattice::from_independent(
        l.frame().clone(),
        &ginv * l.basis(),
    ))
}

/// Positive generator of the ideal `b(v, L) ⊆ Z`.
pub fn divisibility(l: &QuadLattice, v: &LatVec) -> Result<BigInt> {
    v.ensure_frame(l.frame())?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !l.contains(v) {
        return Err(Error::NotInLattice);
    }
    let pairings = l.basis().apply(&l.frame().gram().apply(v.coords()));
    if !pairings.iter().all(Rational::is_integer) {
        return Err(Error::NotIntegral);
    }
    let ints: Vec<BigInt> = pairings.iter().map(Rational::to_integer).collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return Err(Error::Precondition("vector lies in the radical".into()));
    }
    Ok(g)
}

/// Integer row vectors `x` with `x · m = 0`, as a basis of that saturated lattice.
fn integer_left_kernel(m: &Matrix) -> Vec<Vec<BigInt>> {
    let r = m.nrows();
    let k = m.ncols();
    let d = lcm_of_denominators(m.rows().flatten());
    let ints = m.to_integer_rows(&d);
    let aug: Vec<Vec<BigInt>> = ints
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    hermite_normal_form(&aug)
        .into_iter()
        .filter(|row| row[..k].iter().all(Zero::is_zero))
        .map(|row| row[k..].to_vec())
        .collect()
}

fn lattice_from_coords(l: &QuadLattice, coords: Vec<Vec<BigInt>>) -> QuadLattice {
    if coords.is_empty() {
        return QuadLattice::zero(l.frame());
    }
    let c = Matrix::from_integer_rows(&coords, &BigInt::one());
    QuadLattice::from_independent(l.frame().clone(), canonical_rows(&(&c * l.basis())))
}

/// `(S ⊗ Q) ∩ L`.
pub fn saturation(l: &QuadLattice, s: &QuadLattice) -> Result<QuadLattice> {
    if !AmbientFrame::same(l.frame(), s.frame()) {
        return Err(Error::FrameMismatch(l.frame().name().into(), s.frame().name().into()));
    }
    if s.rank() == 0 {
        return Ok(QuadLattice::zero(l.frame()));
    }
    let rows = s
        .basis_vectors()
        .iter()
        .map(|v| l.coordinates(v).ok_or(Error::Precondition("S is not inside L ⊗ Q".into())))
        .collect::<Result<Vec<_>>>()?;
    let c = Matrix::from_rows(rows);
    // x lies in rowspace(C) iff x is orthogonal (standard dot) to ker(C).
    let ker = c.kernel();
    if ker.nrows() == 0 {
        return Ok(l.canonical());
    }
    Ok(lattice_from_coords(l, integer_left_kernel(&ker.transpose())))
}

/// `{v ∈ L : b(v, s) = 0 for all s ∈ S}`.
pub fn orthogonal_complement(l: &QuadLattice, s: &QuadLattice) -> Result<QuadLattice> {
    if !AmbientFrame::same(l.frame(), s.frame()) {
        return Err(Error::FrameMismatch(l.frame().name().into(), s.frame().name().into()));
    }
    if s.rank() == 0 {
        return Ok(l.canonical());
    }
    let p = &(l.basis() * l.frame().gram()) * &s.basis().transpose();
    Ok(lattice_from_coords(l, integer_left_kernel(&p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{pair, FrameExt};
    use crate::rational::{frac, int};

    fn u2() -> FrameRef {
        AmbientFrame::new(
            "U2",
            ["e1", "f1", "e2", "f2"].iter().map(|s| s.to_string()).collect(),
            Matrix::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn span_gcd_case_and_empty_input() {
        let fr = u2();
        let b = fr.basis_vector("f1");
        let l = span_sublattice(&fr, &[b.scale(&int(2)), b.scale(&int(3))]).unwrap();
        assert!(l.same_as(&span_sublattice(&fr, &[b.clone()]).unwrap()));
        assert_eq!(l.rank(), 1);
        assert!(matches!(span_sublattice(&fr, &[]), Err(Error::EmptyGenerators)));
    }

    #[test]
    fn dual_of_unimodular_is_itself() {
        let fr = u2();
        let l = QuadLattice::standard(&fr);
        let d = dual_lattice(&l).unwrap();
        assert!(d.same_as(&l));
        assert_eq!(l.det(), &int(1));
    }

    #[test]
    fn dual_rejects_non_integral() {
        let fr = u2();
        let l = span_sublattice(&fr, &[fr.basis_vector("e1").scale(&frac(1, 2)), fr.basis_vector("f1")])
            .unwrap();
        assert!(matches!(dual_lattice(&l), Err(Error::NotIntegral)));
    }

    #[test]
    fn divisibility_errors() {
        let fr = u2();
        let l = QuadLattice::standard(&fr);
        assert!(matches!(divisibility(&l, &fr.zero_vector()), Err(Error::ZeroVector)));
        let half = fr.basis_vector("e1").scale(&frac(1, 2));
        assert!(matches!(divisibility(&l, &half), Err(Error::NotInLattice)));
        let v = fr.basis_vector("e1").scale(&int(3));
        assert_eq!(divisibility(&l, &v).unwrap(), BigInt::from(3));
    }

    #[test]
    fn complement_and_saturation() {
        let fr = u2();
        let l = QuadLattice::standard(&fr);
        let s = span_sublattice(&fr, &[fr.basis_vector("e1"), fr.basis_vector("f1")]).unwrap();
        let c = orthogonal_complement(&l, &s).unwrap();
        let expect = span_sublattice(&fr, &[fr.basis_vector("e2"), fr.basis_vector("f2")]).unwrap();
        assert!(c.same_as(&expect));
        for v in c.basis_vectors() {
            for w in s.basis_vectors() {
                assert!(pair(&v, &w).unwrap().is_zero());
            }
        }
        let twice = span_sublattice(&fr, &[(&fr.basis_vector("e1") + &fr.basis_vector("e2")).scale(&int(2))])
            .unwrap();
        let sat = saturation(&l, &twice).unwrap();
        assert!(sat.same_as(
            &span_sublattice(&fr, &[&fr.basis_vector("e1") + &fr.basis_vector("e2")]).unwrap()
        ));
        let all = saturation(&l, &l).unwrap();
        assert!(all.same_as(&l));
    }

    #[test]
    fn external_direct_sum() {
        let fr = u2();
        let l = QuadLattice::standard(&fr);
        let s = direct_sum(&l, &l);
        assert_eq!(s.rank(), 8);
        assert_eq!(s.det(), &int(1));
        assert!(s.is_even());
    }

    #[test]
    fn index_of_sublattice() {
        let fr = u2();
        let l = QuadLattice::standard(&fr);
        let sub = l.scaled(&int(2));
        assert_eq!(l.index_of(&sub), Some(BigInt::from(16)));
        assert_eq!(sub.index_of(&l), None);
    }
}
