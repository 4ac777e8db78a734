//! Labeled rational quadratic spaces and vectors in them.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{dot, Matrix};
use crate::rational::{format_rational, Rational};

/// A rational quadratic space `Q^dim` with a labeled basis and a nondegenerate Gram matrix.
#[derive(Debug, PartialEq, Eq)]
pub struct AmbientFrame {
    name: String,
    labels: Vec<String>,
    gram: Matrix,
}

pub type FrameRef = Arc<AmbientFrame>;

impl AmbientFrame {
    pub fn new(name: impl Into<String>, labels: Vec<String>, gram: Matrix) -> Result<FrameRef> {
        let name = name.into();
        if labels.is_empty() {
            return Err(Error::InvalidFrame(format!("{name}: dimension must be positive")));
        }
        if !gram.is_square() || gram.nrows() != labels.len() {
            return Err(Error::Dimension {
                expected: labels.len(),
                got: gram.nrows(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidFrame(format!("{name}: gram is not symmetric")));
        }
        if gram.det().is_zero() {
            return Err(Error::InvalidFrame(format!("{name}: gram is degenerate")));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidFrame(format!("{name}: duplicate labels")));
        }
        Ok(Arc::new(AmbientFrame { name, labels, gram }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pair_coords(&self, u: &[Rational], v: &[Rational]) -> Rational {
        dot(u, &self.gram.apply(v))
    }

    pub fn same(a: &FrameRef, b: &FrameRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

pub trait FrameExt {
    fn vector(&self, coords: Vec<Rational>) -> Result<LatVec>;
    fn zero_vector(&self) -> LatVec;
    fn basis_vector(&self, label: &str) -> LatVec;
    fn unit(&self, index: usize) -> LatVec;
}

impl FrameExt for FrameRef {
    fn vector(&self, coords: Vec<Rational>) -> Result<LatVec> {
        LatVec::new(self.clone(), coords)
    }

    fn zero_vector(&self) -> LatVec {
        LatVec {
            frame: self.clone(),
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    /// Panics if the label is unknown.
    fn basis_vector(&self, label: &str) -> LatVec {
        let i = self
            .index_of(label)
            .unwrap_or_else(|| panic!("no basis label {label:?} in frame {}", self.name));
        self.unit(i)
    }

    fn unit(&self, index: usize) -> LatVec {
        let mut v = self.zero_vector();
        v.coords[index] = Rational::from_integer(1.into());
        v
    }
}

/// A vector with exact rational coordinates in a named frame.
#[derive(Clone, PartialEq, Eq)]
pub struct LatVec {
    frame: FrameRef,
    coords: Vec<Rational>,
}

impl LatVec {
    pub fn new(frame: FrameRef, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != frame.dim() {
            return Err(Error::Dimension {
                expected: frame.dim(),
                got: coords.len(),
            });
        }
        Ok(LatVec { frame, coords })
    }

    pub fn frame(&self) -> &FrameRef {
        &self.frame
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn coord(&self, label: &str) -> &Rational {
        let i = self
            .frame
            .index_of(label)
            .unwrap_or_else(|| panic!("no basis label {label:?}"));
        &self.coords[i]
    }

    pub fn scale(&self, s: &Rational) -> LatVec {
        LatVec {
            frame: self.frame.clone(),
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    pub fn square(&self) -> Rational {
        self.frame.pair_coords(&self.coords, &self.coords)
    }

    pub fn ensure_frame(&self, frame: &FrameRef) -> Result<()> {
        if AmbientFrame::same(&self.frame, frame) {
            Ok(())
        } else {
            Err(Error::FrameMismatch(
                self.frame.name().to_string(),
                frame.name().to_string(),
            ))
        }
    }

    fn zip_with(&self, other: &LatVec, f: impl Fn(&Rational, &Rational) -> Rational) -> LatVec {
        assert!(
            AmbientFrame::same(&self.frame, &other.frame),
            "vector arithmetic across frames {} and {}",
            self.frame.name(),
            other.frame.name()
        );
        LatVec {
            frame: self.frame.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// The ambient bilinear form `u^T · gram · v`.
pub fn pair(u: &LatVec, v: &LatVec) -> Result<Rational> {
    u.ensure_frame(&v.frame)?;
    Ok(u.frame.pair_coords(&u.coords, &v.coords))
}

impl Add<&LatVec> for &LatVec {
    type Output = LatVec;
    fn add(self, rhs: &LatVec) -> LatVec {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&LatVec> for &LatVec {
    type Output = LatVec;
    fn sub(self, rhs: &LatVec) -> LatVec {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for LatVec {
    type Output = LatVec;
    fn add(self, rhs: LatVec) -> LatVec {
        &self + &rhs
    }
}

impl Sub for LatVec {
    type Output = LatVec;
    fn sub(self, rhs: LatVec) -> LatVec {
        &self - &rhs
    }
}

impl Neg for &LatVec {
    type Output = LatVec;
    fn neg(self) -> LatVec {
        LatVec {
            frame: self.frame.clone(),
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for LatVec {
    type Output = LatVec;
    fn neg(self) -> LatVec {
        -&self
    }
}

impl Mul<&LatVec> for &Rational {
    type Output = LatVec;
    fn mul(self, rhs: &LatVec) -> LatVec {
        rhs.scale(self)
    }
}

impl Mul<LatVec> for Rational {
    type Output = LatVec;
    fn mul(self, rhs: LatVec) -> LatVec {
        rhs.scale(&self)
    }
}

impl fmt::Debug for LatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LatVec {
    /// Renders the nonzero terms, e.g. `α - 1/2·δ' - 3/4·β`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, label) in self.coords.iter().zip(self.frame.labels()) {
            if x.is_zero() {
                continue;
            }
            let neg = x < &Rational::zero();
            let abs = if neg { -x.clone() } else { x.clone() };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if abs == Rational::from_integer(1.into()) {
                write!(f, "{sep}{label}")?;
            } else {
                write!(f, "{sep}{}·{label}", format_rational(&abs))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn u_frame() -> FrameRef {
        AmbientFrame::new(
            "U",
            vec!["e".into(), "f".into()],
            Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_frames() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let degenerate = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(AmbientFrame::new("x", labels.clone(), degenerate).is_err());
        let asym = Matrix::from_i64_rows(&[&[0, 1], &[2, 0]]);
        assert!(AmbientFrame::new("x", labels, asym).is_err());
        let dup = vec!["a".to_string(), "a".to_string()];
        assert!(AmbientFrame::new("x", dup, Matrix::identity(2)).is_err());
    }

    #[test]
    fn pairing_and_display() {
        let fr = u_frame();
        let e = fr.basis_vector("e");
        let f = fr.basis_vector("f");
        assert_eq!(pair(&e, &f).unwrap(), int(1));
        assert_eq!(e.square(), int(0));
        let v = &e - &f.scale(&frac(3, 4));
        assert_eq!(v.to_string(), "e - 3/4·f");
        assert_eq!(v.square(), frac(-3, 2));
    }

    #[test]
    fn pairing_across_frames_fails() {
        let a = u_frame();
        let b = AmbientFrame::new("V", vec!["x".into()], Matrix::identity(1)).unwrap();
        assert!(matches!(
            pair(&a.unit(0), &b.unit(0)),
            Err(Error::Dimension { .. }) | Err(Error::FrameMismatch(..))
        ));
    }
}
