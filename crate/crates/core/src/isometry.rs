//! Isometries of a rational quadratic frame.
//!
//! Matrices act on column coordinate vectors: `g(v) = M · v`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::frame::{pair, AmbientFrame, FrameRef, LatVec};
use crate::lattice::QuadLattice;
use crate::matrix::Matrix;
use crate::rational::{int, Rational};

#[derive(Clone)]
pub struct Isometry {
    frame: FrameRef,
    matrix: Matrix,
    word: Option<Vec<String>>,
}

impl Isometry {
    /// Checks `M^T · gram · M = gram`.
    pub fn new(frame: &FrameRef, matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() != frame.dim() {
            return Err(Error::Dimension {
                expected: frame.dim(),
                got: matrix.nrows(),
            });
        }
        let pulled = &(&matrix.transpose() * frame.gram()) * &matrix;
        if &pulled != frame.gram() {
            return Err(Error::NotIsometry);
        }
        Ok(Isometry {
            frame: frame.clone(),
            matrix,
            word: None,
        })
    }

    /// Isometry sending the `i`-th frame basis vector to `images[i]`.
    pub fn from_images(frame: &FrameRef, images: &[LatVec]) -> Result<Self> {
        if images.len() != frame.dim() {
            return Err(Error::Dimension {
                expected: frame.dim(),
                got: images.len(),
            });
        }
        for v in images {
            v.ensure_frame(frame)?;
        }
        let cols = Matrix::from_rows(images.iter().map(|v| v.coords().to_vec()).collect());
        Self::new(frame, cols.transpose())
    }

    pub fn identity(frame: &FrameRef) -> Self {
        Isometry {
            frame: frame.clone(),
            matrix: Matrix::identity(frame.dim()),
            word: Some(Vec::new()),
        }
    }

    pub fn minus_identity(frame: &FrameRef) -> Self {
        Isometry {
            frame: frame.clone(),
            matrix: Matrix::identity(frame.dim()).scale(&int(-1)),
            word: Some(vec!["-id".into()]),
        }
    }

    pub fn with_word(mut self, word: Vec<String>) -> Self {
        self.word = Some(word);
        self
    }

    pub fn named(self, name: impl Into<String>) -> Self {
        self.with_word(vec![name.into()])
    }

    pub fn frame(&self) -> &FrameRef {
        &self.frame
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn word(&self) -> Option<&[String]> {
        self.word.as_deref()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn det(&self) -> i32 {
        if self.matrix.det().is_one() {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &LatVec) -> Result<LatVec> {
        v.ensure_frame(&self.frame)?;
        LatVec::new(self.frame.clone(), self.matrix.apply(v.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if !AmbientFrame::same(&self.frame, &other.frame) {
            return Err(Error::FrameMismatch(
                self.frame.name().into(),
                other.frame.name().into(),
            ));
        }
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(Isometry {
            frame: self.frame.clone(),
            matrix: &self.matrix * &other.matrix,
            word,
        })
    }

    pub fn inverse(&self) -> Isometry {
        // g^{-1} = gram^{-1} g^T gram for an isometry.
        let ginv = self.frame.gram().inverse().expect("nondegenerate frame");
        let matrix = &(&ginv * &self.matrix.transpose()) * self.frame.gram();
        let word = self.word.as_ref().map(|w| {
            w.iter()
                .rev()
                .map(|s| match s.strip_suffix("^-1") {
                    Some(base) => base.to_string(),
                    None => format!("{s}^-1"),
                })
                .collect()
        });
        Isometry {
            frame: self.frame.clone(),
            matrix,
            word,
        }
    }

    pub fn negate(&self) -> Isometry {
        let mut word = self.word.clone();
        if let Some(w) = word.as_mut() {
            w.insert(0, "-id".into());
        }
        Isometry {
            frame: self.frame.clone(),
            matrix: self.matrix.scale(&int(-1)),
            word,
        }
    }

    pub fn pow(&self, k: u32) -> Isometry {
        (0..k).fold(Isometry::identity(&self.frame), |acc, _| {
            acc.compose(self).expect("same frame")
        })
    }

    /// True iff `g(L) = L`.
    pub fn preserves(&self, l: &QuadLattice) -> bool {
        if !AmbientFrame::same(&self.frame, l.frame()) {
            return false;
        }
        let inv = self.inverse();
        l.basis_vectors().iter().all(|b| {
            l.contains(&self.apply(b).expect("same frame"))
                && l.contains(&inv.apply(b).expect("same frame"))
        })
    }

    pub fn same_matrix(&self, other: &Isometry) -> bool {
        AmbientFrame::same(&self.frame, &other.frame) && self.matrix == other.matrix
    }
}

impl PartialEq for Isometry {
    fn eq(&self, other: &Self) -> bool {
        self.same_matrix(other)
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Isometry")
            .field("frame", &self.frame.name())
            .field("word", &self.word)
            .field("matrix", &self.matrix)
            .finish()
    }
}

/// `s_v(x) = x - 2 b(x,v)/b(v,v) · v`.
pub fn reflection(v: &LatVec) -> Result<Isometry> {
    let q = v.square();
    if q.is_zero() {
        return Err(Error::Isotropic);
    }
    let frame = v.frame().clone();
    let gv = frame.gram().apply(v.coords());
    let c = Rational::from_integer(2.into()) / q;
    let dim = frame.dim();
    let mut m = Matrix::identity(dim);
    for i in 0..dim {
        if v.coords()[i].is_zero() {
            continue;
        }
        let vi = &v.coords()[i] * &c;
        for j in 0..dim {
            m[(i, j)] -= &vi * &gv[j];
        }
    }
    Ok(Isometry {
        frame,
        matrix: m,
        word: Some(vec![format!("s({v})")]),
    })
}

pub fn compose(g: &Isometry, h: &Isometry) -> Result<Isometry> {
    g.compose(h)
}

pub fn inverse(g: &Isometry) -> Isometry {
    g.inverse()
}

pub fn apply(g: &Isometry, v: &LatVec) -> Result<LatVec> {
    g.apply(v)
}

pub fn preserves(g: &Isometry, l: &QuadLattice) -> bool {
    g.preserves(l)
}

/// Checks that `g` fixes every vector orthogonal to `v` and negates `v`; test helper for reflections.
pub fn is_reflection_in(g: &Isometry, v: &LatVec) -> Result<bool> {
    let minus = g.apply(v)?;
    if minus != -v {
        return Ok(false);
    }
    let frame = g.frame();
    let gv = frame.gram().apply(v.coords());
    let constraint = Matrix::from_rows(vec![gv]);
    for row in constraint.kernel().rows() {
        let w = LatVec::new(frame.clone(), row.to_vec())?;
        if g.apply(&w)? != w || !pair(&w, v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
