//! The ambient frames `H̃(X,Q)` (Kummer type, dim 9) and `H̃(A,Q)` (abelian surface, dim 8),
//! and B-field twists on either.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frame::{pair, AmbientFrame, FrameExt, FrameRef, LatVec};
use crate::isometry::Isometry;
use crate::matrix::Matrix;
use crate::rational::{frac, int, Rational};

pub const ALPHA: &str = "α";
pub const BETA: &str = "β";
pub const DELTA: &str = "δ'";
pub const E_LABELS: [&str; 6] = ["e1", "e2", "e3", "e4", "e5", "e6"];

/// Gram of `U` with an `(α, β)`-pairing of `-1`, three copies of `U` in between, and
/// optionally `δ'` of square `-2n`.
fn mukai_gram(delta_square: Option<i64>) -> Matrix {
    let dim = if delta_square.is_some() { 9 } else { 8 };
    let mut g = Matrix::zeros(dim, dim);
    let beta = dim - 1;
    g[(0, beta)] = int(-1);
    g[(beta, 0)] = int(-1);
    for k in 0..3 {
        let i = 1 + 2 * k;
        g[(i, i + 1)] = int(1);
        g[(i + 1, i)] = int(1);
    }
    if let Some(d) = delta_square {
        g[(7, 7)] = int(d);
    }
    g
}

fn labels(with_delta: bool) -> Vec<String> {
    let mut out = vec![ALPHA.to_string()];
    out.extend(E_LABELS.iter().map(|s| s.to_string()));
    if with_delta {
        out.push(DELTA.to_string());
    }
    out.push(BETA.to_string());
    out
}

/// `H̃(X,Q) = Qα ⊕ θ(H²(A,Q)) ⊕ Qδ' ⊕ Qβ` for `X` of generalized Kummer type `Kum^{n-1}`.
#[derive(Clone, Debug)]
pub struct KummerFrame {
    n: i64,
    frame: FrameRef,
}

impl KummerFrame {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn frame(&self) -> &FrameRef {
        &self.frame
    }

    pub fn zero(&self) -> LatVec {
        self.frame.zero_vector()
    }

    pub fn alpha(&self) -> LatVec {
        self.frame.basis_vector(ALPHA)
    }

    pub fn beta(&self) -> LatVec {
        self.frame.basis_vector(BETA)
    }

    pub fn delta(&self) -> LatVec {
        self.frame.basis_vector(DELTA)
    }

    /// `e_i` for `i ∈ 1..=6`.
    pub fn e(&self, i: usize) -> LatVec {
        self.frame.basis_vector(E_LABELS[i - 1])
    }

    pub fn e_block(&self) -> Vec<LatVec> {
        (1..=6).map(|i| self.e(i)).collect()
    }

    /// `α̃ = B_{-δ'/2}(α) = α − δ'/2 − (n/4)β`.
    pub fn alpha_tilde(&self) -> LatVec {
        &(&self.alpha() - &self.delta().scale(&frac(1, 2))) - &self.beta().scale(&frac(self.n, 4))
    }

    /// `δ̃' = B_{-δ'/2}(δ') = δ' + nβ`.
    pub fn delta_tilde(&self) -> LatVec {
        &self.delta() + &self.beta().scale(&int(self.n))
    }

    /// Basis `e_1..e_6, δ'` of `H²(X,Z)`.
    pub fn h2_basis(&self) -> Vec<LatVec> {
        let mut b = self.e_block();
        b.push(self.delta());
        b
    }

    /// Basis `e_1..e_6, δ̃'` of `Λ_X'`, the complement of `U = ⟨α̃, −β⟩` in `Λ_X`.
    pub fn lambda_x_prime_basis(&self) -> Vec<LatVec> {
        let mut b = self.e_block();
        b.push(self.delta_tilde());
        b
    }

    /// A vector `rα + λ + sβ` from its three parts.
    pub fn mukai(&self, r: &Rational, lambda: &LatVec, s: &Rational) -> Result<LatVec> {
        lambda.ensure_frame(&self.frame)?;
        Ok(&(&self.alpha().scale(r) + lambda) + &self.beta().scale(s))
    }
}

pub fn kummer_frame(n: i64) -> Result<KummerFrame> {
    if n < 3 {
        return Err(Error::InvalidParam(format!("n must be at least 3, got {n}")));
    }
    let frame = AmbientFrame::new(format!("Kum(n={n})"), labels(true), mukai_gram(Some(-2 * n)))?;
    Ok(KummerFrame { n, frame })
}

/// `H̃(A,Q) = Qα ⊕ H²(A,Q) ⊕ Qβ` with `H²(A,Z) = U³`.
#[derive(Clone, Debug)]
pub struct AbelianFrame {
    frame: FrameRef,
}

impl AbelianFrame {
    pub fn frame(&self) -> &FrameRef {
        &self.frame
    }

    pub fn alpha(&self) -> LatVec {
        self.frame.basis_vector(ALPHA)
    }

    pub fn beta(&self) -> LatVec {
        self.frame.basis_vector(BETA)
    }

    pub fn e(&self, i: usize) -> LatVec {
        self.frame.basis_vector(E_LABELS[i - 1])
    }

    pub fn e_block(&self) -> Vec<LatVec> {
        (1..=6).map(|i| self.e(i)).collect()
    }
}

pub fn abelian_frame() -> AbelianFrame {
    let frame = AmbientFrame::new("A", labels(false), mukai_gram(None)).expect("unimodular gram");
    AbelianFrame { frame }
}

/// Positions of `α` and `β`, or an error if the frame is not of Mukai shape.
fn alpha_beta(frame: &FrameRef) -> Result<(usize, usize)> {
    match (frame.index_of(ALPHA), frame.index_of(BETA)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::InvalidFrame(format!("{} has no α/β labels", frame.name()))),
    }
}

/// True iff `λ` has zero `α`- and `β`-coordinates.
pub fn in_h2(lambda: &LatVec) -> bool {
    match alpha_beta(lambda.frame()) {
        Ok((a, b)) => lambda.coords()[a].is_zero() && lambda.coords()[b].is_zero(),
        Err(_) => false,
    }
}

/// `B_λ`: `α ↦ α + λ + (b(λ,λ)/2)β`, `μ ↦ μ + b(λ,μ)β`, `β ↦ β`.
pub fn bfield(lambda: &LatVec) -> Result<Isometry> {
    let frame = lambda.frame().clone();
    let (ia, ib) = alpha_beta(&frame)?;
    if !in_h2(lambda) {
        return Err(Error::Precondition(format!("B-field class {lambda} is not in H²⊗Q")));
    }
    let beta = frame.unit(ib);
    let images: Vec<LatVec> = (0..frame.dim())
        .map(|i| {
            let x = frame.unit(i);
            if i == ia {
                &(&x + lambda) + &beta.scale(&(lambda.square() / int(2)))
            } else if i == ib {
                x
            } else {
                let c = pair(lambda, &x).expect("same frame");
                &x + &beta.scale(&c)
            }
        })
        .collect();
    Ok(Isometry::from_images(&frame, &images)?.named(format!("B({lambda})")))
}
