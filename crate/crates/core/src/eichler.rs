//! Eichler transvections `t(e,a)`, the group `E_U(L₁)` they generate for a split
//! `L = U ⊕ L₁`, and constructive transport between primitive vectors with equal
//! square and equal discriminant class.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::disc::{discriminant_group, DiscGroup};
use crate::error::{Error, Result};
use crate::frame::{pair, FrameRef, LatVec};
use crate::intmat::{bezout, gcd_all};
use crate::isometry::{reflection, Isometry};
use crate::lattice::{divisibility, span_sublattice, QuadLattice};
use crate::matrix::Matrix;
use crate::rational::{from_bigint, frac, int, Rational};

/// An isotropic `e` together with some `a ⊥ e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransvectionDatum {
    e: LatVec,
    a: LatVec,
}

impl TransvectionDatum {
    pub fn new(e: LatVec, a: LatVec) -> Result<Self> {
        a.ensure_frame(e.frame())?;
        if !e.square().is_zero() {
            return Err(Error::Precondition(format!("t(e,a) needs isotropic e, got ({e},{e}) ≠ 0")));
        }
        if !pair(&e, &a)?.is_zero() {
            return Err(Error::Precondition("t(e,a) needs (e,a) = 0".into()));
        }
        Ok(TransvectionDatum { e, a })
    }

    pub fn e(&self) -> &LatVec {
        &self.e
    }

    pub fn a(&self) -> &LatVec {
        &self.a
    }

    /// `v ↦ v − (a,v)e + (e,v)a − ½(a,a)(e,v)e`.
    pub fn isometry(&self) -> Isometry {
        let frame = self.e.frame();
        let dim = frame.dim();
        let ge = frame.gram().apply(self.e.coords());
        let ga = frame.gram().apply(self.a.coords());
        let half_aa = self.a.square() / int(2);
        let mut m = Matrix::identity(dim);
        for i in 0..dim {
            let ei = &self.e.coords()[i];
            let ai = &self.a.coords()[i];
            if ei.is_zero() && ai.is_zero() {
                continue;
            }
            for j in 0..dim {
                m[(i, j)] += ai * &ge[j] - ei * &ga[j] - &half_aa * ei * &ge[j];
            }
        }
        Isometry::new(frame, m)
            .expect("Eichler transvection is an isometry")
            .named(format!("t({},{})", self.e, self.a))
    }
}

pub fn transvection(e: &LatVec, a: &LatVec) -> Result<Isometry> {
    Ok(TransvectionDatum::new(e.clone(), a.clone())?.isometry())
}

/// First failing identity and the two sides that disagree.
#[derive(Clone, Debug)]
pub struct IdentityFailure {
    pub identity: String,
    pub lhs: Isometry,
    pub rhs: Isometry,
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checked: Vec<String>,
    pub failure: Option<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn expect_eq(&mut self, name: &str, lhs: Isometry, rhs: Isometry) {
        if self.failure.is_some() {
            return;
        }
        self.checked.push(name.to_string());
        if !lhs.same_matrix(&rhs) {
            self.failure = Some(IdentityFailure {
                identity: name.to_string(),
                lhs,
                rhs,
            });
        }
    }
}

/// Verifies the transvection identities exactly for one tuple `(e, a, b, g, x)`:
/// the fixing property, additivity and inversion, conjugation covariance, scaling, and
/// the two-reflection decomposition when `(a,a) ≠ 0`.
pub fn transvection_identities_check(
    e: &LatVec,
    a: &LatVec,
    b: &LatVec,
    g: &Isometry,
    x: &Rational,
) -> Result<IdentityReport> {
    let frame = e.frame().clone();
    let tea = transvection(e, a)?;
    let teb = transvection(e, b)?;
    let id = Isometry::identity(&frame);
    let mut rep = IdentityReport::default();

    // Fixes e, and fixes e^⊥ ∩ a^⊥ pointwise.
    let te_e = LatVec::new(frame.clone(), tea.matrix().apply(e.coords()))?;
    if te_e != *e {
        rep.failure = Some(IdentityFailure {
            identity: "t(e,a)(e) = e".into(),
            lhs: tea.clone(),
            rhs: id.clone(),
        });
        return Ok(rep);
    }
    rep.checked.push("t(e,a)(e) = e".into());
    let constraints = Matrix::from_rows(vec![
        frame.gram().apply(e.coords()),
        frame.gram().apply(a.coords()),
    ]);
    for row in constraints.kernel().rows() {
        let w = LatVec::new(frame.clone(), row.to_vec())?;
        if tea.apply(&w)? != w {
            rep.failure = Some(IdentityFailure {
                identity: "t(e,a) = id on e^⊥ ∩ a^⊥".into(),
                lhs: tea.clone(),
                rhs: id.clone(),
            });
            return Ok(rep);
        }
    }
    rep.checked.push("t(e,a) = id on e^⊥ ∩ a^⊥".into());

    rep.expect_eq("t(e,a)t(e,b) = t(e,a+b)", tea.compose(&teb)?, transvection(e, &(a + b))?);
    rep.expect_eq("t(e,a)^-1 = t(e,-a)", tea.inverse(), transvection(e, &-a)?);

    let ge = g.apply(e)?;
    let ga = g.apply(a)?;
    rep.expect_eq(
        "g t(e,a) g^-1 = t(g(e), g(a))",
        g.compose(&tea)?.compose(&g.inverse())?,
        transvection(&ge, &ga)?,
    );

    if !x.is_zero() {
        rep.expect_eq(
            "t(xe,a) = t(e,xa)",
            transvection(&e.scale(x), a)?,
            transvection(e, &a.scale(x))?,
        );
    }
    rep.expect_eq("t(e,xe) = id", transvection(e, &e.scale(x))?, id);

    let aa = a.square();
    if !aa.is_zero() {
        let shifted = a + &e.scale(&(&aa / int(2)));
        rep.expect_eq(
            "t(e,a) = s_a s_{a+(a,a)e/2}",
            tea.clone(),
            reflection(a)?.compose(&reflection(&shifted)?)?,
        );
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EuGen {
    #[serde(rename = "t(e,a)")]
    E,
    #[serde(rename = "t(f,a)")]
    F,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuLetter {
    pub gen: EuGen,
    pub a: LatVec,
}

/// A word `w_1 w_2 ... w_k` in the generators, read as the composition `w_1 ∘ ... ∘ w_k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EuWord {
    pub letters: Vec<EuLetter>,
}

impl EuWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> EuWord {
        EuWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| EuLetter {
                    gen: l.gen,
                    a: -&l.a,
                })
                .collect(),
        }
    }

    /// `self ∘ other`.
    pub fn then_apply_after(&self, other: &EuWord) -> EuWord {
        EuWord {
            letters: self.letters.iter().chain(&other.letters).cloned().collect(),
        }
    }
}

/// A split `L = U ⊕ L₁` with `U = Ze ⊕ Zf`, `(e,e) = (f,f) = 0`, `(e,f) = 1`.
#[derive(Clone, Debug)]
pub struct EuSplit {
    lattice: QuadLattice,
    e: LatVec,
    f: LatVec,
    l1: QuadLattice,
}

impl EuSplit {
    pub fn new(l: &QuadLattice, e: LatVec, f: LatVec, l1_basis: &[LatVec]) -> Result<Self> {
        let frame = l.frame().clone();
        e.ensure_frame(&frame)?;
        f.ensure_frame(&frame)?;
        if !e.square().is_zero() || !f.square().is_zero() || pair(&e, &f)? != int(1) {
            return Err(Error::Precondition(
                "U basis must satisfy (e,e) = (f,f) = 0 and (e,f) = 1".into(),
            ));
        }
        let l1 = QuadLattice::from_basis(&frame, l1_basis)?;
        for a in l1_basis {
            if !pair(a, &e)?.is_zero() || !pair(a, &f)?.is_zero() {
                return Err(Error::Precondition("L₁ is not orthogonal to U".into()));
            }
        }
        let mut all = vec![e.clone(), f.clone()];
        all.extend_from_slice(l1_basis);
        let sum = span_sublattice(&frame, &all)?;
        if sum.rank() != l.rank() || !sum.same_as(l) {
            return Err(Error::Precondition("L ≠ U ⊕ L₁".into()));
        }
        Ok(EuSplit {
            lattice: l.clone(),
            e,
            f,
            l1,
        })
    }

    pub fn lattice(&self) -> &QuadLattice {
        &self.lattice
    }

    pub fn frame(&self) -> &FrameRef {
        self.lattice.frame()
    }

    pub fn e(&self) -> &LatVec {
        &self.e
    }

    pub fn f(&self) -> &LatVec {
        &self.f
    }

    pub fn l1(&self) -> &QuadLattice {
        &self.l1
    }

    pub fn letter(&self, letter: &EuLetter) -> Result<Isometry> {
        let base = match letter.gen {
            EuGen::E => &self.e,
            EuGen::F => &self.f,
        };
        transvection(base, &letter.a)
    }

    pub fn word_isometry(&self, word: &EuWord) -> Result<Isometry> {
        let mut g = Isometry::identity(self.frame());
        for l in &word.letters {
            g = g.compose(&self.letter(l)?)?;
        }
        Ok(g)
    }

    /// `t(e, a_i)` and `t(f, a_i)` for the basis `a_i` of `L₁`.
    pub fn generators(&self) -> Vec<Isometry> {
        let mut out = Vec::with_capacity(2 * self.l1.rank());
        for a in self.l1.basis_vectors() {
            for gen in [EuGen::E, EuGen::F] {
                out.push(self.letter(&EuLetter { gen, a: a.clone() }).expect("valid datum"));
            }
        }
        out
    }

    /// A hyperbolic pair `(e₁, f₁)` among the basis vectors of `L₁`, with `(e₁,f₁) = 1`.
    pub fn second_hyperbolic_plane(&self) -> Option<(LatVec, LatVec)> {
        let g = self.l1.gram();
        let r = self.l1.rank();
        for i in 0..r {
            for j in 0..r {
                if i == j || !g[(i, i)].is_zero() || !g[(j, j)].is_zero() {
                    continue;
                }
                let b = &g[(i, j)];
                if b.abs().is_one() {
                    let e1 = self.l1.basis_vector(i);
                    let f1 = self.l1.basis_vector(j).scale(b);
                    return Some((e1, f1));
                }
            }
        }
        None
    }
}

pub fn eu_generators(
    l: &QuadLattice,
    e: &LatVec,
    f: &LatVec,
    l1_basis: &[LatVec],
) -> Result<Vec<Isometry>> {
    Ok(EuSplit::new(l, e.clone(), f.clone(), l1_basis)?.generators())
}

/// Records each applied transvection while reducing a vector.
struct Reducer<'a> {
    split: &'a EuSplit,
    e1: LatVec,
    f1: LatVec,
    u: LatVec,
    applied: Vec<EuLetter>,
}

impl<'a> Reducer<'a> {
    fn apply(&mut self, gen: EuGen, a: LatVec) -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        let letter = EuLetter { gen, a };
        self.u = self.split.letter(&letter)?.apply(&self.u)?;
        self.applied.push(letter);
        Ok(())
    }

    fn int_pair(&self, x: &LatVec) -> BigInt {
        let p = pair(&self.u, x).expect("same frame");
        debug_assert!(p.is_integer());
        p.to_integer()
    }

    /// `[[a, q], [-p, b]]` with `a = (u,f)`, `b = (u,e)`, `p = (u,e₁)`, `q = (u,f₁)`.
    fn block(&self) -> [[BigInt; 2]; 2] {
        let a = self.int_pair(&self.split.f);
        let b = self.int_pair(&self.split.e);
        let p = self.int_pair(&self.e1);
        let q = self.int_pair(&self.f1);
        [[a, q], [-p, b]]
    }

    fn scaled(v: &LatVec, k: &BigInt) -> LatVec {
        v.scale(&from_bigint(k.clone()))
    }

    // Elementary operations on the block, each realised by one transvection.
    fn row1_add_row2(&mut self, k: &BigInt) -> Result<()> {
        let a = Self::scaled(&self.e1, k);
        self.apply(EuGen::E, a)
    }

    fn row2_sub_row1(&mut self, k: &BigInt) -> Result<()> {
        let a = Self::scaled(&self.f1, k);
        self.apply(EuGen::F, a)
    }

    fn col1_sub_col2(&mut self, k: &BigInt) -> Result<()> {
        let a = Self::scaled(&self.f1, k);
        self.apply(EuGen::E, a)
    }

    fn col2_add_col1(&mut self, k: &BigInt) -> Result<()> {
        let a = Self::scaled(&self.e1, k);
        self.apply(EuGen::F, a)
    }

    /// Brings the block to `diag(g, h)` with `g > 0`, `g | h`.
    fn diagonalize_block(&mut self) -> Result<()> {
        loop {
            // Euclid down column 1.
            loop {
                let x = self.block();
                if x[1][0].is_zero() {
                    break;
                }
                if x[0][0].is_zero() {
                    self.row1_add_row2(&BigInt::one())?;
                    continue;
                }
                let k = x[1][0].div_floor(&x[0][0]);
                self.row2_sub_row1(&k)?;
                let x = self.block();
                if x[1][0].is_zero() {
                    break;
                }
                let k = x[0][0].div_floor(&x[1][0]);
                self.row1_add_row2(&-k)?;
            }
            // Euclid along row 1.
            loop {
                let x = self.block();
                if x[0][1].is_zero() {
                    break;
                }
                if x[0][0].is_zero() {
                    self.col1_sub_col2(&-BigInt::one())?;
                    continue;
                }
                let k = x[0][1].div_floor(&x[0][0]);
                self.col2_add_col1(&-k)?;
                let x = self.block();
                if x[0][1].is_zero() {
                    break;
                }
                let k = x[0][0].div_floor(&x[0][1]);
                self.col1_sub_col2(&k)?;
            }
            let x = self.block();
            if !x[1][0].is_zero() {
                continue;
            }
            if x[0][0].is_zero() {
                // Column 1 and row 1 vanish; pull row 2 up.
                if x[1][1].is_zero() {
                    return Ok(());
                }
                self.row1_add_row2(&BigInt::one())?;
                continue;
            }
            if x[1][1].is_multiple_of(&x[0][0]) {
                break;
            }
            self.row1_add_row2(&BigInt::one())?;
        }
        if self.block()[0][0].is_negative() {
            // (r1, r2) -> (r2, -r1), twice, is -id on rows.
            for _ in 0..2 {
                self.row1_add_row2(&BigInt::one())?;
                self.row2_sub_row1(&BigInt::one())?;
                self.row1_add_row2(&BigInt::one())?;
            }
        }
        Ok(())
    }

    /// Pairings of `u` with the basis of `L₁`, and `c ∈ L₁` realising their gcd.
    fn l1_gcd(&self) -> (BigInt, LatVec) {
        let basis = self.split.l1.basis_vectors();
        let pairings: Vec<BigInt> = basis.iter().map(|a| self.int_pair(a)).collect();
        let (g, coeffs) = bezout(&pairings);
        let c = basis
            .iter()
            .zip(&coeffs)
            .fold(crate::frame::FrameExt::zero_vector(self.split.frame()), |acc, (a, k)| {
                &acc + &Self::scaled(a, k)
            });
        (g, c)
    }
}

/// Result of [`canonical_reduction`]: `tau(u) = canonical`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub word: EuWord,
    pub canonical: LatVec,
    pub divisibility: BigInt,
}

/// Moves a primitive `u ∈ L` by `E_U(L₁)` to `d·e + t·f + d·w`, where `d = div(u)` and `w`
/// is the fixed representative of the class of `u/d` in `D(L₁)`.
pub fn canonical_reduction(split: &EuSplit, u: &LatVec, disc_l1: &DiscGroup) -> Result<Reduction> {
    let (e1, f1) = split
        .second_hyperbolic_plane()
        .ok_or_else(|| Error::Precondition("L₁ has no hyperbolic plane among its basis vectors".into()))?;
    let mut r = Reducer {
        split,
        e1,
        f1,
        u: u.clone(),
        applied: Vec::new(),
    };

    let x = r.block();
    if x.iter().flatten().all(Zero::is_zero) {
        let (_, c) = r.l1_gcd();
        r.apply(EuGen::E, c)?;
    }
    r.diagonalize_block()?;
    let g = r.block()[0][0].clone();
    let (rho, c) = r.l1_gcd();
    if !rho.is_multiple_of(&g) {
        r.apply(EuGen::F, c)?;
        r.diagonalize_block()?;
    }
    let d = r.block()[0][0].clone();

    // u = d e + b f + l with l ∈ L₁; shift l/d to the canonical class representative.
    let l_part = {
        let be = r.u.clone() - split.e.scale(&from_bigint(d.clone()));
        let b = pair(&r.u, &split.e)?;
        be - split.f.scale(&b)
    };
    let star = l_part.scale(&Rational::new(BigInt::one(), d.clone()));
    let class = disc_l1.class_of(&star)?;
    let w = disc_l1.element(&class);
    let shift = &w - &star;
    if !split.l1.contains(&shift) {
        return Err(Error::Precondition("class representative shift left L₁".into()));
    }
    r.apply(EuGen::F, shift)?;

    // Applied in order op_1, op_2, ...; as a composition that is op_k ∘ ... ∘ op_1.
    let mut letters = r.applied;
    letters.reverse();
    Ok(Reduction {
        word: EuWord { letters },
        canonical: r.u,
        divisibility: d,
    })
}

fn is_primitive(l: &QuadLattice, v: &LatVec) -> bool {
    match l.coordinates(v) {
        Some(c) if c.iter().all(Rational::is_integer) => {
            let ints: Vec<BigInt> = c.iter().map(Rational::to_integer).collect();
            gcd_all(&ints).is_one()
        }
        _ => false,
    }
}

/// Outcome of [`eichler_transport`].
#[derive(Clone, Debug)]
pub struct Transport {
    pub word: EuWord,
    pub isometry: Isometry,
}

/// Finds `τ ∈ E_U(L₁)` with `τ(u) = v`, as an explicit word in transvections.
pub fn eichler_transport(split: &EuSplit, u: &LatVec, v: &LatVec) -> Result<Transport> {
    let l = split.lattice();
    for (name, x) in [("u", u), ("v", v)] {
        if !is_primitive(l, x) {
            return Err(Error::Precondition(format!("{name} is not primitive in L")));
        }
    }
    if u.square() != v.square() {
        return Err(Error::Precondition("(u,u) ≠ (v,v)".into()));
    }
    let disc_l = discriminant_group(l)?;
    let star = |x: &LatVec| -> Result<LatVec> {
        let d = divisibility(l, x)?;
        Ok(x.scale(&Rational::new(BigInt::one(), d)))
    };
    if disc_l.class_of(&star(u)?)? != disc_l.class_of(&star(v)?)? {
        return Err(Error::Precondition("u* and v* differ in D(L)".into()));
    }
    if split.second_hyperbolic_plane().is_none() {
        return Err(Error::Precondition("L₁ contains no second hyperbolic plane".into()));
    }
    if u == v {
        return Ok(Transport {
            word: EuWord::default(),
            isometry: Isometry::identity(split.frame()),
        });
    }
    let disc_l1 = discriminant_group(split.l1())?;
    let ru = canonical_reduction(split, u, &disc_l1)?;
    let rv = canonical_reduction(split, v, &disc_l1)?;
    if ru.canonical != rv.canonical {
        return Err(Error::Precondition(format!(
            "canonical forms differ: {} vs {}",
            ru.canonical, rv.canonical
        )));
    }
    let word = rv.word.inverse().then_apply_after(&ru.word);
    let isometry = split.word_isometry(&word)?;
    if isometry.apply(u)? != *v {
        return Err(Error::Precondition("transport failed to certify τ(u) = v".into()));
    }
    Ok(Transport { word, isometry })
}

pub const DEFAULT_HEIGHT: i64 = 3;

/// Random letter with `L₁`-coefficients in `[-height, height]`, not all zero.
pub fn random_letter<R: Rng>(split: &EuSplit, rng: &mut R, height: i64) -> EuLetter {
    let basis = split.l1().basis_vectors();
    loop {
        let coeffs: Vec<i64> = basis.iter().map(|_| rng.gen_range(-height..=height)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let a = basis
            .iter()
            .zip(&coeffs)
            .fold(crate::frame::FrameExt::zero_vector(split.frame()), |acc, (b, &c)| {
                &acc + &b.scale(&int(c))
            });
        let gen = if rng.gen_bool(0.5) { EuGen::E } else { EuGen::F };
        return EuLetter { gen, a };
    }
}

pub fn random_eu_word<R: Rng>(split: &EuSplit, rng: &mut R, word_length: usize, height: i64) -> EuWord {
    EuWord {
        letters: (0..word_length).map(|_| random_letter(split, rng, height)).collect(),
    }
}

/// Deterministic for a fixed seed.
pub fn random_eu_element(split: &EuSplit, word_length: usize, seed: u64, height: i64) -> Result<(EuWord, Isometry)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word = random_eu_word(split, &mut rng, word_length, height);
    let g = split.word_isometry(&word)?;
    Ok((word, g))
}

#[allow(dead_code)]
fn half() -> Rational {
    frac(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{AmbientFrame, FrameExt};

    /// U ⊕ U ⊕ <-6>.
    fn frame() -> FrameRef {
        let g = Matrix::from_i64_rows(&[
            &[0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 0, -6],
        ]);
        AmbientFrame::new(
            "UUA",
            ["e", "f", "e1", "f1", "d"].iter().map(|s| s.to_string()).collect(),
            g,
        )
        .unwrap()
    }

    fn split() -> EuSplit {
        let fr = frame();
        let l = QuadLattice::standard(&fr);
        EuSplit::new(
            &l,
            fr.basis_vector("e"),
            fr.basis_vector("f"),
            &[fr.basis_vector("e1"), fr.basis_vector("f1"), fr.basis_vector("d")],
        )
        .unwrap()
    }

    #[test]
    fn transvection_rejects_bad_data() {
        let fr = frame();
        let e = fr.basis_vector("e");
        assert!(transvection(&(&e + &fr.basis_vector("f")), &fr.basis_vector("d")).is_err());
        assert!(transvection(&e, &fr.basis_vector("f")).is_err());
    }

    #[test]
    fn transvection_fixes_e_and_has_det_one() {
        let fr = frame();
        let e = fr.basis_vector("e");
        let a = &fr.basis_vector("e1") + &fr.basis_vector("d");
        let t = transvection(&e, &a).unwrap();
        assert_eq!(t.apply(&e).unwrap(), e);
        assert_eq!(t.det(), 1);
        assert!(transvection(&e, &e.scale(&frac(7, 3))).unwrap().is_identity());
    }

    #[test]
    fn split_validation() {
        let fr = frame();
        let l = QuadLattice::standard(&fr);
        let bad = EuSplit::new(&l, fr.basis_vector("e"), fr.basis_vector("e1"), &[]);
        assert!(bad.is_err());
        let non_orth = EuSplit::new(
            &l,
            fr.basis_vector("e"),
            fr.basis_vector("f"),
            &[&fr.basis_vector("e1") + &fr.basis_vector("e"), fr.basis_vector("f1"), fr.basis_vector("d")],
        );
        assert!(non_orth.is_err());
        assert_eq!(split().generators().len(), 6);
    }

    #[test]
    fn transport_identity_and_simple_orbit() {
        let s = split();
        let fr = s.frame().clone();
        let u = &fr.basis_vector("e") + &fr.basis_vector("d");
        let t = eichler_transport(&s, &u, &u).unwrap();
        assert!(t.word.is_empty());
        let (_, g) = random_eu_element(&s, 5, 11, 2).unwrap();
        let v = g.apply(&u).unwrap();
        let t = eichler_transport(&s, &u, &v).unwrap();
        assert_eq!(t.isometry.apply(&u).unwrap(), v);
    }

    #[test]
    fn transport_rejects_mismatched_invariants() {
        let s = split();
        let fr = s.frame().clone();
        let u = &fr.basis_vector("e") + &fr.basis_vector("f");
        let w = &fr.basis_vector("e1") + &fr.basis_vector("f1").scale(&int(2));
        assert!(eichler_transport(&s, &u, &w).is_err());
        let nonprim = u.scale(&int(2));
        assert!(eichler_transport(&s, &nonprim, &nonprim).is_err());
    }
}
