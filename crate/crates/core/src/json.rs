//! JSON interchange for frames, lattices, vectors and isometries. Rationals are written
//! as `"p/q"` or `"p"` strings; integers are also accepted on input.

use serde::{Deserialize, Serialize};

use crate::eichler::{EuGen, EuLetter, EuWord};
use crate::error::{Error, Result};
use crate::frame::{AmbientFrame, FrameRef, LatVec};
use crate::isometry::Isometry;
use crate::lattice::QuadLattice;
use crate::matrix::Matrix;
use crate::rational::{de_rational_rows, de_rational_vec, ser_rational_rows, ser_rational_vec, Rational};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LatticeJson {
    pub frame: String,
    pub labels: Vec<String>,
    #[serde(serialize_with = "ser_rational_rows", deserialize_with = "de_rational_rows")]
    pub gram: Vec<Vec<Rational>>,
    #[serde(serialize_with = "ser_rational_rows", deserialize_with = "de_rational_rows")]
    pub basis: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VectorJson {
    pub frame: String,
    #[serde(serialize_with = "ser_rational_vec", deserialize_with = "de_rational_vec")]
    pub coords: Vec<Rational>,
}

/// An isometry as the images of the frame basis: `matrix[i]` is the column `g(x_i)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct IsometryJson {
    pub frame: String,
    pub labels: Vec<String>,
    #[serde(serialize_with = "ser_rational_rows", deserialize_with = "de_rational_rows")]
    pub gram: Vec<Vec<Rational>>,
    #[serde(serialize_with = "ser_rational_rows", deserialize_with = "de_rational_rows")]
    pub images: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<String>>,
}

pub fn lattice_to_json(l: &QuadLattice) -> LatticeJson {
    LatticeJson {
        frame: l.frame().name().to_string(),
        labels: l.frame().labels().to_vec(),
        gram: l.frame().gram().to_rows(),
        basis: l.basis().to_rows(),
    }
}

pub fn lattice_from_json(j: &LatticeJson) -> Result<QuadLattice> {
    let frame = AmbientFrame::new(j.frame.clone(), j.labels.clone(), matrix_of(&j.gram, j.labels.len())?)?;
    QuadLattice::from_matrix(frame, rows_of(&j.basis, j.labels.len())?)
}

pub fn vector_to_json(v: &LatVec) -> VectorJson {
    VectorJson {
        frame: v.frame().name().to_string(),
        coords: v.coords().to_vec(),
    }
}

/// Reads a vector into a known frame; the frame name must match.
pub fn vector_from_json(j: &VectorJson, frame: &FrameRef) -> Result<LatVec> {
    if j.frame != frame.name() {
        return Err(Error::FrameMismatch(j.frame.clone(), frame.name().into()));
    }
    LatVec::new(frame.clone(), j.coords.clone())
}

pub fn isometry_to_json(g: &Isometry) -> IsometryJson {
    IsometryJson {
        frame: g.frame().name().to_string(),
        labels: g.frame().labels().to_vec(),
        gram: g.frame().gram().to_rows(),
        images: g.matrix().transpose().to_rows(),
        word: g.word().map(<[String]>::to_vec),
    }
}

pub fn isometry_from_json(j: &IsometryJson) -> Result<Isometry> {
    let dim = j.labels.len();
    let frame = AmbientFrame::new(j.frame.clone(), j.labels.clone(), matrix_of(&j.gram, dim)?)?;
    let g = Isometry::new(&frame, matrix_of(&j.images, dim)?.transpose())?;
    Ok(match &j.word {
        Some(w) => g.with_word(w.clone()),
        None => g,
    })
}

fn rows_of(rows: &[Vec<Rational>], width: usize) -> Result<Matrix> {
    if let Some(bad) = rows.iter().find(|r| r.len() != width) {
        return Err(Error::Dimension {
            expected: width,
            got: bad.len(),
        });
    }
    Ok(if rows.is_empty() {
        Matrix::zeros(0, width)
    } else {
        Matrix::from_rows(rows.to_vec())
    })
}

fn matrix_of(rows: &[Vec<Rational>], dim: usize) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(Error::Dimension {
            expected: dim,
            got: rows.len(),
        });
    }
    rows_of(rows, dim)
}

/// One letter of an `E_U(L₁)` word: `{"gen": "t(e,a)" | "t(f,a)", "a": vector}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LetterJson {
    pub gen: EuGen,
    pub a: VectorJson,
}

pub fn word_to_json(w: &EuWord) -> Vec<LetterJson> {
    w.letters
        .iter()
        .map(|l| LetterJson {
            gen: l.gen,
            a: vector_to_json(&l.a),
        })
        .collect()
}

pub fn word_from_json(letters: &[LetterJson], frame: &FrameRef) -> Result<EuWord> {
    Ok(EuWord {
        letters: letters
            .iter()
            .map(|l| {
                Ok(EuLetter {
                    gen: l.gen,
                    a: vector_from_json(&l.a, frame)?,
                })
            })
            .collect::<Result<_>>()?,
    })
}

pub fn to_json_string<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

pub fn parse_lattice(s: &str) -> Result<QuadLattice> {
    let j: LatticeJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    lattice_from_json(&j)
}

pub fn parse_isometry(s: &str) -> Result<Isometry> {
    let j: IsometryJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    isometry_from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::FrameExt;
    use crate::isometry::reflection;
    use crate::rational::frac;

    fn frame() -> FrameRef {
        AmbientFrame::new(
            "U+<-4>",
            vec!["e".into(), "f".into(), "d".into()],
            Matrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -4]]),
        )
        .unwrap()
    }

    #[test]
    fn lattice_round_trip() {
        let fr = frame();
        let l = QuadLattice::from_basis(&fr, &[fr.basis_vector("e"), fr.basis_vector("d").scale(&frac(1, 2))]).unwrap();
        let s = to_json_string(&lattice_to_json(&l));
        assert!(s.contains("\"1/2\""));
        let back = parse_lattice(&s).unwrap();
        assert_eq!(back.basis(), l.basis());
        assert_eq!(back.frame().gram(), fr.gram());
    }

    #[test]
    fn isometry_round_trip_and_ints_accepted() {
        let fr = frame();
        let g = reflection(&(&fr.basis_vector("e") + &fr.basis_vector("f"))).unwrap();
        let back = parse_isometry(&to_json_string(&isometry_to_json(&g))).unwrap();
        assert_eq!(back.matrix(), g.matrix());
        let raw = r#"{"frame":"U","labels":["e","f"],"gram":[[0,1],[1,0]],"basis":[[1,0],["0","2"]]}"#;
        assert_eq!(parse_lattice(raw).unwrap().rank(), 2);
        assert!(parse_lattice(r#"{"frame":"U"}"#).is_err());
    }

    #[test]
    fn word_format() {
        let fr = frame();
        let w = EuWord {
            letters: vec![EuLetter { gen: EuGen::F, a: fr.basis_vector("d").scale(&frac(-2, 1)) }],
        };
        let s = to_json_string(&word_to_json(&w));
        assert_eq!(s, r#"[{"gen":"t(f,a)","a":{"frame":"U+<-4>","coords":["0","0","-2"]}}]"#);
        let parsed: Vec<LetterJson> = serde_json::from_str(&s).unwrap();
        assert_eq!(word_from_json(&parsed, &fr).unwrap(), w);
    }

    #[test]
    fn vector_frame_checked() {
        let fr = frame();
        let j = vector_to_json(&fr.basis_vector("d"));
        assert_eq!(vector_from_json(&j, &fr).unwrap(), fr.basis_vector("d"));
        let other = VectorJson { frame: "X".into(), coords: j.coords.clone() };
        assert!(vector_from_json(&other, &fr).is_err());
    }
}
