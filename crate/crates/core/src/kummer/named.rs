//! Named constructors addressable by string key.

use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::lattice::QuadLattice;
use crate::rational::frac;

use super::derived::{d_n, sign_equivalence_action};
use super::frames::{abelian_frame, bfield, kummer_frame, KummerFrame};
use super::lattices::{
    geometric_lattice, kum_lattice, lambda_a, lambda_x_prime, line_bundle_lattice, mukai_lattice,
};
use super::yoshioka::{yoshioka_matrix, Sym2Matrix};

pub const LATTICE_NAMES: [&str; 6] = [
    "kum-lattice",
    "geometric-lattice",
    "lambda-a",
    "lambda-x-prime",
    "line-bundle-lattice",
    "mukai-lattice",
];

pub const OBJECT_NAMES: [&str; 6] = [
    "kum-lattice",
    "geometric-lattice",
    "bfield",
    "sign-equivalence",
    "d_n",
    "yoshioka",
];

#[derive(Clone, Debug)]
pub enum NamedObject {
    Lattice(QuadLattice),
    Isometry(Isometry),
    Sym2(Sym2Matrix),
}

pub fn named_lattice(name: &str, k: &KummerFrame) -> Result<QuadLattice> {
    Ok(match name {
        "kum-lattice" => kum_lattice(k),
        "geometric-lattice" => geometric_lattice(k),
        "lambda-a" => lambda_a(k),
        "lambda-x-prime" => lambda_x_prime(k),
        "line-bundle-lattice" => line_bundle_lattice(k),
        "mukai-lattice" => mukai_lattice(k),
        other => return Err(Error::InvalidParam(format!("unknown lattice {other:?}"))),
    })
}

/// `bfield` is `B_{−δ'/2}`, `d_n` is the image of the swap `e_1 ↔ e_2`, and `yoshioka` is the
/// matrix of `(1, 0, −n)` with `m = 1`.
pub fn named_object(name: &str, n: i64) -> Result<NamedObject> {
    let k = kummer_frame(n)?;
    if LATTICE_NAMES.contains(&name) {
        return named_lattice(name, &k).map(NamedObject::Lattice);
    }
    Ok(match name {
        "bfield" => NamedObject::Isometry(bfield(&k.delta().scale(&frac(-1, 2)))?),
        "sign-equivalence" => NamedObject::Isometry(sign_equivalence_action(&k)),
        "d_n" => {
            let a = abelian_frame();
            let mut images = a.frame().labels().iter().map(|l| {
                crate::frame::FrameExt::basis_vector(a.frame(), l)
            }).collect::<Vec<_>>();
            images.swap(1, 2);
            let swap = Isometry::from_images(a.frame(), &images)?;
            NamedObject::Isometry(d_n(&k, &swap)?)
        }
        "yoshioka" => NamedObject::Sym2(yoshioka_matrix(1, 0, -n, 1)?),
        other => return Err(Error::InvalidParam(format!("unknown object {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_names_resolve() {
        for name in OBJECT_NAMES.iter().chain(&LATTICE_NAMES) {
            assert!(named_object(name, 4).is_ok(), "{name}");
        }
        assert!(named_object("nope", 4).is_err());
        assert!(named_object("kum-lattice", 2).is_err());
    }
}
