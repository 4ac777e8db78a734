//! Discriminant action and membership in the orthogonal subgroups `O⁺`, `Ô`, `Õ`, `ŜO⁺`
//! and `Õ⁺^{det·D}` of an even lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::disc::{discriminant_group, DiscGroup};
use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::lattice::QuadLattice;
use crate::spinor::{reflection_factorization, spinor_norm_of_factors, SpinorField, SpinorNorm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscActionKind {
    Trivial,
    MinusId,
    Other,
}

/// Induced action of an isometry on `D(L)`, recorded on the Smith generators.
#[derive(Clone, Debug)]
pub struct DiscriminantAction {
    group: DiscGroup,
    /// `images[i]` is the class of `g(gen_i)`.
    images: Vec<Vec<BigInt>>,
    kind: DiscActionKind,
}

impl DiscriminantAction {
    pub fn group(&self) -> &DiscGroup {
        &self.group
    }

    pub fn images(&self) -> &[Vec<BigInt>] {
        &self.images
    }

    pub fn kind(&self) -> DiscActionKind {
        self.kind
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == DiscActionKind::Trivial
    }

    /// True for `+id` and for `-id`.
    pub fn is_pm_id(&self) -> bool {
        self.kind != DiscActionKind::Other
    }

    /// Image of a class (coordinates on the generators) under the action.
    pub fn apply_to_class(&self, class: &[BigInt]) -> Vec<BigInt> {
        let factors = self.group.invariant_factors();
        let mut out = vec![BigInt::zero(); factors.len()];
        for (c, img) in class.iter().zip(&self.images) {
            for (o, x) in out.iter_mut().zip(img) {
                *o += c * x;
            }
        }
        out.iter().zip(factors).map(|(x, d)| x.mod_floor(d)).collect()
    }

    /// Value of the character `D` on `Õ(L)`: `+1` for trivial, `-1` for `-id`.
    pub fn character(&self) -> Option<i32> {
        match self.kind {
            DiscActionKind::Trivial => Some(1),
            DiscActionKind::MinusId => Some(-1),
            DiscActionKind::Other => None,
        }
    }
}

pub fn discriminant_action(g: &Isometry, l: &QuadLattice) -> Result<DiscriminantAction> {
    if !g.preserves(l) {
        return Err(Error::NotPreserved);
    }
    let group = discriminant_group(l)?;
    action_on(g, group)
}

fn action_on(g: &Isometry, group: DiscGroup) -> Result<DiscriminantAction> {
    let factors = group.invariant_factors().to_vec();
    let mut images = Vec::with_capacity(factors.len());
    let mut trivial = true;
    let mut minus = true;
    for (i, gen) in group.generators().iter().enumerate() {
        let img = group.class_of(&g.apply(gen)?)?;
        for (j, (x, d)) in img.iter().zip(&factors).enumerate() {
            let id = if i == j { BigInt::from(1) } else { BigInt::zero() };
            if (x - &id).mod_floor(d) != BigInt::zero() {
                trivial = false;
            }
            if (x + &id).mod_floor(d) != BigInt::zero() {
                minus = false;
            }
        }
        images.push(img);
    }
    let kind = if trivial {
        DiscActionKind::Trivial
    } else if minus {
        DiscActionKind::MinusId
    } else {
        DiscActionKind::Other
    };
    Ok(DiscriminantAction {
        group,
        images,
        kind,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMembership {
    pub preserves_lattice: bool,
    pub det: i32,
    pub spinor_real: i32,
    pub spinor_rational: BigInt,
    pub disc_action: Option<DiscActionKind>,
}

impl GroupMembership {
    pub fn in_oplus(&self) -> bool {
        self.preserves_lattice && self.spinor_real == 1
    }

    pub fn in_ohat(&self) -> bool {
        self.preserves_lattice && self.disc_action == Some(DiscActionKind::Trivial)
    }

    pub fn in_otilde(&self) -> bool {
        self.preserves_lattice
            && matches!(
                self.disc_action,
                Some(DiscActionKind::Trivial | DiscActionKind::MinusId)
            )
    }

    pub fn in_sohat_plus(&self) -> bool {
        self.in_ohat() && self.det == 1 && self.spinor_real == 1
    }

    /// `sn_R = +1`, `D ∈ {±id}` and `det · D = +1`.
    pub fn in_otilde_plus_det_d(&self) -> bool {
        let d = match self.disc_action {
            Some(DiscActionKind::Trivial) => 1,
            Some(DiscActionKind::MinusId) => -1,
            _ => return false,
        };
        self.preserves_lattice && self.spinor_real == 1 && self.det * d == 1
    }

    /// `SO(L) ∩ ker sn_Q`.
    pub fn in_o_prime(&self) -> bool {
        self.preserves_lattice && self.det == 1 && self.spinor_rational == BigInt::from(1)
    }
}

pub fn classify(g: &Isometry, l: &QuadLattice) -> Result<GroupMembership> {
    if !g.preserves(l) {
        return Err(Error::NotPreserved);
    }
    let action = action_on(g, discriminant_group(l)?)?;
    let factors = reflection_factorization(g);
    let spinor_real = match spinor_norm_of_factors(&factors, SpinorField::Real) {
        SpinorNorm::Real(s) => s,
        SpinorNorm::Rational(_) => unreachable!(),
    };
    let spinor_rational = match spinor_norm_of_factors(&factors, SpinorField::Rational) {
        SpinorNorm::Rational(s) => s,
        SpinorNorm::Real(_) => unreachable!(),
    };
    Ok(GroupMembership {
        preserves_lattice: true,
        det: g.det(),
        spinor_real,
        spinor_rational,
        disc_action: Some(action.kind()),
    })
}
