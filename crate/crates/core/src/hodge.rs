//! Splitting a lattice into a designated algebraic part and its transcendental complement.
//!
//! Hodge structures are modeled only through the algebraic sublattice they determine.

use crate::error::{Error, Result};
use crate::frame::{pair, LatVec};
use crate::lattice::{orthogonal_complement, saturation, span_sublattice, QuadLattice};

#[derive(Clone, Debug)]
pub struct HodgeSplit {
    pub lattice: QuadLattice,
    pub algebraic: QuadLattice,
    pub transcendental: QuadLattice,
}

pub fn hodge_split(l: &QuadLattice, algebraic_gens: &[LatVec]) -> Result<HodgeSplit> {
    if let Some(bad) = algebraic_gens.iter().find(|g| !l.contains(g)) {
        return Err(Error::Precondition(format!("algebraic generator {bad} is not in L")));
    }
    let span = span_sublattice(l.frame(), algebraic_gens)?;
    let algebraic = saturation(l, &span)?;
    let transcendental = orthogonal_complement(l, &algebraic)?;
    Ok(HodgeSplit {
        lattice: l.clone(),
        algebraic,
        transcendental,
    })
}

impl HodgeSplit {
    /// `algebraic ⊕ transcendental` has full rank in `L` and the parts are orthogonal.
    pub fn is_consistent(&self) -> bool {
        let orth = self.algebraic.basis_vectors().iter().all(|a| {
            self.transcendental
                .basis_vectors()
                .iter()
                .all(|t| pair(a, t).is_ok_and(|x| num_traits::Zero::is_zero(&x)))
        });
        let full = self.algebraic.rank() + self.transcendental.rank() == self.lattice.rank()
            || !self.algebraic.is_nondegenerate();
        orth && full
    }
}
