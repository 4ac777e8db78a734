//! Exact lattice arithmetic for the extended Mukai lattice of generalized Kummer
//! varieties: discriminant groups, reflections and spinor norms, Eichler transvections,
//! and a verification harness for the lattice-theoretic statements about them.

pub mod classify;
pub mod disc;
pub mod eichler;
pub mod error;
pub mod frame;
pub mod hodge;
pub mod intmat;
pub mod isometry;
pub mod json;
pub mod kummer;
pub mod lattice;
pub mod matrix;
pub mod rational;
pub mod spinor;
pub mod verify;

pub use error::{Error, Result};
pub use frame::{pair, AmbientFrame, FrameExt, FrameRef, LatVec};
pub use isometry::Isometry;
pub use lattice::QuadLattice;
pub use rational::Rational;
