//! The lattices and maps attached to a generalized Kummer variety `X = Kum^{n-1}(A)`.

pub mod derived;
pub mod frames;
pub mod lattices;
pub mod mukai;
pub mod named;
pub mod yoshioka;

pub use derived::{
    d_n, delta_reflection, e1prime_constraint, iota_extend, p_twist_action, sign_equivalence_action,
    theta_embed, theta_tilde,
};
pub use frames::{abelian_frame, bfield, kummer_frame, AbelianFrame, KummerFrame};
pub use lattices::{
    geometric_lattice, invariant_candidate, kum_lattice, lambda_a, lambda_x_prime,
    largest_square_divisor, line_bundle_generators, line_bundle_lattice, mukai_lattice,
};
pub use mukai::{
    ext_mukai_line_bundle, ext_mukai_vector, fujiki_and_r, named_example, named_example_vectors,
    rank_constraint_check, signum, ExtMukaiVector, Provenance,
};
pub use named::{named_lattice, named_object, NamedObject};
pub use yoshioka::{ghat_member, stab0_star_member, yoshioka_matrix, yoshioka_pairing, Sym2Matrix};
