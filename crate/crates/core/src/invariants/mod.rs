//! Invariant theory of the Weyl group acting on its reflection
//! representation: degrees, invariant spaces, the root product `pi_K`,
//! the Jacobian determinant `Delta`, and fundamental-invariant checks for
//! a parabolic subgroup `W_K`.

mod condition1;
mod degrees;
mod delta;
mod space;

pub use condition1::{check_condition1, search_condition1, Condition1Report, Condition1Status};
pub use degrees::{fundamental_degrees, CoexponentVector, DegreeMultiset};
pub use delta::{delta, delta_certificate, pi_k, DeltaCertificate};
pub use space::{ambient_lift, invariant_space, is_invariant, restrict_to};

/// Search grid size limit used by [`search_condition1`].
pub const SEARCH_LIMIT: usize = 100_000;
