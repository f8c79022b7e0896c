//! Nilpotent orbits of classical Lie algebras that are regular in a Levi
//! subalgebra: bookkeeping, explicit matrices and isotropic flags.

mod flag;
mod levi;
mod realize;

pub use flag::{condition2_certificate, FlagCertificate, FlagCheck};
pub use levi::{cartan_natural_dim, jordan_types, levi_decompositions, validate_jordan_type, LeviDecomposition};
pub use realize::{jordan_type_of, realize, NilpotentRealization};
