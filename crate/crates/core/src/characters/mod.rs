//! Class functions of `W`: conjugacy classes, exterior powers of the
//! reflection representation, characters induced from parabolic
//! subgroups, and graded multiplicities in the coinvariant algebra.

mod classes;
mod molien;

pub use classes::{conjugacy_classes, ClassFunction, ConjugacyClasses};
pub use molien::{
    coinvariant_graded_multiplicity, exterior_character, induced_trivial, invariant_dimensions,
    reflection_charpoly, solomon_check, two_power_check, SolomonReport, TwoPowerReport,
};

/// Graded multiplicity of a character in the coinvariant algebra.
pub type GradedMultiplicity = crate::exact::QPoly;

/// Polynomial in `t` and `q` collecting graded multiplicities of all
/// exterior powers.
pub type BivariateTable = crate::exact::BiPoly;
