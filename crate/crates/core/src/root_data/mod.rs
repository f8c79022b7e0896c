//! Classical root systems in standard coordinates, fully enumerated Weyl
//! groups, and parabolic subgroup data.

pub mod cache;
mod cartan;
mod parabolic;
mod roots;
mod weyl;

pub use cartan::{CartanType, Family, DEFAULT_GUARD};
pub use parabolic::{dynkin_components, parabolic_data, ParabolicDatum};
pub use roots::RootSystem;
pub use weyl::{WeylElement, WeylGroup};

/// Builds the root system for a Cartan type.
pub fn build_root_system(cartan: CartanType) -> crate::error::Result<RootSystem> {
    RootSystem::new(cartan)
}

/// Enumerates the Weyl group of a root system under the given size guard.
pub fn enumerate_weyl(root_system: &RootSystem, guard: u128) -> crate::error::Result<WeylGroup> {
    WeylGroup::enumerate(root_system, guard)
}
