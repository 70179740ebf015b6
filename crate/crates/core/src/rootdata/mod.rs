//! Root systems, weights and the group `Z*` of central characters.

mod center;
mod system;

pub use center::{
    center_character, character_representatives, fundamental_group, in_root_lattice,
    star_action, star_on_character, CenterCharacter, FundamentalGroup,
};
pub use system::{weyl_dimension, Family, RootSystem, Weight};
