mod descriptor;
mod realform;
mod tits;

pub use descriptor::{E6Label, E7Label, LieDescriptor};
pub use realform::{real_form_of, RealForm};
pub(crate) use tits::class_q;
pub use tits::{
    fixed_over_q, remains_division_over_r, tits_class_q, tits_class_r, Center, RealAlgebra, TitsClass,
    TitsReport,
};
