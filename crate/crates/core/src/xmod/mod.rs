//! Crossed modules and skeletal gr-categories.

mod crossed;
mod grcat;

pub use crossed::{adjoint_crossed_module, CrossedModule, KerCoker};
pub use grcat::{gr_cat_from_crossed_module, gr_cat_from_two_type, SkeletalGrCat};
