//! Group cohomology `Hⁿ(P; A)` for `n ≤ 3` from the normalized bar
//! resolution and the Smith normal form.

mod bar;
mod group;
mod push;

pub use bar::{coboundary, coboundary_matrix, is_cocycle};
pub use group::{coboundary_witness, cohomology_group, CohGroup, Membership};
pub use push::{delta_obstruction, pushforward_class};
