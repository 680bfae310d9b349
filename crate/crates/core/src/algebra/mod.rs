//! Finite groups, presentations, homomorphisms, `Aut`/`Out`, abelian
//! decompositions and the Smith normal form.

mod abelian;
mod group;
mod hom;
mod modsnf;
mod snf;
mod structure;

pub use abelian::{mixed_index, next_coord, AbelianDecomposition};
pub use group::{GroupTable, Quotient};
pub use hom::{enumerate_homs, GroupHom, Presentation, SourceGroup};
pub use modsnf::{smith_mod, ModMatrix, ModSnf};
pub(crate) use modsnf::dot;
pub use snf::{invariant_factors, smith_normal_form, IntMatrix, Snf};
pub use structure::{structure, Structure};
