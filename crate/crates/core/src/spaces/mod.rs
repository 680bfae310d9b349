//! Spaces and their algebraic invariants: simplicial 2-complexes, modules
//! over finite groups, cochains and 2-types.

mod cochain;
mod complex;
mod module;
mod two_type;

pub use cochain::{n_tuples, tuple_at, tuple_index, Cochain};
pub use complex::{pi0_and_monodromy0, pi1_presentation, Complex2, Monodromy0};
pub use module::{ModuleHom, PModule};
pub use two_type::{realize_presentation, validate_two_type, RawTwoType, TwoType};
